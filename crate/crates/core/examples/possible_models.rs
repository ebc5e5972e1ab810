//! Possible models of a disjunctive program.

use std::error::Error;

use acp::disjunctive::{canonical_split, enumerate_possible, to_ca};
use acp::domain::{Budget, Interpretation};
use acp::stable::enumerate_stable;
use acp::textio::parse_disjunctive;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_disjunctive("a | b | c.\na | c :- not(b).\nb :- not(c).\nc :- not(a).\n")?;
    let m = Interpretation::from_names(["a", "b"]);
    print!("canonical split for {m}:\n{}", canonical_split(&p, &m));
    let possible = enumerate_possible(&p, Budget::DEFAULT)?;
    let via_ca = enumerate_stable(&to_ca(&p), Budget::DEFAULT)?;
    for s in &possible {
        println!("possible: {s}");
    }
    println!("same as stable models of the constraint-atom form: {}", possible == via_ca);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
