//! Reducts and stable models.

use std::error::Error;

use acp::domain::{Budget, Interpretation};
use acp::stable::{enumerate_stable, reduct};
use acp::textio::parse_acp;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_acp("1{a,b} :- 1{d}, not(1{b,c}).\n1{a,d}.\n")?;
    let m = Interpretation::from_names(["a", "b", "c"]);
    let r = reduct(&p, &m)?;
    print!("reduct for {m}, removed {:?}:\n{}", r.removed, r.program);
    for s in enumerate_stable(&p, Budget::DEFAULT)? {
        println!("stable: {s}");
    }
    let q = parse_acp("2{a,b,c} :- not(1{a,b}).")?;
    println!("stable models of `{}`: {}", q.to_string().trim(), enumerate_stable(&q, Budget::DEFAULT)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
