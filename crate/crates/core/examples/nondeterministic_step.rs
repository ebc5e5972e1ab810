//! The one-step operator produces every admissible next set.

use std::error::Error;

use acp::domain::{Budget, Interpretation};
use acp::semantics::{applicable_clauses, tnd};
use acp::textio::parse_acp;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_acp("2{a} :- 2{b,d}.\n1{b,c} :- not(1{e}).\n1{a,d} :- 2{b,c}.\n")?;
    for m in [["b", "c", "e"], ["b", "d", "e"]] {
        let m = Interpretation::from_names(m);
        let r = tnd(&p, &m, Budget::DEFAULT)?;
        let sets: Vec<String> = r.derivable_sets.iter().map(|s| s.to_string()).collect();
        println!("applicable at {m}: {:?}", applicable_clauses(&p, &m));
        println!("T({m}) = [{}]", sets.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
