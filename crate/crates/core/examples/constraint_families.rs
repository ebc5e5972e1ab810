//! Satisfaction, monotonicity and definiteness across constraint families.

use std::error::Error;

use acp::domain::{Budget, Interpretation};
use acp::textio::parse_acp;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_acp(
        "2{a,b,c}.\n\
         3{a=2,b=1,c=1}4.\n\
         EVEN{a,b}.\n\
         PROD(2){a=2,b=1/2}.\n\
         MAX(3){a=1,c=3}.\n\
         CONTAINS[a,b,c: {a,b}, {c}].\n",
    )?;
    let m = Interpretation::from_names(["a", "b"]);
    println!("M = {m}");
    for c in p.clauses() {
        let atom = &c.head;
        println!(
            "{atom:<28} satisfied={:<5} monotone={:<5} definite={}",
            atom.satisfied_by(&m),
            atom.is_monotone(),
            atom.is_definite()
        );
    }
    let table = p.clauses()[0].head.to_table(Budget::DEFAULT)?;
    println!("as a table: {table}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
