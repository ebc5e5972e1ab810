//! Canonical computations and derivable models of Horn programs.

use std::error::Error;

use acp::domain::{Budget, Interpretation};
use acp::horn::{canonical_computation, enumerate_derivable, largest_derivable};
use acp::textio::parse_acp;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_acp("1{a,d} :- 2{b,d}.\n1{b,c}.\n1{a} :- 2{b,c}.\n")?;
    let m = Interpretation::from_names(["a", "b", "c", "d"]);
    let t = canonical_computation(&p, &m)?;
    println!("guided by {m}: {t}");

    let choice = parse_acp("1{a,b}.")?;
    for d in enumerate_derivable(&choice, Budget::DEFAULT)? {
        println!("derivable: {d}");
    }
    println!("largest: {}", largest_derivable(&choice)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
