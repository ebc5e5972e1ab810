//! Models against supported models.

use std::error::Error;

use acp::domain::{atom_set, Budget};
use acp::semantics::{enumerate_models, enumerate_supported};
use acp::textio::parse_acp;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_acp("1{p,q} :- not(1{q}).")?.widened(atom_set(["s"]));
    let models = enumerate_models(&p, None, Budget::DEFAULT)?;
    let supported = enumerate_supported(&p, None, Budget::DEFAULT)?;
    for m in &models {
        let tag = if supported.contains(m) { "supported" } else { "" };
        println!("{m} {tag}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
