//! Normal programs embedded as programs over single-atom constraints.

use std::error::Error;

use acp::domain::Budget;
use acp::stable::enumerate_stable;
use acp::textio::parse_normal;
use acp::translate::normal_to_pb;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = parse_normal("p :- not(q).\nq :- not(p).\nr :- p.\n:- q, not(r).\n")?;
    let q = normal_to_pb(&p);
    print!("{q}");
    for m in enumerate_stable(&q, Budget::DEFAULT)? {
        println!("stable: {m}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
