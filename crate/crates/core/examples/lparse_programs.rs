//! Weight-constraint programs, not-elimination, and the two translations.

use std::error::Error;

use acp::domain::Budget;
use acp::lparse::{e_translate, eliminate_not, enumerate_lparse_stable, f_translate};
use acp::stable::enumerate_stable;
use acp::textio::{parse_acp, parse_lparse};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let budget = Budget::DEFAULT;
    let p = parse_lparse("1{a=1,b=1}1.\nc :- 1{a=1,not(d)=1}2.\n")?;
    println!("lparse-stable: {:?}", names(enumerate_lparse_stable(&p, budget)?));

    let (q, fresh) = eliminate_not(&p)?;
    print!("without not:\n{q}");
    println!("fresh atoms: {fresh:?}");

    let e = e_translate(&q)?;
    println!("stable models of e: {:?}", names(enumerate_stable(&e, budget)?));

    let pb = parse_acp("1{a,b} :- not(2{a,b}).")?;
    let f = f_translate(&pb)?;
    print!("f:\n{f}");
    println!("lparse-stable of f: {:?}", names(enumerate_lparse_stable(&f, budget)?));
    Ok(())
}

fn names(sets: impl IntoIterator<Item = acp::domain::Interpretation>) -> Vec<String> {
    sets.into_iter().map(|m| m.to_string()).collect()
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
