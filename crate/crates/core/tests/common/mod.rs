#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use acp::disjunctive::{DClause, DProgram};
use acp::domain::{integer, rational, Atom, AtomSet, Clause, ConstraintAtom, Interpretation, Literal, Program};
use acp::lparse::{LAtom, LClause, LLiteral, LProgram, WeightedLiteralSet};
use acp::translate::{NormalClause, NormalProgram};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn atom(rng: &mut ChaCha8Rng, n: usize) -> Atom {
    Atom::new(NAMES[rng.gen_range(0..n)])
}

pub fn subset(rng: &mut ChaCha8Rng, n: usize, max: usize) -> AtomSet {
    let k = rng.gen_range(0..=max.min(n));
    let mut names = NAMES[..n].to_vec();
    names.shuffle(rng);
    names[..k].iter().map(|s| Atom::new(s)).collect()
}

fn nonempty(rng: &mut ChaCha8Rng, n: usize, max: usize) -> AtomSet {
    let mut s = subset(rng, n, max);
    if s.is_empty() {
        s.insert(atom(rng, n));
    }
    s
}

pub fn all_subsets(atoms: &AtomSet) -> Vec<Interpretation> {
    let v: Vec<&Atom> = atoms.iter().collect();
    (0..1usize << v.len())
        .map(|mask| {
            (0..v.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| v[i].clone())
                .collect()
        })
        .collect()
}

fn weights(rng: &mut ChaCha8Rng, atoms: &AtomSet, max: u64) -> BTreeMap<Atom, u64> {
    atoms.iter().map(|a| (a.clone(), rng.gen_range(0..=max))).collect()
}

pub fn monotone_atom(rng: &mut ChaCha8Rng, n: usize) -> ConstraintAtom {
    match rng.gen_range(0..6) {
        0 => ConstraintAtom::pb(atom(rng, n)),
        1 | 2 => {
            let x = subset(rng, n, 3);
            let k = rng.gen_range(0..=x.len() as u64 + 1);
            ConstraintAtom::cardinality(k, x)
        }
        3 => {
            let x = subset(rng, n, 3);
            let w = weights(rng, &x, 3);
            let k = rng.gen_range(0..=w.values().sum::<u64>() + 1);
            ConstraintAtom::weight(k, w)
        }
        4 => {
            let x = nonempty(rng, n, 3);
            let witnesses = (0..rng.gen_range(1..=2))
                .map(|_| {
                    let v: Vec<Atom> = x.iter().cloned().collect();
                    subset_of(rng, &v)
                })
                .collect();
            ConstraintAtom::containment(x, witnesses).unwrap()
        }
        _ => {
            let x = subset(rng, n, 3);
            let mut w = BTreeMap::new();
            for a in &x {
                w.insert(a.clone(), integer(rng.gen_range(0..4)));
            }
            ConstraintAtom::maximum(integer(rng.gen_range(1..4)), w)
        }
    }
}

fn subset_of(rng: &mut ChaCha8Rng, v: &[Atom]) -> AtomSet {
    v.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

/// Any atom kind, monotone or not.
pub fn any_atom(rng: &mut ChaCha8Rng, n: usize) -> ConstraintAtom {
    match rng.gen_range(0..8) {
        0 => {
            let x = subset(rng, n, 3);
            let sat = all_subsets(&x)
                .into_iter()
                .filter(|_| rng.gen_bool(0.4))
                .map(Interpretation::into_atoms)
                .collect();
            ConstraintAtom::table(x, sat).unwrap()
        }
        1 => ConstraintAtom::even(subset(rng, n, 3)),
        2 => ConstraintAtom::odd(subset(rng, n, 3)),
        3 => {
            let x = subset(rng, n, 3);
            let w = weights(rng, &x, 3);
            let lo = rng.gen_range(0..4);
            let hi = if rng.gen_bool(0.3) { None } else { Some(lo + rng.gen_range(0..3)) };
            ConstraintAtom::weight_range(lo, hi, w).unwrap()
        }
        4 => {
            let x = subset(rng, n, 3);
            let mut w = BTreeMap::new();
            for a in &x {
                w.insert(a.clone(), rational(rng.gen_range(1..5), rng.gen_range(1..3)));
            }
            ConstraintAtom::product(rational(rng.gen_range(1..5), 2), w).unwrap()
        }
        _ => monotone_atom(rng, n),
    }
}

pub struct Shape {
    pub atoms: usize,
    pub clauses: usize,
    pub negation: bool,
    pub constraints: bool,
    pub monotone: bool,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            atoms: 6,
            clauses: 5,
            negation: true,
            constraints: true,
            monotone: true,
        }
    }
}

pub fn program(rng: &mut ChaCha8Rng, shape: &Shape) -> Program {
    let n = rng.gen_range(1..=shape.atoms);
    let k = rng.gen_range(1..=shape.clauses);
    let clauses = (0..k)
        .map(|_| {
            let head = if shape.constraints && rng.gen_bool(0.15) {
                ConstraintAtom::inconsistent()
            } else if shape.monotone {
                monotone_atom(rng, n)
            } else {
                any_atom(rng, n)
            };
            clause_body(rng, n, shape, head)
        })
        .collect();
    Program::new(clauses)
}

fn clause_body(rng: &mut ChaCha8Rng, n: usize, shape: &Shape, head: ConstraintAtom) -> Clause {
    let body = (0..rng.gen_range(0..=2))
        .map(|_| {
            let a = if shape.monotone { monotone_atom(rng, n) } else { any_atom(rng, n) };
            if shape.negation && rng.gen_bool(0.35) {
                Literal::neg(a)
            } else {
                Literal::pos(a)
            }
        })
        .collect();
    Clause::new(head, body)
}

pub fn horn(rng: &mut ChaCha8Rng) -> Program {
    program(
        rng,
        &Shape {
            negation: false,
            ..Shape::default()
        },
    )
}

/// Program whose heads are all definite.
pub fn definite(rng: &mut ChaCha8Rng, negation: bool) -> Program {
    let n = rng.gen_range(1..=6);
    let shape = Shape {
        negation,
        ..Shape::default()
    };
    let clauses = (0..rng.gen_range(1..=5))
        .map(|_| {
            let head = match rng.gen_range(0..3) {
                0 => ConstraintAtom::pb(atom(rng, n)),
                1 => {
                    let x = subset(rng, n, 3);
                    ConstraintAtom::cardinality(x.len() as u64, x)
                }
                _ => {
                    let x = nonempty(rng, n, 3);
                    ConstraintAtom::containment(x.clone(), [x].into()).unwrap()
                }
            };
            clause_body(rng, n, &shape, head)
        })
        .collect();
    Program::new(clauses)
}

/// Heads and bodies built from weight and cardinality atoms only.
pub fn pb_program(rng: &mut ChaCha8Rng) -> Program {
    let n = rng.gen_range(1..=6);
    let pb_atom = |rng: &mut ChaCha8Rng| {
        let x = subset(rng, n, 3);
        if rng.gen_bool(0.5) {
            let k = rng.gen_range(0..=x.len() as u64);
            ConstraintAtom::cardinality(k, x)
        } else {
            let w = weights(rng, &x, 3);
            let k = rng.gen_range(0..=w.values().sum::<u64>() + 1);
            ConstraintAtom::weight(k, w)
        }
    };
    let clauses = (0..rng.gen_range(1..=5))
        .map(|_| {
            let head = if rng.gen_bool(0.15) {
                ConstraintAtom::inconsistent()
            } else {
                pb_atom(rng)
            };
            let body = (0..rng.gen_range(0..=2))
                .map(|_| {
                    let a = pb_atom(rng);
                    if rng.gen_bool(0.35) {
                        Literal::neg(a)
                    } else {
                        Literal::pos(a)
                    }
                })
                .collect();
            Clause::new(head, body)
        })
        .collect();
    Program::new(clauses)
}

/// A monotone program made only of constraint clauses.
pub fn constraint_clauses(rng: &mut ChaCha8Rng, n: usize) -> Program {
    let shape = Shape {
        atoms: n,
        ..Shape::default()
    };
    Program::new(
        (0..rng.gen_range(1..=3))
            .map(|_| clause_body(rng, n, &shape, ConstraintAtom::inconsistent()))
            .collect(),
    )
}

pub fn normal(rng: &mut ChaCha8Rng, constraints: bool) -> NormalProgram {
    let n = rng.gen_range(1..=6);
    NormalProgram::new(
        (0..rng.gen_range(1..=5))
            .map(|_| {
                let head = if constraints && rng.gen_bool(0.15) { None } else { Some(atom(rng, n)) };
                let pos = (0..rng.gen_range(0..=2)).map(|_| atom(rng, n)).collect();
                let neg = (0..rng.gen_range(0..=2)).map(|_| atom(rng, n)).collect();
                NormalClause::new(head, pos, neg)
            })
            .collect(),
    )
}

pub fn disjunctive(rng: &mut ChaCha8Rng, atoms: usize, clauses: usize) -> DProgram {
    let n = rng.gen_range(1..=atoms);
    DProgram::new(
        (0..rng.gen_range(1..=clauses))
            .map(|_| {
                let head = if rng.gen_bool(0.1) { AtomSet::new() } else { nonempty(rng, n, 3) };
                let pos = (0..rng.gen_range(0..=2)).map(|_| atom(rng, n)).collect();
                let neg = (0..rng.gen_range(0..=2)).map(|_| atom(rng, n)).collect();
                DClause::new(head, pos, neg)
            })
            .collect(),
    )
}

fn l_atom(rng: &mut ChaCha8Rng, n: usize, negation: bool) -> LAtom {
    let mut entries = BTreeMap::new();
    for _ in 0..rng.gen_range(0..=3) {
        let a = atom(rng, n);
        let lit = if negation && rng.gen_bool(0.3) { LLiteral::neg(a) } else { LLiteral::pos(a) };
        entries.insert(lit, rng.gen_range(0..=3));
    }
    let w = WeightedLiteralSet::new(entries);
    let total = w.total();
    let lower = rng.gen_range(0..=total + 1);
    let upper = if rng.gen_bool(0.4) { Some(lower + rng.gen_range(0..=2)) } else { None };
    LAtom::new(lower, upper, w).unwrap()
}

pub fn lparse(rng: &mut ChaCha8Rng, negation: bool) -> LProgram {
    let n = rng.gen_range(1..=6);
    LProgram::new(
        (0..rng.gen_range(1..=5))
            .map(|_| {
                let head = if rng.gen_bool(0.1) {
                    LAtom::falsum()
                } else if rng.gen_bool(0.3) {
                    LAtom::atom(atom(rng, n))
                } else {
                    l_atom(rng, n, negation)
                };
                let body = (0..rng.gen_range(0..=2)).map(|_| l_atom(rng, n, negation)).collect();
                LClause::new(head, body)
            })
            .collect(),
    )
}

pub fn show(sets: &BTreeSet<Interpretation>) -> String {
    sets.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}
