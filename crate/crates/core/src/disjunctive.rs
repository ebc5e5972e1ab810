//! Disjunctive programs under the possible-model semantics, split programs,
//! and the embedding `P ↦ P^ca` into cardinality programs.

use std::collections::BTreeSet;
use std::fmt;

use crate::domain::{powerset, Atom, AtomSet, Budget, Clause, ConstraintAtom, Interpretation, Literal, Program};
use crate::error::{Error, Result};
use crate::stable::is_stable;
use crate::translate::{normal_to_pb, NormalClause, NormalProgram};

/// `c1 ∨ … ∨ ck ← a1, …, am, not(b1), …, not(bn)`; an empty head is a
/// constraint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DClause {
    pub head: BTreeSet<Atom>,
    pub pos: Vec<Atom>,
    pub neg: Vec<Atom>,
}

impl DClause {
    pub fn new(head: impl IntoIterator<Item = Atom>, pos: Vec<Atom>, neg: Vec<Atom>) -> Self {
        DClause {
            head: head.into_iter().collect(),
            pos,
            neg,
        }
    }

    pub fn body_satisfied_by(&self, m: &Interpretation) -> bool {
        self.pos.iter().all(|a| m.contains(a)) && !self.neg.iter().any(|a| m.contains(a))
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        !self.body_satisfied_by(m) || self.head.iter().any(|a| m.contains(a))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head.iter().chain(&self.pos).chain(&self.neg)
    }
}

impl fmt::Display for DClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = self.head.iter().map(Atom::to_string).collect();
        let body: Vec<String> = self
            .pos
            .iter()
            .map(Atom::to_string)
            .chain(self.neg.iter().map(|a| format!("not({a})")))
            .collect();
        match (head.is_empty(), body.is_empty()) {
            (false, true) => write!(f, "{}.", head.join(" | ")),
            (false, false) => write!(f, "{} :- {}.", head.join(" | "), body.join(", ")),
            (true, _) => write!(f, ":- {}.", body.join(", ")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DProgram {
    pub clauses: Vec<DClause>,
}

impl DProgram {
    pub fn new(clauses: Vec<DClause>) -> Self {
        DProgram { clauses }
    }

    pub fn atoms(&self) -> AtomSet {
        self.clauses.iter().flat_map(|c| c.atoms().cloned()).collect()
    }

    pub fn head_atoms(&self) -> AtomSet {
        self.clauses.iter().flat_map(|c| c.head.iter().cloned()).collect()
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(m))
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }
}

impl fmt::Display for DProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// One chosen subset `S_r ⊆ hd(r)` per clause, in clause order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitSelection(pub Vec<BTreeSet<Atom>>);

impl SplitSelection {
    /// `S_r = M ∩ hd(r)`.
    pub fn canonical(p: &DProgram, m: &Interpretation) -> Self {
        SplitSelection(
            p.clauses
                .iter()
                .map(|c| c.head.iter().filter(|a| m.contains(a)).cloned().collect())
                .collect(),
        )
    }
}

fn split_unchecked(p: &DProgram, sel: &SplitSelection) -> NormalProgram {
    let mut clauses = Vec::new();
    for (c, s) in p.clauses.iter().zip(&sel.0) {
        if s.is_empty() {
            clauses.push(NormalClause::new(None, c.pos.clone(), c.neg.clone()));
        }
        for a in s {
            clauses.push(NormalClause::new(Some(a.clone()), c.pos.clone(), c.neg.clone()));
        }
    }
    NormalProgram::new(clauses)
}

pub fn split_program(p: &DProgram, sel: &SplitSelection) -> Result<NormalProgram> {
    if sel.0.len() != p.len() {
        return Err(Error::SelectionArity {
            expected: p.len(),
            got: sel.0.len(),
        });
    }
    if let Some(i) = p
        .clauses
        .iter()
        .zip(&sel.0)
        .position(|(c, s)| !s.is_subset(&c.head))
    {
        return Err(Error::SelectionNotSubsetOfHead { clause: i });
    }
    Ok(split_unchecked(p, sel))
}

/// `s(P, M)`.
pub fn canonical_split(p: &DProgram, m: &Interpretation) -> NormalProgram {
    split_unchecked(p, &SplitSelection::canonical(p, m))
}

/// `M` is a stable model of `s(P, M)`, evaluated through the PB embedding.
pub fn is_possible(p: &DProgram, m: &Interpretation) -> bool {
    is_stable(&normal_to_pb(&canonical_split(p, m)), m).expect("PB-programs are monotone")
}

pub fn enumerate_possible(p: &DProgram, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    Ok(powerset(&p.head_atoms(), budget)?
        .filter(|m| is_possible(p, m))
        .collect())
}

/// `1{c1,…,ck} ← 1{a1}, …, not(1{b1}), …`; an empty head gives `1{}`.
pub fn to_ca(p: &DProgram) -> Program {
    let one = |a: &Atom| ConstraintAtom::cardinality(1, [a.clone()]);
    let clauses = p
        .clauses
        .iter()
        .map(|c| {
            let body = c
                .pos
                .iter()
                .map(|a| Literal::pos(one(a)))
                .chain(c.neg.iter().map(|a| Literal::neg(one(a))))
                .collect();
            Clause::new(ConstraintAtom::cardinality(1, c.head.iter().cloned()), body)
        })
        .collect();
    Program::with_universe(clauses, p.atoms())
}
