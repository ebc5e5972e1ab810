//! The reduct `P^M`, stable models, and the deterministic operator of
//! definite programs.

use std::collections::{BTreeMap, BTreeSet};

use crate::domain::{powerset, Budget, Clause, Interpretation, Literal, Program};
use crate::error::{Error, Result};
use crate::horn::{derivable_unchecked, require_horn};
use crate::semantics::applicable_hset;

/// `P^M` together with a record of what happened to each source clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduct {
    pub program: Program,
    /// Clauses with a negated body atom that `M` satisfies.
    pub removed: BTreeSet<usize>,
    /// The surviving clauses with their negated literals erased.
    pub stripped: BTreeMap<usize, Clause>,
}

pub(crate) fn require_monotone(p: &Program) -> Result<()> {
    for (i, c) in p.clauses().iter().enumerate() {
        if let Some(a) = c.constraint_atoms().find(|a| !a.is_monotone()) {
            return Err(Error::NonMonotoneAtom {
                clause: i,
                atom: a.to_string(),
            });
        }
    }
    Ok(())
}

fn reduct_unchecked(p: &Program, m: &Interpretation) -> Reduct {
    let mut removed = BTreeSet::new();
    let mut stripped = BTreeMap::new();
    for (i, c) in p.clauses().iter().enumerate() {
        if c.body.iter().any(|l| l.negated && l.atom.satisfied_by(m)) {
            removed.insert(i);
        } else {
            let body: Vec<Literal> = c.body.iter().filter(|l| !l.negated).cloned().collect();
            stripped.insert(i, Clause::new(c.head.clone(), body));
        }
    }
    let program = Program::with_universe(stripped.values().cloned().collect(), p.universe().clone());
    Reduct {
        program,
        removed,
        stripped,
    }
}

pub fn reduct(p: &Program, m: &Interpretation) -> Result<Reduct> {
    require_monotone(p)?;
    Ok(reduct_unchecked(p, m))
}

/// `M` is a derivable model of `P^M`, checked through the canonical
/// computation of the reduct.
pub fn is_stable(p: &Program, m: &Interpretation) -> Result<bool> {
    require_monotone(p)?;
    Ok(stable_unchecked(p, m))
}

fn stable_unchecked(p: &Program, m: &Interpretation) -> bool {
    derivable_unchecked(&reduct_unchecked(p, m).program, m)
}

/// Stable models are supported, so only subsets of `hset(P)` are tried.
pub fn enumerate_stable(p: &Program, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    require_monotone(p)?;
    Ok(powerset(&p.hset(), budget)?
        .filter(|m| stable_unchecked(p, m))
        .collect())
}

pub fn is_definite_program(p: &Program) -> bool {
    p.clauses().iter().all(|c| c.head.is_definite())
}

fn require_definite(p: &Program) -> Result<()> {
    match p.clauses().iter().position(|c| !c.head.is_definite()) {
        Some(i) => Err(Error::NotDefinite {
            clause: i,
            atom: p.clauses()[i].head.to_string(),
        }),
        None => Ok(()),
    }
}

/// `T^d_P(M) = hset(P(M))`, the only member of `T^nd_P(M)` for definite `P`.
pub fn td(p: &Program, m: &Interpretation) -> Result<Interpretation> {
    require_definite(p)?;
    Ok(applicable_hset(p, m).into())
}

/// Iterates `T^d` from `∅`. For a definite Horn program the limit is its
/// unique derivable model.
pub fn td_fixpoint(p: &Program) -> Result<Interpretation> {
    require_definite(p)?;
    require_horn(p)?;
    let mut current = Interpretation::new();
    loop {
        let next: Interpretation = applicable_hset(p, &current).into();
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}
