//! Horn programs, computations and derivable models.

use std::collections::BTreeSet;
use std::fmt;

use crate::domain::{powerset, Budget, Interpretation, Program};
use crate::error::{Error, Result};
use crate::semantics::{applicable_hset, in_tnd, is_model};

/// A finite prefix of a computation, ending in its first repeated step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Computation {
    steps: Vec<Interpretation>,
}

impl Computation {
    pub fn steps(&self) -> &[Interpretation] {
        &self.steps
    }

    /// The union of all steps, which for a finished computation is its last.
    pub fn result(&self) -> &Interpretation {
        self.steps.last().expect("a computation has at least one step")
    }

    /// Checks the defining conditions: starts at `∅`, grows, and each step is
    /// one-step provable from the previous one.
    pub fn is_computation_of(&self, p: &Program) -> bool {
        self.steps.first().is_some_and(Interpretation::is_empty)
            && self.steps.windows(2).all(|w| {
                w[0].is_subset(&w[1]) && in_tnd(p, &w[0], &w[1])
            })
            && self
                .steps
                .last()
                .is_some_and(|last| in_tnd(p, last, last))
    }
}

impl fmt::Display for Computation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn horn_violation(p: &Program) -> Option<String> {
    for (i, c) in p.clauses().iter().enumerate() {
        if c.has_negation() {
            return Some(format!("clause {i} contains not"));
        }
        if let Some(a) = c.constraint_atoms().find(|a| !a.is_monotone()) {
            return Some(format!("clause {i} contains the non-monotone atom {a}"));
        }
    }
    None
}

/// Not-free and built from monotone atoms only.
pub fn is_horn(p: &Program) -> bool {
    horn_violation(p).is_none()
}

pub(crate) fn require_horn(p: &Program) -> Result<()> {
    match horn_violation(p) {
        Some(reason) => Err(Error::NotHorn { reason }),
        None => Ok(()),
    }
}

/// `X_{n+1} = hset(P(X_n)) ∩ M`, run to its first repeated step.
///
/// Callers must have checked that `p` is Horn and `m` is a model.
pub(crate) fn run_canonical(p: &Program, m: &Interpretation) -> Computation {
    let mut steps = vec![Interpretation::new()];
    loop {
        let last = steps.last().unwrap();
        let next = m.restrict(&applicable_hset(p, last));
        let done = &next == last;
        steps.push(next);
        if done {
            return Computation { steps };
        }
    }
}

/// The canonical computation of `p` with respect to the model `m`.
pub fn canonical_computation(p: &Program, m: &Interpretation) -> Result<Computation> {
    require_horn(p)?;
    if !is_model(p, m) {
        return Err(Error::NotAModel {
            interp: m.to_string(),
        });
    }
    Ok(run_canonical(p, m))
}

pub fn is_derivable(p: &Program, m: &Interpretation) -> Result<bool> {
    require_horn(p)?;
    Ok(derivable_unchecked(p, m))
}

pub(crate) fn derivable_unchecked(p: &Program, m: &Interpretation) -> bool {
    is_model(p, m) && run_canonical(p, m).result() == m
}

/// All derivable models. Every derivable model is supported, so the
/// candidates are the subsets of `hset(P)`.
pub fn enumerate_derivable(p: &Program, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    require_horn(p)?;
    Ok(powerset(&p.hset(), budget)?
        .filter(|m| derivable_unchecked(p, m))
        .collect())
}

/// The canonical result for the whole universe, which contains every other
/// derivable model.
pub fn largest_derivable(p: &Program) -> Result<Interpretation> {
    require_horn(p)?;
    if let Some(clause) = p.constraint_clauses().next() {
        return Err(Error::HasConstraintClauses { clause });
    }
    let everything = Interpretation::from(p.universe().clone());
    Ok(run_canonical(p, &everything).result().clone())
}
