//! M-applicability, the nondeterministic one-step provability operator, and
//! model / supported-model checking.

use std::collections::BTreeSet;

use crate::domain::{powerset, AtomSet, Budget, Interpretation, Program};
use crate::error::Result;

/// Outcome of one application of the nondeterministic operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TndResult {
    /// Indices of the `M`-applicable clauses, `P(M)`.
    pub applicable: BTreeSet<usize>,
    /// Every set one-step provable from `M`.
    pub derivable_sets: BTreeSet<Interpretation>,
}

/// Clauses whose body `m` satisfies.
pub fn applicable_clauses(p: &Program, m: &Interpretation) -> BTreeSet<usize> {
    p.clauses()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.body_satisfied_by(m))
        .map(|(i, _)| i)
        .collect()
}

/// `hset(P(M))`.
pub fn applicable_hset(p: &Program, m: &Interpretation) -> AtomSet {
    p.hset_of(&applicable_clauses(p, m))
}

/// Whether `candidate` is one-step provable from `m`, without enumerating.
pub fn in_tnd(p: &Program, m: &Interpretation, candidate: &Interpretation) -> bool {
    let applicable = applicable_clauses(p, m);
    candidate.is_subset_of(&p.hset_of(&applicable))
        && applicable
            .iter()
            .all(|&i| p.clauses()[i].head.satisfied_by(candidate))
}

/// All `M' ⊆ hset(P(M))` satisfying the head of every applicable clause.
///
/// Fails with `BudgetExceeded` when `hset(P(M))` is larger than `budget`.
pub fn tnd(p: &Program, m: &Interpretation, budget: Budget) -> Result<TndResult> {
    let applicable = applicable_clauses(p, m);
    let heads = p.hset_of(&applicable);
    let derivable_sets = powerset(&heads, budget)?
        .filter(|candidate| {
            applicable
                .iter()
                .all(|&i| p.clauses()[i].head.satisfied_by(candidate))
        })
        .collect();
    Ok(TndResult {
        applicable,
        derivable_sets,
    })
}

pub fn is_model(p: &Program, m: &Interpretation) -> bool {
    p.satisfied_by(m)
}

/// A model with `M ⊆ hset(P(M))`; monotonicity is not required.
pub fn is_supported(p: &Program, m: &Interpretation) -> bool {
    is_model(p, m) && m.is_subset_of(&applicable_hset(p, m))
}

/// Models among the subsets of `scope` (the program universe by default).
pub fn enumerate_models(
    p: &Program,
    scope: Option<&AtomSet>,
    budget: Budget,
) -> Result<BTreeSet<Interpretation>> {
    enumerate(p, scope, budget, is_model)
}

/// Supported models among the subsets of `scope`.
pub fn enumerate_supported(
    p: &Program,
    scope: Option<&AtomSet>,
    budget: Budget,
) -> Result<BTreeSet<Interpretation>> {
    enumerate(p, scope, budget, is_supported)
}

fn enumerate(
    p: &Program,
    scope: Option<&AtomSet>,
    budget: Budget,
    keep: impl Fn(&Program, &Interpretation) -> bool,
) -> Result<BTreeSet<Interpretation>> {
    let scope = scope.unwrap_or(p.universe());
    Ok(powerset(scope, budget)?.filter(|m| keep(p, m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{atom_set, Atom, Clause, ConstraintAtom, Literal};
    use crate::Error;

    fn card(k: u64, names: &[&str]) -> ConstraintAtom {
        ConstraintAtom::cardinality(k, names.iter().map(|n| Atom::new(n)))
    }

    fn m(names: &[&str]) -> Interpretation {
        Interpretation::from_names(names)
    }

    fn set_of(sets: &[&[&str]]) -> BTreeSet<Interpretation> {
        sets.iter().map(|s| m(s)).collect()
    }

    fn p4() -> Program {
        Program::new(vec![
            Clause::new(card(2, &["a"]), vec![Literal::pos(card(2, &["b", "d"]))]),
            Clause::new(card(1, &["b", "c"]), vec![Literal::neg(card(1, &["e"]))]),
            Clause::new(card(1, &["a", "d"]), vec![Literal::pos(card(2, &["b", "c"]))]),
        ])
    }

    fn p5() -> Program {
        Program::new(vec![Clause::new(
            card(1, &["p", "q"]),
            vec![Literal::neg(card(1, &["q"]))],
        )])
    }

    #[test]
    fn p4_applicability() {
        let p = p4();
        assert_eq!(applicable_clauses(&p, &m(&["b", "c", "e"])), BTreeSet::from([2]));
        assert!(applicable_clauses(&p, &m(&["b", "d"])).contains(&0));
    }

    #[test]
    fn p4_operator() {
        let p = p4();
        let r = tnd(&p, &m(&["b", "c", "e"]), Budget::DEFAULT).unwrap();
        assert_eq!(r.derivable_sets, set_of(&[&["a"], &["d"], &["a", "d"]]));
        let r = tnd(&p, &m(&["b", "d", "e"]), Budget::DEFAULT).unwrap();
        assert!(r.derivable_sets.is_empty());
        // A single atom other than e: only r2 applies.
        let r = tnd(&p, &m(&["a"]), Budget::DEFAULT).unwrap();
        assert_eq!(r.derivable_sets, set_of(&[&["b"], &["c"], &["b", "c"]]));
    }

    #[test]
    fn empty_program_operator() {
        let r = tnd(&Program::default(), &m(&["x"]), Budget::DEFAULT).unwrap();
        assert_eq!(r.derivable_sets, set_of(&[&[]]));
        assert!(r.applicable.is_empty());
    }

    #[test]
    fn facts_are_always_applicable() {
        let p = Program::new(vec![Clause::fact(card(1, &["a"]))]);
        for s in [m(&[]), m(&["a"])] {
            assert_eq!(applicable_clauses(&p, &s), BTreeSet::from([0]));
        }
    }

    #[test]
    fn p5_support() {
        let p = p5();
        assert!(is_supported(&p, &m(&["p"])));
        assert!(is_model(&p, &m(&["q"])));
        assert!(!is_supported(&p, &m(&["q"])));
        let wide = p.widened([Atom::new("s")]);
        assert!(is_model(&wide, &m(&["p", "s"])));
        assert!(!is_supported(&wide, &m(&["p", "s"])));
        assert_eq!(
            enumerate_supported(&p, Some(&atom_set(["p", "q"])), Budget::DEFAULT).unwrap(),
            set_of(&[&["p"]])
        );
    }

    #[test]
    fn enumeration_scope_and_budget() {
        assert_eq!(
            enumerate_models(&Program::default(), Some(&atom_set(["a"])), Budget::DEFAULT).unwrap(),
            set_of(&[&[], &["a"]])
        );
        let p7b = Program::new(vec![Clause::new(
            card(2, &["a", "b", "c"]),
            vec![Literal::neg(card(1, &["a", "b"]))],
        )]);
        assert!(!enumerate_models(&p7b, None, Budget::DEFAULT).unwrap().is_empty());
        assert_eq!(
            enumerate_models(&p7b, None, Budget(2)),
            Err(Error::BudgetExceeded { size: 3, budget: 2 })
        );
    }

    #[test]
    fn tnd_budget_is_on_applicable_heads() {
        let p = p4();
        assert!(matches!(
            tnd(&p, &m(&["b", "c"]), Budget(1)),
            Err(Error::BudgetExceeded { size: 4, budget: 1 })
        ));
        assert!(in_tnd(&p, &m(&["b", "c", "e"]), &m(&["a"])));
        assert!(!in_tnd(&p, &m(&["b", "c", "e"]), &m(&["b"])));
    }
}
