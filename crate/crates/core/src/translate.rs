//! Normal logic programs and their embedding `P ↦ P^pb` into PB-programs.

use std::fmt;

use crate::domain::{Atom, AtomSet, Clause, ConstraintAtom, Literal, Program};

pub use crate::oracle::oracle_gl_stable as normal_stable_direct;

/// `a ← b1, …, bm, not(c1), …, not(cn)`; a missing head marks a constraint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalClause {
    pub head: Option<Atom>,
    pub pos: Vec<Atom>,
    pub neg: Vec<Atom>,
}

impl NormalClause {
    pub fn new(head: Option<Atom>, pos: Vec<Atom>, neg: Vec<Atom>) -> Self {
        NormalClause { head, pos, neg }
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.head.iter().chain(&self.pos).chain(&self.neg)
    }
}

impl fmt::Display for NormalClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .pos
            .iter()
            .map(Atom::to_string)
            .chain(self.neg.iter().map(|a| format!("not({a})")))
            .collect();
        match (&self.head, body.is_empty()) {
            (Some(h), true) => write!(f, "{h}."),
            (Some(h), false) => write!(f, "{h} :- {}.", body.join(", ")),
            (None, _) => write!(f, ":- {}.", body.join(", ")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalProgram {
    pub clauses: Vec<NormalClause>,
}

impl NormalProgram {
    pub fn new(clauses: Vec<NormalClause>) -> Self {
        NormalProgram { clauses }
    }

    pub fn atoms(&self) -> AtomSet {
        self.clauses.iter().flat_map(|c| c.atoms().cloned()).collect()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }
}

impl fmt::Display for NormalProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Replaces every atom `a` by `PB(a)`; constraint heads become `FALSE`.
pub fn normal_to_pb(p: &NormalProgram) -> Program {
    let clauses = p
        .clauses
        .iter()
        .map(|c| {
            let head = match &c.head {
                Some(a) => ConstraintAtom::pb(a.clone()),
                None => ConstraintAtom::inconsistent(),
            };
            let body = c
                .pos
                .iter()
                .map(|a| Literal::pos(ConstraintAtom::pb(a.clone())))
                .chain(c.neg.iter().map(|a| Literal::neg(ConstraintAtom::pb(a.clone()))))
                .collect();
            Clause::new(head, body)
        })
        .collect();
    Program::with_universe(clauses, p.atoms())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::domain::{Budget, Interpretation};
    use crate::{horn, stable};

    fn a(n: &str) -> Atom {
        Atom::new(n)
    }

    fn m(names: &[&str]) -> Interpretation {
        Interpretation::from_names(names)
    }

    #[test]
    fn embedding_shape() {
        assert!(normal_to_pb(&NormalProgram::default()).is_empty());
        let p = NormalProgram::new(vec![
            NormalClause::new(Some(a("a")), vec![a("b")], vec![a("c")]),
            NormalClause::new(None, vec![a("a")], vec![]),
        ]);
        let pb = normal_to_pb(&p);
        assert_eq!(pb.to_string(), "a :- b, not(c).\n:- a.\n");
        assert!(pb.clauses()[1].is_constraint_clause());
        let without_constraint = NormalProgram::new(p.clauses[..1].to_vec());
        assert!(stable::is_definite_program(&normal_to_pb(&without_constraint)));
    }

    #[test]
    fn horn_least_model_is_the_derivable_model() {
        let p = NormalProgram::new(vec![
            NormalClause::new(Some(a("a")), vec![], vec![]),
            NormalClause::new(Some(a("b")), vec![a("a")], vec![]),
            NormalClause::new(Some(a("c")), vec![a("d")], vec![]),
        ]);
        let pb = normal_to_pb(&p);
        assert_eq!(
            horn::enumerate_derivable(&pb, Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&["a", "b"])])
        );
        assert_eq!(stable::td_fixpoint(&pb).unwrap(), m(&["a", "b"]));
    }

    #[test]
    fn direct_gl_check() {
        let fact = NormalProgram::new(vec![NormalClause::new(Some(a("a")), vec![], vec![])]);
        assert!(normal_stable_direct(&fact, &m(&["a"])));
        let odd = NormalProgram::new(vec![NormalClause::new(Some(a("a")), vec![], vec![a("a")])]);
        assert!(!normal_stable_direct(&odd, &m(&[])));
        assert!(!normal_stable_direct(&odd, &m(&["a"])));
    }
}
