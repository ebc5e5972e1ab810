use std::fmt;

use super::atom::{Atom, AtomSet, Interpretation, Universe};
use super::constraint::ConstraintAtom;

/// `C(X)` or `not(C(X))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub atom: ConstraintAtom,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: ConstraintAtom) -> Self {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: ConstraintAtom) -> Self {
        Literal {
            atom,
            negated: true,
        }
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        self.atom.satisfied_by(m) != self.negated
    }

    /// `aset(A)`.
    pub fn aset(&self) -> &AtomSet {
        self.atom.atoms()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "not({})", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// `A(X) ← B1(X1), …, not(C1(Y1)), …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    pub head: ConstraintAtom,
    pub body: Vec<Literal>,
}

impl Clause {
    pub fn new(head: ConstraintAtom, body: Vec<Literal>) -> Self {
        Clause { head, body }
    }

    pub fn fact(head: ConstraintAtom) -> Self {
        Clause {
            head,
            body: Vec::new(),
        }
    }

    pub fn hset(&self) -> &AtomSet {
        self.head.atoms()
    }

    /// The head is inconsistent.
    pub fn is_constraint_clause(&self) -> bool {
        !self.head.is_consistent()
    }

    pub fn has_negation(&self) -> bool {
        self.body.iter().any(|l| l.negated)
    }

    pub fn body_satisfied_by(&self, m: &Interpretation) -> bool {
        self.body.iter().all(|l| l.satisfied_by(m))
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        !self.body_satisfied_by(m) || self.head.satisfied_by(m)
    }

    /// Every constraint atom of the clause, head first.
    pub fn constraint_atoms(&self) -> impl Iterator<Item = &ConstraintAtom> {
        std::iter::once(&self.head).chain(self.body.iter().map(|l| &l.atom))
    }

    pub fn atoms(&self) -> AtomSet {
        self.constraint_atoms()
            .flat_map(|a| a.atoms().iter().cloned())
            .collect()
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inconsistent_head =
            matches!(self.head.constraint(), super::constraint::Constraint::Inconsistent);
        if self.body.is_empty() {
            return write!(f, "{}.", self.head);
        }
        if !inconsistent_head {
            write!(f, "{} ", self.head)?;
        }
        f.write_str(":- ")?;
        for (i, l) in self.body.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(".")
    }
}

/// A finite sequence of clauses over a declared universe.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Program {
    clauses: Vec<Clause>,
    universe: Universe,
}

impl Program {
    pub fn new(clauses: Vec<Clause>) -> Self {
        Self::with_universe(clauses, Universe::new())
    }

    /// A program whose universe also contains `extra`.
    pub fn with_universe(clauses: Vec<Clause>, extra: impl IntoIterator<Item = Atom>) -> Self {
        let mut universe: Universe = extra.into_iter().collect();
        for c in &clauses {
            universe.extend(c.atoms());
        }
        Program { clauses, universe }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Union of the head sets of all clauses.
    pub fn hset(&self) -> AtomSet {
        self.clauses
            .iter()
            .flat_map(|c| c.hset().iter().cloned())
            .collect()
    }

    /// Union of the head sets of the selected clauses.
    pub fn hset_of<'a>(&self, indices: impl IntoIterator<Item = &'a usize>) -> AtomSet {
        indices
            .into_iter()
            .flat_map(|&i| self.clauses[i].hset().iter().cloned())
            .collect()
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(m))
    }

    pub fn has_negation(&self) -> bool {
        self.clauses.iter().any(Clause::has_negation)
    }

    pub fn constraint_clauses(&self) -> impl Iterator<Item = usize> + '_ {
        self.clauses
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_constraint_clause())
            .map(|(i, _)| i)
    }

    /// `P ∪ Q`, keeping both universes.
    pub fn union(&self, other: &Program) -> Program {
        let mut clauses = self.clauses.clone();
        clauses.extend(other.clauses.iter().cloned());
        Program::with_universe(
            clauses,
            self.universe.iter().chain(other.universe.iter()).cloned(),
        )
    }

    /// The same clauses over a wider universe.
    pub fn widened(&self, extra: impl IntoIterator<Item = Atom>) -> Program {
        Program::with_universe(
            self.clauses.clone(),
            self.universe.iter().cloned().chain(extra),
        )
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
