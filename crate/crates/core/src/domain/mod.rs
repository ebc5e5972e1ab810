//! Atoms, abstract constraints, constraint atoms, clauses and programs.
//!
//! A constraint is only ever evaluated on subsets of the atom set it is
//! paired with, since `M ⊨ C(X)` depends on `M ∩ X` alone.

mod atom;
mod constraint;
mod program;

pub use atom::{atom_set, powerset, Atom, AtomSet, Budget, Interpretation, Powerset, Universe, FRESH_SIGIL};
pub use constraint::{collect_weights, integer, rational, Constraint, ConstraintAtom, Rational};
pub use program::{Clause, Literal, Program};
