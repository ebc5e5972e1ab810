use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Prefix reserved for atoms introduced by program transformations.
pub const FRESH_SIGIL: char = '~';

/// A propositional atom, compared by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Self {
        assert!(!name.is_empty(), "atom names must be non-empty");
        Atom(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Atoms whose name starts with `~` are reserved for not-elimination.
    pub fn is_fresh(&self) -> bool {
        self.0.starts_with(FRESH_SIGIL)
    }
}

impl From<&str> for Atom {
    fn from(name: &str) -> Self {
        Atom::new(name)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type AtomSet = BTreeSet<Atom>;

/// The declared atoms a program (or interpretation) lives over.
pub type Universe = AtomSet;

/// Builds an atom set from names.
pub fn atom_set<I, S>(names: I) -> AtomSet
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    names.into_iter().map(|n| Atom::new(n.as_ref())).collect()
}

/// A set of atoms read as a truth assignment.
///
/// Ordered by cardinality first and then lexicographically by sorted atom
/// names, so collections of interpretations print deterministically.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Interpretation(AtomSet);

impl Interpretation {
    pub fn new() -> Self {
        Interpretation(AtomSet::new())
    }

    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Interpretation(atom_set(names))
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.0
    }

    pub fn into_atoms(self) -> AtomSet {
        self.0
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        self.0.contains(atom)
    }

    pub fn insert(&mut self, atom: Atom) -> bool {
        self.0.insert(atom)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_subset_of(&self, atoms: &AtomSet) -> bool {
        self.0.is_subset(atoms)
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        Interpretation(self.0.union(&other.0).cloned().collect())
    }

    /// `M ∩ X`.
    pub fn restrict(&self, atoms: &AtomSet) -> Interpretation {
        Interpretation(self.0.intersection(atoms).cloned().collect())
    }

    pub fn difference(&self, atoms: &AtomSet) -> Interpretation {
        Interpretation(self.0.difference(atoms).cloned().collect())
    }

    pub fn names(&self) -> Vec<String> {
        self.0.iter().map(|a| a.name().to_owned()).collect()
    }
}

impl From<AtomSet> for Interpretation {
    fn from(atoms: AtomSet) -> Self {
        Interpretation(atoms)
    }
}

impl FromIterator<Atom> for Interpretation {
    fn from_iter<T: IntoIterator<Item = Atom>>(iter: T) -> Self {
        Interpretation(iter.into_iter().collect())
    }
}

impl Ord for Interpretation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Interpretation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Upper bound on the number of atoms any subset enumeration may range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Budget {
    pub const DEFAULT: Budget = Budget(20);

    pub fn check(self, size: usize) -> Result<()> {
        if size > self.0 {
            Err(Error::BudgetExceeded {
                size,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// All subsets of `scope`, or `BudgetExceeded` when `|scope|` is over budget.
pub fn powerset(scope: &AtomSet, budget: Budget) -> Result<Powerset> {
    budget.check(scope.len())?;
    Ok(Powerset::new(scope))
}

/// Iterator over the subsets of a small atom set, driven by a bit mask.
pub struct Powerset {
    atoms: Vec<Atom>,
    next: u64,
    end: u64,
}

impl Powerset {
    fn new(scope: &AtomSet) -> Self {
        // Budget checks keep this far below 64 bits in practice.
        assert!(scope.len() < 64, "subset enumeration over 64+ atoms");
        Powerset {
            atoms: scope.iter().cloned().collect(),
            next: 0,
            end: 1u64 << scope.len(),
        }
    }
}

impl Iterator for Powerset {
    type Item = Interpretation;

    fn next(&mut self) -> Option<Interpretation> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(
            self.atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| a.clone())
                .collect(),
        )
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}
