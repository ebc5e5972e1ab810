use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::atom::{powerset, Atom, AtomSet, Budget, Interpretation};
use crate::error::{Error, Result};

/// Exact rational used by product and maximum constraints.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// An abstract constraint, represented by its restriction to the subsets of
/// the atom set it is paired with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// Explicit list of satisfying subsets.
    Table { satisfying: BTreeSet<AtomSet> },
    /// Total weight at least `lower`.
    Weight {
        lower: u64,
        weights: BTreeMap<Atom, u64>,
    },
    /// Total weight within `lower..=upper`; `None` is an infinite upper bound.
    WeightRange {
        lower: u64,
        upper: Option<u64>,
        weights: BTreeMap<Atom, u64>,
    },
    /// At least `lower` atoms, the `kX` notation.
    Cardinality { lower: u64 },
    /// Product of weights at least `lower` (the empty product is 1).
    Product {
        lower: Rational,
        weights: BTreeMap<Atom, Rational>,
    },
    /// Largest weight at least `lower`; never satisfied by the empty set.
    Maximum {
        lower: Rational,
        weights: BTreeMap<Atom, Rational>,
    },
    ParityEven,
    ParityOdd,
    /// Contains at least one of the witness sets.
    Containment { witnesses: BTreeSet<AtomSet> },
    /// Satisfied by no set at all.
    Inconsistent,
}

impl Constraint {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Constraint::Table { .. } => "table",
            Constraint::Weight { .. } => "weight",
            Constraint::WeightRange { .. } => "weight-range",
            Constraint::Cardinality { .. } => "cardinality",
            Constraint::Product { .. } => "product",
            Constraint::Maximum { .. } => "maximum",
            Constraint::ParityEven => "even",
            Constraint::ParityOdd => "odd",
            Constraint::Containment { .. } => "containment",
            Constraint::Inconsistent => "inconsistent",
        }
    }
}

/// An abstract constraint atom `C(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstraintAtom {
    constraint: Constraint,
    atoms: AtomSet,
}

impl ConstraintAtom {
    /// Pairs a constraint with its atom set, checking the representation
    /// invariants.
    pub fn new(constraint: Constraint, atoms: AtomSet) -> Result<Self> {
        fn same_domain<V>(weights: &BTreeMap<Atom, V>, atoms: &AtomSet) -> Result<()> {
            if weights.keys().eq(atoms.iter()) {
                Ok(())
            } else {
                Err(Error::MalformedAtom(
                    "weight map domain differs from the atom set".into(),
                ))
            }
        }
        match &constraint {
            Constraint::Table { satisfying } => {
                if let Some(bad) = satisfying.iter().find(|s| !s.is_subset(&atoms)) {
                    return Err(Error::MalformedAtom(format!(
                        "table entry {} is not a subset of the atom set",
                        Interpretation::from(bad.clone())
                    )));
                }
            }
            Constraint::Containment { witnesses } => {
                if let Some(bad) = witnesses.iter().find(|s| !s.is_subset(&atoms)) {
                    return Err(Error::MalformedAtom(format!(
                        "witness {} is not a subset of the atom set",
                        Interpretation::from(bad.clone())
                    )));
                }
            }
            Constraint::Weight { lower, weights } => {
                same_domain(weights, &atoms)?;
                if weights.is_empty() {
                    return Ok(Self::cardinality(*lower, []));
                }
            }
            Constraint::WeightRange {
                lower,
                upper,
                weights,
            } => {
                same_domain(weights, &atoms)?;
                if let Some(upper) = upper {
                    if lower > upper {
                        return Err(Error::BoundInversion {
                            lower: *lower,
                            upper: *upper,
                        });
                    }
                }
            }
            Constraint::Product { weights, .. } => {
                same_domain(weights, &atoms)?;
                if let Some((a, w)) = weights.iter().find(|(_, w)| w.is_negative()) {
                    return Err(Error::NegativeWeight {
                        atom: a.to_string(),
                        weight: w.to_string(),
                    });
                }
            }
            Constraint::Maximum { weights, .. } => same_domain(weights, &atoms)?,
            Constraint::Cardinality { .. }
            | Constraint::ParityEven
            | Constraint::ParityOdd
            | Constraint::Inconsistent => {}
        }
        Ok(ConstraintAtom { constraint, atoms })
    }

    pub fn cardinality(lower: u64, atoms: impl IntoIterator<Item = Atom>) -> Self {
        ConstraintAtom {
            constraint: Constraint::Cardinality { lower },
            atoms: atoms.into_iter().collect(),
        }
    }

    /// An empty weight map gives the equivalent `k{}` cardinality atom, so
    /// that every atom has a single printed form.
    pub fn weight(lower: u64, weights: BTreeMap<Atom, u64>) -> Self {
        if weights.is_empty() {
            return Self::cardinality(lower, []);
        }
        ConstraintAtom {
            atoms: weights.keys().cloned().collect(),
            constraint: Constraint::Weight { lower, weights },
        }
    }

    /// Weight atom from an explicit listing; repeated atoms are rejected.
    pub fn weight_from_pairs(
        lower: u64,
        pairs: impl IntoIterator<Item = (Atom, u64)>,
    ) -> Result<Self> {
        Ok(Self::weight(lower, collect_weights(pairs)?))
    }

    pub fn weight_range(
        lower: u64,
        upper: Option<u64>,
        weights: BTreeMap<Atom, u64>,
    ) -> Result<Self> {
        let atoms = weights.keys().cloned().collect();
        Self::new(
            Constraint::WeightRange {
                lower,
                upper,
                weights,
            },
            atoms,
        )
    }

    pub fn product(lower: Rational, weights: BTreeMap<Atom, Rational>) -> Result<Self> {
        let atoms = weights.keys().cloned().collect();
        Self::new(Constraint::Product { lower, weights }, atoms)
    }

    pub fn maximum(lower: Rational, weights: BTreeMap<Atom, Rational>) -> Self {
        ConstraintAtom {
            atoms: weights.keys().cloned().collect(),
            constraint: Constraint::Maximum { lower, weights },
        }
    }

    pub fn even(atoms: impl IntoIterator<Item = Atom>) -> Self {
        ConstraintAtom {
            constraint: Constraint::ParityEven,
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn odd(atoms: impl IntoIterator<Item = Atom>) -> Self {
        ConstraintAtom {
            constraint: Constraint::ParityOdd,
            atoms: atoms.into_iter().collect(),
        }
    }

    pub fn containment(atoms: AtomSet, witnesses: BTreeSet<AtomSet>) -> Result<Self> {
        Self::new(Constraint::Containment { witnesses }, atoms)
    }

    pub fn table(atoms: AtomSet, satisfying: BTreeSet<AtomSet>) -> Result<Self> {
        Self::new(Constraint::Table { satisfying }, atoms)
    }

    /// The distinguished inconsistent atom over the empty set.
    pub fn inconsistent() -> Self {
        ConstraintAtom {
            constraint: Constraint::Inconsistent,
            atoms: AtomSet::new(),
        }
    }

    /// `PB(a)`: the weight atom `1{a=1}`, true exactly when `a` is.
    pub fn pb(atom: Atom) -> Self {
        Self::weight(1, BTreeMap::from([(atom, 1)]))
    }

    pub fn constraint(&self) -> &Constraint {
        &self.constraint
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn kind_name(&self) -> &'static str {
        self.constraint.kind_name()
    }

    /// `M ⊨ C(X)`, i.e. `M ∩ X ∈ C`.
    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        self.holds(|a| m.contains(a))
    }

    fn holds(&self, member: impl Fn(&Atom) -> bool) -> bool {
        match &self.constraint {
            Constraint::Table { satisfying } => {
                let present: AtomSet = self.atoms.iter().filter(|a| member(a)).cloned().collect();
                satisfying.contains(&present)
            }
            Constraint::Weight { lower, weights } => weight_of(weights, &member) >= *lower,
            Constraint::WeightRange {
                lower,
                upper,
                weights,
            } => {
                let total = weight_of(weights, &member);
                total >= *lower && upper.is_none_or(|u| total <= u)
            }
            Constraint::Cardinality { lower } => {
                self.atoms.iter().filter(|a| member(a)).count() as u64 >= *lower
            }
            Constraint::Product { lower, weights } => {
                let product = weights
                    .iter()
                    .filter(|(a, _)| member(a))
                    .fold(Rational::one(), |acc, (_, w)| acc * w);
                product >= *lower
            }
            Constraint::Maximum { lower, weights } => weights
                .iter()
                .filter(|(a, _)| member(a))
                .map(|(_, w)| w)
                .max()
                .is_some_and(|m| m >= lower),
            Constraint::ParityEven => self.atoms.iter().filter(|a| member(a)).count() % 2 == 0,
            Constraint::ParityOdd => self.atoms.iter().filter(|a| member(a)).count() % 2 == 1,
            Constraint::Containment { witnesses } => {
                witnesses.iter().any(|w| w.iter().all(&member))
            }
            Constraint::Inconsistent => false,
        }
    }

    /// Some subset of the atom set satisfies the constraint.
    pub fn is_consistent(&self) -> bool {
        match &self.constraint {
            Constraint::Table { satisfying } => !satisfying.is_empty(),
            Constraint::Weight { .. } | Constraint::Cardinality { .. } => self.holds(|_| true),
            Constraint::WeightRange {
                lower,
                upper: None,
                weights,
            } => weights.values().sum::<u64>() >= *lower,
            Constraint::WeightRange {
                lower,
                upper: Some(upper),
                weights,
            } => {
                let mut sums = BTreeSet::from([0u64]);
                for w in weights.values() {
                    let shifted: Vec<u64> = sums
                        .iter()
                        .map(|s| s + w)
                        .filter(|s| s <= upper)
                        .collect();
                    sums.extend(shifted);
                }
                sums.range(*lower..).next().is_some()
            }
            Constraint::Product { lower, weights } => {
                let best = weights
                    .values()
                    .filter(|w| **w >= Rational::one())
                    .fold(Rational::one(), |acc, w| acc * w);
                !lower.is_positive() || best >= *lower
            }
            Constraint::Maximum { lower, weights } => weights.values().any(|w| w >= lower),
            Constraint::ParityEven => true,
            Constraint::ParityOdd => !self.atoms.is_empty(),
            Constraint::Containment { witnesses } => !witnesses.is_empty(),
            Constraint::Inconsistent => false,
        }
    }

    /// Upward closure of the constraint restricted to subsets of the atom set.
    ///
    /// Parametric families are classified by family. A finite upper bound
    /// below the total weight, or a product weight below 1, is reported as
    /// non-monotone without looking further.
    pub fn is_monotone(&self) -> bool {
        match &self.constraint {
            Constraint::Table { satisfying } => satisfying.iter().all(|s| {
                self.atoms.difference(s).all(|a| {
                    let mut bigger = s.clone();
                    bigger.insert(a.clone());
                    satisfying.contains(&bigger)
                })
            }),
            Constraint::Weight { .. }
            | Constraint::Cardinality { .. }
            | Constraint::Maximum { .. }
            | Constraint::Containment { .. }
            | Constraint::Inconsistent => true,
            Constraint::WeightRange { upper, weights, .. } => {
                upper.is_none_or(|u| u >= weights.values().sum::<u64>())
            }
            Constraint::Product { weights, .. } => {
                weights.values().all(|w| *w >= Rational::one())
            }
            Constraint::ParityEven | Constraint::ParityOdd => false,
        }
    }

    /// The atom set is a minimal satisfying set.
    pub fn is_definite(&self) -> bool {
        match &self.constraint {
            Constraint::Table { satisfying } => {
                satisfying.len() == 1 && satisfying.contains(&self.atoms)
            }
            Constraint::Containment { witnesses } => {
                witnesses.contains(&self.atoms)
                    && witnesses.iter().all(|w| w == &self.atoms || !w.is_subset(&self.atoms))
            }
            Constraint::ParityEven => self.atoms.is_empty(),
            Constraint::ParityOdd => self.atoms.len() == 1,
            Constraint::Inconsistent => false,
            Constraint::Product { .. } if !self.is_monotone() => {
                self.holds(|_| true)
                    && proper_subsets(&self.atoms)
                        .all(|s| !self.holds(|a| s.contains(a)))
            }
            // For the weight families and every monotone family it suffices
            // to drop one atom at a time.
            _ => {
                self.holds(|_| true)
                    && self.atoms.iter().all(|removed| !self.holds(|a| a != removed))
            }
        }
    }

    /// Materializes the constraint as a table over its atom set.
    pub fn to_table(&self, budget: Budget) -> Result<ConstraintAtom> {
        let satisfying = powerset(&self.atoms, budget)?
            .filter(|s| self.satisfied_by(s))
            .map(Interpretation::into_atoms)
            .collect();
        Ok(ConstraintAtom {
            constraint: Constraint::Table { satisfying },
            atoms: self.atoms.clone(),
        })
    }
}

fn proper_subsets(atoms: &AtomSet) -> impl Iterator<Item = Interpretation> + '_ {
    powerset(atoms, Budget(63))
        .expect("atom set too large for a subset scan")
        .filter(move |s| s.len() < atoms.len())
}

fn weight_of(weights: &BTreeMap<Atom, u64>, member: impl Fn(&Atom) -> bool) -> u64 {
    weights
        .iter()
        .filter(|(a, _)| member(a))
        .map(|(_, w)| *w)
        .sum()
}

/// Collects an explicit weight listing, rejecting repeated atoms.
pub fn collect_weights<V>(pairs: impl IntoIterator<Item = (Atom, V)>) -> Result<BTreeMap<Atom, V>> {
    let mut weights = BTreeMap::new();
    for (atom, w) in pairs {
        if weights.contains_key(&atom) {
            return Err(Error::DuplicateAtom(atom.to_string()));
        }
        weights.insert(atom, w);
    }
    Ok(weights)
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_atoms(f: &mut fmt::Formatter<'_>, atoms: &AtomSet) -> fmt::Result {
    for (i, a) in atoms.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

fn fmt_families(f: &mut fmt::Formatter<'_>, sets: &BTreeSet<AtomSet>) -> fmt::Result {
    // Print in the same order interpretations sort in.
    let ordered: BTreeSet<Interpretation> = sets.iter().cloned().map(Interpretation::from).collect();
    for (i, s) in ordered.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

fn fmt_weights<V>(
    f: &mut fmt::Formatter<'_>,
    weights: &BTreeMap<Atom, V>,
    show: impl Fn(&V) -> String,
) -> fmt::Result {
    f.write_str("{")?;
    for (i, (a, w)) in weights.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}={}", show(w))?;
    }
    f.write_str("}")
}

/// Renders the atom in the `acp` text dialect.
impl fmt::Display for ConstraintAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.constraint {
            Constraint::Weight { lower: 1, weights }
                if weights.len() == 1 && weights.values().all(|w| *w == 1) =>
            {
                fmt_atoms(f, &self.atoms)
            }
            Constraint::Weight { lower, weights } => {
                write!(f, "{lower}")?;
                fmt_weights(f, weights, u64::to_string)
            }
            Constraint::WeightRange {
                lower,
                upper,
                weights,
            } => {
                write!(f, "{lower}")?;
                fmt_weights(f, weights, u64::to_string)?;
                match upper {
                    Some(u) => write!(f, "{u}"),
                    None => f.write_str("INF"),
                }
            }
            Constraint::Cardinality { lower } => {
                write!(f, "{lower}{{")?;
                fmt_atoms(f, &self.atoms)?;
                f.write_str("}")
            }
            Constraint::Table { satisfying } => {
                f.write_str("TABLE[")?;
                fmt_atoms(f, &self.atoms)?;
                f.write_str(": ")?;
                fmt_families(f, satisfying)?;
                f.write_str("]")
            }
            Constraint::Containment { witnesses } => {
                f.write_str("CONTAINS[")?;
                fmt_atoms(f, &self.atoms)?;
                f.write_str(": ")?;
                fmt_families(f, witnesses)?;
                f.write_str("]")
            }
            Constraint::Product { lower, weights } => {
                write!(f, "PROD({})", fmt_rational(lower))?;
                fmt_weights(f, weights, fmt_rational)
            }
            Constraint::Maximum { lower, weights } => {
                write!(f, "MAX({})", fmt_rational(lower))?;
                fmt_weights(f, weights, fmt_rational)
            }
            Constraint::ParityEven => {
                f.write_str("EVEN{")?;
                fmt_atoms(f, &self.atoms)?;
                f.write_str("}")
            }
            Constraint::ParityOdd => {
                f.write_str("ODD{")?;
                fmt_atoms(f, &self.atoms)?;
                f.write_str("}")
            }
            Constraint::Inconsistent => f.write_str("FALSE"),
        }
    }
}
