//! lparse weight-constraint programs: l-atoms `kWl`, the lparse-reduct,
//! lparse-stable and lparse-supported models, not-elimination, and the `e`
//! and `f` translations to and from PB-programs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::domain::{
    powerset, Atom, AtomSet, Budget, Clause, Constraint, ConstraintAtom, Interpretation, Literal,
    Program, FRESH_SIGIL,
};
use crate::error::{Error, Result};
use crate::stable::td_fixpoint;

/// `a` or `not(a)` inside a weighted literal set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LLiteral {
    pub atom: Atom,
    pub negated: bool,
}

impl LLiteral {
    pub fn pos(atom: Atom) -> Self {
        LLiteral {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        LLiteral {
            atom,
            negated: true,
        }
    }

    pub fn holds(&self, m: &Interpretation) -> bool {
        m.contains(&self.atom) != self.negated
    }
}

impl fmt::Display for LLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "not({})", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// `{a1=w1, …, not(b1)=v1, …}` with non-negative weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightedLiteralSet(BTreeMap<LLiteral, u64>);

impl WeightedLiteralSet {
    pub fn new(entries: BTreeMap<LLiteral, u64>) -> Self {
        WeightedLiteralSet(entries)
    }

    /// Rejects a literal listed twice.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (LLiteral, u64)>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lit, w) in pairs {
            if entries.insert(lit.clone(), w).is_some() {
                return Err(Error::DuplicateAtom(lit.to_string()));
            }
        }
        Ok(WeightedLiteralSet(entries))
    }

    pub fn entries(&self) -> &BTreeMap<LLiteral, u64> {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LLiteral, u64)> {
        self.0.iter().map(|(l, w)| (l, *w))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Atoms occurring positively.
    pub fn positive_atoms(&self) -> AtomSet {
        self.0
            .keys()
            .filter(|l| !l.negated)
            .map(|l| l.atom.clone())
            .collect()
    }

    /// `aset(W)`: every atom, positive or negated.
    pub fn aset(&self) -> AtomSet {
        self.0.keys().map(|l| l.atom.clone()).collect()
    }

    pub fn has_negation(&self) -> bool {
        self.0.keys().any(|l| l.negated)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Weight of the literals that `m` makes true.
    pub fn value(&self, m: &Interpretation) -> u64 {
        self.iter().filter(|(l, _)| l.holds(m)).map(|(_, w)| w).sum()
    }

    /// The positive part as a PB weight map.
    fn positive_weights(&self) -> BTreeMap<Atom, u64> {
        self.iter()
            .filter(|(l, _)| !l.negated)
            .map(|(l, w)| (l.atom.clone(), w))
            .collect()
    }
}

/// `kWl`; an upper bound of `None` is `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LAtom {
    lower: u64,
    upper: Option<u64>,
    weights: WeightedLiteralSet,
}

impl LAtom {
    pub fn new(lower: u64, upper: Option<u64>, weights: WeightedLiteralSet) -> Result<Self> {
        if let Some(upper) = upper {
            if lower > upper {
                return Err(Error::BoundInversion { lower, upper });
            }
        }
        Ok(LAtom {
            lower,
            upper,
            weights,
        })
    }

    /// `1{a=1}`.
    pub fn atom(a: Atom) -> Self {
        LAtom {
            lower: 1,
            upper: None,
            weights: WeightedLiteralSet(BTreeMap::from([(LLiteral::pos(a), 1)])),
        }
    }

    /// `1{}`, the inconsistent l-atom used for constraint heads.
    pub fn falsum() -> Self {
        LAtom {
            lower: 1,
            upper: None,
            weights: WeightedLiteralSet::default(),
        }
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    pub fn upper(&self) -> Option<u64> {
        self.upper
    }

    pub fn weights(&self) -> &WeightedLiteralSet {
        &self.weights
    }

    /// The upper bound, with `+∞` replaced by the total weight.
    pub fn upper_or_total(&self) -> u64 {
        self.upper.unwrap_or_else(|| self.weights.total())
    }

    pub fn is_falsum(&self) -> bool {
        *self == LAtom::falsum()
    }
}

pub fn l_satisfies(m: &Interpretation, a: &LAtom) -> bool {
    let v = a.weights.value(m);
    a.lower <= v && a.upper.is_none_or(|u| v <= u)
}

impl fmt::Display for LAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lower == 1 && self.upper.is_none() && self.weights.0.len() == 1 {
            let (lit, w) = self.weights.iter().next().unwrap();
            if w == 1 {
                return write!(f, "{lit}");
            }
        }
        write!(f, "{}{{", self.lower)?;
        for (i, (lit, w)) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{lit}={w}")?;
        }
        f.write_str("}")?;
        if let Some(u) = self.upper {
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LClause {
    pub head: LAtom,
    pub body: Vec<LAtom>,
}

impl LClause {
    pub fn new(head: LAtom, body: Vec<LAtom>) -> Self {
        LClause { head, body }
    }

    pub fn body_satisfied_by(&self, m: &Interpretation) -> bool {
        self.body.iter().all(|b| l_satisfies(m, b))
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        !self.body_satisfied_by(m) || l_satisfies(m, &self.head)
    }

    pub fn l_atoms(&self) -> impl Iterator<Item = &LAtom> {
        std::iter::once(&self.head).chain(&self.body)
    }

    pub fn has_negation(&self) -> bool {
        self.l_atoms().any(|a| a.weights.has_negation())
    }
}

impl fmt::Display for LClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_empty() {
            return write!(f, "{}.", self.head);
        }
        if !self.head.is_falsum() {
            write!(f, "{} ", self.head)?;
        }
        f.write_str(":-")?;
        for (i, b) in self.body.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{b}")?;
        }
        f.write_str(".")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LProgram {
    pub clauses: Vec<LClause>,
}

impl LProgram {
    pub fn new(clauses: Vec<LClause>) -> Self {
        LProgram { clauses }
    }

    pub fn atoms(&self) -> AtomSet {
        self.clauses
            .iter()
            .flat_map(LClause::l_atoms)
            .flat_map(|a| a.weights.aset())
            .collect()
    }

    /// Atoms occurring positively in some head.
    pub fn head_positive_atoms(&self) -> AtomSet {
        self.clauses
            .iter()
            .flat_map(|c| c.head.weights.positive_atoms())
            .collect()
    }

    pub fn head_atoms(&self) -> AtomSet {
        self.clauses.iter().flat_map(|c| c.head.weights.aset()).collect()
    }

    pub fn satisfied_by(&self, m: &Interpretation) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(m))
    }

    pub fn has_negation(&self) -> bool {
        self.clauses.iter().any(LClause::has_negation)
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }
}

impl fmt::Display for LProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The definite Horn PB-program `P^M`.
pub fn lparse_reduct(p: &LProgram, m: &Interpretation) -> Program {
    let mut clauses = Vec::new();
    for c in p.clauses.iter().filter(|c| c.body_satisfied_by(m)) {
        let body: Vec<Literal> = c
            .body
            .iter()
            .map(|b| {
                let false_negated: u64 = b
                    .weights
                    .iter()
                    .filter(|(l, _)| l.negated && !m.contains(&l.atom))
                    .map(|(_, w)| w)
                    .sum();
                let lower = b.lower.saturating_sub(false_negated);
                Literal::pos(ConstraintAtom::weight(lower, b.weights.positive_weights()))
            })
            .collect();
        for a in c.head.weights.positive_atoms() {
            if m.contains(&a) {
                clauses.push(Clause::new(ConstraintAtom::pb(a), body.clone()));
            }
        }
    }
    Program::with_universe(clauses, p.atoms())
}

/// `M = lm(P^M)` and `M ⊨ P`.
pub fn lparse_stable(p: &LProgram, m: &Interpretation) -> bool {
    p.satisfied_by(m)
        && td_fixpoint(&lparse_reduct(p, m)).expect("lparse reducts are definite Horn") == *m
}

/// A model in which every atom has an applicable clause whose head mentions it.
pub fn lparse_supported(p: &LProgram, m: &Interpretation) -> bool {
    p.satisfied_by(m)
        && m.iter().all(|a| {
            p.clauses
                .iter()
                .any(|c| c.body_satisfied_by(m) && c.head.weights.aset().contains(a))
        })
}

/// Candidates are subsets of the positive head atoms, which bound `lm(P^M)`.
pub fn enumerate_lparse_stable(p: &LProgram, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    Ok(powerset(&p.head_positive_atoms(), budget)?
        .filter(|m| lparse_stable(p, m))
        .collect())
}

pub fn enumerate_lparse_supported(
    p: &LProgram,
    budget: Budget,
) -> Result<BTreeSet<Interpretation>> {
    Ok(powerset(&p.head_atoms(), budget)?
        .filter(|m| lparse_supported(p, m))
        .collect())
}

/// The name of the atom standing for `not(b)`.
pub fn fresh_atom(b: &Atom) -> Atom {
    Atom::new(&format!("{FRESH_SIGIL}{b}"))
}

/// A not-free program and the map from each fresh atom to its source atom.
///
/// Every `not(b)=w` becomes `~b=w`, with `~b ← 0{b=1}0` added. When `not(b)`
/// occurs in a head, the constraint `← 1{b=1}, 1{~b=1}` is added as well;
/// otherwise a head could derive `~b` alongside `b`.
pub fn eliminate_not(p: &LProgram) -> Result<(LProgram, BTreeMap<Atom, Atom>)> {
    if let Some(a) = p.atoms().into_iter().find(Atom::is_fresh) {
        return Err(Error::NameClash(a.to_string()));
    }
    let mut fresh = BTreeMap::new();
    let mut in_heads = BTreeSet::new();
    let rewrite = |a: &LAtom, fresh: &mut BTreeMap<Atom, Atom>| -> LAtom {
        let entries = a
            .weights
            .iter()
            .map(|(l, w)| {
                if l.negated {
                    let bar = fresh_atom(&l.atom);
                    fresh.insert(bar.clone(), l.atom.clone());
                    (LLiteral::pos(bar), w)
                } else {
                    (l.clone(), w)
                }
            })
            .collect();
        LAtom {
            lower: a.lower,
            upper: a.upper,
            weights: WeightedLiteralSet(entries),
        }
    };
    let mut clauses = Vec::new();
    for c in &p.clauses {
        in_heads.extend(
            c.head
                .weights
                .0
                .keys()
                .filter(|l| l.negated)
                .map(|l| l.atom.clone()),
        );
        let head = rewrite(&c.head, &mut fresh);
        let body = c.body.iter().map(|b| rewrite(b, &mut fresh)).collect();
        clauses.push(LClause::new(head, body));
    }
    for (bar, b) in &fresh {
        let zero = LAtom {
            lower: 0,
            upper: Some(0),
            weights: WeightedLiteralSet(BTreeMap::from([(LLiteral::pos(b.clone()), 1)])),
        };
        clauses.push(LClause::new(LAtom::atom(bar.clone()), vec![zero]));
        if in_heads.contains(b) {
            clauses.push(LClause::new(
                LAtom::falsum(),
                vec![LAtom::atom(b.clone()), LAtom::atom(bar.clone())],
            ));
        }
    }
    Ok((LProgram::new(clauses), fresh))
}

/// `M ∪ {~b : b ∈ B ∖ M}` for the fresh atoms of `eliminate_not`.
pub fn extend_with_fresh(m: &Interpretation, fresh: &BTreeMap<Atom, Atom>) -> Interpretation {
    let mut out = m.clone();
    for (bar, b) in fresh {
        if !m.contains(b) {
            out.insert(bar.clone());
        }
    }
    out
}

fn pb_atom(lower: u64, w: &WeightedLiteralSet) -> ConstraintAtom {
    ConstraintAtom::weight(lower, w.positive_weights())
}

/// The clause pair `e1(r)`, `e2(r)` for every clause, with missing upper
/// bounds set to the total weight.
pub fn e_translate(p: &LProgram) -> Result<Program> {
    if let Some(i) = p.clauses.iter().position(LClause::has_negation) {
        return Err(Error::NegationPresent { clause: i });
    }
    let mut clauses = Vec::with_capacity(2 * p.len());
    for c in &p.clauses {
        let mut body: Vec<Literal> = c
            .body
            .iter()
            .map(|b| Literal::pos(pb_atom(b.lower, &b.weights)))
            .collect();
        body.extend(
            c.body
                .iter()
                .map(|b| Literal::neg(pb_atom(b.upper_or_total() + 1, &b.weights))),
        );
        let over = Literal::pos(pb_atom(c.head.upper_or_total() + 1, &c.head.weights));
        let mut e2_body = vec![over];
        e2_body.extend(body.iter().cloned());
        clauses.push(Clause::new(pb_atom(c.head.lower, &c.head.weights), body));
        clauses.push(Clause::new(ConstraintAtom::inconsistent(), e2_body));
    }
    Ok(Program::with_universe(clauses, p.atoms()))
}

/// Lower bound and weights of a PB-atom, if it is one.
fn as_pb(a: &ConstraintAtom, clause: usize) -> Result<(u64, BTreeMap<Atom, u64>)> {
    match a.constraint() {
        Constraint::Weight { lower, weights } => Ok((*lower, weights.clone())),
        Constraint::Cardinality { lower } => {
            Ok((*lower, a.atoms().iter().map(|x| (x.clone(), 1)).collect()))
        }
        // `1{}` has the same (empty) set of models.
        Constraint::Inconsistent => Ok((1, BTreeMap::new())),
        other => Err(Error::UnsupportedAtomKind {
            clause,
            kind: other.kind_name().to_string(),
        }),
    }
}

fn l_atom(lower: u64, upper: Option<u64>, weights: BTreeMap<Atom, u64>) -> LAtom {
    LAtom {
        lower,
        upper,
        weights: WeightedLiteralSet(
            weights
                .into_iter()
                .map(|(a, w)| (LLiteral::pos(a), w))
                .collect(),
        ),
    }
}

/// `not(lV)` becomes `0V(l-1)`. A clause with some `not(0V)` in its body can
/// never fire, so its body is replaced by the unsatisfiable `1{}`.
pub fn f_translate(p: &Program) -> Result<LProgram> {
    let mut clauses = Vec::with_capacity(p.len());
    for (i, c) in p.clauses().iter().enumerate() {
        let (k, w) = as_pb(&c.head, i)?;
        let head = l_atom(k, None, w);
        let mut body = Vec::with_capacity(c.body.len());
        let mut blocked = false;
        for lit in &c.body {
            let (l, v) = as_pb(&lit.atom, i)?;
            if !lit.negated {
                body.push(l_atom(l, None, v));
            } else if l == 0 {
                blocked = true;
            } else {
                body.push(l_atom(0, Some(l - 1), v));
            }
        }
        if blocked {
            body = vec![LAtom::falsum()];
        }
        clauses.push(LClause::new(head, body));
    }
    Ok(LProgram::new(clauses))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Atom {
        Atom::new(n)
    }

    fn m(names: &[&str]) -> Interpretation {
        Interpretation::from_names(names)
    }

    fn lat(lower: u64, upper: Option<u64>, entries: &[(&str, bool, u64)]) -> LAtom {
        let pairs = entries.iter().map(|(n, neg, w)| {
            (
                if *neg { LLiteral::neg(a(n)) } else { LLiteral::pos(a(n)) },
                *w,
            )
        });
        LAtom::new(lower, upper, WeightedLiteralSet::from_pairs(pairs).unwrap()).unwrap()
    }

    #[test]
    fn l_atom_satisfaction() {
        let tight = lat(2, Some(2), &[("a", false, 1)]);
        for s in [m(&[]), m(&["a"])] {
            assert!(!l_satisfies(&s, &tight));
        }
        assert!(l_satisfies(&m(&["x"]), &lat(0, Some(0), &[])));
        let mixed = lat(1, None, &[("a", false, 1), ("b", true, 1)]);
        assert!(!l_satisfies(&m(&["b"]), &mixed));
        assert!(l_satisfies(&m(&[]), &mixed));
        assert!(matches!(
            LAtom::new(3, Some(2), WeightedLiteralSet::default()),
            Err(Error::BoundInversion { lower: 3, upper: 2 })
        ));
    }

    #[test]
    fn reduct_examples() {
        let p = LProgram::new(vec![LClause::new(lat(1, Some(1), &[("a", false, 1)]), vec![])]);
        let r = lparse_reduct(&p, &m(&["a"]));
        assert_eq!(r.clauses(), &[Clause::fact(ConstraintAtom::pb(a("a")))]);
        assert!(lparse_reduct(&p, &m(&[])).is_empty());

        let q = LProgram::new(vec![LClause::new(
            LAtom::atom(a("a")),
            vec![lat(1, None, &[("b", true, 1)])],
        )]);
        let r = lparse_reduct(&q, &m(&["a"]));
        assert_eq!(r.clauses()[0].body[0].atom, ConstraintAtom::weight(0, BTreeMap::new()));
    }

    #[test]
    fn stability_and_support() {
        let p = LProgram::new(vec![LClause::new(lat(1, Some(1), &[("a", false, 1)]), vec![])]);
        assert!(lparse_stable(&p, &m(&["a"])));
        assert!(!lparse_stable(&p, &m(&[])));
        assert!(lparse_supported(&p, &m(&["a"])));
        assert_eq!(
            enumerate_lparse_stable(&p, Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&["a"])])
        );
        // A choice: 0{a,b}2 has four stable models.
        let choice = LProgram::new(vec![LClause::new(
            lat(0, Some(2), &[("a", false, 1), ("b", false, 1)]),
            vec![],
        )]);
        assert_eq!(enumerate_lparse_stable(&choice, Budget::DEFAULT).unwrap().len(), 4);
    }

    #[test]
    fn not_elimination() {
        let p = LProgram::new(vec![LClause::new(
            LAtom::atom(a("a")),
            vec![lat(1, None, &[("b", true, 1)])],
        )]);
        let (q, fresh) = eliminate_not(&p).unwrap();
        assert_eq!(q.to_string(), "a :- ~b.\n~b :- 0{b=1}0.\n");
        assert_eq!(fresh, BTreeMap::from([(a("~b"), a("b"))]));
        assert!(lparse_stable(&p, &m(&["a"])));
        assert!(lparse_stable(&q, &extend_with_fresh(&m(&["a"]), &fresh)));

        let plain = LProgram::new(vec![LClause::new(LAtom::atom(a("a")), vec![])]);
        let (same, empty) = eliminate_not(&plain).unwrap();
        assert_eq!(same, plain);
        assert!(empty.is_empty());

        let clash = LProgram::new(vec![LClause::new(LAtom::atom(a("~b")), vec![])]);
        assert!(matches!(eliminate_not(&clash), Err(Error::NameClash(_))));
    }

    #[test]
    fn negation_in_heads_stays_exact() {
        // b. and a head demanding not(b): no lparse-stable model.
        let p = LProgram::new(vec![
            LClause::new(LAtom::atom(a("b")), vec![]),
            LClause::new(lat(1, None, &[("b", true, 1)]), vec![]),
        ]);
        assert!(enumerate_lparse_stable(&p, Budget::DEFAULT).unwrap().is_empty());
        let (q, _) = eliminate_not(&p).unwrap();
        assert!(enumerate_lparse_stable(&q, Budget::DEFAULT).unwrap().is_empty());
    }

    #[test]
    fn e_translation() {
        let p = LProgram::new(vec![
            LClause::new(lat(1, Some(1), &[("a", false, 1), ("b", false, 1)]), vec![]),
            LClause::new(LAtom::atom(a("c")), vec![lat(1, Some(1), &[("a", false, 1)])]),
        ]);
        let e = e_translate(&p).unwrap();
        assert_eq!(e.len(), 2 * p.len());
        assert_eq!(
            e.to_string(),
            "1{a=1,b=1}.\n:- 2{a=1,b=1}.\nc :- a, not(2{a=1}).\n:- 2{c=1}, a, not(2{a=1}).\n"
        );
        let stable = crate::stable::enumerate_stable(&e, Budget::DEFAULT).unwrap();
        assert_eq!(stable, enumerate_lparse_stable(&p, Budget::DEFAULT).unwrap());
        assert_eq!(stable, BTreeSet::from([m(&["b"]), m(&["a", "c"])]));

        let neg = LProgram::new(vec![LClause::new(lat(1, None, &[("a", true, 1)]), vec![])]);
        assert_eq!(e_translate(&neg), Err(Error::NegationPresent { clause: 0 }));
    }

    #[test]
    fn f_translation() {
        let pb = |k: u64, names: &[&str]| {
            ConstraintAtom::weight(k, names.iter().map(|n| (a(n), 1)).collect())
        };
        let p = Program::new(vec![
            Clause::new(pb(1, &["a"]), vec![Literal::neg(pb(1, &["b"]))]),
            Clause::new(pb(1, &["b"]), vec![Literal::neg(pb(0, &["c"]))]),
        ]);
        let f = f_translate(&p).unwrap();
        assert_eq!(f.to_string(), "a :- 0{b=1}0.\nb :- 1{}.\n");
        assert_eq!(
            enumerate_lparse_stable(&f, Budget::DEFAULT).unwrap(),
            crate::stable::enumerate_stable(&p, Budget::DEFAULT).unwrap()
        );
        let parity = Program::new(vec![Clause::fact(ConstraintAtom::even([a("a")]))]);
        assert!(matches!(
            f_translate(&parity),
            Err(Error::UnsupportedAtomKind { clause: 0, .. })
        ));
    }
}
