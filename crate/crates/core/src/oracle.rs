//! Naive reference implementations used to cross-check the main modules.
//!
//! Nothing here calls into the evaluation code of the other modules. Every
//! constraint atom is first expanded into an explicit table of satisfying
//! subsets by a separate, definitional membership test, and every semantics
//! is computed by brute force straight from its definition.

use std::collections::BTreeSet;

use num_traits::One;

use crate::disjunctive::{DClause, DProgram};
use crate::domain::{Atom, AtomSet, Budget, Clause, Constraint, ConstraintAtom, Interpretation, Program, Rational};
use crate::error::{Error, Result};
use crate::lparse::{LAtom, LClause, LProgram};
use crate::translate::{NormalClause, NormalProgram};

fn subsets(atoms: &AtomSet) -> Vec<AtomSet> {
    let mut out = vec![AtomSet::new()];
    for a in atoms {
        let with: Vec<AtomSet> = out
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.insert(a.clone());
                s
            })
            .collect();
        out.extend(with);
    }
    out
}

fn bounded_subsets(atoms: &AtomSet, budget: Budget) -> Result<Vec<AtomSet>> {
    if atoms.len() > budget.0 {
        return Err(Error::BudgetExceeded {
            size: atoms.len(),
            budget: budget.0,
        });
    }
    Ok(subsets(atoms))
}

/// Definitional membership of `s ⊆ X` in the constraint.
fn member(a: &ConstraintAtom, s: &AtomSet) -> bool {
    match a.constraint() {
        Constraint::Table { satisfying } => satisfying.contains(s),
        Constraint::Weight { lower, weights } => {
            s.iter().map(|x| weights[x]).sum::<u64>() >= *lower
        }
        Constraint::WeightRange {
            lower,
            upper,
            weights,
        } => {
            let total: u64 = s.iter().map(|x| weights[x]).sum();
            total >= *lower && upper.is_none_or(|u| total <= u)
        }
        Constraint::Cardinality { lower } => s.len() as u64 >= *lower,
        Constraint::Product { lower, weights } => {
            let mut prod = Rational::one();
            for x in s {
                prod *= &weights[x];
            }
            prod >= *lower
        }
        Constraint::Maximum { lower, weights } => s.iter().any(|x| weights[x] >= *lower),
        Constraint::ParityEven => s.len().is_multiple_of(2),
        Constraint::ParityOdd => s.len() % 2 == 1,
        Constraint::Containment { witnesses } => witnesses.iter().any(|w| w.is_subset(s)),
        Constraint::Inconsistent => false,
    }
}

/// A constraint atom expanded into its table.
#[derive(Clone, Debug)]
struct Tab {
    atoms: AtomSet,
    sat: BTreeSet<AtomSet>,
}

impl Tab {
    fn new(a: &ConstraintAtom) -> Self {
        let atoms = a.atoms().clone();
        let sat = subsets(&atoms).into_iter().filter(|s| member(a, s)).collect();
        Tab { atoms, sat }
    }

    fn holds(&self, m: &AtomSet) -> bool {
        let local: AtomSet = m.intersection(&self.atoms).cloned().collect();
        self.sat.contains(&local)
    }

    fn upward_closed(&self) -> bool {
        self.sat.iter().all(|s| {
            self.atoms.iter().all(|x| {
                let mut t = s.clone();
                t.insert(x.clone());
                self.sat.contains(&t)
            })
        })
    }
}

struct TabClause {
    head: Tab,
    body: Vec<(Tab, bool)>,
}

impl TabClause {
    fn applies(&self, m: &AtomSet) -> bool {
        self.body.iter().all(|(t, neg)| t.holds(m) != *neg)
    }
}

struct Tabled {
    clauses: Vec<TabClause>,
    universe: AtomSet,
}

impl Tabled {
    fn new(p: &Program) -> Self {
        let clauses = p
            .clauses()
            .iter()
            .map(|c: &Clause| TabClause {
                head: Tab::new(&c.head),
                body: c.body.iter().map(|l| (Tab::new(&l.atom), l.negated)).collect(),
            })
            .collect();
        let mut universe = p.universe().clone();
        for c in p.clauses() {
            universe.extend(c.atoms());
        }
        Tabled { clauses, universe }
    }

    fn is_model(&self, m: &AtomSet) -> bool {
        self.clauses.iter().all(|c| !c.applies(m) || c.head.holds(m))
    }

    fn tnd(&self, m: &AtomSet) -> BTreeSet<AtomSet> {
        let applicable: Vec<&TabClause> = self.clauses.iter().filter(|c| c.applies(m)).collect();
        let heads: AtomSet = applicable.iter().flat_map(|c| c.head.atoms.iter().cloned()).collect();
        subsets(&heads)
            .into_iter()
            .filter(|s| applicable.iter().all(|c| c.head.holds(s)))
            .collect()
    }

    fn first_non_monotone(&self) -> Option<usize> {
        self.clauses.iter().position(|c| {
            !c.head.upward_closed() || c.body.iter().any(|(t, _)| !t.upward_closed())
        })
    }

    fn has_negation(&self) -> bool {
        self.clauses.iter().any(|c| c.body.iter().any(|(_, neg)| *neg))
    }

    /// Results of all computations whose steps stay inside `within`.
    fn computation_results(&self, within: Option<&AtomSet>) -> BTreeSet<AtomSet> {
        let mut seen = BTreeSet::from([AtomSet::new()]);
        let mut stack = vec![AtomSet::new()];
        let mut results = BTreeSet::new();
        while let Some(x) = stack.pop() {
            for y in self.tnd(&x) {
                if !x.is_subset(&y) || within.is_some_and(|w| !y.is_subset(w)) {
                    continue;
                }
                if y == x {
                    results.insert(x.clone());
                } else if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        results
    }

    fn reduct(&self, m: &AtomSet) -> Tabled {
        let clauses = self
            .clauses
            .iter()
            .filter(|c| !c.body.iter().any(|(t, neg)| *neg && t.holds(m)))
            .map(|c| TabClause {
                head: c.head.clone(),
                body: c.body.iter().filter(|(_, neg)| !neg).cloned().collect(),
            })
            .collect();
        Tabled {
            clauses,
            universe: self.universe.clone(),
        }
    }

    fn is_stable(&self, m: &AtomSet) -> bool {
        self.reduct(m).computation_results(Some(m)).contains(m)
    }
}

fn to_interps(sets: impl IntoIterator<Item = AtomSet>) -> BTreeSet<Interpretation> {
    sets.into_iter().map(Interpretation::from).collect()
}

fn filter_scope(
    scope: &AtomSet,
    budget: Budget,
    keep: impl Fn(&AtomSet) -> bool,
) -> Result<BTreeSet<Interpretation>> {
    Ok(to_interps(
        bounded_subsets(scope, budget)?.into_iter().filter(|s| keep(s)),
    ))
}

pub fn oracle_tnd(p: &Program, m: &Interpretation, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    let t = Tabled::new(p);
    let heads: AtomSet = t
        .clauses
        .iter()
        .filter(|c| c.applies(m.atoms()))
        .flat_map(|c| c.head.atoms.iter().cloned())
        .collect();
    bounded_subsets(&heads, budget)?;
    Ok(to_interps(t.tnd(m.atoms())))
}

pub fn oracle_models(p: &Program, scope: &AtomSet, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    let t = Tabled::new(p);
    filter_scope(scope, budget, |s| t.is_model(s))
}

/// Supported models as the fixpoints `M ∈ T^nd_P(M)`.
pub fn oracle_supported(
    p: &Program,
    scope: &AtomSet,
    budget: Budget,
) -> Result<BTreeSet<Interpretation>> {
    let t = Tabled::new(p);
    filter_scope(scope, budget, |s| t.tnd(s).contains(s))
}

/// Every result of every computation, found by search over all branches.
pub fn oracle_derivable(p: &Program, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    let t = Tabled::new(p);
    if t.has_negation() || t.first_non_monotone().is_some() {
        return Err(Error::NotHorn {
            reason: "negation or a non-monotone atom".into(),
        });
    }
    bounded_subsets(&t.universe, budget)?;
    Ok(to_interps(t.computation_results(None)))
}

fn require_monotone(t: &Tabled) -> Result<()> {
    match t.first_non_monotone() {
        Some(clause) => Err(Error::NonMonotoneAtom {
            clause,
            atom: "(table)".into(),
        }),
        None => Ok(()),
    }
}

pub fn oracle_is_stable(p: &Program, m: &Interpretation) -> Result<bool> {
    let t = Tabled::new(p);
    require_monotone(&t)?;
    Ok(t.is_stable(m.atoms()))
}

/// Stable models among all subsets of `scope`.
pub fn oracle_stable(p: &Program, scope: &AtomSet, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    let t = Tabled::new(p);
    require_monotone(&t)?;
    filter_scope(scope, budget, |s| t.is_stable(s))
}

fn normal_body_holds(c: &NormalClause, m: &AtomSet) -> bool {
    c.pos.iter().all(|a| m.contains(a)) && c.neg.iter().all(|a| !m.contains(a))
}

/// The classical one-step operator `T_P`.
pub fn oracle_tp(p: &NormalProgram, m: &Interpretation) -> Interpretation {
    p.clauses
        .iter()
        .filter(|c| normal_body_holds(c, m.atoms()))
        .filter_map(|c| c.head.clone())
        .collect()
}

pub fn oracle_normal_model(p: &NormalProgram, m: &Interpretation) -> bool {
    p.clauses.iter().all(|c| {
        !normal_body_holds(c, m.atoms()) || c.head.as_ref().is_some_and(|h| m.contains(h))
    })
}

pub fn oracle_normal_supported(p: &NormalProgram, m: &Interpretation) -> bool {
    oracle_normal_model(p, m) && m.is_subset(&oracle_tp(p, m))
}

/// Gelfond–Lifschitz: `M` is the least model of the reduct and violates no
/// constraint.
pub fn oracle_gl_stable(p: &NormalProgram, m: &Interpretation) -> bool {
    let reduct: Vec<&NormalClause> = p
        .clauses
        .iter()
        .filter(|c| c.neg.iter().all(|a| !m.contains(a)))
        .collect();
    let mut lm = AtomSet::new();
    loop {
        let next: AtomSet = reduct
            .iter()
            .filter(|c| c.pos.iter().all(|a| lm.contains(a)))
            .filter_map(|c| c.head.clone())
            .collect();
        if next == lm {
            break;
        }
        lm = next;
    }
    let violated = reduct
        .iter()
        .any(|c| c.head.is_none() && c.pos.iter().all(|a| m.contains(a)));
    &lm == m.atoms() && !violated
}

pub fn oracle_normal_enumerate(
    p: &NormalProgram,
    keep: impl Fn(&NormalProgram, &Interpretation) -> bool,
    budget: Budget,
) -> Result<BTreeSet<Interpretation>> {
    filter_scope(&p.atoms(), budget, |s| keep(p, &Interpretation::from(s.clone())))
}

fn l_value(a: &LAtom, m: &AtomSet) -> u64 {
    let mut v = 0;
    for (lit, w) in a.weights().entries() {
        if m.contains(&lit.atom) != lit.negated {
            v += w;
        }
    }
    v
}

fn l_holds(a: &LAtom, m: &AtomSet) -> bool {
    let v = l_value(a, m);
    v >= a.lower() && a.upper().is_none_or(|u| v <= u)
}

fn l_clause_holds(c: &LClause, m: &AtomSet) -> bool {
    !c.body.iter().all(|b| l_holds(b, m)) || l_holds(&c.head, m)
}

/// Lowered bound and positive weights of one reduct body atom.
type LoweredBody = (i128, Vec<(Atom, u64)>);

/// `M = lm(P^M)` and `M ⊨ P`, with the reduct and least model built inline.
pub fn oracle_lparse_stable(p: &LProgram, m: &Interpretation) -> bool {
    let m = m.atoms();
    if !p.clauses.iter().all(|c| l_clause_holds(c, m)) {
        return false;
    }
    let mut rules: Vec<(Atom, Vec<LoweredBody>)> = Vec::new();
    for c in p.clauses.iter().filter(|c| c.body.iter().all(|b| l_holds(b, m))) {
        let body: Vec<LoweredBody> = c
            .body
            .iter()
            .map(|b| {
                let mut k = b.lower() as i128;
                let mut pos = Vec::new();
                for (lit, w) in b.weights().entries() {
                    if lit.negated {
                        if !m.contains(&lit.atom) {
                            k -= *w as i128;
                        }
                    } else {
                        pos.push((lit.atom.clone(), *w));
                    }
                }
                (k, pos)
            })
            .collect();
        for lit in c.head.weights().entries().keys() {
            if !lit.negated && m.contains(&lit.atom) {
                rules.push((lit.atom.clone(), body.clone()));
            }
        }
    }
    let mut lm = AtomSet::new();
    loop {
        let next: AtomSet = rules
            .iter()
            .filter(|(_, body)| {
                body.iter().all(|(k, pos)| {
                    let v: u64 = pos.iter().filter(|(a, _)| lm.contains(a)).map(|(_, w)| w).sum();
                    v as i128 >= *k
                })
            })
            .map(|(h, _)| h.clone())
            .collect();
        if next == lm {
            break;
        }
        lm = next;
    }
    &lm == m
}

pub fn oracle_lparse_supported(p: &LProgram, m: &Interpretation) -> bool {
    let m = m.atoms();
    p.clauses.iter().all(|c| l_clause_holds(c, m))
        && m.iter().all(|a| {
            p.clauses.iter().any(|c| {
                c.body.iter().all(|b| l_holds(b, m))
                    && c.head.weights().entries().keys().any(|l| &l.atom == a)
            })
        })
}

pub fn oracle_lparse_enumerate(
    p: &LProgram,
    keep: impl Fn(&LProgram, &Interpretation) -> bool,
    budget: Budget,
) -> Result<BTreeSet<Interpretation>> {
    filter_scope(&p.atoms(), budget, |s| keep(p, &Interpretation::from(s.clone())))
}

/// Tries every split selection. A clause whose body `M` falsifies cannot
/// matter, so it only gets `∅`; an applicable one must select a non-empty
/// part of its head inside `M`, or `M` would not model the split.
pub fn oracle_is_possible(p: &DProgram, m: &Interpretation) -> bool {
    let options: Vec<Vec<AtomSet>> = p
        .clauses
        .iter()
        .map(|c: &DClause| {
            let applies =
                c.pos.iter().all(|a| m.contains(a)) && c.neg.iter().all(|a| !m.contains(a));
            if applies {
                let inside: AtomSet = c.head.iter().filter(|a| m.contains(a)).cloned().collect();
                subsets(&inside).into_iter().filter(|s| !s.is_empty()).collect()
            } else {
                vec![AtomSet::new()]
            }
        })
        .collect();
    let mut choice = vec![0usize; options.len()];
    loop {
        if options.iter().any(Vec::is_empty) {
            return false;
        }
        let mut clauses = Vec::new();
        for (c, (opts, &i)) in p.clauses.iter().zip(options.iter().zip(&choice)) {
            let s = &opts[i];
            if s.is_empty() {
                clauses.push(NormalClause::new(None, c.pos.clone(), c.neg.clone()));
            }
            for a in s {
                clauses.push(NormalClause::new(Some(a.clone()), c.pos.clone(), c.neg.clone()));
            }
        }
        if oracle_gl_stable(&NormalProgram::new(clauses), m) {
            return true;
        }
        // Advance the mixed-radix counter.
        let mut k = 0;
        loop {
            if k == choice.len() {
                return false;
            }
            choice[k] += 1;
            if choice[k] < options[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

pub fn oracle_possible(p: &DProgram, budget: Budget) -> Result<BTreeSet<Interpretation>> {
    filter_scope(&p.atoms(), budget, |s| {
        oracle_is_possible(p, &Interpretation::from(s.clone()))
    })
}

/// Programs that can be made smaller by deleting a clause or a body literal.
pub trait Shrink: Clone {
    fn shrink_candidates(&self) -> Vec<Self>;
}

/// Greedily deletes clauses and body literals while `fails` keeps holding,
/// returning a locally minimal failing program.
pub fn shrink<T: Shrink>(mut p: T, fails: impl Fn(&T) -> bool) -> T {
    while let Some(smaller) = p.shrink_candidates().into_iter().find(|c| fails(c)) {
        p = smaller;
    }
    p
}

fn drop_each<C: Clone>(clauses: &[C]) -> Vec<Vec<C>> {
    (0..clauses.len())
        .map(|i| {
            let mut v = clauses.to_vec();
            v.remove(i);
            v
        })
        .collect()
}

fn thin_each<C: Clone>(clauses: &[C], thin: impl Fn(&C) -> Vec<C>) -> Vec<Vec<C>> {
    let mut out = Vec::new();
    for (i, c) in clauses.iter().enumerate() {
        for smaller in thin(c) {
            let mut v = clauses.to_vec();
            v[i] = smaller;
            out.push(v);
        }
    }
    out
}

impl Shrink for Program {
    fn shrink_candidates(&self) -> Vec<Self> {
        let mut out = drop_each(self.clauses());
        out.extend(thin_each(self.clauses(), |c| {
            drop_each(&c.body)
                .into_iter()
                .map(|body| Clause::new(c.head.clone(), body))
                .collect()
        }));
        out.into_iter()
            .map(|cs| Program::with_universe(cs, self.universe().clone()))
            .collect()
    }
}

impl Shrink for NormalProgram {
    fn shrink_candidates(&self) -> Vec<Self> {
        let mut out = drop_each(&self.clauses);
        out.extend(thin_each(&self.clauses, |c| {
            let mut v: Vec<NormalClause> = drop_each(&c.pos)
                .into_iter()
                .map(|pos| NormalClause::new(c.head.clone(), pos, c.neg.clone()))
                .collect();
            v.extend(
                drop_each(&c.neg)
                    .into_iter()
                    .map(|neg| NormalClause::new(c.head.clone(), c.pos.clone(), neg)),
            );
            v
        }));
        out.into_iter().map(NormalProgram::new).collect()
    }
}

impl Shrink for LProgram {
    fn shrink_candidates(&self) -> Vec<Self> {
        let mut out = drop_each(&self.clauses);
        out.extend(thin_each(&self.clauses, |c| {
            drop_each(&c.body)
                .into_iter()
                .map(|body| LClause::new(c.head.clone(), body))
                .collect()
        }));
        out.into_iter().map(LProgram::new).collect()
    }
}

impl Shrink for DProgram {
    fn shrink_candidates(&self) -> Vec<Self> {
        let mut out = drop_each(&self.clauses);
        out.extend(thin_each(&self.clauses, |c| {
            let mut v: Vec<DClause> = drop_each(&c.pos)
                .into_iter()
                .map(|pos| DClause::new(c.head.iter().cloned(), pos, c.neg.clone()))
                .collect();
            v.extend(
                drop_each(&c.neg)
                    .into_iter()
                    .map(|neg| DClause::new(c.head.iter().cloned(), c.pos.clone(), neg)),
            );
            v
        }));
        out.into_iter().map(DProgram::new).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{atom_set, Literal};

    fn card(k: u64, names: &[&str]) -> ConstraintAtom {
        ConstraintAtom::cardinality(k, names.iter().map(|n| Atom::new(n)))
    }

    fn m(names: &[&str]) -> Interpretation {
        Interpretation::from_names(names)
    }

    fn a(n: &str) -> Atom {
        Atom::new(n)
    }

    #[test]
    fn p4_operator() {
        let p = Program::new(vec![
            Clause::new(card(2, &["a"]), vec![Literal::pos(card(2, &["b", "d"]))]),
            Clause::new(card(1, &["b", "c"]), vec![Literal::neg(card(1, &["e"]))]),
            Clause::new(card(1, &["a", "d"]), vec![Literal::pos(card(2, &["b", "c"]))]),
        ]);
        assert_eq!(
            oracle_tnd(&p, &m(&["b", "c", "e"]), Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&["a"]), m(&["d"]), m(&["a", "d"])])
        );
        assert_eq!(
            oracle_tnd(&Program::default(), &m(&[]), Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&[])])
        );
    }

    #[test]
    fn derivable_search() {
        let choice = Program::new(vec![Clause::fact(card(1, &["a", "b"]))]);
        assert_eq!(
            oracle_derivable(&choice, Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&["a"]), m(&["b"]), m(&["a", "b"])])
        );
        assert_eq!(
            oracle_derivable(&Program::default(), Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&[])])
        );
    }

    #[test]
    fn gl_examples() {
        let p = NormalProgram::new(vec![NormalClause::new(Some(a("a")), vec![], vec![a("b")])]);
        assert!(oracle_gl_stable(&p, &m(&["a"])));
        let loop_ = NormalProgram::new(vec![NormalClause::new(Some(a("a")), vec![a("a")], vec![])]);
        assert!(!oracle_gl_stable(&loop_, &m(&["a"])));
        assert!(oracle_gl_stable(&loop_, &m(&[])));
    }

    #[test]
    fn supported_and_stable_scan_the_whole_scope() {
        let p5 = Program::new(vec![Clause::new(card(1, &["p", "q"]), vec![Literal::neg(card(1, &["q"]))])]);
        assert_eq!(
            oracle_supported(&p5, &atom_set(["p", "q", "s"]), Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&["p"])])
        );
        assert_eq!(
            oracle_stable(&p5, &atom_set(["p", "q", "s"]), Budget::DEFAULT).unwrap(),
            BTreeSet::from([m(&["p"])])
        );
    }

    #[test]
    fn shrinking_finds_the_culprit() {
        let p = NormalProgram::new(vec![
            NormalClause::new(Some(a("a")), vec![a("b")], vec![]),
            NormalClause::new(Some(a("c")), vec![], vec![a("c")]),
            NormalClause::new(Some(a("d")), vec![], vec![]),
        ]);
        // "Fails" whenever the odd loop on c is present.
        let small = shrink(p, |q| q.clauses.iter().any(|c| c.neg.contains(&a("c"))));
        assert_eq!(small.to_string(), "c :- not(c).\n");
    }
}
