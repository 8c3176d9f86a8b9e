//! The `gl_n` action on realizations by the Gelfand-Tsetlin formulas.
//!
//! Generators `E_{k,k+1}`, `E_{k+1,k}` and `E_{kk}` act by the classical
//! formulas; a summand is dropped whenever its shifted tableau is not a
//! realization of the graph. Other root vectors are nested commutators of
//! generators. Twisting by a permutation `σ` replaces `E_{ij}` with
//! `E_{σ(i)σ(j)}`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::graph::{GtGraph, Vertex};
use crate::scalars::Field;
use crate::sigma::{Permutation, SigmaGraph, Sign};
use crate::tableau::{enumerate_basis, BasisWindow, Tableau, TableauError};
use crate::weights::{self, WeightError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionError {
    #[error("E_{{{0},{1}}} is not an operator of gl_{2}")]
    Index(usize, usize, usize),
    #[error("tableau of rank {tableau} acted on through a graph of rank {graph}")]
    RankMismatch { tableau: usize, graph: usize },
    #[error("vanishing denominator at entries ({row},{left}) and ({row},{right}) of {tableau}")]
    VanishingDenominator {
        row: usize,
        left: usize,
        right: usize,
        tableau: String,
    },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// One of the Chevalley-type generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// `E_{k,k+1}`
    Raise(usize),
    /// `E_{k+1,k}`
    Lower(usize),
    /// `E_{kk}`
    Diagonal(usize),
}

/// A finite linear combination of tableaux with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleVector<S = Rational> {
    terms: BTreeMap<Tableau<S>, S>,
}

impl<S: Field> Default for ModuleVector<S> {
    fn default() -> Self {
        ModuleVector {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: Field> ModuleVector<S> {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(t: Tableau<S>) -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(t, S::one());
        v
    }

    pub fn add_term(&mut self, t: Tableau<S>, c: S) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&t) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(t, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau<S>, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &Tableau<S>) -> S {
        self.terms.get(t).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Tableau<S>> {
        self.terms.keys()
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut out = ModuleVector::zero();
        for (t, x) in &self.terms {
            out.add_term(t.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), x.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), -x.clone());
        }
        out
    }
}

impl<S: Field> fmt::Display for ModuleVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let rows: Vec<String> = t.rows_top_down().iter().map(|r| join(r)).collect();
            write!(f, "({c})[{}]", rows.join(" | "))?;
        }
        Ok(())
    }
}

fn join<S: Field>(row: &[S]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn check_rank<S: Field>(t: &Tableau<S>, graph: &GtGraph) -> Result<(), ActionError> {
    if t.n() != graph.n() {
        return Err(ActionError::RankMismatch {
            tableau: t.n(),
            graph: graph.n(),
        });
    }
    Ok(())
}

/// `∏_{j≠i} (l_{ki} - l_{kj})`, refusing a zero factor.
fn row_denominator<S: Field>(t: &Tableau<S>, k: usize, i: usize) -> Result<S, ActionError> {
    let row = t.row(k);
    let mut d = S::one();
    for j in (1..=k).filter(|&j| j != i) {
        let factor = row[i - 1].clone() - row[j - 1].clone();
        if factor.is_zero() {
            return Err(ActionError::VanishingDenominator {
                row: k,
                left: i.min(j),
                right: i.max(j),
                tableau: format!("{:?}", t.rows_top_down()),
            });
        }
        d = d * factor;
    }
    Ok(d)
}

/// `∏_j (l_{ki} - l_{mj})` over the whole of row `m`.
fn row_product<S: Field>(t: &Tableau<S>, k: usize, i: usize, m: usize) -> S {
    if m == 0 {
        return S::one();
    }
    let x = &t.row(k)[i - 1];
    t.row(m)
        .iter()
        .fold(S::one(), |acc, y| acc * (x.clone() - y.clone()))
}

/// A generator applied to one tableau.
pub fn act_generator<S: Field>(
    generator: Generator,
    t: &Tableau<S>,
    graph: &GtGraph,
) -> Result<ModuleVector<S>, ActionError> {
    check_rank(t, graph)?;
    let n = t.n();
    let mut out = ModuleVector::zero();
    match generator {
        Generator::Raise(k) | Generator::Lower(k) if k == 0 || k >= n => {
            let (a, b) = if matches!(generator, Generator::Raise(_)) {
                (k, k + 1)
            } else {
                (k + 1, k)
            };
            return Err(ActionError::Index(a, b, n));
        }
        Generator::Diagonal(k) if k == 0 || k > n => return Err(ActionError::Index(k, k, n)),
        Generator::Raise(k) => {
            for i in 1..=k {
                let shifted = t.bumped(Vertex::new(k, i), 1);
                if !shifted.is_realization(graph) {
                    continue;
                }
                let c = -(row_product(t, k, i, k + 1) / row_denominator(t, k, i)?);
                out.add_term(shifted, c);
            }
        }
        Generator::Lower(k) => {
            for i in 1..=k {
                let shifted = t.bumped(Vertex::new(k, i), -1);
                if !shifted.is_realization(graph) {
                    continue;
                }
                let c = row_product(t, k, i, k - 1) / row_denominator(t, k, i)?;
                out.add_term(shifted, c);
            }
        }
        Generator::Diagonal(k) => {
            out.add_term(t.clone(), diagonal_eigenvalue(t, k));
        }
    }
    Ok(out)
}

/// `k - 1 + Σ_k - Σ_{k-1}`.
fn diagonal_eigenvalue<S: Field>(t: &Tableau<S>, k: usize) -> S {
    S::from_int(k as i64 - 1) + t.row_sum(k) - t.row_sum(k - 1)
}

/// `E_{ℓm}` applied to a vector. Off-diagonal operators beyond the
/// generators are commutators `[E_{ℓ,m∓1}, E_{m∓1,m}]`.
pub fn act<S: Field>(
    l: usize,
    m: usize,
    v: &ModuleVector<S>,
    graph: &GtGraph,
) -> Result<ModuleVector<S>, ActionError> {
    let n = graph.n();
    if l == 0 || m == 0 || l > n || m > n {
        return Err(ActionError::Index(l, m, n));
    }
    let generator = if l == m {
        Some(Generator::Diagonal(l))
    } else if m == l + 1 {
        Some(Generator::Raise(l))
    } else if l == m + 1 {
        Some(Generator::Lower(m))
    } else {
        None
    };
    if let Some(g) = generator {
        let mut out = ModuleVector::zero();
        for (t, c) in v.terms() {
            out = out.plus(&act_generator(g, t, graph)?.scaled(c));
        }
        return Ok(out);
    }
    let k = if l < m { m - 1 } else { m + 1 };
    let first = act(l, k, &act(k, m, v, graph)?, graph)?;
    let second = act(k, m, &act(l, k, v, graph)?, graph)?;
    Ok(first.minus(&second))
}

/// `E_{ℓm}` for `ℓ ≠ m`.
pub fn act_composite<S: Field>(
    l: usize,
    m: usize,
    v: &ModuleVector<S>,
    graph: &GtGraph,
) -> Result<ModuleVector<S>, ActionError> {
    if l == m {
        return Err(ActionError::Index(l, m, graph.n()));
    }
    act(l, m, v, graph)
}

/// `E_{ℓm}` acting through the twist: `E_{σ(ℓ)σ(m)}`.
pub fn twisted_act<S: Field>(
    sigma: &Permutation,
    l: usize,
    m: usize,
    v: &ModuleVector<S>,
    graph: &GtGraph,
) -> Result<ModuleVector<S>, ActionError> {
    let n = graph.n();
    if sigma.n() != n || l == 0 || m == 0 || l > n || m > n {
        return Err(ActionError::Index(l, m, n));
    }
    act(sigma.apply(l), sigma.apply(m), v, graph)
}

/// `ω_t = t - 1 + Σ_t - Σ_{t-1}` for `t = 1..n`.
pub fn weight_of<S: Field>(t: &Tableau<S>) -> Vec<S> {
    (1..=t.n()).map(|k| diagonal_eigenvalue(t, k)).collect()
}

/// Rows of a tableau as sorted multisets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtSignature<S = Rational> {
    /// `rows[k - 1]` is row `k`, sorted increasingly.
    pub rows: Vec<Vec<S>>,
}

pub fn gt_signature<S: Field>(t: &Tableau<S>) -> GtSignature<S> {
    GtSignature {
        rows: (1..=t.n())
            .map(|k| {
                let mut row = t.row(k).to_vec();
                row.sort();
                row
            })
            .collect(),
    }
}

/// Outcome of a highest-weight check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeightCheck<S = Rational> {
    pub tableau: Tableau<S>,
    /// `(a, b)` with `E_{ab} T ≠ 0` although it should vanish.
    pub surviving: Vec<(usize, usize)>,
    /// `(i, ω_{σ(i)}, λ_i)` where they differ.
    pub eigenvalue_mismatches: Vec<(usize, S, S)>,
}

impl<S: Field> HighestWeightCheck<S> {
    pub fn holds(&self) -> bool {
        self.surviving.is_empty() && self.eigenvalue_mismatches.is_empty()
    }
}

/// Checks that `T_σ(σ⁻¹(λ+℘))`, row-normalized, is a highest weight vector
/// of weight `λ` for the twisted action.
///
/// For `r > s` the operator `E_{sr}` must kill the tableau when `G_σ` has a
/// `+1` at `(r,s)`, and `E_{rs}` when it has `-1`; the twisted diagonal
/// `E_{σ(i)σ(i)}` must act by `λ_i`.
pub fn verify_highest_weight<S: Field>(
    sigma: &Permutation,
    lambda: &[S],
) -> Result<HighestWeightCheck<S>, ActionError> {
    let verdict = weights::relation_verdict(lambda, sigma)?;
    if let Err(obstruction) = verdict {
        return Err(WeightError::NotSigmaRelation {
            sigma: sigma.to_string(),
            obstruction,
        }
        .into());
    }
    let (tableau, _) = weights::sigma_tableau(lambda, sigma).normalize_rows();
    let graph = tableau.graph();
    let signs = SigmaGraph::from_permutation(sigma);
    let n = sigma.n();
    let vector = ModuleVector::basis(tableau.clone());
    let mut surviving = Vec::new();
    for r in 2..=n {
        for s in 1..r {
            let (a, b) = match signs.sign(r, s) {
                Sign::Plus => (s, r),
                Sign::Minus => (r, s),
            };
            if !act(a, b, &vector, &graph)?.is_zero() {
                surviving.push((a, b));
            }
        }
    }
    let mut eigenvalue_mismatches = Vec::new();
    for i in 1..=n {
        let image = twisted_act(sigma, i, i, &vector, &graph)?;
        let eigen = image.coefficient(&tableau);
        if image.len() > 1 || eigen != lambda[i - 1] {
            eigenvalue_mismatches.push((i, eigen, lambda[i - 1].clone()));
        }
    }
    Ok(HighestWeightCheck {
        tableau,
        surviving,
        eigenvalue_mismatches,
    })
}

/// Counts from a commutator sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BracketReport {
    /// Basis vectors whose images all stay in the window.
    pub vectors_checked: usize,
    /// Basis vectors skipped because some image left the window.
    pub vectors_skipped: usize,
    /// Relations verified, summed over checked vectors.
    pub relations_checked: usize,
    /// `(a, b, c, d, tableau)` for every failed relation.
    pub violations: Vec<(usize, usize, usize, usize, String)>,
}

impl BracketReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// Verifies `[E_ab, E_cd] v = δ_bc E_ad v - δ_da E_cb v` for every quadruple
/// and every basis vector in the window whose one- and two-step images stay
/// in the window. With `twist`, every operator acts through the twist.
pub fn check_brackets<S: Field>(
    graph: &GtGraph,
    seed: &Tableau<S>,
    window: &BasisWindow,
    twist: Option<&Permutation>,
) -> Result<BracketReport, ActionError> {
    let basis = enumerate_basis(seed, graph, window)?;
    let n = graph.n();
    let identity = Permutation::identity(n);
    let sigma = twist.unwrap_or(&identity);
    let op = |a: usize, b: usize, v: &ModuleVector<S>| twisted_act(sigma, a, b, v, graph);
    let inside = |v: &ModuleVector<S>| {
        v.support()
            .all(|t| t.shift_from(seed).is_some_and(|z| window.contains(&z)))
    };
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).collect();

    let per_vector: Vec<Result<BracketReport, ActionError>> = basis
        .tableaux
        .par_iter()
        .map(|t| {
            let v = ModuleVector::basis(t.clone());
            let mut report = BracketReport::default();
            let mut single = BTreeMap::new();
            for &(a, b) in &pairs {
                single.insert((a, b), op(a, b, &v)?);
            }
            if !single.values().all(&inside) {
                report.vectors_skipped = 1;
                return Ok(report);
            }
            let mut relations = Vec::new();
            for &(a, b) in &pairs {
                for &(c, d) in &pairs {
                    let ab_cd = op(a, b, &single[&(c, d)])?;
                    let cd_ab = op(c, d, &single[&(a, b)])?;
                    if !inside(&ab_cd) || !inside(&cd_ab) {
                        report.vectors_skipped = 1;
                        return Ok(report);
                    }
                    relations.push((a, b, c, d, ab_cd.minus(&cd_ab)));
                }
            }
            report.vectors_checked = 1;
            for (a, b, c, d, lhs) in relations {
                let mut rhs = ModuleVector::zero();
                if delta(b, c) {
                    rhs = rhs.plus(&single[&(a, d)]);
                }
                if delta(d, a) {
                    rhs = rhs.minus(&single[&(c, b)]);
                }
                report.relations_checked += 1;
                if lhs != rhs {
                    report
                        .violations
                        .push((a, b, c, d, format!("{:?}", t.rows_top_down())));
                }
            }
            Ok(report)
        })
        .collect();

    let mut total = BracketReport::default();
    for r in per_vector {
        let r = r?;
        total.vectors_checked += r.vectors_checked;
        total.vectors_skipped += r.vectors_skipped;
        total.relations_checked += r.relations_checked;
        total.violations.extend(r.violations);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_scalar, parse_scalar_list};

    fn tab(rows: &[&str]) -> Tableau {
        Tableau::new(rows.iter().map(|r| parse_scalar_list(r).unwrap()).collect()).unwrap()
    }

    fn q(s: &str) -> Rational {
        parse_scalar(s).unwrap()
    }

    #[test]
    fn lowering_row_one_has_unit_coefficient() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "1/2"]);
        let g = t.graph();
        let out = act_generator(Generator::Lower(1), &t, &g).unwrap();
        assert_eq!(out, ModuleVector::basis(t.bumped(Vertex::new(1, 1), -1)));
    }

    #[test]
    fn dropped_summand_on_the_highest_tableau() {
        let t = tab(&["2,0,-2", "2,0", "2"]);
        let g = t.graph();
        assert!(act_generator(Generator::Raise(1), &t, &g)
            .unwrap()
            .is_zero());
        assert!(act_generator(Generator::Raise(2), &t, &g)
            .unwrap()
            .is_zero());
        assert!(act(1, 3, &ModuleVector::basis(t.clone()), &g)
            .unwrap()
            .is_zero());
        assert!(!act_generator(Generator::Lower(1), &t, &g)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn diagonal_eigenvalues_are_the_weight() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        assert_eq!(weight_of(&t), vec![q("-1/6"), q("-2/3"), q("5/6")]);
        let g = t.graph();
        let out = act_generator(Generator::Diagonal(2), &t, &g).unwrap();
        assert_eq!(out.coefficient(&t), q("-2/3"));
    }

    #[test]
    fn composite_base_case_matches_generator() {
        let t = tab(&["2,0,-2", "1,0", "0"]);
        let g = tab(&["2,0,-2", "2,0", "2"]).graph();
        let v = ModuleVector::basis(t.clone());
        assert_eq!(
            act(1, 2, &v, &g).unwrap(),
            act_generator(Generator::Raise(1), &t, &g).unwrap()
        );
        assert!(act_composite(2, 2, &v, &g).is_err());
    }

    #[test]
    fn twist_permutes_indices() {
        let t = tab(&["2,0,-2", "1,0", "0"]);
        let g = tab(&["2,0,-2", "2,0", "2"]).graph();
        let v = ModuleVector::basis(t);
        let s2 = Permutation::simple(3, 2);
        assert_eq!(
            twisted_act(&s2, 2, 3, &v, &g).unwrap(),
            act(3, 2, &v, &g).unwrap()
        );
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        // a critical graph lets two equal row-2 entries share a component
        let t = tab(&["0,1/2,1/3", "-1,-1", "3/10"]);
        let (a, b, c) = (Vertex::new(3, 1), Vertex::new(2, 1), Vertex::new(2, 2));
        let g = GtGraph::new(3, [(a, b), (a, c)]).unwrap();
        assert!(t.is_realization(&g));
        assert!(matches!(
            act_generator(Generator::Lower(2), &t, &g),
            Err(ActionError::VanishingDenominator { row: 2, .. })
        ));
    }

    #[test]
    fn signatures_forget_order() {
        let a = tab(&["0,1", "0"]);
        let b = tab(&["1,0", "0"]);
        assert_eq!(gt_signature(&a), gt_signature(&b));
    }

    #[test]
    fn vector_arithmetic_drops_zeros() {
        let t = tab(&["0,1", "0"]);
        let v = ModuleVector::basis(t.clone());
        assert!(v.minus(&v).is_zero());
        assert_eq!(v.scaled(&q("3/2")).coefficient(&t), q("3/2"));
        assert_eq!(ModuleVector::<Rational>::zero().to_string(), "0");
    }
}
