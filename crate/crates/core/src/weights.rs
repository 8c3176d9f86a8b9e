//! σ-relation weights: the graph test, the closed-form classifier for the
//! identity, witness sweeps, the constructive lower bound on the number of
//! witnesses, and the Verma-module criterion.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{GtGraph, Obstruction, Vertex};
use crate::scalars::{diff_at_least, diff_at_most, integrally_linked, Field};
use crate::sigma::{Permutation, SigmaGraph};
use crate::tableau::Tableau;

/// Default largest rank for exhaustive sweeps over `S_n`.
pub const DEFAULT_SWEEP_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("weight has {weight} entries but the permutation acts on {sigma}")]
    RankMismatch { weight: usize, sigma: usize },
    #[error("sweeping S_{n} exceeds the configured cap {cap}")]
    SweepCap { n: usize, cap: usize },
    #[error("weight is not a {sigma}-relation weight ({obstruction})")]
    NotSigmaRelation {
        sigma: String,
        obstruction: Obstruction,
    },
    #[error("empty weight")]
    Empty,
}

/// `℘ = (0, -1, ..., 1 - n)`.
pub fn staircase<S: Field>(n: usize) -> Vec<S> {
    (0..n).map(|i| S::from_int(-(i as i64))).collect()
}

/// `λ + ℘`.
pub fn shifted_weight<S: Field>(lambda: &[S]) -> Vec<S> {
    lambda
        .iter()
        .zip(staircase::<S>(lambda.len()))
        .map(|(l, p)| l.clone() + p)
        .collect()
}

/// `T_σ(σ⁻¹(λ + ℘))`, before any row reordering.
pub fn sigma_tableau<S: Field>(lambda: &[S], sigma: &Permutation) -> Tableau<S> {
    let x = sigma.inverse().permute(&shifted_weight(lambda));
    Tableau::twisted(sigma, &x)
}

/// The first relation-graph predicate that fails for the row-normalized
/// graph of `T_σ(σ⁻¹(λ + ℘))`, if any.
pub fn relation_verdict<S: Field>(
    lambda: &[S],
    sigma: &Permutation,
) -> Result<Result<(), Obstruction>, WeightError> {
    if lambda.is_empty() {
        return Err(WeightError::Empty);
    }
    if lambda.len() != sigma.n() {
        return Err(WeightError::RankMismatch {
            weight: lambda.len(),
            sigma: sigma.n(),
        });
    }
    Ok(sigma_tableau(lambda, sigma)
        .normalized_graph()
        .relation_check())
}

pub fn is_sigma_relation<S: Field>(lambda: &[S], sigma: &Permutation) -> Result<bool, WeightError> {
    Ok(relation_verdict(lambda, sigma)?.is_ok())
}

/// Closed-form test for the identity permutation.
///
/// Either `λ_i - λ_j ∉ ℤ_{≤ i-j}` for all `i < j < n`, or there is exactly
/// one pair `i < j < n` with `λ_r - λ_{r+1} ∈ ℤ_{≥0}` for `r ≥ j`,
/// `λ_r - λ_s ∉ ℤ_{≤ r-s}` for `r ≠ i`, `s ≥ j`, and `λ_n - λ_i ∈ ℤ_{≥ n-i}`.
pub fn is_id_relation_closed_form<S: Field>(lambda: &[S]) -> bool {
    let n = lambda.len();
    let l = |i: usize| &lambda[i - 1];
    let gap = |r: usize, s: usize| r as i64 - s as i64;
    let first = (1..n).all(|i| (i + 1..n).all(|j| !diff_at_most(l(i), l(j), gap(i, j))));
    if first {
        return true;
    }
    let qualifies = |i: usize, j: usize| {
        let a = (j..n).all(|r| diff_at_least(l(r), l(r + 1), 0));
        // r < s, as the pairs are ordered throughout
        let b = (1..=n)
            .filter(|&r| r != i)
            .all(|r| (j.max(r + 1)..=n).all(|s| !diff_at_most(l(r), l(s), gap(r, s))));
        let c = diff_at_least(l(n), l(i), gap(n, i));
        a && b && c
    };
    let count = (1..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| qualifies(i, j))
        .count();
    count >= 1
}

/// Result of sweeping all permutations for one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport<S> {
    pub weight: Vec<S>,
    /// `λ + ℘`.
    pub shifted: Vec<S>,
    /// Permutations for which the weight is a σ-relation weight, in
    /// lexicographic order.
    pub witnesses: Vec<Permutation>,
    /// Every permutation with the predicate that rejected it, or `None`.
    pub diagnostics: Vec<(Permutation, Option<Obstruction>)>,
}

impl<S> WitnessReport<S> {
    pub fn count(&self) -> usize {
        self.witnesses.len()
    }

    pub fn diagnostic(&self, sigma: &Permutation) -> Option<Option<Obstruction>> {
        self.diagnostics
            .iter()
            .find(|(p, _)| p == sigma)
            .map(|(_, d)| *d)
    }
}

/// Exhaustive sweep over `S_n`, refused above `cap`.
pub fn sigma_relation_witnesses<S: Field>(
    lambda: &[S],
    cap: usize,
) -> Result<WitnessReport<S>, WeightError> {
    let n = lambda.len();
    if n == 0 {
        return Err(WeightError::Empty);
    }
    if n > cap {
        return Err(WeightError::SweepCap { n, cap });
    }
    let diagnostics: Vec<(Permutation, Option<Obstruction>)> = Permutation::all(n)
        .into_par_iter()
        .map(|sigma| {
            let verdict = relation_verdict(lambda, &sigma).expect("ranks agree").err();
            (sigma, verdict)
        })
        .collect();
    let witnesses = diagnostics
        .iter()
        .filter(|(_, d)| d.is_none())
        .map(|(p, _)| p.clone())
        .collect();
    Ok(WitnessReport {
        weight: lambda.to_vec(),
        shifted: shifted_weight(lambda),
        witnesses,
        diagnostics,
    })
}

/// Certificate for a lower bound on the number of witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub bound: u64,
    /// The index set `A`, ascending; empty when no index is integrally linked.
    pub subset: Vec<usize>,
    /// Permutations `τ ∈ S_k` for which the extracted weight is a τ-relation weight.
    pub tau_witnesses: Vec<String>,
    pub note: Option<String>,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `(λ_{a_1}, ..., λ_{a_k}) + ℘_A - ℘_(k)`, i.e. entry `i` is `λ_{a_i} - a_i + i`.
pub fn extracted_weight<S: Field>(lambda: &[S], subset: &[usize]) -> Vec<S> {
    subset
        .iter()
        .enumerate()
        .map(|(i, &a)| lambda[a - 1].clone() - S::from_int(a as i64) + S::from_int(i as i64 + 1))
        .collect()
}

/// The best bound `p · (n - k)!` over index sets `A` containing every
/// integrally linked index, where `p` counts the `τ ∈ S_k` making the
/// extracted weight a τ-relation weight.
pub fn lower_bound_n_lambda<S: Field>(lambda: &[S], cap: usize) -> Result<LowerBound, WeightError> {
    let n = lambda.len();
    if n == 0 {
        return Err(WeightError::Empty);
    }
    if n > cap {
        return Err(WeightError::SweepCap { n, cap });
    }
    let linked: Vec<usize> = (1..=n)
        .filter(|&i| (1..=n).any(|j| j != i && integrally_linked(&lambda[i - 1], &lambda[j - 1])))
        .collect();
    if linked.is_empty() {
        return Ok(LowerBound {
            bound: factorial(n),
            subset: Vec::new(),
            tau_witnesses: Vec::new(),
            note: Some("no integral differences: every permutation is a witness".into()),
        });
    }
    let free: Vec<usize> = (1..=n).filter(|i| !linked.contains(i)).collect();
    let mut best: Option<LowerBound> = None;
    // supersets of the linked indices, smallest first
    let mut extras: Vec<Vec<usize>> = (0u32..1 << free.len())
        .map(|mask| {
            free.iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect();
    extras.sort_by_key(|e: &Vec<usize>| (e.len(), e.clone()));
    for extra in extras {
        let mut subset = linked.clone();
        subset.extend(extra);
        subset.sort();
        let mu = extracted_weight(lambda, &subset);
        let k = subset.len();
        let taus: Vec<String> = Permutation::all(k)
            .into_par_iter()
            .filter(|tau| is_sigma_relation(&mu, tau).expect("ranks agree"))
            .map(|tau| tau.to_string())
            .collect();
        let bound = taus.len() as u64 * factorial(n - k);
        if best.as_ref().is_none_or(|b| bound > b.bound) {
            best = Some(LowerBound {
                bound,
                subset,
                tau_witnesses: taus,
                note: None,
            });
        }
    }
    let mut best = best.expect("at least the linked set itself is tried");
    if best.bound == 0 {
        best.note = Some("no qualifying index set: the extracted weight has no witnesses".into());
    }
    Ok(best)
}

/// Outcome of the Verma-module criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VermaVerdict {
    /// The hypotheses hold; the flag is the relation-graph verdict.
    Covered(bool),
    /// `λ_1 - λ_n ∈ ℤ_{≥1-n}`, or some middle index is integrally linked.
    NotCovered,
}

/// Builds the graph `G_σ` plus the top-row arrow between the positions of
/// `μ_n` and `μ_1`, and tests it as a relation graph.
///
/// Requires `λ_1 - λ_n ∉ ℤ_{≥1-n}` and `λ_r - λ_s ∉ ℤ` whenever
/// `r ∉ {1, s, n}`.
pub fn verma_is_sigma_relation<S: Field>(
    lambda: &[S],
    sigma: &Permutation,
) -> Result<VermaVerdict, WeightError> {
    let n = lambda.len();
    if n == 0 {
        return Err(WeightError::Empty);
    }
    if n != sigma.n() {
        return Err(WeightError::RankMismatch {
            weight: n,
            sigma: sigma.n(),
        });
    }
    let l = |i: usize| &lambda[i - 1];
    if n >= 2 && diff_at_least(l(1), l(n), 1 - n as i64) {
        return Ok(VermaVerdict::NotCovered);
    }
    let middle_linked = (2..n).any(|r| (1..=n).any(|s| s != r && integrally_linked(l(r), l(s))));
    if middle_linked {
        return Ok(VermaVerdict::NotCovered);
    }
    let tableau = sigma_tableau(lambda, sigma);
    let mut graph = SigmaGraph::from_permutation(sigma).to_graph();
    if n >= 2 && integrally_linked(l(1), l(n)) {
        let (from, to) = (sigma.apply(n), sigma.apply(1));
        graph = graph
            .with_arrows([(Vertex::new(n, from), Vertex::new(n, to))])
            .expect("one top-row arrow keeps the graph acyclic");
    }
    let (normalized, perms) = tableau.normalize_rows();
    let graph = perms
        .relabel(&graph)
        .expect("row relabeling preserves validity")
        .transitive_reduction();
    debug_assert!(normalized.satisfies(&graph));
    Ok(VermaVerdict::Covered(graph.relation_check().is_ok()))
}

/// Whether `graph` is the full graph of `t`, i.e. the realization carries
/// no relations beyond those the entries force.
pub fn is_simple_realization<S: Field>(graph: &GtGraph, t: &Tableau<S>) -> bool {
    t.is_realization(graph) && graph.transitive_reduction() == t.graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar_list;
    use crate::Rational;

    fn w(s: &str) -> Vec<Rational> {
        parse_scalar_list(s).unwrap()
    }

    #[test]
    fn generic_pointed_example() {
        let lambda = w("-1/6,-2/3,5/6");
        let id = Permutation::identity(3);
        let s2 = Permutation::simple(3, 2);
        assert_eq!(relation_verdict(&lambda, &id).unwrap(), Ok(()));
        assert_eq!(
            relation_verdict(&lambda, &s2).unwrap(),
            Err(Obstruction::Critical)
        );
        assert!(is_id_relation_closed_form(&lambda));
    }

    #[test]
    fn minus_rho_example() {
        let lambda = w("-1,0,1");
        let id = Permutation::identity(3);
        let s2 = Permutation::simple(3, 2);
        assert_eq!(
            relation_verdict(&lambda, &id).unwrap(),
            Err(Obstruction::Critical)
        );
        assert!(is_sigma_relation(&lambda, &s2).unwrap());
        assert!(!is_id_relation_closed_form(&lambda));
    }

    #[test]
    fn rank_mismatch_and_cap() {
        assert!(relation_verdict(&w("1,2"), &Permutation::identity(3)).is_err());
        assert_eq!(
            sigma_relation_witnesses(&w("1,2,3"), 2),
            Err(WeightError::SweepCap { n: 3, cap: 2 })
        );
    }

    #[test]
    fn generic_weights_have_all_witnesses() {
        let report = sigma_relation_witnesses(&w("1/2,1/3,1/5,1/7"), DEFAULT_SWEEP_CAP).unwrap();
        assert_eq!(report.count(), 24);
        let bound = lower_bound_n_lambda(&w("1/2,1/3,1/5,1/7"), DEFAULT_SWEEP_CAP).unwrap();
        assert_eq!(bound.bound, 24);
    }

    #[test]
    fn four_equal_shifted_entries_have_no_witness() {
        // μ = λ + ℘ = (0, 0, 0, 0)
        let report = sigma_relation_witnesses(&w("0,1,2,3"), DEFAULT_SWEEP_CAP).unwrap();
        assert_eq!(report.count(), 0);
    }

    #[test]
    fn dominant_integral_bound_is_full() {
        let bound = lower_bound_n_lambda(&w("2,1,0"), DEFAULT_SWEEP_CAP).unwrap();
        assert_eq!(bound.bound, 6);
        assert_eq!(bound.subset, vec![1, 2, 3]);
    }

    #[test]
    fn extracted_weight_shift() {
        let lambda = w("5,1/2,3,1/3");
        assert_eq!(extracted_weight(&lambda, &[1, 3]), w("5,2"));
    }

    #[test]
    fn verma_gates() {
        let zero = w("0,0,0");
        assert_eq!(
            verma_is_sigma_relation(&zero, &Permutation::identity(3)).unwrap(),
            VermaVerdict::NotCovered
        );
        let generic = w("1/2,1/3,1/5");
        for sigma in Permutation::all(3) {
            assert_eq!(
                verma_is_sigma_relation(&generic, &sigma).unwrap(),
                VermaVerdict::Covered(true)
            );
        }
    }

    #[test]
    fn simplicity_of_own_graph() {
        let t = sigma_tableau(&w("2,1,0"), &Permutation::identity(3));
        assert!(is_simple_realization(&t.graph(), &t));
        let fewer = t
            .graph()
            .filter_arrows(|(a, b)| !(a.row == 3 && b.row == 3));
        assert!(!is_simple_realization(&fewer, &t) || fewer == t.graph());
    }
}
