//! Permutations, roots, sign graphs and their quasi-partitions.
//!
//! A [`SigmaGraph`] assigns a sign to every pair `(r, s)` with `s < r`: `+1`
//! stands for the arrow `(r,s) -> (r-1,s)`, `-1` for `(r-1,s) -> (r,s)`. The
//! symmetric group acts on these sign tables; the orbit of the all-plus table
//! is the image of [`Permutation`]s under [`SigmaGraph::from_permutation`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{GtGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("`{0}` is not a one-line permutation of 1..n")]
    NotBijective(String),
    #[error("malformed permutation image `{0}`")]
    Malformed(String),
}

/// A permutation of `1..=n` stored by its images.
///
/// Composition is as functions: `a.compose(&b)` maps `i` to `a(b(i))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(PermutationError::NotBijective(join(&images)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition of `k` and `k + 1`.
    pub fn simple(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k < n, "simple reflection s_{k} outside S_{n}");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    /// `i -> n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// The composite `s_{k_1} ∘ s_{k_2} ∘ ... ∘ s_{k_l}`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Permutation::identity(n), |acc, &k| {
            acc.compose(&Permutation::simple(n, k))
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n)
            .map(|i| {
                (i + 1..n)
                    .filter(|&j| self.images[i] > self.images[j])
                    .count()
            })
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// The vector `w` with `w_j = v_{self(j)}`.
    ///
    /// With this convention `σ⁻¹(μ)` places `μ_i` at position `σ(i)`.
    pub fn permute<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(
            v.len(),
            self.n(),
            "vector length differs from permutation degree"
        );
        self.images.iter().map(|&i| v[i - 1].clone()).collect()
    }

    /// All permutations of `1..=n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Every reduced word `[k_1, ..., k_l]` with `self = s_{k_1} ∘ ... ∘ s_{k_l}`,
    /// in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in 1..self.n() {
            // k is a left descent when self⁻¹(k) > self⁻¹(k+1)
            let inv = self.inverse();
            if inv.apply(k) > inv.apply(k + 1) {
                let shorter = Permutation::simple(self.n(), k).compose(self);
                for mut word in shorter.reduced_words() {
                    word.insert(0, k);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.images))
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| PermutationError::Malformed(part.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(images)
    }
}

fn join(images: &[usize]) -> String {
    images
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The root `ε_i - ε_j` of `gl_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j, "a root needs distinct indices");
        Root { i, j }
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    pub fn negate(self) -> Self {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// `self + other` when it is again a root.
    pub fn checked_sum(self, other: Root) -> Option<Root> {
        if self.j == other.i && self.i != other.j {
            Some(Root::new(self.i, other.j))
        } else if other.j == self.i && other.i != self.j {
            Some(Root::new(other.i, self.j))
        } else {
            None
        }
    }

    /// `α_{ij} -> α_{σ(i)σ(j)}`.
    pub fn permuted(self, sigma: &Permutation) -> Self {
        Root::new(sigma.apply(self.i), sigma.apply(self.j))
    }

    pub fn all(n: usize) -> impl Iterator<Item = Root> {
        (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| Root { i, j }))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}", self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuasiPartitionError {
    #[error("root {0} lies outside rank {1}")]
    OutOfRange(Root, usize),
    #[error("root {0} and its negative are both present")]
    BothSigns(Root),
    #[error("neither root {0} nor its negative is present")]
    Missing(Root),
}

/// A set of roots holding exactly one of `α`, `-α` for every root `α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiPartition {
    n: usize,
    roots: BTreeSet<Root>,
}

impl QuasiPartition {
    pub fn new(
        n: usize,
        roots: impl IntoIterator<Item = Root>,
    ) -> Result<Self, QuasiPartitionError> {
        let roots: BTreeSet<Root> = roots.into_iter().collect();
        for &r in &roots {
            if r.i > n || r.j > n || r.i == 0 || r.j == 0 {
                return Err(QuasiPartitionError::OutOfRange(r, n));
            }
            if roots.contains(&r.negate()) {
                return Err(QuasiPartitionError::BothSigns(r));
            }
        }
        for r in Root::all(n).filter(|r| r.is_positive()) {
            if !roots.contains(&r) && !roots.contains(&r.negate()) {
                return Err(QuasiPartitionError::Missing(r));
            }
        }
        Ok(QuasiPartition { n, roots })
    }

    pub fn positive(n: usize) -> Self {
        QuasiPartition {
            n,
            roots: Root::all(n).filter(|r| r.is_positive()).collect(),
        }
    }

    pub fn negative(n: usize) -> Self {
        QuasiPartition {
            n,
            roots: Root::all(n).filter(|r| !r.is_positive()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.roots.iter().copied()
    }

    pub fn contains(&self, root: Root) -> bool {
        self.roots.contains(&root)
    }

    /// Closed under every sum of two members that is a root.
    pub fn is_closed(&self) -> bool {
        self.roots.iter().all(|&a| {
            self.roots
                .iter()
                .all(|&b| a.checked_sum(b).is_none_or(|sum| self.roots.contains(&sum)))
        })
    }

    pub fn permuted(&self, sigma: &Permutation) -> Self {
        QuasiPartition {
            n: self.n,
            roots: self.roots.iter().map(|r| r.permuted(sigma)).collect(),
        }
    }
}

/// Orientation of the arrow between `(r,s)` and `(r-1,s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `(r,s) -> (r-1,s)`
    Plus,
    /// `(r-1,s) -> (r,s)`
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(value: i64) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SigmaGraphError {
    #[error("pair ({0},{1}) is not of the form 1 <= s < r <= n")]
    BadPair(usize, usize),
    #[error("sign {0} is neither 1 nor -1")]
    BadSign(i64),
    #[error("pair ({0},{1}) has no sign")]
    MissingPair(usize, usize),
    #[error("pair ({0},{1}) listed twice")]
    DuplicatePair(usize, usize),
}

/// A total sign assignment on the pairs `1 <= s < r <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaGraph {
    n: usize,
    signs: Vec<Sign>,
}

fn pair_index(r: usize, s: usize) -> usize {
    (r - 1) * (r - 2) / 2 + (s - 1)
}

impl SigmaGraph {
    /// The sign table given by `sign(r, s)` for every `s < r`.
    pub fn from_fn(n: usize, mut sign: impl FnMut(usize, usize) -> Sign) -> Self {
        let mut signs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for r in 2..=n {
            for s in 1..r {
                signs.push(sign(r, s));
            }
        }
        SigmaGraph { n, signs }
    }

    /// All arrows pointing down.
    pub fn standard(n: usize) -> Self {
        SigmaGraph::from_fn(n, |_, _| Sign::Plus)
    }

    /// The orbit element of a permutation: `+1` at `(r,s)` iff `σ⁻¹(r) > σ⁻¹(s)`.
    pub fn from_permutation(sigma: &Permutation) -> Self {
        let inv = sigma.inverse();
        SigmaGraph::from_fn(sigma.n(), |r, s| {
            if inv.apply(r) > inv.apply(s) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The sign at `(r, s)`; `s < r` is required.
    pub fn sign(&self, r: usize, s: usize) -> Sign {
        assert!(
            s >= 1 && s < r && r <= self.n,
            "sign index ({r},{s}) out of range"
        );
        self.signs[pair_index(r, s)]
    }

    /// `A_{(r,s)}` as an integer.
    pub fn a(&self, r: usize, s: usize) -> i64 {
        self.sign(r, s).value()
    }

    /// The image under the simple reflection `s_k`.
    pub fn apply_simple_reflection(&self, k: usize) -> Self {
        assert!(
            k >= 1 && k < self.n,
            "simple reflection s_{k} outside rank {}",
            self.n
        );
        SigmaGraph::from_fn(self.n, |r, s| {
            if (r, s) == (k + 1, k) {
                self.sign(k + 1, k).flipped()
            } else if s == k && r >= k + 2 {
                self.sign(r, k + 1)
            } else if s == k + 1 && r >= k + 2 {
                self.sign(r, k)
            } else if r == k + 1 && s < k {
                self.sign(k, s)
            } else if r == k && s < k {
                self.sign(k + 1, s)
            } else {
                self.sign(r, s)
            }
        })
    }

    /// `α_{ij}`, `i < j`, for `+1` at `(j,i)`; `α_{ji}` for `-1`.
    pub fn to_quasipartition(&self) -> QuasiPartition {
        let mut roots = BTreeSet::new();
        for r in 2..=self.n {
            for s in 1..r {
                roots.insert(match self.sign(r, s) {
                    Sign::Plus => Root::new(s, r),
                    Sign::Minus => Root::new(r, s),
                });
            }
        }
        QuasiPartition { n: self.n, roots }
    }

    pub fn from_quasipartition(q: &QuasiPartition) -> Self {
        SigmaGraph::from_fn(q.n(), |r, s| {
            if q.contains(Root::new(s, r)) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
    }

    /// `(m_k, M_k)`: the signed counts of sign disagreements below and above
    /// the pair of columns `k, k + 1`.
    pub fn small_and_big_m(&self, k: usize) -> (i64, i64) {
        let a = self.a(k + 1, k);
        let big = (k + 2..=self.n)
            .filter(|&l| self.sign(l, k) != self.sign(l, k + 1))
            .count();
        let small = (1..k)
            .filter(|&l| self.sign(k + 1, l) != self.sign(k, l))
            .count();
        (a * small as i64, a * big as i64)
    }

    /// The graph with one arrow per column pair.
    pub fn to_graph(&self) -> GtGraph {
        let mut arrows = Vec::new();
        for r in 2..=self.n {
            for s in 1..r {
                let (upper, lower) = (Vertex::new(r, s), Vertex::new(r - 1, s));
                arrows.push(match self.sign(r, s) {
                    Sign::Plus => (upper, lower),
                    Sign::Minus => (lower, upper),
                });
            }
        }
        GtGraph::new(self.n, arrows).expect("column arrows never form a cycle")
    }

    pub fn to_json(&self) -> SigmaJson {
        let mut signs = Vec::new();
        for r in 2..=self.n {
            for s in 1..r {
                signs.push([r as i64, s as i64, self.a(r, s)]);
            }
        }
        SigmaJson { n: self.n, signs }
    }

    pub fn from_json(json: &SigmaJson) -> Result<Self, SigmaGraphError> {
        let n = json.n;
        let mut table: Vec<Option<Sign>> = vec![None; n * n.saturating_sub(1) / 2];
        for &[r, s, value] in &json.signs {
            if s < 1 || s >= r || r > n as i64 {
                return Err(SigmaGraphError::BadPair(
                    r.max(0) as usize,
                    s.max(0) as usize,
                ));
            }
            let (r, s) = (r as usize, s as usize);
            let sign = Sign::from_value(value).ok_or(SigmaGraphError::BadSign(value))?;
            let slot = &mut table[pair_index(r, s)];
            if slot.is_some() {
                return Err(SigmaGraphError::DuplicatePair(r, s));
            }
            *slot = Some(sign);
        }
        let mut missing = None;
        let graph = SigmaGraph::from_fn(n, |r, s| {
            table[pair_index(r, s)].unwrap_or_else(|| {
                missing.get_or_insert((r, s));
                Sign::Plus
            })
        });
        match missing {
            Some((r, s)) => Err(SigmaGraphError::MissingPair(r, s)),
            None => Ok(graph),
        }
    }
}

/// Serialized form: `{"n": 3, "signs": [[r, s, ±1], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaJson {
    pub n: usize,
    pub signs: Vec<[i64; 3]>,
}
