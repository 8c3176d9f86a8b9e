//! Gelfand-Tsetlin tableaux: satisfaction, realizations, the graph of a
//! tableau, the twisted tableau `T_σ(X)` and basis enumeration.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{
    arrow_kind, vertex_count, vertices, ArrowKind, GraphError, GtGraph, Vertex, MAX_RANK,
};
use crate::scalars::{parse_scalar, Field, ParseScalarError};
use crate::sigma::{Permutation, SigmaGraph, Sign};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("rank {0} outside the supported range 1..={MAX_RANK}")]
    Rank(usize),
    #[error("row {row} has {found} entries, expected {row}")]
    Shape { row: usize, found: usize },
    #[error("rank mismatch: tableau has rank {tableau}, graph has rank {graph}")]
    RankMismatch { tableau: usize, graph: usize },
    #[error("seed tableau is not a realization of the graph")]
    NotRealization,
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
}

/// A triangular array `l_{ij}`, `1 <= j <= i <= n`.
///
/// Ordering compares row 1 first, then row 2, and so on, which for tableaux
/// sharing a top row is the lexicographic order of their shift vectors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau<S = Rational> {
    // rows[k - 1] is row k
    rows: Vec<Vec<S>>,
}

impl<S: Field> Tableau<S> {
    /// Builds a tableau from its rows listed top row first.
    pub fn new(top_down: Vec<Vec<S>>) -> Result<Self, TableauError> {
        let n = top_down.len();
        if n == 0 || n > MAX_RANK {
            return Err(TableauError::Rank(n));
        }
        let mut rows = top_down;
        rows.reverse();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(TableauError::Shape {
                    row: k + 1,
                    found: row.len(),
                });
            }
        }
        Ok(Tableau { rows })
    }

    /// `T_σ(X)`: row `n` is `X`, and each lower entry copies the entry above
    /// it along a `+1` column arrow of `G_σ`, or adds one along a `-1` arrow.
    pub fn twisted(sigma: &Permutation, x: &[S]) -> Self {
        assert_eq!(
            sigma.n(),
            x.len(),
            "top row length differs from permutation degree"
        );
        Tableau::from_sign_graph(&SigmaGraph::from_permutation(sigma), x)
    }

    /// The twisted-tableau recursion driven by an arbitrary sign graph.
    pub fn from_sign_graph(signs: &SigmaGraph, x: &[S]) -> Self {
        let n = x.len();
        let mut rows: Vec<Vec<S>> = vec![Vec::new(); n];
        rows[n - 1] = x.to_vec();
        for k in (2..=n).rev() {
            rows[k - 2] = (1..k)
                .map(|i| {
                    let above = rows[k - 1][i - 1].clone();
                    match signs.sign(k, i) {
                        Sign::Plus => above,
                        Sign::Minus => above + S::one(),
                    }
                })
                .collect();
        }
        Tableau { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Row `k`, left to right.
    pub fn row(&self, k: usize) -> &[S] {
        &self.rows[k - 1]
    }

    pub fn top_row(&self) -> &[S] {
        self.row(self.n())
    }

    pub fn entry(&self, v: Vertex) -> &S {
        &self.rows[v.row - 1][v.col - 1]
    }

    /// Rows listed top row first.
    pub fn rows_top_down(&self) -> Vec<Vec<S>> {
        self.rows.iter().rev().cloned().collect()
    }

    /// Sum of the entries of row `k`; zero for `k = 0`.
    pub fn row_sum(&self, k: usize) -> S {
        if k == 0 {
            return S::zero();
        }
        self.row(k).iter().fold(S::zero(), |acc, x| acc + x.clone())
    }

    pub fn with_entry(&self, v: Vertex, value: S) -> Self {
        let mut out = self.clone();
        out.rows[v.row - 1][v.col - 1] = value;
        out
    }

    /// Adds an integer to one entry.
    pub fn bumped(&self, v: Vertex, delta: i64) -> Self {
        let value = self.entry(v).clone() + S::from_int(delta);
        self.with_entry(v, value)
    }

    /// `T(L + z)`.
    pub fn shift(&self, z: &ShiftVector) -> Self {
        assert_eq!(
            z.n(),
            self.n(),
            "shift vector rank differs from tableau rank"
        );
        let mut out = self.clone();
        for v in vertices(self.n()) {
            let d = z.get(v);
            if d != 0 {
                out.rows[v.row - 1][v.col - 1] = out.entry(v).clone() + S::from_int(d);
            }
        }
        out
    }

    /// The integer shift `self - base`, when every entry differs by an integer
    /// and the top rows agree.
    pub fn shift_from(&self, base: &Tableau<S>) -> Option<ShiftVector> {
        if self.n() != base.n() || self.top_row() != base.top_row() {
            return None;
        }
        let mut z = ShiftVector::zero(self.n());
        for v in vertices(self.n() - 1) {
            z.entries[v.index()] = self.entry(v).integer_difference(base.entry(v))?;
        }
        Some(z)
    }

    fn arrow_holds(&self, from: Vertex, to: Vertex) -> bool {
        let bound = if arrow_kind((from, to)) == ArrowKind::Up {
            1
        } else {
            0
        };
        matches!(self.entry(from).integer_difference(self.entry(to)), Some(d) if d >= bound)
    }

    /// Every arrow's inequality holds: weak along down and top-row arrows,
    /// strict along up arrows, always with integral differences.
    pub fn satisfies(&self, graph: &GtGraph) -> bool {
        graph.n() == self.n() && graph.arrows().all(|(a, b)| self.arrow_holds(a, b))
    }

    /// Satisfies the graph, and below the top row two entries of one row
    /// differ by an integer only inside a connected component.
    pub fn is_realization(&self, graph: &GtGraph) -> bool {
        if !self.satisfies(graph) {
            return false;
        }
        for k in 1..self.n() {
            for i in 1..=k {
                for j in i + 1..=k {
                    let (a, b) = (Vertex::new(k, i), Vertex::new(k, j));
                    if !graph.same_component(a, b)
                        && self.entry(a).integer_difference(self.entry(b)).is_some()
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The transitive reduction of the graph of all arrows the entries force.
    ///
    /// Equal entries in the top row are joined only from left to right.
    pub fn graph(&self) -> GtGraph {
        let n = self.n();
        let mut arrows = Vec::new();
        for v in vertices(n) {
            if v.row > 1 {
                for s in 1..v.row {
                    let w = Vertex::new(v.row - 1, s);
                    if let Some(d) = self.entry(v).integer_difference(self.entry(w)) {
                        if d >= 0 {
                            arrows.push((v, w));
                        } else {
                            arrows.push((w, v));
                        }
                    }
                }
            }
        }
        for j in 1..=n {
            for s in 1..=n {
                if j == s {
                    continue;
                }
                let (a, b) = (Vertex::new(n, j), Vertex::new(n, s));
                match self.entry(a).integer_difference(self.entry(b)) {
                    Some(d) if d > 0 || (d == 0 && j < s) => arrows.push((a, b)),
                    _ => {}
                }
            }
        }
        GtGraph::new(n, arrows)
            .expect("entry-forced arrows are acyclic")
            .transitive_reduction()
    }

    /// Reorders every row so that each class of integrally linked entries
    /// occupies a contiguous block, blocks appear in increasing order of
    /// [`Field::residue`] in every row, and entries decrease inside a block.
    ///
    /// Using one block order for all rows keeps arrows between different
    /// classes from crossing.
    pub fn normalize_rows(&self) -> (Tableau<S>, RowPermutations) {
        let mut rows = Vec::with_capacity(self.n());
        let mut perms = Vec::with_capacity(self.n());
        for row in &self.rows {
            let mut image: Vec<usize> = (1..=row.len()).collect();
            // stable, so equal entries keep their relative order
            image.sort_by(|&a, &b| {
                let (x, y) = (&row[a - 1], &row[b - 1]);
                x.residue().cmp(&y.residue()).then_with(|| y.cmp(x))
            });
            rows.push(image.iter().map(|&i| row[i - 1].clone()).collect());
            perms.push(Permutation::new(image).expect("sorting yields a bijection"));
        }
        (Tableau { rows }, RowPermutations { perms })
    }

    /// The graph of the row-normalized tableau.
    pub fn normalized_graph(&self) -> GtGraph {
        self.normalize_rows().0.graph()
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            n: self.n(),
            rows: self
                .rows
                .iter()
                .rev()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &TableauJson) -> Result<Self, TableauError> {
        let rows = json
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_scalar(s))
                    .collect::<Result<Vec<S>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let t = Tableau::new(rows)?;
        if t.n() != json.n {
            return Err(TableauError::Shape {
                row: json.n,
                found: t.n(),
            });
        }
        Ok(t)
    }
}

impl<S: Field> fmt::Display for Tableau<S> {
    /// Triangular layout, top row first, entries centred on a common grid.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .rev()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (depth, row) in cells.iter().enumerate() {
            let mut line = " ".repeat(depth * (width + 1) / 2);
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    line.push(' ');
                }
                line.push_str(&format!("{cell:>width$}"));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// Serialized form: `{"n": 3, "rows": [["l31","l32","l33"], ["l21","l22"], ["l11"]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

/// Per-row permutations produced by [`Tableau::normalize_rows`]: entry `j`
/// of new row `k` is entry `perms[k-1](j)` of the old row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowPermutations {
    perms: Vec<Permutation>,
}

impl RowPermutations {
    pub fn row(&self, k: usize) -> &Permutation {
        &self.perms[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.perms.iter().all(Permutation::is_identity)
    }

    /// Where an old vertex lands after normalization.
    pub fn new_position(&self, old: Vertex) -> Vertex {
        Vertex::new(old.row, self.row(old.row).inverse().apply(old.col))
    }

    /// Relabels a graph on the old positions onto the new positions.
    pub fn relabel(&self, graph: &GtGraph) -> Result<GtGraph, GraphError> {
        let inverses: Vec<Permutation> = self.perms.iter().map(Permutation::inverse).collect();
        graph.map_vertices(|v| Vertex::new(v.row, inverses[v.row - 1].apply(v.col)))
    }
}

/// An integer vector on the grid with zero top row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftVector {
    n: usize,
    entries: Vec<i64>,
}

impl ShiftVector {
    pub fn zero(n: usize) -> Self {
        ShiftVector {
            n,
            entries: vec![0; vertex_count(n)],
        }
    }

    /// `δ^{ki}`, the unit at `(k,i)`; `k < n`.
    pub fn delta(n: usize, k: usize, i: usize) -> Self {
        assert!(
            k < n && i >= 1 && i <= k,
            "unit shift ({k},{i}) outside rows 1..n-1"
        );
        let mut z = ShiftVector::zero(n);
        z.entries[Vertex::new(k, i).index()] = 1;
        z
    }

    /// `δ^{ℓ,1} + δ^{ℓ+1,1} + ... + δ^{m-1,1}` for `ℓ < m`, and its negative
    /// for `ℓ > m`.
    pub fn epsilon(n: usize, l: usize, m: usize) -> Self {
        assert!(
            l != m && l.max(m) <= n,
            "epsilon({l},{m}) needs distinct indices in 1..={n}"
        );
        let (lo, hi, sign) = if l < m { (l, m, 1) } else { (m, l, -1) };
        let mut z = ShiftVector::zero(n);
        for k in lo..hi {
            z.entries[Vertex::new(k, 1).index()] = sign;
        }
        z
    }

    pub fn from_fn(n: usize, f: impl Fn(Vertex) -> i64) -> Self {
        let entries = vertices(n)
            .map(|v| if v.row == n { 0 } else { f(v) })
            .collect();
        ShiftVector { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, v: Vertex) -> i64 {
        self.entries[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Applies a permutation inside each row: entry `(k, j)` of the result is
    /// entry `(k, perm_k(j))` of `self`.
    pub fn permuted_rows(&self, perms: &[Permutation]) -> Self {
        ShiftVector::from_fn(self.n, |v| {
            self.get(Vertex::new(v.row, perms[v.row - 1].apply(v.col)))
        })
    }
}

impl std::ops::Add for &ShiftVector {
    type Output = ShiftVector;

    fn add(self, other: &ShiftVector) -> ShiftVector {
        assert_eq!(self.n, other.n);
        ShiftVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &ShiftVector {
    type Output = ShiftVector;

    fn neg(self) -> ShiftVector {
        ShiftVector {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// A finite box `|z_v| <= bound` of shift vectors, optionally tighter or
/// looser at individual vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisWindow {
    pub bound: u32,
    pub overrides: BTreeMap<Vertex, u32>,
}

impl BasisWindow {
    pub fn new(bound: u32) -> Self {
        BasisWindow {
            bound,
            overrides: BTreeMap::new(),
        }
    }

    pub fn bound_at(&self, v: Vertex) -> i64 {
        i64::from(*self.overrides.get(&v).unwrap_or(&self.bound))
    }

    /// Every non-top entry of `z` strictly inside the window.
    pub fn is_interior(&self, z: &ShiftVector) -> bool {
        vertices(z.n() - 1).all(|v| z.get(v).abs() < self.bound_at(v))
    }

    pub fn contains(&self, z: &ShiftVector) -> bool {
        vertices(z.n() - 1).all(|v| z.get(v).abs() <= self.bound_at(v))
    }
}

/// The realizations found in a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis<S = Rational> {
    pub seed: Tableau<S>,
    /// Sorted by shift vector.
    pub tableaux: Vec<Tableau<S>>,
    /// No realization touches the window boundary.
    pub complete: bool,
}

impl<S: Field> Basis<S> {
    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }
}

/// All realizations `seed + z` of `graph` with `z` inside the window.
pub fn enumerate_basis<S: Field>(
    seed: &Tableau<S>,
    graph: &GtGraph,
    window: &BasisWindow,
) -> Result<Basis<S>, TableauError> {
    let n = seed.n();
    if graph.n() != n {
        return Err(TableauError::RankMismatch {
            tableau: n,
            graph: graph.n(),
        });
    }
    if !seed.is_realization(graph) {
        return Err(TableauError::NotRealization);
    }
    // every arrow becomes `z_from - z_to + offset >= bound` on integer shifts
    let constraints: Vec<(Vertex, Vertex, i64)> = graph
        .arrows()
        .filter(|(a, b)| a.row < n || b.row < n)
        .map(|(a, b)| {
            let bound = if arrow_kind((a, b)) == ArrowKind::Up {
                1
            } else {
                0
            };
            let offset = seed
                .entry(a)
                .integer_difference(seed.entry(b))
                .expect("seed satisfies the graph");
            (a, b, offset - bound)
        })
        .collect();
    // fill rows n-1 down to 1; a vertex is checked against arrows to the row above
    let order: Vec<Vertex> = (1..n)
        .rev()
        .flat_map(|k| (1..=k).map(move |i| Vertex::new(k, i)))
        .collect();
    let mut checks: Vec<Vec<(Vertex, Vertex, i64)>> = vec![Vec::new(); order.len()];
    for &(a, b, slack) in &constraints {
        let later = |v: Vertex| order.iter().position(|&w| w == v).unwrap_or(usize::MAX);
        let pos = match (a.row < n, b.row < n) {
            (true, true) => later(a).max(later(b)),
            (true, false) => later(a),
            _ => later(b),
        };
        checks[pos].push((a, b, slack));
    }
    let mut z = ShiftVector::zero(n);
    let mut found = Vec::new();
    search(&order, &checks, window, 0, &mut z, &mut found);

    found.retain(|z| seed.shift(z).is_realization(graph));
    let complete = found.iter().all(|z| window.is_interior(z));
    let mut tableaux: Vec<Tableau<S>> = found.iter().map(|z| seed.shift(z)).collect();
    tableaux.sort();
    Ok(Basis {
        seed: seed.clone(),
        tableaux,
        complete,
    })
}

fn search(
    order: &[Vertex],
    checks: &[Vec<(Vertex, Vertex, i64)>],
    window: &BasisWindow,
    depth: usize,
    z: &mut ShiftVector,
    found: &mut Vec<ShiftVector>,
) {
    if depth == order.len() {
        found.push(z.clone());
        return;
    }
    let v = order[depth];
    let b = window.bound_at(v);
    for value in -b..=b {
        z.entries[v.index()] = value;
        if checks[depth]
            .iter()
            .all(|&(a, c, slack)| z.get(a) - z.get(c) + slack >= 0)
        {
            search(order, checks, window, depth + 1, z, found);
        }
    }
    z.entries[v.index()] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar_list;

    fn q(s: &str) -> Rational {
        parse_scalar(s).unwrap()
    }

    fn tab(rows: &[&str]) -> Tableau {
        Tableau::new(rows.iter().map(|r| parse_scalar_list(r).unwrap()).collect()).unwrap()
    }

    fn v(row: usize, col: usize) -> Vertex {
        Vertex::new(row, col)
    }

    #[test]
    fn shape_is_checked() {
        assert!(matches!(
            Tableau::<Rational>::new(vec![vec![q("1"), q("2")], vec![q("1"), q("1")]]),
            Err(TableauError::Shape { row: 1, found: 2 })
        ));
    }

    #[test]
    fn twisted_examples() {
        let id = Permutation::identity(3);
        let s2 = Permutation::simple(3, 2);
        let x = parse_scalar_list("-1/6,-5/3,-7/6").unwrap();
        assert_eq!(
            Tableau::twisted(&id, &x),
            tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"])
        );
        let x = parse_scalar_list("-1/6,-7/6,-5/3").unwrap();
        assert_eq!(
            Tableau::twisted(&s2, &x),
            tab(&["-1/6,-7/6,-5/3", "-1/6,-1/6", "-1/6"])
        );
        let x = parse_scalar_list("-1,-1,-1").unwrap();
        assert_eq!(Tableau::twisted(&s2, &x), tab(&["-1,-1,-1", "-1,0", "-1"]));
    }

    #[test]
    fn row_sums() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        assert_eq!(t.row_sum(1), q("-1/6"));
        assert_eq!(t.row_sum(2), q("-11/6"));
        assert_eq!(t.row_sum(0), q("0"));
    }

    #[test]
    fn strict_up_arrows() {
        let g = GtGraph::new(2, [(v(1, 1), v(2, 1))]).unwrap();
        assert!(!tab(&["0,-3/2", "0"]).satisfies(&g));
        assert!(tab(&["0,-3/2", "1"]).satisfies(&g));
    }

    #[test]
    fn realization_needs_component_separation() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        let g = t.graph();
        assert!(t.is_realization(&g));
        let bad = t.with_entry(v(2, 2), q("5/6"));
        assert!(!bad.is_realization(&g));
    }

    #[test]
    fn graph_of_generic_identity_tableau() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        let arrows: Vec<_> = t.graph().arrows().collect();
        assert_eq!(
            arrows,
            vec![
                (v(2, 1), v(1, 1)),
                (v(2, 1), v(3, 3)),
                (v(3, 1), v(2, 1)),
                (v(3, 2), v(2, 2)),
            ]
        );
    }

    #[test]
    fn equal_top_entries_point_right() {
        let t = tab(&["-1,-1,-1", "-1,0", "-1"]);
        let g = t.graph();
        assert!(g.has_arrow(v(3, 1), v(3, 2)));
        assert!(g.has_arrow(v(3, 2), v(3, 3)));
        assert!(!g.has_arrow(v(3, 1), v(3, 3)));
        assert!(!g.has_arrow(v(3, 2), v(3, 1)));
    }

    #[test]
    fn normalization() {
        let t = tab(&["0,2", "7"]);
        let (n, perms) = t.normalize_rows();
        assert_eq!(n, tab(&["2,0", "7"]));
        assert_eq!(perms.row(2).images(), &[2, 1]);
        let t = tab(&["-5/3,-1/6", "0"]);
        let (n, perms) = t.normalize_rows();
        assert_eq!(n, t);
        assert!(perms.is_identity());
        // the integral class comes first and decreases, then the class of 1/2
        let t = tab(&["0,1/2,3", "0,0", "0"]);
        let (n, perms) = t.normalize_rows();
        assert_eq!(n.top_row(), &[q("3"), q("0"), q("1/2")][..]);
        assert_eq!(perms.row(3).images(), &[3, 1, 2]);
        assert_eq!(perms.new_position(v(3, 2)), v(3, 3));
    }

    #[test]
    fn shifts() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        assert_eq!(t.shift(&ShiftVector::zero(3)), t);
        assert_eq!(
            *t.shift(&ShiftVector::delta(3, 1, 1)).entry(v(1, 1)),
            q("5/6")
        );
        let e = ShiftVector::epsilon(3, 1, 3);
        assert_eq!((e.get(v(1, 1)), e.get(v(2, 1)), e.get(v(2, 2))), (1, 1, 0));
        assert_eq!(ShiftVector::epsilon(3, 3, 1), -&e);
        assert_eq!(t.shift(&e).shift_from(&t), Some(e));
    }

    #[test]
    fn basis_of_the_eight_dimensional_module() {
        let t = tab(&["2,0,-2", "2,0", "2"]);
        let g = t.graph();
        let basis = enumerate_basis(&t, &g, &BasisWindow::new(10)).unwrap();
        assert_eq!(basis.len(), 8);
        assert!(basis.complete);
        assert!(basis.tableaux.iter().all(|b| b.is_realization(&g)));
    }

    #[test]
    fn trivial_module_has_one_vector() {
        let t = tab(&["0,-1,-2", "0,-1", "0"]);
        let basis = enumerate_basis(&t, &t.graph(), &BasisWindow::new(10)).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis.complete);
    }

    #[test]
    fn infinite_module_is_flagged_incomplete() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        let basis = enumerate_basis(&t, &t.graph(), &BasisWindow::new(2)).unwrap();
        assert!(!basis.complete);
        assert!(basis.len() > 1);
    }

    #[test]
    fn json_round_trip() {
        let t = tab(&["-1/6,-5/3,-7/6", "-1/6,-5/3", "-1/6"]);
        let json = t.to_json();
        assert_eq!(json.rows[0], vec!["-1/6", "-5/3", "-7/6"]);
        assert_eq!(Tableau::<Rational>::from_json(&json).unwrap(), t);
    }

    #[test]
    fn display_is_triangular() {
        let t = tab(&["2,0,-2", "2,0", "2"]);
        let text = t.to_string();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().next().unwrap().contains("-2"));
    }
}
