//! Directed graphs on the triangular vertex grid and the relation-graph test.
//!
//! Vertices are the pairs `(i, j)` with `1 <= j <= i <= n`; row `n` is the top
//! row. Arrows may only join consecutive rows, or two distinct vertices of the
//! top row. Every [`GtGraph`] is acyclic; reachability and connected
//! components are computed once at construction.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Largest supported rank. Reachability rows are `u128` bitsets.
pub const MAX_RANK: usize = 15;

/// A vertex `(row, col)` of the triangular grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }

    /// Position in the row-major enumeration `(1,1), (2,1), (2,2), (3,1), ...`.
    pub fn index(self) -> usize {
        self.row * (self.row - 1) / 2 + (self.col - 1)
    }

    pub fn from_index(index: usize) -> Self {
        let mut row = 1;
        while row * (row + 1) / 2 <= index {
            row += 1;
        }
        Vertex::new(row, index - row * (row - 1) / 2 + 1)
    }

    pub fn in_grid(self, n: usize) -> bool {
        self.row >= 1 && self.row <= n && self.col >= 1 && self.col <= self.row
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Number of vertices of the rank `n` grid.
pub const fn vertex_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// All vertices of the rank `n` grid in index order.
pub fn vertices(n: usize) -> impl Iterator<Item = Vertex> {
    (1..=n).flat_map(|row| (1..=row).map(move |col| Vertex::new(row, col)))
}

pub type Arrow = (Vertex, Vertex);

/// Orientation of an arrow relative to the rows it joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowKind {
    /// From row `k + 1` to row `k`.
    Down,
    /// From row `k` to row `k + 1`.
    Up,
    /// Inside the top row.
    Horizontal,
}

pub fn arrow_kind(arrow: Arrow) -> ArrowKind {
    let (a, b) = arrow;
    if a.row == b.row {
        ArrowKind::Horizontal
    } else if a.row == b.row + 1 {
        ArrowKind::Down
    } else {
        ArrowKind::Up
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("rank {0} outside the supported range 1..={MAX_RANK}")]
    Rank(usize),
    #[error("vertex {0} is not in the rank {1} grid")]
    VertexOutOfRange(Vertex, usize),
    #[error("arrow {0} -> {1} does not join consecutive rows or two top-row vertices")]
    Forbidden(Vertex, Vertex),
    #[error("arrow {0} -> {1} listed twice")]
    Duplicate(Vertex, Vertex),
    #[error("graph contains an oriented cycle through {0}")]
    Cycle(Vertex),
}

/// Why a graph is not a relation graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Obstruction {
    /// A directed path runs from a vertex to a same-row vertex on its left.
    Order,
    /// Two same-row vertices share a component but no directed path joins them.
    Critical,
    /// Two down-arrows between the same pair of rows cross.
    Cross,
    /// Some adjoining pair is covered by neither diamond pattern.
    Diamond,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Obstruction::Order => "order",
            Obstruction::Critical => "critical",
            Obstruction::Cross => "cross",
            Obstruction::Diamond => "diamond",
        };
        f.write_str(s)
    }
}

/// The relation-graph test was asked of a graph that is not ordered; reorder
/// the rows of the tableau first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("graph is not ordered; normalize the tableau rows before testing")]
pub struct NeedsNormalization;

/// A pair `((k,i),(k,j))`, `i < j`, joined by a path with nothing in between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdjoiningPair {
    pub row: usize,
    pub left: usize,
    pub right: usize,
}

impl AdjoiningPair {
    pub fn vertices(self) -> (Vertex, Vertex) {
        (
            Vertex::new(self.row, self.left),
            Vertex::new(self.row, self.right),
        )
    }
}

/// An acyclic graph on the rank `n` triangular grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtGraph {
    n: usize,
    arrows: BTreeSet<Arrow>,
    // reach[v]: bitset of vertices reachable from v by a path of positive length
    reach: Vec<u128>,
    component: Vec<usize>,
}

impl GtGraph {
    pub fn new(n: usize, arrows: impl IntoIterator<Item = Arrow>) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_RANK {
            return Err(GraphError::Rank(n));
        }
        let mut set = BTreeSet::new();
        for (a, b) in arrows {
            for v in [a, b] {
                if !v.in_grid(n) {
                    return Err(GraphError::VertexOutOfRange(v, n));
                }
            }
            let allowed =
                a.row == b.row + 1 || b.row == a.row + 1 || (a.row == n && b.row == n && a != b);
            if !allowed {
                return Err(GraphError::Forbidden(a, b));
            }
            if !set.insert((a, b)) {
                return Err(GraphError::Duplicate(a, b));
            }
        }
        let reach = closure(n, &set);
        if let Some(i) = (0..reach.len()).find(|&i| reach[i] >> i & 1 == 1) {
            return Err(GraphError::Cycle(Vertex::from_index(i)));
        }
        let component = components(n, &set);
        Ok(GtGraph {
            n,
            arrows: set,
            reach,
            component,
        })
    }

    /// The graph with no arrows.
    pub fn empty(n: usize) -> Self {
        GtGraph::new(n, []).expect("empty graph is valid")
    }

    /// The standard graph: every `(i,j)` points down to `(i-1,j)`.
    pub fn standard(n: usize) -> Self {
        let arrows = vertices(n)
            .filter(|v| v.col < v.row)
            .map(|v| (v, Vertex::new(v.row - 1, v.col)));
        GtGraph::new(n, arrows).expect("standard graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        self.arrows.iter().copied()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn has_arrow(&self, from: Vertex, to: Vertex) -> bool {
        self.arrows.contains(&(from, to))
    }

    /// A directed path of positive length from `from` to `to`.
    pub fn has_path(&self, from: Vertex, to: Vertex) -> bool {
        self.reach[from.index()] >> to.index() & 1 == 1
    }

    pub fn reachable_from(&self, from: Vertex) -> Vec<Vertex> {
        bits(self.reach[from.index()])
            .map(Vertex::from_index)
            .collect()
    }

    pub fn same_component(&self, a: Vertex, b: Vertex) -> bool {
        self.component[a.index()] == self.component[b.index()]
    }

    /// Components of the underlying undirected graph, each sorted, listed by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        let mut label_slot = vec![usize::MAX; self.component.len()];
        for v in vertices(self.n) {
            let label = self.component[v.index()];
            if label_slot[label] == usize::MAX {
                label_slot[label] = groups.len();
                groups.push(Vec::new());
            }
            groups[label_slot[label]].push(v);
        }
        for g in &mut groups {
            g.sort();
        }
        groups.sort();
        groups
    }

    /// The unique minimal subgraph with the same reachability relation.
    pub fn transitive_reduction(&self) -> GtGraph {
        let kept: Vec<Arrow> = self
            .arrows
            .iter()
            .copied()
            .filter(|&(a, b)| {
                // redundant when some other successor of `a` already reaches `b`
                !self
                    .arrows
                    .range((a, Vertex::new(0, 0))..)
                    .take_while(|(x, _)| *x == a)
                    .any(|&(_, w)| w != b && self.has_path(w, b))
            })
            .collect();
        GtGraph::new(self.n, kept).expect("subgraph of an acyclic graph is acyclic")
    }

    pub fn is_transitively_reduced(&self) -> bool {
        self.transitive_reduction().arrows.len() == self.arrows.len()
    }

    /// Same-row vertices below the top row that share a component are joined
    /// by a directed path.
    pub fn is_noncritical(&self) -> bool {
        self.critical_pair().is_none()
    }

    /// First same-row, same-component pair with no directed path between them.
    pub fn critical_pair(&self) -> Option<(Vertex, Vertex)> {
        for k in 1..self.n {
            for i in 1..=k {
                for j in i + 1..=k {
                    let (a, b) = (Vertex::new(k, i), Vertex::new(k, j));
                    if self.same_component(a, b) && !self.has_path(a, b) && !self.has_path(b, a) {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// No directed path from a vertex to a same-row vertex strictly to its left.
    pub fn is_ordered(&self) -> bool {
        (1..=self.n).all(|k| {
            (1..=k)
                .all(|i| (i + 1..=k).all(|j| !self.has_path(Vertex::new(k, j), Vertex::new(k, i))))
        })
    }

    /// Two down-arrows `(k+1,r) -> (k,j)` and `(k+1,s) -> (k,i)` with `r < s`, `i < j`.
    pub fn has_crosses(&self) -> bool {
        let down: Vec<Arrow> = self
            .arrows
            .iter()
            .copied()
            .filter(|&a| arrow_kind(a) == ArrowKind::Down)
            .collect();
        down.iter().any(|&(top_r, low_j)| {
            down.iter().any(|&(top_s, low_i)| {
                top_r.row == top_s.row && top_r.col < top_s.col && low_i.col < low_j.col
            })
        })
    }

    /// Adjoining pairs in `(row, left, right)` order.
    pub fn adjoining_pairs(&self) -> Vec<AdjoiningPair> {
        let mut out = Vec::new();
        for k in 1..self.n {
            for i in 1..=k {
                for j in i + 1..=k {
                    let (a, b) = (Vertex::new(k, i), Vertex::new(k, j));
                    if !self.has_path(a, b) {
                        continue;
                    }
                    let blocked = (i + 1..j).any(|t| {
                        let mid = Vertex::new(k, t);
                        self.has_path(a, mid) || self.has_path(mid, b)
                    });
                    if !blocked {
                        out.push(AdjoiningPair {
                            row: k,
                            left: i,
                            right: j,
                        });
                    }
                }
            }
        }
        out
    }

    /// Whether the pair is bridged by the upper/lower diamond or by two
    /// arrows into the row above.
    pub fn diamond_covers(&self, pair: AdjoiningPair) -> bool {
        let k = pair.row;
        let (a, b) = pair.vertices();
        let through = |row: usize, col: usize| {
            let m = Vertex::new(row, col);
            self.has_arrow(a, m) && self.has_arrow(m, b)
        };
        let upper = (1..=k + 1).any(|p| through(k + 1, p));
        let lower = k >= 2 && (1..k).any(|q| through(k - 1, q));
        if upper && lower {
            return true;
        }
        (1..=k + 1).any(|s| {
            self.has_arrow(a, Vertex::new(k + 1, s))
                && (s + 1..=k + 1).any(|t| self.has_arrow(Vertex::new(k + 1, t), b))
        })
    }

    pub fn satisfies_diamond(&self) -> bool {
        self.adjoining_pairs()
            .into_iter()
            .all(|p| self.diamond_covers(p))
    }

    /// Diamond condition restricted to the adjoining pairs inside one component.
    pub fn component_satisfies_diamond(&self, component: &[Vertex]) -> bool {
        let members: BTreeSet<Vertex> = component.iter().copied().collect();
        self.adjoining_pairs()
            .into_iter()
            .filter(|p| members.contains(&p.vertices().0))
            .all(|p| self.diamond_covers(p))
    }

    /// First failing predicate among order, criticality, crosses and the
    /// diamond condition.
    pub fn relation_check(&self) -> Result<(), Obstruction> {
        if !self.is_ordered() {
            return Err(Obstruction::Order);
        }
        if !self.is_noncritical() {
            return Err(Obstruction::Critical);
        }
        if self.has_crosses() {
            return Err(Obstruction::Cross);
        }
        let components = self.connected_components();
        if !components
            .iter()
            .all(|c| self.component_satisfies_diamond(c))
        {
            return Err(Obstruction::Diamond);
        }
        Ok(())
    }

    /// Ordered, non-critical, cross-less and every component satisfies the
    /// diamond condition. Unordered input is reported, not rejected.
    pub fn is_relation_graph(&self) -> Result<bool, NeedsNormalization> {
        match self.relation_check() {
            Ok(()) => Ok(true),
            Err(Obstruction::Order) => Err(NeedsNormalization),
            Err(_) => Ok(false),
        }
    }

    /// Image of the graph under a vertex map that preserves rows.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Result<GtGraph, GraphError> {
        GtGraph::new(self.n, self.arrows.iter().map(|&(a, b)| (f(a), f(b))))
    }

    /// Arrows kept by `keep`.
    pub fn filter_arrows(&self, keep: impl Fn(Arrow) -> bool) -> GtGraph {
        let kept: Vec<Arrow> = self.arrows.iter().copied().filter(|&a| keep(a)).collect();
        GtGraph::new(self.n, kept).expect("subgraph of an acyclic graph is acyclic")
    }

    /// Adds arrows, failing if the result is not a valid graph.
    pub fn with_arrows(
        &self,
        extra: impl IntoIterator<Item = Arrow>,
    ) -> Result<GtGraph, GraphError> {
        let mut set = self.arrows.clone();
        set.extend(extra);
        GtGraph::new(self.n, set)
    }

    /// Arrows among the vertices `(i,j)` with `lo <= j <= i <= hi`.
    pub fn restricted_to(&self, lo: usize, hi: usize) -> GtGraph {
        let inside = |v: Vertex| lo <= v.col && v.row <= hi;
        self.filter_arrows(|(a, b)| inside(a) && inside(b))
    }

    /// Graphviz rendering with one node per vertex and stable ordering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        for k in (1..=self.n).rev() {
            let _ = write!(out, "  {{ rank=same;");
            for j in 1..=k {
                let _ = write!(out, " \"{}\";", Vertex::new(k, j));
            }
            out.push_str(" }\n");
        }
        for (a, b) in &self.arrows {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|(a, b)| [a.row, a.col, b.row, b.col])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self, GraphError> {
        GtGraph::new(
            json.n,
            json.arrows
                .iter()
                .map(|&[i, j, r, s]| (Vertex::new(i, j), Vertex::new(r, s))),
        )
    }
}

/// Serialized form: `{"n": 3, "arrows": [[i, j, r, s], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub arrows: Vec<[usize; 4]>,
}

fn bits(mut word: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

fn closure(n: usize, arrows: &BTreeSet<Arrow>) -> Vec<u128> {
    let size = vertex_count(n);
    let mut reach = vec![0u128; size];
    for (a, b) in arrows {
        reach[a.index()] |= 1 << b.index();
    }
    for k in 0..size {
        let via = reach[k];
        for row in reach.iter_mut() {
            if *row >> k & 1 == 1 {
                *row |= via;
            }
        }
    }
    reach
}

fn components(n: usize, arrows: &BTreeSet<Arrow>) -> Vec<usize> {
    let size = vertex_count(n);
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in arrows {
        let (ra, rb) = (find(&mut parent, a.index()), find(&mut parent, b.index()));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..size).map(|i| find(&mut parent, i)).collect()
}
