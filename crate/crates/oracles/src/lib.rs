//! Naive reference computations used to cross-check `gt-relation`.
//!
//! Nothing here shares code with the main crate. Vertices are plain
//! `(row, col)` pairs, graphs are arrow lists, and every search is an
//! unpruned loop or depth-first walk.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Cell = (usize, usize);
pub type Edge = (Cell, Cell);

/// A value together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<T> {
    pub value: T,
    pub method: &'static str,
    pub inputs: String,
}

/// Number of integer patterns below a strictly decreasing top row, with
/// `l_{k+1,j} >= l_{k,j} > l_{k+1,j+1}`.
pub fn gt_pattern_count(top: &[i64]) -> OracleResult<u64> {
    fn count(row: &[i64]) -> u64 {
        if row.len() == 1 {
            return 1;
        }
        let mut total = 0;
        let mut below = vec![0i64; row.len() - 1];
        fill(row, &mut below, 0, &mut total);
        total
    }
    fn fill(row: &[i64], below: &mut Vec<i64>, j: usize, total: &mut u64) {
        if j == below.len() {
            *total += count(below);
            return;
        }
        let mut x = row[j + 1] + 1;
        while x <= row[j] {
            below[j] = x;
            fill(row, below, j + 1, total);
            x += 1;
        }
    }
    OracleResult {
        value: count(top),
        method: "interlacing enumeration",
        inputs: format!("{top:?}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotDominant;

/// `∏_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn weyl_dimension(lambda: &[i64]) -> Result<OracleResult<u64>, NotDominant> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(NotDominant);
    }
    let mut value = BigRational::one();
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            let gap = (j - i) as i64;
            value *= BigRational::new((lambda[i] - lambda[j] + gap).into(), gap.into());
        }
    }
    assert!(value.is_integer());
    let value: u64 = value
        .to_integer()
        .try_into()
        .expect("dimension fits in u64");
    Ok(OracleResult {
        value,
        method: "Weyl dimension formula",
        inputs: format!("{lambda:?}"),
    })
}

/// Whether a directed walk of positive length leads from `from` to `to`.
pub fn has_path(edges: &[Edge], from: Cell, to: Cell) -> bool {
    let mut seen = BTreeSet::new();
    let mut stack: Vec<Cell> = edges.iter().filter(|e| e.0 == from).map(|e| e.1).collect();
    while let Some(c) = stack.pop() {
        if c == to {
            return true;
        }
        if seen.insert(c) {
            stack.extend(edges.iter().filter(|e| e.0 == c).map(|e| e.1));
        }
    }
    false
}

/// All pairs `(a, b)` joined by a directed walk of positive length.
pub fn reachability(cells: &[Cell], edges: &[Edge]) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for &a in cells {
        for &b in cells {
            if has_path(edges, a, b) {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Drops every arrow that is implied by a longer walk.
pub fn transitive_reduction(edges: &[Edge]) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for (idx, &(a, b)) in edges.iter().enumerate() {
        let others: Vec<Edge> = edges
            .iter()
            .enumerate()
            .filter(|&(i, e)| i != idx && *e != (a, b))
            .map(|(_, e)| *e)
            .collect();
        if !has_path(&others, a, b) {
            out.insert((a, b));
        }
    }
    out
}

pub fn grid(n: usize) -> Vec<Cell> {
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            cells.push((i, j));
        }
    }
    cells
}

fn undirected_connected(edges: &[Edge], a: Cell, b: Cell) -> bool {
    let mut seen = BTreeSet::from([a]);
    let mut stack = vec![a];
    while let Some(c) = stack.pop() {
        if c == b {
            return true;
        }
        for &(x, y) in edges {
            for (p, q) in [(x, y), (y, x)] {
                if p == c && seen.insert(q) {
                    stack.push(q);
                }
            }
        }
    }
    false
}

/// No walk from a vertex to a same-row vertex on its left.
pub fn is_ordered(n: usize, edges: &[Edge]) -> bool {
    grid(n)
        .into_iter()
        .all(|(k, j)| (1..j).all(|i| !has_path(edges, (k, j), (k, i))))
}

/// Same-row, same-component vertices below the top row are joined by a walk.
pub fn is_noncritical(n: usize, edges: &[Edge]) -> bool {
    for k in 1..n {
        for i in 1..=k {
            for j in 1..=k {
                if i != j
                    && undirected_connected(edges, (k, i), (k, j))
                    && !has_path(edges, (k, i), (k, j))
                    && !has_path(edges, (k, j), (k, i))
                {
                    return false;
                }
            }
        }
    }
    true
}

pub fn has_crosses(edges: &[Edge]) -> bool {
    for &((r1, r), (k1, j)) in edges {
        for &((r2, s), (k2, i)) in edges {
            if r1 == r2 && k1 == k2 && r1 == k1 + 1 && r < s && i < j {
                return true;
            }
        }
    }
    false
}

/// Same-row pairs `i < j` below the top row joined by a walk, such that no
/// `t` strictly between is reached from `i` or reaches `j`.
pub fn adjoining_pairs(n: usize, edges: &[Edge]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 1..n {
        for i in 1..=k {
            for j in i + 1..=k {
                if has_path(edges, (k, i), (k, j))
                    && (i + 1..j).all(|t| {
                        !has_path(edges, (k, i), (k, t)) && !has_path(edges, (k, t), (k, j))
                    })
                {
                    out.push((k, i, j));
                }
            }
        }
    }
    out
}

/// Integer patterns `seed + z` with `|z| <= bound` below the top row that
/// satisfy every arrow and keep integral same-row differences inside
/// components.
pub fn count_realizations(rows: &[Vec<BigRational>], edges: &[Edge], bound: i64) -> usize {
    let n = rows.len();
    let cells: Vec<Cell> = grid(n - 1);
    let entry = |t: &Vec<Vec<BigRational>>, c: Cell| t[n - c.0][c.1 - 1].clone();
    let mut count = 0;
    let width = (2 * bound + 1) as usize;
    let total = width.pow(cells.len() as u32);
    for code in 0..total {
        let mut t = rows.to_vec();
        let mut rest = code;
        for &c in &cells {
            let z = (rest % width) as i64 - bound;
            rest /= width;
            t[n - c.0][c.1 - 1] += BigRational::from_integer(z.into());
        }
        let arrows_hold = edges.iter().all(|&(a, b)| {
            let d = entry(&t, a) - entry(&t, b);
            let strict = a.0 + 1 == b.0;
            d.is_integer()
                && (if strict {
                    d.is_positive()
                } else {
                    !d.is_negative()
                })
        });
        let separated = (1..n).all(|k| {
            (1..=k).all(|i| {
                (i + 1..=k).all(|j| {
                    let d = entry(&t, (k, i)) - entry(&t, (k, j));
                    !d.is_integer() || undirected_connected(edges, (k, i), (k, j))
                })
            })
        });
        if arrows_hold && separated {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_patterns() {
        assert_eq!(gt_pattern_count(&[2, 0, -2]).value, 8);
        assert_eq!(gt_pattern_count(&[0, -1, -2]).value, 1);
        assert_eq!(gt_pattern_count(&[1, -1]).value, 2);
    }

    #[test]
    fn weyl_values() {
        assert_eq!(weyl_dimension(&[2, 1, 0]).unwrap().value, 8);
        assert_eq!(weyl_dimension(&[0, 0, 0]).unwrap().value, 1);
        assert_eq!(weyl_dimension(&[1, 0, 0]).unwrap().value, 3);
        assert_eq!(weyl_dimension(&[0, 1]), Err(NotDominant));
    }

    #[test]
    fn reduction_of_a_triangle() {
        let (a, b, c) = ((3, 1), (3, 2), (3, 3));
        let reduced = transitive_reduction(&[(a, b), (b, c), (a, c)]);
        assert_eq!(reduced, BTreeSet::from([(a, b), (b, c)]));
    }

    #[test]
    fn pattern_counts_match_weyl_for_gl3() {
        for a in 0..4 {
            for b in 0..4 {
                let lambda = [a + b, b, 0];
                let top = [lambda[0], lambda[1] - 1, lambda[2] - 2];
                assert_eq!(
                    gt_pattern_count(&top).value,
                    weyl_dimension(&lambda).unwrap().value
                );
            }
        }
    }
}
