//! Aztec rectangles with vertices removed, and exact perfect-matching counts.
//!
//! Vertex rows are numbered `1..=2M+1` from the top. Odd rows hold `N`
//! vertices, even rows `N+1`. Vertex `(r, k)` sits in board column `2k` when
//! `r` is odd and `2k-1` when `r` is even; edges join diagonal neighbours.

mod count;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::arith::IndexSet;
use crate::error::{invalid, Error, Result};

pub use count::{count_matchings, count_matchings_lowest_first, count_matchings_profile_dp, nth_matching};

pub type Vertex = (usize, usize);

/// The `M x N` Aztec rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AztecRectangle {
    pub rows_param: usize,
    pub cols_param: usize,
}

impl AztecRectangle {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return invalid("M and N must be positive");
        }
        Ok(AztecRectangle { rows_param: m, cols_param: n })
    }

    pub fn vertex_rows(&self) -> usize {
        2 * self.rows_param + 1
    }

    pub fn row_length(&self, r: usize) -> usize {
        if r % 2 == 1 {
            self.cols_param
        } else {
            self.cols_param + 1
        }
    }

    pub fn vertex_count(&self) -> usize {
        (self.rows_param + 1) * self.cols_param + self.rows_param * (self.cols_param + 1)
    }

    pub fn edge_count(&self) -> usize {
        4 * self.rows_param * self.cols_param
    }

    pub fn contains(&self, (r, k): Vertex) -> bool {
        (1..=self.vertex_rows()).contains(&r) && (1..=self.row_length(r)).contains(&k)
    }

    /// All vertices, row by row, left to right.
    pub fn vertices(&self) -> Vec<Vertex> {
        (1..=self.vertex_rows())
            .flat_map(|r| (1..=self.row_length(r)).map(move |k| (r, k)))
            .collect()
    }

    /// Neighbours in row `r + 1`.
    pub fn down_neighbours(&self, (r, k): Vertex) -> Vec<Vertex> {
        if r >= self.vertex_rows() {
            return Vec::new();
        }
        let cand = if r % 2 == 1 { [k as i64, k as i64 + 1] } else { [k as i64 - 1, k as i64] };
        cand.into_iter()
            .filter(|&j| j >= 1 && j as usize <= self.row_length(r + 1))
            .map(|j| (r + 1, j as usize))
            .collect()
    }

    /// Neighbours in row `r - 1`.
    pub fn up_neighbours(&self, (r, k): Vertex) -> Vec<Vertex> {
        if r <= 1 {
            return Vec::new();
        }
        let cand = if r % 2 == 1 { [k as i64, k as i64 + 1] } else { [k as i64 - 1, k as i64] };
        cand.into_iter()
            .filter(|&j| j >= 1 && j as usize <= self.row_length(r - 1))
            .map(|j| (r - 1, j as usize))
            .collect()
    }

    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.up_neighbours(v);
        out.extend(self.down_neighbours(v));
        out
    }

    /// Board column of a vertex.
    pub fn column(&self, (r, k): Vertex) -> usize {
        if r % 2 == 1 {
            2 * k
        } else {
            2 * k - 1
        }
    }
}

/// `M + 1`.
pub fn central_row(m: usize) -> usize {
    m + 1
}

/// `M + 1 + d`, the row `d` steps below the central row.
pub fn row_below(m: usize, d: usize) -> Result<usize> {
    if d > m {
        return invalid(format!("d = {d} exceeds M = {m}"));
    }
    Ok(m + 1 + d)
}

/// `M + 1 - d`, the mirror image of [`row_below`].
pub fn row_above(m: usize, d: usize) -> Result<usize> {
    if d > m {
        return invalid(format!("d = {d} exceeds M = {m}"));
    }
    Ok(m + 1 - d)
}

/// An Aztec rectangle minus a set of vertices, with adjacency over the
/// survivors (indexed in row-major order).
#[derive(Debug, Clone)]
pub struct HoleyAztecGraph {
    base: AztecRectangle,
    removed: BTreeSet<Vertex>,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct GraphJson {
    #[serde(rename = "M")]
    m: usize,
    #[serde(rename = "N")]
    n: usize,
    removed: Vec<[usize; 2]>,
    vertices: Vec<[usize; 2]>,
    edges: Vec<[[usize; 2]; 2]>,
}

impl HoleyAztecGraph {
    /// Removes an arbitrary vertex set. Fails on out-of-range vertices and
    /// on an odd number of survivors.
    pub fn with_removed(m: usize, n: usize, removed: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let g = Self::with_removed_unchecked(m, n, removed)?;
        if g.vertices.len() % 2 == 1 {
            return Err(Error::OddVertexCount(g.vertices.len()));
        }
        Ok(g)
    }

    /// As [`HoleyAztecGraph::with_removed`] but accepts an odd survivor count.
    pub fn with_removed_unchecked(m: usize, n: usize, removed: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let base = AztecRectangle::new(m, n)?;
        let removed: BTreeSet<Vertex> = removed.into_iter().collect();
        if let Some(v) = removed.iter().find(|v| !base.contains(**v)) {
            return invalid(format!("vertex {v:?} lies outside the {m}x{n} rectangle"));
        }
        let vertices: Vec<Vertex> = base.vertices().into_iter().filter(|v| !removed.contains(v)).collect();
        let index: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut a: Vec<usize> = base.neighbours(v).into_iter().filter_map(|w| index.get(&w).copied()).collect();
                a.sort_unstable();
                a
            })
            .collect();
        Ok(HoleyAztecGraph { base, removed, vertices, index, adjacency })
    }

    pub fn base(&self) -> AztecRectangle {
        self.base
    }

    pub fn removed(&self) -> &BTreeSet<Vertex> {
        &self.removed
    }

    pub fn is_removed(&self, v: Vertex) -> bool {
        self.removed.contains(&v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (i, nb) in self.adjacency.iter().enumerate() {
            for &j in nb {
                if i < j {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    /// Adjacency JSON with vertices written as `[row, index]`.
    pub fn to_json(&self) -> serde_json::Value {
        let pair = |(r, k): Vertex| [r, k];
        let g = GraphJson {
            m: self.base.rows_param,
            n: self.base.cols_param,
            removed: self.removed.iter().map(|&v| pair(v)).collect(),
            vertices: self.vertices.iter().map(|&v| pair(v)).collect(),
            edges: self.edges().into_iter().map(|(a, b)| [pair(a), pair(b)]).collect(),
        };
        serde_json::to_value(g).expect("plain data")
    }
}

/// Removes every vertex of `row` except the `kept` ones.
pub fn build_holey_graph(m: usize, n: usize, row: usize, kept: &IndexSet) -> Result<HoleyAztecGraph> {
    let base = AztecRectangle::new(m, n)?;
    if !(1..=base.vertex_rows()).contains(&row) {
        return invalid(format!("row {row} outside 1..={}", base.vertex_rows()));
    }
    let len = base.row_length(row);
    if kept.largest().is_some_and(|k| k > len) {
        return invalid(format!("kept positions {kept} exceed row length {len}"));
    }
    HoleyAztecGraph::with_removed(m, n, (1..=len).filter(|k| !kept.contains(*k)).map(|k| (row, k)))
}

/// Complement of `removed` inside a row of length `len`.
pub fn kept_from_removed(len: usize, removed: &IndexSet) -> Result<IndexSet> {
    if removed.largest().is_some_and(|k| k > len) {
        return invalid(format!("removed positions {removed} exceed row length {len}"));
    }
    IndexSet::new((1..=len).filter(|k| !removed.contains(*k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census() {
        for m in 1..=8 {
            for n in 1..=8 {
                let g = HoleyAztecGraph::with_removed_unchecked(m, n, []).unwrap();
                let a = g.base();
                assert_eq!(g.vertices().len(), a.vertex_count());
                assert_eq!(g.edges().len(), a.edge_count());
                for (i, nb) in g.adjacency().iter().enumerate() {
                    assert!(nb.len() <= 4);
                    let (r, k) = g.vertices()[i];
                    let interior = r > 1 && r < a.vertex_rows() && k > 1 && k < a.row_length(r);
                    if interior {
                        assert_eq!(nb.len(), 4, "{:?}", (r, k));
                    }
                }
            }
        }
    }

    #[test]
    fn rows() {
        assert_eq!(central_row(4), 5);
        assert_eq!(central_row(5), 6);
        let a = AztecRectangle::new(3, 4).unwrap();
        assert_eq!(a.row_length(central_row(3)), 5);
        assert_eq!(row_below(5, 0).unwrap(), 6);
        assert_eq!(row_below(5, 1).unwrap(), 7);
        assert_eq!(AztecRectangle::new(5, 7).unwrap().row_length(7), 7);
        assert_eq!(row_below(6, 1).unwrap(), 8);
        assert_eq!(AztecRectangle::new(6, 3).unwrap().row_length(8), 4);
        assert!(row_below(2, 3).is_err());
        assert_eq!(row_above(5, 2).unwrap(), 4);
    }

    #[test]
    fn hole_validation() {
        let kept = IndexSet::new(vec![1, 3, 4]).unwrap();
        let g = build_holey_graph(3, 4, 5, &kept).unwrap();
        assert_eq!(g.removed().iter().copied().collect::<Vec<_>>(), vec![(5, 2)]);
        assert!(build_holey_graph(3, 4, 8, &kept).is_err());
        assert!(build_holey_graph(3, 4, 4, &IndexSet::new(vec![6]).unwrap()).is_err());
        assert_eq!(
            build_holey_graph(2, 2, 3, &IndexSet::new(vec![1]).unwrap()).unwrap_err(),
            Error::OddVertexCount(11)
        );
    }
}
