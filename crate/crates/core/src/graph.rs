use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; adjacency rows are `u128` bitsets.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex ids below [`MAX_VERTICES`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    pub fn from_iter_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn contains(self, v: usize) -> bool {
        v < 128 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_iter_vertices(iter)
    }
}

/// Ascending iterator over the set bits of a `u128`.
#[derive(Clone)]
pub struct Bits(pub u128);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<u128>,
}

impl SimpleGraph {
    /// Builds a graph, rejecting out-of-range ids, self-loops and duplicate edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(SimpleGraph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SimpleGraph::empty(n)?;
        for v in 0..n {
            g.rows[v] = VertexSet::full(n).0 & !(1u128 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::VertexCount(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &edges)
    }

    pub(crate) fn from_rows(rows: Vec<u128>) -> Self {
        SimpleGraph { n: rows.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Adds `uv` if absent. Callers guarantee `u != v` and both ids are in range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1u128 << v;
        self.rows[v] |= 1u128 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1u128 << v);
        self.rows[v] &= !(1u128 << u);
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = self.rows[u] & !((2u128 << u).wrapping_sub(1));
            Bits(above).map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = VertexSet::full(self.n).0;
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & full & !(1u128 << v))
            .collect();
        SimpleGraph::from_rows(rows)
    }

    /// Subgraph induced by `keep`, relabelled in ascending order of the kept ids.
    /// Returns the graph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(SimpleGraph, Vec<usize>)> {
        let keep = keep.intersection(self.vertices());
        let map: Vec<usize> = keep.iter().collect();
        if map.is_empty() {
            return Err(Error::VertexCount(0));
        }
        Ok((self.induced_by_order(&map), map))
    }

    /// Subgraph induced by `order`, where new vertex `i` is old vertex `order[i]`.
    pub fn induced_by_order(&self, order: &[usize]) -> SimpleGraph {
        let rows = order
            .iter()
            .map(|&old| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(old, w))
                    .fold(0u128, |acc, (i, _)| acc | 1u128 << i)
            })
            .collect();
        SimpleGraph::from_rows(rows)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut rows = vec![0u128; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1u128 << perm[v];
            rows[perm[v]] |= 1u128 << perm[u];
        }
        SimpleGraph::from_rows(rows)
    }

    /// Disjoint union followed by nothing else; the second graph is shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(SimpleGraph::from_rows(rows))
    }

    /// Appends a vertex adjacent to `nbrs` and returns its id.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::VertexCount(self.n + 1));
        }
        let v = self.n;
        self.n += 1;
        self.rows.push(0);
        for u in nbrs.iter() {
            self.add_edge(u, v);
        }
        Ok(v)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// A graph with two distinguished, distinct end-vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub graph: SimpleGraph,
    pub x: usize,
    pub y: usize,
}

impl Link {
    pub fn new(graph: SimpleGraph, x: usize, y: usize) -> Result<Self> {
        let n = graph.n();
        if x >= n || y >= n {
            return Err(Error::InvalidLink(format!("end-vertex out of range ({x}, {y}) for n={n}")));
        }
        if x == y {
            return Err(Error::InvalidLink("end-vertices coincide".into()));
        }
        Ok(Link { graph, x, y })
    }

    /// Inner vertices: everything except the two ends.
    pub fn inner(&self) -> VertexSet {
        let mut s = self.graph.vertices();
        s.remove(self.x);
        s.remove(self.y);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(SimpleGraph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(SimpleGraph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(SimpleGraph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(SimpleGraph::new(0, &[]), Err(Error::VertexCount(0)));
        assert_eq!(SimpleGraph::new(129, &[]), Err(Error::VertexCount(129)));
        assert!(SimpleGraph::new(128, &[(0, 127)]).is_ok());
    }

    #[test]
    fn edges_sorted_and_counted() {
        let g = SimpleGraph::new(4, &[(2, 3), (0, 1), (3, 0)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.complement().edge_count(), 3);
    }

    #[test]
    fn induced_keeps_order() {
        let g = SimpleGraph::cycle(5).unwrap();
        let (h, map) = g.induced_subgraph(VertexSet::from_iter_vertices([0, 1, 2])).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn full_set_edges() {
        let g = SimpleGraph::complete(128).unwrap();
        assert_eq!(g.edge_count(), 128 * 127 / 2);
        assert_eq!(g.degree(127), 127);
    }
}
