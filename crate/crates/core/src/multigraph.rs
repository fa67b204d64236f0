//! Loopless and semi-loopless multigraphs.
//!
//! Text format: header `n m`, or `n m e0=<index>` for a graph with a labelled
//! edge, followed by `m` lines `u v`. A labelled edge may be a loop (`u u`).

use std::fmt::Write as _;

use serde::Serialize;

use crate::codec::{parse_pair, parse_usize};
use crate::error::{Error, Result};

/// Largest order accepted by the brute-force routines (edge connectivity, isomorphism).
pub const SMALL_MULTIGRAPH_MAX_N: usize = 16;

/// Shared read access to a multigraph given as a list of edges.
pub trait EdgeMultiset {
    fn vertex_count(&self) -> usize;
    fn edge_list(&self) -> &[(usize, usize)];

    fn edge_count(&self) -> usize {
        self.edge_list().len()
    }

    /// Degrees, where a loop contributes 2.
    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count()];
        for &(u, v) in self.edge_list() {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    fn odd_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, d)| *d % 2 == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Multiplicity matrix; loops are counted on the diagonal.
    fn multiplicities(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for &(u, v) in self.edge_list() {
            m[u][v] += 1;
            if u != v {
                m[v][u] += 1;
            }
        }
        m
    }

    fn is_connected(&self) -> bool {
        raw_components(self.vertex_count(), self.edge_list()) == 1
    }

    /// Minimum number of edges whose removal disconnects the graph.
    fn edge_connectivity(&self) -> Result<usize> {
        edge_connectivity_raw(self.vertex_count(), self.edge_list())
    }

    fn is_k_edge_connected(&self, k: usize) -> Result<bool> {
        Ok(self.edge_connectivity()? >= k)
    }

    /// Euler trail (closed when possible), or `None` if none exists.
    fn euler_trail(&self) -> Option<EulerTrail> {
        euler_trail_raw(self.vertex_count(), self.edge_list())
    }

    fn has_euler_tour(&self) -> bool {
        self.is_connected() && self.odd_vertices().is_empty()
    }

    fn has_euler_trail(&self) -> bool {
        self.is_connected() && self.odd_vertices().len() <= 2
    }
}

fn check_edges(n: usize, edges: &[(usize, usize)], allow_loop: Option<usize>) -> Result<()> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut touched = vec![false; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            touched[w] = true;
        }
        if u == v && allow_loop != Some(i) {
            return Err(Error::SelfLoop(u));
        }
    }
    match touched.iter().position(|t| !t) {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Loopless multigraph without isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_edges(n, &edges, None)?;
        Ok(MultiGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Removes the listed edges and then any isolated vertices.
    /// Returns `None` when no edge is left.
    pub fn delete_edges(&self, remove: &[usize]) -> Option<(MultiGraph, Vec<usize>)> {
        let (n, edges, map) = delete_raw(self.n, &self.edges, remove);
        (n > 0).then_some((MultiGraph { n, edges }, map))
    }

    pub fn to_text(&self) -> String {
        write_text(self.n, &self.edges, None)
    }
}

impl EdgeMultiset for MultiGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Multigraph with a labelled edge `e0`; only `e0` may be a loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiLooplessMultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    e0: usize,
}

impl SemiLooplessMultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, e0: usize) -> Result<Self> {
        if e0 >= edges.len() {
            return Err(Error::Precondition(format!("labelled edge {e0} out of range")));
        }
        if edges.len() < 2 {
            return Err(Error::Precondition("a semi-loopless multigraph needs at least two edges".into()));
        }
        check_edges(n, &edges, Some(e0))?;
        Ok(SemiLooplessMultiGraph { n, edges, e0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn e0(&self) -> usize {
        self.e0
    }

    pub fn e0_ends(&self) -> (usize, usize) {
        self.edges[self.e0]
    }

    /// Removes the listed edges (never `e0`) and any isolated vertices.
    /// Returns the remaining vertex count, edges, new index of `e0`, and old-id map.
    pub fn delete_edges(&self, remove: &[usize]) -> Result<(usize, Vec<(usize, usize)>, usize, Vec<usize>)> {
        if remove.contains(&self.e0) {
            return Err(Error::Precondition("cannot delete the labelled edge".into()));
        }
        let (n, edges, map) = delete_raw(self.n, &self.edges, remove);
        let e0 = self.e0 - remove.iter().filter(|&&i| i < self.e0).count();
        Ok((n, edges, e0, map))
    }

    pub fn to_text(&self) -> String {
        write_text(self.n, &self.edges, Some(self.e0))
    }
}

impl EdgeMultiset for SemiLooplessMultiGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A parsed multigraph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMultiGraph {
    Loopless(MultiGraph),
    SemiLoopless(SemiLooplessMultiGraph),
}

fn write_text(n: usize, edges: &[(usize, usize)], e0: Option<usize>) -> String {
    let mut out = String::new();
    match e0 {
        Some(e) => writeln!(out, "{n} {} e0={e}", edges.len()),
        None => writeln!(out, "{n} {}", edges.len()),
    }
    .expect("writing to a String");
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_multigraph(text: &str) -> Result<AnyMultiGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let (n, m, e0) = match toks.as_slice() {
        [n, m] => (parse_usize(n, hl)?, parse_usize(m, hl)?, None),
        [n, m, e] => {
            let idx = e.strip_prefix("e0=").ok_or(Error::Parse {
                line: hl,
                message: format!("expected e0=<index>, got {e:?}"),
            })?;
            (parse_usize(n, hl)?, parse_usize(m, hl)?, Some(parse_usize(idx, hl)?))
        }
        _ => {
            return Err(Error::Parse {
                line: hl,
                message: "header must be `n m` or `n m e0=<index>`".into(),
            })
        }
    };
    let edges = lines
        .by_ref()
        .take(m)
        .map(|(ln, l)| parse_pair(l, ln))
        .collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: hl,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            message: "trailing content".into(),
        });
    }
    Ok(match e0 {
        None => AnyMultiGraph::Loopless(MultiGraph::new(n, edges)?),
        Some(e) => AnyMultiGraph::SemiLoopless(SemiLooplessMultiGraph::new(n, edges, e)?),
    })
}

pub(crate) fn delete_raw(n: usize, edges: &[(usize, usize)], remove: &[usize]) -> (usize, Vec<(usize, usize)>, Vec<usize>) {
    let kept: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !remove.contains(i))
        .map(|(_, &e)| e)
        .collect();
    let mut used = vec![false; n];
    for &(u, v) in &kept {
        used[u] = true;
        used[v] = true;
    }
    let map: Vec<usize> = (0..n).filter(|&v| used[v]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in map.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = kept.iter().map(|&(u, v)| (new_id[u], new_id[v])).collect();
    (map.len(), edges, map)
}

/// Number of connected components among vertices `0..n`.
pub(crate) fn raw_components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut comps = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps
}

/// Brute-force edge connectivity over all bipartitions (n <= 16). A single
/// vertex is treated as arbitrarily well connected.
pub(crate) fn edge_connectivity_raw(n: usize, edges: &[(usize, usize)]) -> Result<usize> {
    if n > SMALL_MULTIGRAPH_MAX_N {
        return Err(Error::TooLarge(format!("edge connectivity supports n <= 16, got {n}")));
    }
    if n < 2 {
        return Ok(usize::MAX);
    }
    let mut best = usize::MAX;
    // S always contains vertex 0; iterate over the other n-1 vertices.
    for mask in 0u32..(1 << (n - 1)) - 1 {
        let side = (mask << 1) | 1;
        let cut = edges
            .iter()
            .filter(|&&(u, v)| (side >> u & 1) != (side >> v & 1))
            .count();
        best = best.min(cut);
    }
    Ok(best)
}

/// An Euler trail as alternating vertex and edge-index sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerTrail {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub closed: bool,
}

pub(crate) fn euler_trail_raw(n: usize, edges: &[(usize, usize)]) -> Option<EulerTrail> {
    let mut deg = vec![0usize; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let active: Vec<usize> = (0..n).filter(|&v| deg[v] > 0).collect();
    let odd: Vec<usize> = (0..n).filter(|&v| deg[v] % 2 == 1).collect();
    if odd.len() > 2 || active.is_empty() {
        return None;
    }
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        inc[u].push((i, v));
        inc[v].push((i, u));
    }
    for list in &mut inc {
        list.sort_unstable();
        list.reverse(); // pop from the back yields the smallest edge index first
    }
    let start = odd.first().copied().unwrap_or(active[0]);
    let mut used = vec![false; edges.len()];
    // Hierholzer: stack of (vertex, edge used to reach it).
    let mut stack = vec![(start, usize::MAX)];
    let mut verts = Vec::new();
    let mut eds = Vec::new();
    while let Some(&(v, via)) = stack.last() {
        while inc[v].last().is_some_and(|&(e, _)| used[e]) {
            inc[v].pop();
        }
        match inc[v].pop() {
            Some((e, w)) => {
                used[e] = true;
                stack.push((w, e));
            }
            None => {
                stack.pop();
                verts.push(v);
                if via != usize::MAX {
                    eds.push(via);
                }
            }
        }
    }
    if eds.len() != edges.len() {
        return None; // disconnected
    }
    verts.reverse();
    eds.reverse();
    Some(EulerTrail {
        closed: odd.is_empty(),
        vertices: verts,
        edges: eds,
    })
}

/// Vertex bijection `f` with `mult(f(u), f(v)) = mult(u, v)`, if one exists.
/// When `labelled` is given as `(ends_a, ends_b)`, the map must send one
/// labelled edge's end pair onto the other's.
fn find_isomorphism(
    a: &dyn EdgeMultiset,
    b: &dyn EdgeMultiset,
    labelled: Option<((usize, usize), (usize, usize))>,
) -> Result<Option<Vec<usize>>> {
    let n = a.vertex_count();
    for m in [n, b.vertex_count()] {
        if m > 12 {
            return Err(Error::TooLarge(format!("isomorphism test supports n <= 12, got {m}")));
        }
    }
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (ma, mb) = (a.multiplicities(), b.multiplicities());
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    if let Some(((u0, v0), (u1, v1))) = labelled {
        if (u0 == v0) != (u1 == v1) {
            return Ok(None);
        }
    }
    let role = |ends: Option<(usize, usize)>, v: usize| ends.is_some_and(|(x, y)| v == x || v == y);
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    fn go(
        i: usize,
        n: usize,
        ma: &[Vec<usize>],
        mb: &[Vec<usize>],
        da: &[usize],
        db: &[usize],
        ok_role: &dyn Fn(usize, usize) -> bool,
        map: &mut Vec<usize>,
        taken: &mut Vec<bool>,
    ) -> bool {
        if i == n {
            return true;
        }
        for t in 0..n {
            if taken[t] || da[i] != db[t] || ma[i][i] != mb[t][t] || !ok_role(i, t) {
                continue;
            }
            if (0..i).all(|j| ma[i][j] == mb[t][map[j]]) {
                map[i] = t;
                taken[t] = true;
                if go(i + 1, n, ma, mb, da, db, ok_role, map, taken) {
                    return true;
                }
                taken[t] = false;
            }
        }
        map[i] = usize::MAX;
        false
    }
    let ok_role = |i: usize, t: usize| match labelled {
        None => true,
        Some((ea, eb)) => role(Some(ea), i) == role(Some(eb), t),
    };
    let found = go(0, n, &ma, &mb, &da, &db, &ok_role, &mut map, &mut taken);
    Ok(found.then_some(map))
}

/// Isomorphism of loopless multigraphs (n <= 12).
pub fn multigraph_isomorphic(a: &MultiGraph, b: &MultiGraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism(a, b, None)
}

/// Isomorphism of semi-loopless multigraphs mapping `e0` to `e0` (n <= 12).
pub fn semi_isomorphic(a: &SemiLooplessMultiGraph, b: &SemiLooplessMultiGraph) -> Result<Option<Vec<usize>>> {
    find_isomorphism(a, b, Some((a.e0_ends(), b.e0_ends())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_isolated() {
        assert_eq!(MultiGraph::new(2, vec![(0, 0), (0, 1)]), Err(Error::SelfLoop(0)));
        assert_eq!(MultiGraph::new(3, vec![(0, 1)]), Err(Error::IsolatedVertex(2)));
        assert!(SemiLooplessMultiGraph::new(2, vec![(0, 1), (1, 1)], 1).is_ok());
        assert!(SemiLooplessMultiGraph::new(2, vec![(0, 1), (1, 1)], 0).is_err());
        assert!(SemiLooplessMultiGraph::new(2, vec![(0, 1)], 0).is_err());
    }

    #[test]
    fn k4_properties() {
        let g = k4();
        assert_eq!(g.edge_connectivity().unwrap(), 3);
        assert_eq!(g.odd_vertices().len(), 4);
        assert!(g.euler_trail().is_none());
    }

    #[test]
    fn euler_tour_on_dipole_with_loop() {
        let f = SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (1, 1)], 2).unwrap();
        let t = f.euler_trail().unwrap();
        assert!(t.closed);
        assert_eq!(t.edges.len(), 3);
        assert_eq!(t.vertices.first(), t.vertices.last());
    }

    #[test]
    fn open_trail_starts_at_odd_vertex() {
        let p = MultiGraph::new(3, vec![(1, 0), (1, 2)]).unwrap();
        let t = p.euler_trail().unwrap();
        assert!(!t.closed);
        assert_eq!(t.vertices, vec![0, 1, 2]);
        assert_eq!(t.edges, vec![0, 1]);
    }

    #[test]
    fn isomorphism_respects_label() {
        let a = SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)], 0).unwrap();
        let b = SemiLooplessMultiGraph::new(2, vec![(1, 0), (0, 1), (0, 1)], 2).unwrap();
        assert!(semi_isomorphic(&a, &b).unwrap().is_some());
        let l1 = SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1), (1, 1)], 3).unwrap();
        let l2 = SemiLooplessMultiGraph::new(2, vec![(0, 0), (0, 1), (0, 1), (0, 1)], 0).unwrap();
        assert_eq!(semi_isomorphic(&l1, &l2).unwrap(), Some(vec![1, 0]));
        assert!(multigraph_isomorphic(&k4(), &k4()).unwrap().is_some());
    }

    #[test]
    fn text_round_trip() {
        let f = SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (1, 1)], 2).unwrap();
        assert_eq!(parse_multigraph(&f.to_text()).unwrap(), AnyMultiGraph::SemiLoopless(f));
        assert!(parse_multigraph("2 2\n0 1\n").is_err());
    }

    #[test]
    fn deletion_drops_isolated() {
        let (g, map) = k4().delete_edges(&[0, 1, 2]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(map, vec![1, 2, 3]);
    }
}
