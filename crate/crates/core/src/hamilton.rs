//! Hamilton cycles and paths.

use crate::connectivity::{is_biconnected, is_connected};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet, MAX_VERTICES};
use crate::search::find_degree_subgraph;

/// Walks a chosen subgraph of maximum degree 2 from `start`, first stepping to `first`.
pub(crate) fn walk(rows: &[u128], start: usize, first: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (start, first);
    while cur != start {
        out.push(cur);
        let next = VertexSet(rows[cur] & !(1u128 << prev)).first();
        match next {
            Some(nx) => {
                prev = cur;
                cur = nx;
            }
            None => break,
        }
    }
    out
}

/// A Hamilton cycle listed from vertex 0, heading first to its smaller cycle neighbour.
pub fn hamilton_cycle(g: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("Hamilton cycle needs n >= 3, got {n}")));
    }
    if !is_biconnected(g) {
        return Ok(None);
    }
    let Some(rows) = find_degree_subgraph(g.rows(), &vec![2; n], &[0]) else {
        return Ok(None);
    };
    let first = VertexSet(rows[0]).first().expect("degree 2 at vertex 0");
    Ok(Some(walk(&rows, 0, first)))
}

/// A Hamilton path from `x` to `y`.
pub fn hamilton_path_between(g: &SimpleGraph, x: usize, y: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if x == y {
        return Err(Error::Precondition("path ends must differ".into()));
    }
    if !is_connected(g) {
        return Ok(None);
    }
    let mut target = vec![2u8; n];
    target[x] = 1;
    target[y] = 1;
    let Some(rows) = find_degree_subgraph(g.rows(), &target, &[]) else {
        return Ok(None);
    };
    let first = VertexSet(rows[x]).first().expect("degree 1 at x");
    Ok(Some(walk(&rows, x, first)))
}

/// Any Hamilton path, found through a Hamilton cycle of `g` plus a universal vertex.
pub fn hamilton_path(g: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !is_connected(g) {
        return Ok(None);
    }
    if n == 2 {
        return Ok(Some(vec![0, 1]));
    }
    if n == MAX_VERTICES {
        for x in 0..n {
            for y in x + 1..n {
                if let Some(p) = hamilton_path_between(g, x, y)? {
                    return Ok(Some(p));
                }
            }
        }
        return Ok(None);
    }
    let mut h = g.clone();
    let z = h.add_vertex(g.vertices())?;
    let Some(rows) = find_degree_subgraph(h.rows(), &vec![2; n + 1], &[z]) else {
        return Ok(None);
    };
    let first = VertexSet(rows[z]).first().expect("degree 2 at the added vertex");
    let mut cyc = walk(&rows, z, first);
    cyc.remove(0);
    Ok(Some(cyc))
}

/// Whether `cycle` is a Hamilton cycle of `g`.
pub fn is_hamilton_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    cycle.len() == g.n()
        && g.n() >= 3
        && VertexSet::from_iter_vertices(cycle.iter().copied()) == g.vertices()
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

/// Whether `path` is a Hamilton path of `g`.
pub fn is_hamilton_path(g: &SimpleGraph, path: &[usize]) -> bool {
    path.len() == g.n()
        && path.iter().all(|&v| v < g.n())
        && VertexSet::from_iter_vertices(path.iter().copied()) == g.vertices()
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
