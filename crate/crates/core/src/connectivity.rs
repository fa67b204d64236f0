//! Connected components, 2-connectivity, vertex connectivity and 2-cuts.

use crate::error::{Error, Result};
use crate::graph::{Link, SimpleGraph, VertexSet};

/// Vertices reachable from `start` without leaving `within`.
pub fn reach(g: &SimpleGraph, start: usize, within: VertexSet) -> VertexSet {
    let rows = g.rows();
    let mut seen = 1u128 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u128;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= within.0 & !seen;
        seen |= next;
        frontier = next;
    }
    VertexSet(seen)
}

/// Components of `g[within]`, ordered by their smallest vertex.
pub fn components_within(g: &SimpleGraph, within: VertexSet) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(v) = left.first() {
        let c = reach(g, v, left);
        left = left.difference(c);
        out.push(c);
    }
    out
}

pub fn components(g: &SimpleGraph) -> Vec<VertexSet> {
    components_within(g, g.vertices())
}

pub fn is_connected(g: &SimpleGraph) -> bool {
    reach(g, 0, g.vertices()).len() == g.n()
}

/// Whether `g[within]` is connected (the empty set counts as connected).
pub fn is_connected_within(g: &SimpleGraph, within: VertexSet) -> bool {
    match within.first() {
        None => true,
        Some(v) => reach(g, v, within) == within,
    }
}

/// 2-connected: at least three vertices, connected, and no cut vertex.
pub fn is_biconnected(g: &SimpleGraph) -> bool {
    let all = g.vertices();
    g.n() >= 3
        && is_connected(g)
        && (0..g.n()).all(|v| {
            let mut rest = all;
            rest.remove(v);
            is_connected_within(g, rest)
        })
}

pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    let all = g.vertices();
    let base = components(g).len();
    (0..g.n())
        .filter(|&v| {
            let mut rest = all;
            rest.remove(v);
            components_within(g, rest).len() > base
        })
        .collect()
}

/// Unit vertex-capacity max flow from `s` to `t` (non-adjacent), stopping at `limit`.
fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    // Node 2v is v_in, 2v+1 is v_out. Internal arcs v_in -> v_out carry capacity 1.
    // Graph arcs u_out -> v_in are uncapacitated, so only internal arcs can saturate.
    let n = g.n();
    let mut used = vec![false; n]; // internal arc of v carries flow
    let mut flow_to = vec![Vec::<usize>::new(); n]; // u_out -> v_in flow counts, as lists of v
    let mut flow = 0;
    while flow < limit {
        // BFS over residual graph on 2n nodes.
        let mut prev = vec![usize::MAX; 2 * n];
        let src = 2 * s + 1;
        let dst = 2 * t;
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            if a == dst {
                break;
            }
            let v = a / 2;
            let mut push = |b: usize, prev: &mut Vec<usize>| {
                if prev[b] == usize::MAX {
                    prev[b] = a;
                    queue.push_back(b);
                }
            };
            if a % 2 == 1 {
                // v_out: forward to neighbours' in-nodes; backward along used internal arc.
                for w in g.neighbors(v).iter() {
                    push(2 * w, &mut prev);
                }
                if v != s && used[v] {
                    push(2 * v, &mut prev);
                }
            } else {
                // v_in: forward through internal arc if free; backward to u_out carrying flow into v.
                if v != t && (v == s || !used[v]) {
                    push(2 * v + 1, &mut prev);
                }
                for u in 0..n {
                    if flow_to[u].contains(&v) {
                        push(2 * u + 1, &mut prev);
                    }
                }
            }
        }
        if prev[dst] == usize::MAX {
            break;
        }
        let mut b = dst;
        while b != src {
            let a = prev[b];
            let (va, vb) = (a / 2, b / 2);
            match (a % 2, b % 2) {
                (0, 1) if va == vb => used[va] = true,
                (1, 0) if va == vb => used[va] = false,
                (1, 0) => {
                    // forward graph arc va_out -> vb_in, cancelling an opposite flow if present
                    if let Some(p) = flow_to[vb].iter().position(|&w| w == va) {
                        flow_to[vb].swap_remove(p);
                    } else {
                        flow_to[va].push(vb);
                    }
                }
                (0, 1) => {
                    // backward arc: undo flow vb_out -> va_in
                    let p = flow_to[vb].iter().position(|&w| w == va).expect("residual arc");
                    flow_to[vb].swap_remove(p);
                }
                _ => unreachable!("arcs alternate between in- and out-nodes"),
            }
            b = a;
        }
        flow += 1;
    }
    flow
}

/// Vertex connectivity; `n - 1` for complete graphs, 0 for disconnected ones.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.n();
    if !is_connected(g) {
        return 0;
    }
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// A 2-cut `{x, y}` (with `x < y`) and the link spanned by each component of `G - {x, y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCut {
    pub x: usize,
    pub y: usize,
    pub components: Vec<VertexSet>,
    pub links: Vec<Link>,
}

/// Every 2-cut of `g` in lexicographic order of the pair.
pub fn list_two_cuts(g: &SimpleGraph) -> Result<Vec<TwoCut>> {
    let n = g.n();
    if n < 4 {
        return Ok(Vec::new());
    }
    let all = g.vertices();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut rest = all;
            rest.remove(x);
            rest.remove(y);
            let comps = components_within(g, rest);
            if comps.len() < 2 {
                continue;
            }
            let links = comps
                .iter()
                .map(|c| {
                    let mut keep = *c;
                    keep.insert(x);
                    keep.insert(y);
                    let (h, map) = g.induced_subgraph(keep)?;
                    let pos = |v| map.iter().position(|&w| w == v).expect("end kept");
                    Link::new(h, pos(x), pos(y))
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(TwoCut { x, y, components: comps, links });
        }
    }
    Ok(out)
}

/// All vertex cuts of size exactly `k` (brute force; for small graphs).
pub fn vertex_cuts_of_size(g: &SimpleGraph, k: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > 24 {
        return Err(Error::TooLarge(format!("cut enumeration supports n <= 24, got {n}")));
    }
    let mut out = Vec::new();
    let mut comb: Vec<usize> = (0..k).collect();
    if k == 0 || k + 2 > n {
        return Ok(out);
    }
    loop {
        let s = VertexSet::from_iter_vertices(comb.iter().copied());
        if !is_connected_within(g, g.vertices().difference(s)) {
            out.push(s);
        }
        // next combination
        let mut i = k;
        while i > 0 && comb[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        comb[i - 1] += 1;
        for j in i..k {
            comb[j] = comb[j - 1] + 1;
        }
    }
    Ok(out)
}
