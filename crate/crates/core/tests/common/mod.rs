//! Slow, obviously-correct reference implementations used only by tests.
#![allow(dead_code)]

use theta_core::SimpleGraph;

/// Heap's algorithm over `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

fn walk(g: &SimpleGraph, seq: &[usize]) -> bool {
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Some vertex order is a Hamilton cycle.
pub fn naive_hamiltonian(g: &SimpleGraph, perms: &[Vec<usize>]) -> bool {
    let n = g.n();
    if n < 3 || g.degrees().iter().any(|&d| d < 2) {
        return false;
    }
    perms.iter().any(|p| p[0] == 0 && walk(g, p) && g.has_edge(p[n - 1], 0))
}

/// Some vertex order `u, A, v, B, C` gives three internally disjoint
/// `u`-`v` paths `uAv`, `vBu` and `uCv` covering everything, at most one of
/// them a bare edge.
pub fn naive_spanning_theta(g: &SimpleGraph, perms: &[Vec<usize>]) -> bool {
    let n = g.n();
    if n < 4 || g.degrees().iter().any(|&d| d < 2) {
        return false;
    }
    let rest = n - 2;
    perms.iter().any(|p| {
        let (u, inner) = (p[0], &p[1..]);
        (0..=rest).any(|a| {
            let v = inner[a];
            let after = &inner[a + 1..];
            (0..=after.len()).any(|b| {
                let (pb, pc) = after.split_at(b);
                let pa = &inner[..a];
                let empties = [pa, pb, pc].iter().filter(|s| s.is_empty()).count();
                if empties > 1 {
                    return false;
                }
                [pa, pb, pc].iter().all(|s| {
                    let mut seq = vec![u];
                    seq.extend_from_slice(s);
                    seq.push(v);
                    walk(g, &seq)
                })
            })
        })
    })
}

/// Lexicographically smallest upper-triangle adjacency string over all
/// vertex orders.
pub fn naive_canonical(g: &SimpleGraph, perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| {
            let mut s = Vec::new();
            for j in 1..g.n() {
                for i in 0..j {
                    s.push(g.has_edge(p[i], p[j]));
                }
            }
            s
        })
        .min()
        .unwrap_or_default()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> SimpleGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits.get(k).copied().unwrap_or(false) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    SimpleGraph::new(n, &edges).expect("valid edge list")
}
