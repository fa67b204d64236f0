use serde::Serialize;

use crate::connectivity::{is_biconnected, is_connected, is_connected_within, vertex_connectivity};
use crate::graph::SimpleGraph;

/// Size of a maximum clique (branch and bound with a greedy colouring bound).
pub fn clique_number(g: &SimpleGraph) -> usize {
    let rows = g.rows();
    let mut best = 0;
    expand(rows, 0, g.vertices().0, &mut best);
    best
}

/// Independence number, computed as the clique number of the complement.
pub fn independence_number(g: &SimpleGraph) -> usize {
    clique_number(&g.complement())
}

fn expand(rows: &[u128], size: usize, cand: u128, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // Greedy colouring of the candidates gives an order with upper bounds.
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1u128 << v) & !rows[v];
            uncolored &= !(1u128 << v);
            order.push((v, color));
        }
    }
    let mut cand = cand;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand(rows, size + 1, cand & rows[v], best);
        cand &= !(1u128 << v);
    }
}

/// Whether the neighbourhood of every vertex induces a connected subgraph.
pub fn is_locally_connected(g: &SimpleGraph) -> bool {
    (0..g.n()).all(|v| is_connected_within(g, g.neighbors(v)))
}

/// Connected and 2-regular.
pub fn is_cycle(g: &SimpleGraph) -> bool {
    g.n() >= 3 && (0..g.n()).all(|v| g.degree(v) == 2) && is_connected(g)
}

pub fn is_complete(g: &SimpleGraph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

pub fn min_degree(g: &SimpleGraph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Structural summary used by the classical-theorem checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralMetrics {
    pub n: usize,
    pub edges: usize,
    pub connectivity: usize,
    pub independence: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub biconnected: bool,
    pub locally_connected: bool,
    pub cycle: bool,
    pub complete: bool,
}

pub fn structural_metrics(g: &SimpleGraph) -> StructuralMetrics {
    StructuralMetrics {
        n: g.n(),
        edges: g.edge_count(),
        connectivity: vertex_connectivity(g),
        independence: independence_number(g),
        min_degree: min_degree(g),
        connected: is_connected(g),
        biconnected: is_biconnected(g),
        locally_connected: is_locally_connected(g),
        cycle: is_cycle(g),
        complete: is_complete(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_of_small_graphs() {
        assert_eq!(independence_number(&SimpleGraph::cycle(5).unwrap()), 2);
        assert_eq!(independence_number(&SimpleGraph::complete(6).unwrap()), 1);
        assert_eq!(independence_number(&SimpleGraph::empty(7).unwrap()), 7);
        assert_eq!(independence_number(&SimpleGraph::path(5).unwrap()), 3);
    }

    #[test]
    fn local_connectivity() {
        let star = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_locally_connected(&star));
        assert!(is_locally_connected(&SimpleGraph::complete(4).unwrap()));
        assert!(!is_locally_connected(&SimpleGraph::cycle(4).unwrap()));
    }

    #[test]
    fn metrics_summary() {
        let m = structural_metrics(&SimpleGraph::cycle(5).unwrap());
        assert!(m.cycle && m.biconnected && !m.complete);
        assert_eq!((m.connectivity, m.independence, m.min_degree), (2, 2, 2));
    }
}
