//! Exact search for a spanning subgraph with prescribed degrees and
//! acyclicity side-constraints.
//!
//! Every vertex gets a target degree. For each anchor vertex `a`, the chosen
//! subgraph minus `a` must be a forest; with no anchors the chosen subgraph
//! itself must be a forest. These two ingredients describe Hamilton cycles
//! (targets 2, one anchor), Hamilton paths (targets 1 at the ends, no anchor)
//! and spanning theta graphs (targets 3 at the branch vertices, anchors at both).
//!
//! The search branches on edges and propagates degree bounds, forbids edges
//! that would close a cycle missing an anchor, and prunes on connectivity and
//! on the parity of residual degree demand within each component of the
//! undecided edges.

use crate::graph::Bits;

#[derive(Clone)]
struct Forest {
    skip: Option<usize>,
    parent: Vec<u8>,
}

impl Forest {
    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let p = self.parent[v] as usize;
            self.parent[v] = self.parent[p];
            v = p;
        }
        v
    }

    fn applies(&self, u: usize, v: usize) -> bool {
        self.skip != Some(u) && self.skip != Some(v)
    }
}

#[derive(Clone)]
struct State {
    chosen: Vec<u128>,
    excluded: Vec<u128>,
    deg: Vec<u8>,
    forests: Vec<Forest>,
}

struct Problem<'a> {
    adj: &'a [u128],
    target: &'a [u8],
}

impl State {
    fn candidates(&self, p: &Problem, v: usize) -> u128 {
        p.adj[v] & !self.chosen[v] & !self.excluded[v]
    }

    fn include(&mut self, p: &Problem, u: usize, v: usize) -> bool {
        self.chosen[u] |= 1u128 << v;
        self.chosen[v] |= 1u128 << u;
        self.deg[u] += 1;
        self.deg[v] += 1;
        if self.deg[u] > p.target[u] || self.deg[v] > p.target[v] {
            return false;
        }
        for f in &mut self.forests {
            if f.applies(u, v) {
                let (a, b) = (f.find(u), f.find(v));
                if a == b {
                    return false;
                }
                f.parent[a] = b as u8;
            }
        }
        true
    }

    fn exclude(&mut self, u: usize, v: usize) {
        self.excluded[u] |= 1u128 << v;
        self.excluded[v] |= 1u128 << u;
    }

    /// Excludes undecided edges that would close a forbidden cycle.
    fn exclude_cycle_edges(&mut self, p: &Problem) -> bool {
        let n = p.adj.len();
        let mut changed = false;
        for u in 0..n {
            let above = self.candidates(p, u) & !((2u128 << u).wrapping_sub(1));
            for v in Bits(above) {
                let closes = self.forests.iter_mut().any(|f| f.applies(u, v) && f.find(u) == f.find(v));
                if closes {
                    self.exclude(u, v);
                    changed = true;
                }
            }
        }
        changed
    }

    fn propagate(&mut self, p: &Problem) -> bool {
        let n = p.adj.len();
        loop {
            let mut changed = false;
            for w in 0..n {
                let need = p.target[w] as i32 - self.deg[w] as i32;
                if need < 0 {
                    return false;
                }
                let cand = self.candidates(p, w);
                let c = cand.count_ones() as i32;
                if c < need {
                    return false;
                }
                if c == 0 {
                    continue;
                }
                if need == 0 {
                    for x in Bits(cand) {
                        self.exclude(w, x);
                    }
                    changed = true;
                } else if c == need {
                    for x in Bits(cand) {
                        if !self.include(p, w, x) {
                            return false;
                        }
                    }
                    changed = true;
                }
            }
            if !changed && !self.exclude_cycle_edges(p) {
                return true;
            }
        }
    }

    /// Connectivity of chosen plus undecided edges, and even residual demand
    /// in every component of the undecided edges.
    fn feasible(&self, p: &Problem) -> bool {
        let n = p.adj.len();
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let open: Vec<u128> = (0..n).map(|v| self.candidates(p, v)).collect();
        let mut seen = 1u128;
        let mut frontier = 1u128;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.chosen[v] | open[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
        }
        if seen != full {
            return false;
        }
        let mut left = full;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let mut comp = 1u128 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= open[v];
                }
                next &= !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            let demand: u32 = Bits(comp).map(|v| (p.target[v] - self.deg[v]) as u32).sum();
            if demand % 2 == 1 {
                return false;
            }
        }
        true
    }

    /// Undecided edge at the most constrained vertex with residual demand.
    fn branch_edge(&self, p: &Problem) -> Option<(usize, usize)> {
        let n = p.adj.len();
        let mut best: Option<(u32, u32, usize)> = None;
        for w in 0..n {
            let need = (p.target[w] - self.deg[w]) as u32;
            if need == 0 {
                continue;
            }
            let c = self.candidates(p, w).count_ones();
            let key = (c - need, c, w);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, w)| (w, self.candidates(p, w).trailing_zeros() as usize))
    }
}

fn search(p: &Problem, mut s: State) -> Option<Vec<u128>> {
    if !s.propagate(p) || !s.feasible(p) {
        return None;
    }
    let Some((u, v)) = s.branch_edge(p) else {
        return Some(s.chosen);
    };
    let mut with = s.clone();
    if with.include(p, u, v) {
        if let Some(found) = search(p, with) {
            return Some(found);
        }
    }
    s.exclude(u, v);
    search(p, s)
}

/// Finds a spanning subgraph of `adj` with the given degrees such that, for
/// each anchor `a`, removing `a` leaves a forest (no anchors: the subgraph is a
/// forest). Returns its adjacency rows.
pub(crate) fn find_degree_subgraph(adj: &[u128], target: &[u8], anchors: &[usize]) -> Option<Vec<u128>> {
    let n = adj.len();
    let ident: Vec<u8> = (0..n).map(|v| v as u8).collect();
    let forests = if anchors.is_empty() {
        vec![Forest { skip: None, parent: ident }]
    } else {
        anchors
            .iter()
            .map(|&a| Forest { skip: Some(a), parent: ident.clone() })
            .collect()
    };
    let state = State {
        chosen: vec![0; n],
        excluded: vec![0; n],
        deg: vec![0; n],
        forests,
    };
    search(&Problem { adj, target }, state)
}
