use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::multigraph::{
    delete_raw, edge_connectivity_raw, raw_components, AnyMultiGraph, EdgeMultiset, MultiGraph, SemiLooplessMultiGraph,
};

/// Which kind of multigraph [`enumerate_multigraphs`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultigraphMode {
    Loopless,
    /// One labelled edge `e0`, possibly a loop, listed last.
    SemiLoopless,
}

pub const MAX_MULTI_N_LOOPLESS: usize = 4;
pub const MAX_MULTI_N_SEMI: usize = 3;
pub const MAX_MULTIPLICITY: usize = 4;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
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
    heap(n, &mut p, &mut out);
    out
}

/// Where the labelled edge sits: on pair index `p`, or as a loop at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Label {
    Pair(usize),
    Loop(usize),
}

/// One representative per isomorphism class, no isolated vertices, every
/// multiplicity at most `max_mult` (the labelled edge is not counted).
/// Output is ordered by vertex count, then by the class key.
pub fn enumerate_multigraphs(max_n: usize, max_mult: usize, mode: MultigraphMode) -> Result<Vec<AnyMultiGraph>> {
    let cap = match mode {
        MultigraphMode::Loopless => MAX_MULTI_N_LOOPLESS,
        MultigraphMode::SemiLoopless => MAX_MULTI_N_SEMI,
    };
    if max_n > cap {
        return Err(Error::TooLarge(format!("multigraph enumeration supports n <= {cap}, got {max_n}")));
    }
    if max_mult > MAX_MULTIPLICITY {
        return Err(Error::TooLarge(format!(
            "multigraph enumeration supports multiplicity <= {MAX_MULTIPLICITY}, got {max_mult}"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let ps = pairs(n);
        let perms = permutations(n);
        let pair_index: BTreeMap<(usize, usize), usize> = ps.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let map_pair = |perm: &[usize], p: usize| {
            let (a, b) = ps[p];
            let (x, y) = (perm[a], perm[b]);
            pair_index[&(x.min(y), x.max(y))]
        };
        let permute = |perm: &[usize], mult: &[usize]| {
            let mut m = vec![0; mult.len()];
            for (p, &c) in mult.iter().enumerate() {
                m[map_pair(perm, p)] = c;
            }
            m
        };
        let labels: Vec<Option<Label>> = match mode {
            MultigraphMode::Loopless => vec![None],
            MultigraphMode::SemiLoopless => (0..ps.len()).map(Label::Pair).chain((0..n).map(Label::Loop)).map(Some).collect(),
        };
        let mut seen = BTreeSet::new();
        let total = (max_mult + 1).pow(ps.len() as u32);
        for code in 0..total {
            let mult: Vec<usize> = (0..ps.len()).map(|p| code / (max_mult + 1).pow(p as u32) % (max_mult + 1)).collect();
            for &label in &labels {
                let mut touched = vec![false; n];
                for (p, &c) in mult.iter().enumerate() {
                    if c > 0 {
                        touched[ps[p].0] = true;
                        touched[ps[p].1] = true;
                    }
                }
                match label {
                    Some(Label::Pair(p)) => {
                        touched[ps[p].0] = true;
                        touched[ps[p].1] = true;
                    }
                    Some(Label::Loop(v)) => touched[v] = true,
                    None => {}
                }
                // a semi-loopless multigraph needs e0 plus at least one other edge
                let edge_total = mult.iter().sum::<usize>() + usize::from(label.is_some());
                if touched.contains(&false) || (label.is_some() && edge_total < 2) {
                    continue;
                }
                let key = perms
                    .iter()
                    .map(|perm| {
                        let l = label.map(|l| match l {
                            Label::Pair(p) => Label::Pair(map_pair(perm, p)),
                            Label::Loop(v) => Label::Loop(perm[v]),
                        });
                        (l, permute(perm, &mult))
                    })
                    .min()
                    .expect("n >= 2");
                if !seen.insert(key.clone()) {
                    continue;
                }
                let (l, m) = key;
                let mut edges: Vec<(usize, usize)> = m
                    .iter()
                    .enumerate()
                    .flat_map(|(p, &c)| std::iter::repeat_n(ps[p], c))
                    .collect();
                out.push(match l {
                    None => AnyMultiGraph::Loopless(MultiGraph::new(n, edges)?),
                    Some(l) => {
                        edges.push(match l {
                            Label::Pair(p) => ps[p],
                            Label::Loop(v) => (v, v),
                        });
                        let e0 = edges.len() - 1;
                        AnyMultiGraph::SemiLoopless(SemiLooplessMultiGraph::new(n, edges, e0)?)
                    }
                });
            }
        }
    }
    Ok(out)
}

/// Every proper sub-multigraph (edges chosen up to parallel-edge symmetry,
/// isolated vertices dropped), always keeping edge `keep` when given.
fn proper_subgraphs(n: usize, edges: &[(usize, usize)], keep: Option<usize>) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if Some(i) != keep {
            groups.entry((u.min(v), u.max(v))).or_default().push(i);
        }
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut out = Vec::new();
    let mut counts = vec![0usize; groups.len()];
    loop {
        // counts[g] = number of edges removed from group g
        if counts.iter().any(|&c| c > 0) {
            let remove: Vec<usize> = groups.iter().zip(&counts).flat_map(|(g, &c)| g[..c].iter().copied()).collect();
            if remove.len() < edges.len() {
                let (m, sub, _) = delete_raw(n, edges, &remove);
                out.push((m, sub));
            }
        }
        let mut i = 0;
        while i < groups.len() && counts[i] == groups[i].len() {
            counts[i] = 0;
            i += 1;
        }
        if i == groups.len() {
            break;
        }
        counts[i] += 1;
    }
    out
}

fn odd_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut d = vec![0usize; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d.iter().filter(|&&x| x % 2 == 1).count()
}

fn two_edge_connected(n: usize, edges: &[(usize, usize)]) -> Result<bool> {
    Ok(raw_components(n, edges) == 1 && edge_connectivity_raw(n, edges)? >= 2)
}

/// Premise of the loopless classification: 3-edge-connected, at least four
/// odd vertices, and every 2-edge-connected proper subgraph has at most two.
pub fn is_minimal_odd_multigraph(f: &MultiGraph) -> Result<bool> {
    if !f.is_connected() || f.edge_connectivity()? < 3 || f.odd_vertices().len() < 4 {
        return Ok(false);
    }
    for (m, sub) in proper_subgraphs(f.n(), f.edges(), None) {
        if two_edge_connected(m, &sub)? && odd_count(m, &sub) > 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Premise of the semi-loopless classification: 3-edge-connected, at least
/// two odd vertices, and every 2-edge-connected proper subgraph containing
/// `e0` has only even vertices.
pub fn is_minimal_odd_semi(f: &SemiLooplessMultiGraph) -> Result<bool> {
    if !f.is_connected() || f.edge_connectivity()? < 3 || f.odd_vertices().len() < 2 {
        return Ok(false);
    }
    for (m, sub) in proper_subgraphs(f.n(), f.edges(), Some(f.e0())) {
        if two_edge_connected(m, &sub)? && odd_count(m, &sub) > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{m_graph, n_graph};

    #[test]
    fn dipoles() {
        let all = enumerate_multigraphs(2, 3, MultigraphMode::Loopless).unwrap();
        assert_eq!(all.len(), 3);
        let semi = enumerate_multigraphs(2, 3, MultigraphMode::SemiLoopless).unwrap();
        let n1 = n_graph(1).unwrap();
        let n2 = n_graph(2).unwrap();
        let has = |t: &SemiLooplessMultiGraph| {
            semi.iter().any(|g| match g {
                AnyMultiGraph::SemiLoopless(s) => crate::multigraph::semi_isomorphic(s, t).unwrap().is_some(),
                _ => false,
            })
        };
        assert!(has(&n1) && has(&n2));
    }

    #[test]
    fn caps() {
        assert!(enumerate_multigraphs(5, 2, MultigraphMode::Loopless).is_err());
        assert!(enumerate_multigraphs(4, 2, MultigraphMode::SemiLoopless).is_err());
        assert!(enumerate_multigraphs(3, 5, MultigraphMode::Loopless).is_err());
    }

    #[test]
    fn catalog_members_satisfy_premises() {
        for i in 1..=4 {
            assert!(is_minimal_odd_multigraph(&m_graph(i).unwrap()).unwrap(), "M{i}");
        }
        assert!(!is_minimal_odd_multigraph(&m_graph(5).unwrap()).unwrap());
        for i in 1..=2 {
            assert!(is_minimal_odd_semi(&n_graph(i).unwrap()).unwrap(), "N{i}");
        }
    }
}
