//! Spanning theta subgraphs and link classification.

use serde::Serialize;

use crate::connectivity::{is_biconnected, is_connected};
use crate::error::{Error, Result};
use crate::graph::{Bits, Link, SimpleGraph, VertexSet};
use crate::hamilton::hamilton_path_between;
use crate::search::find_degree_subgraph;

/// Three internally disjoint paths between the branch vertices `u < v`,
/// sorted lexicographically; together they cover every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ThetaCertificate {
    pub u: usize,
    pub v: usize,
    pub paths: [Vec<usize>; 3],
}

impl ThetaCertificate {
    /// `theta u v | p1 | p2 | p3`, each path as space-separated vertex ids.
    pub fn serialize(&self) -> String {
        let ps: Vec<String> = self
            .paths
            .iter()
            .map(|p| p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        format!("theta {} {} | {}", self.u, self.v, ps.join(" | "))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        e.sort_unstable();
        e
    }
}

/// Reason a certificate is not a spanning theta subgraph of `g`, if any.
pub fn theta_defect(g: &SimpleGraph, cert: &ThetaCertificate) -> Option<String> {
    let n = g.n();
    let (u, v) = (cert.u, cert.v);
    if u >= n || v >= n || u == v {
        return Some("branch vertices out of range or equal".into());
    }
    let mut seen = VertexSet::from_iter_vertices([u, v]);
    let mut short = 0;
    for p in &cert.paths {
        if p.len() < 2 || p[0] != u || p[p.len() - 1] != v {
            return Some(format!("path {p:?} does not run from {u} to {v}"));
        }
        if p.len() == 2 {
            short += 1;
        }
        for w in p.windows(2) {
            if w[0] >= n || w[1] >= n || !g.has_edge(w[0], w[1]) {
                return Some(format!("{}-{} is not an edge", w[0], w[1]));
            }
        }
        for &x in &p[1..p.len() - 1] {
            if seen.contains(x) {
                return Some(format!("vertex {x} used twice"));
            }
            seen.insert(x);
        }
    }
    if short > 1 {
        return Some("two paths use the same edge".into());
    }
    if seen != g.vertices() {
        return Some("paths do not cover every vertex".into());
    }
    None
}

pub fn verify_theta(g: &SimpleGraph, cert: &ThetaCertificate) -> bool {
    theta_defect(g, cert).is_none()
}

/// Branch-vertex pairs worth trying, after the forced-edge counting at degree-2 vertices.
fn candidate_pairs(g: &SimpleGraph) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    let deg2 = VertexSet::from_iter_vertices((0..n).filter(|&v| g.degree(v) == 2));
    let mut must = Vec::new();
    for w in 0..n {
        if g.degree(w) == 2 {
            continue;
        }
        match g.neighbors(w).intersection(deg2).len() {
            0..=2 => {}
            3 => must.push(w),
            _ => return None,
        }
    }
    if must.len() > 2 {
        return None;
    }
    let big: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let pairs = big
        .iter()
        .flat_map(|&a| big.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
        .filter(|&(a, b)| must.iter().all(|&m| m == a || m == b))
        .collect();
    Some(pairs)
}

fn certificate_from(rows: &[u128], u: usize, v: usize) -> ThetaCertificate {
    let mut paths: Vec<Vec<usize>> = Bits(rows[u])
        .map(|first| {
            if first == v {
                vec![u, v]
            } else {
                let mut p = vec![u];
                let (mut prev, mut cur) = (u, first);
                loop {
                    p.push(cur);
                    if cur == v {
                        break;
                    }
                    let nx = VertexSet(rows[cur] & !(1u128 << prev)).first().expect("inner degree 2");
                    prev = cur;
                    cur = nx;
                }
                p
            }
        })
        .collect();
    paths.sort();
    let [a, b, c]: [Vec<usize>; 3] = paths.try_into().expect("branch vertex of degree 3");
    ThetaCertificate { u, v, paths: [a, b, c] }
}

/// A spanning theta subgraph, trying branch pairs `u < v` in lexicographic order.
pub fn spanning_theta(g: &SimpleGraph) -> Result<Option<ThetaCertificate>> {
    let n = g.n();
    if n < 4 {
        return Err(Error::Precondition(format!("spanning theta needs n >= 4, got {n}")));
    }
    if !is_biconnected(g) {
        return Ok(None);
    }
    let Some(pairs) = candidate_pairs(g) else {
        return Ok(None);
    };
    let mut target = vec![2u8; n];
    for (u, v) in pairs {
        target[u] = 3;
        target[v] = 3;
        let found = find_degree_subgraph(g.rows(), &target, &[u, v]);
        target[u] = 2;
        target[v] = 2;
        if let Some(rows) = found {
            return Ok(Some(certificate_from(&rows, u, v)));
        }
    }
    Ok(None)
}

/// `false` below four vertices, otherwise whether a spanning theta exists.
pub fn has_spanning_theta(g: &SimpleGraph) -> bool {
    g.n() >= 4 && matches!(spanning_theta(g), Ok(Some(_)))
}

/// Whether a link has a Hamilton path between its ends, and whether it is pure
/// (a triangle through both ends, or a path of length at least 2 between them).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkClassification {
    pub simple: bool,
    pub pure: bool,
    pub hamilton_path: Option<Vec<usize>>,
}

pub fn is_pure_link(link: &Link) -> bool {
    let g = &link.graph;
    let n = g.n();
    let triangle = n == 3 && g.edge_count() == 3;
    let path = n >= 3
        && g.edge_count() == n - 1
        && (0..n).all(|w| g.degree(w) == if w == link.x || w == link.y { 1 } else { 2 })
        && is_connected(g);
    triangle || path
}

pub fn classify_link(link: &Link) -> Result<LinkClassification> {
    if !is_connected(&link.graph) {
        return Err(Error::InvalidLink("link graph is disconnected".into()));
    }
    let hamilton_path = hamilton_path_between(&link.graph, link.x, link.y)?;
    Ok(LinkClassification {
        simple: hamilton_path.is_some(),
        pure: is_pure_link(link),
        hamilton_path,
    })
}
