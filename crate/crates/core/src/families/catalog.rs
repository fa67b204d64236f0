use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multigraph::{AnyMultiGraph, MultiGraph, SemiLooplessMultiGraph};
use crate::unfold::{unfold_semi, ColoredLink, LinkAssignment, PureLinkSpec};

/// The named small multigraphs.
///
/// `M1`..`M4` use vertex 0 as the hub and 1, 2, 3 as the three others.
/// `M5`..`M7` number their four vertices 0..3 in the drawn order.
/// `N1` and `N2` are dipoles on vertices 0, 1 with the labelled edge last.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Catalog {
    M(u8),
    N(u8),
}

impl FromStr for Catalog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let (kind, idx) = t.split_at(1.min(t.len()));
        let i: u8 = idx
            .parse()
            .map_err(|_| Error::FamilyParams(format!("unknown catalog entry {s:?}")))?;
        match (kind, i) {
            ("M", 1..=7) => Ok(Catalog::M(i)),
            ("N", 1..=2) => Ok(Catalog::N(i)),
            _ => Err(Error::FamilyParams(format!("unknown catalog entry {s:?}"))),
        }
    }
}

/// Edges of `M1`..`M4` with the names of the two link ends that replace them
/// in the corresponding minimal family (end at the first endpoint, then the second).
pub(crate) fn m_edges(i: u8) -> Vec<(usize, usize, &'static str, &'static str)> {
    match i {
        1 => vec![
            (0, 1, "x'_1", "x_1"),
            (0, 2, "y'_2", "y_2"),
            (0, 3, "z'_3", "z_3"),
            (1, 2, "z_1", "z_2"),
            (2, 3, "x_2", "x_3"),
            (3, 1, "y_3", "y_1"),
        ],
        2 => vec![
            (0, 1, "x'_1", "x_1"),
            (0, 2, "x'_2", "x_2"),
            (0, 2, "y'_2", "y_2"),
            (0, 3, "x'_3", "x_3"),
            (0, 3, "z'_3", "z_3"),
            (1, 2, "z_1", "z_2"),
            (3, 1, "y_3", "y_1"),
        ],
        3 => vec![
            (0, 1, "x'_1", "x_1"),
            (0, 1, "y'_1", "y_1"),
            (0, 1, "z'_1", "z_1"),
            (0, 2, "y'_2", "y_2"),
            (0, 2, "z'_2", "z_2"),
            (0, 3, "y'_3", "y_3"),
            (0, 3, "z'_3", "z_3"),
            (2, 3, "x_2", "x_3"),
        ],
        _ => vec![
            (0, 1, "x'_1", "x_1"),
            (0, 1, "y'_1", "y_1"),
            (0, 1, "z'_1", "z_1"),
            (0, 2, "x'_2", "x_2"),
            (0, 2, "y'_2", "y_2"),
            (0, 2, "z'_2", "z_2"),
            (0, 3, "x'_3", "x_3"),
            (0, 3, "y'_3", "y_3"),
            (0, 3, "z'_3", "z_3"),
        ],
    }
}

pub fn m_graph(i: u8) -> Result<MultiGraph> {
    let edges = match i {
        1..=4 => m_edges(i).into_iter().map(|(u, v, _, _)| (u, v)).collect(),
        // hub 0 with a triple edge to 1, single edges to 2 and 3, and 2-3 doubled
        5 => vec![(0, 1), (0, 1), (0, 1), (0, 2), (0, 3), (2, 3), (2, 3)],
        // 4-cycle 0-1-2-3 with 0-1 and 2-3 doubled
        6 => vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)],
        // path 0-1-2-3 with multiplicities 3, 2, 3
        7 => vec![(0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (2, 3), (2, 3)],
        _ => return Err(Error::FamilyParams(format!("no multigraph M{i}"))),
    };
    MultiGraph::new(4, edges)
}

pub fn n_graph(i: u8) -> Result<SemiLooplessMultiGraph> {
    match i {
        1 => SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1), (1, 1)], 3),
        2 => SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1)], 2),
        _ => Err(Error::FamilyParams(format!("no semi-loopless multigraph N{i}"))),
    }
}

pub fn gen_catalog(sel: Catalog) -> Result<AnyMultiGraph> {
    match sel {
        Catalog::M(i) => m_graph(i).map(AnyMultiGraph::Loopless),
        Catalog::N(i) => n_graph(i).map(AnyMultiGraph::SemiLoopless),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkClass {
    /// 5-clique `{x, y, a, b, c}`, triangle `{a', b', c'}`, three pure links.
    L1,
    /// Triangles `{x, a, b}` and `{y, a', b'}`, two pure links.
    L2,
    /// `L2` plus the edge `xy`.
    L3,
}

impl FromStr for LinkClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "L1" => Ok(LinkClass::L1),
            "L2" => Ok(LinkClass::L2),
            "L3" => Ok(LinkClass::L3),
            _ => Err(Error::FamilyParams(format!("unknown link class {s:?}"))),
        }
    }
}

impl LinkClass {
    pub fn arity(self) -> usize {
        match self {
            LinkClass::L1 => 3,
            LinkClass::L2 | LinkClass::L3 => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledLink {
    pub link: ColoredLink,
    pub labels: BTreeMap<String, usize>,
}

/// Builds a link of the class as an unfoldment of `N1` (class L1) or `N2`.
/// Labels: `x`, `y`, the clique-side ends `a`, `b` (, `c`), the far ends
/// `a'`, `b'` (, `c'`) and inner vertices `a~a'#1`, ...
pub fn gen_link(class: LinkClass, specs: &[PureLinkSpec]) -> Result<LabeledLink> {
    if specs.len() != class.arity() {
        return Err(Error::FamilyParams(format!(
            "{class:?} takes {} pure-link shapes, got {}",
            class.arity(),
            specs.len()
        )));
    }
    let (f, include, near_first) = match class {
        LinkClass::L1 => (n_graph(1)?, false, false),
        LinkClass::L2 => (n_graph(2)?, false, true),
        LinkClass::L3 => (n_graph(2)?, true, true),
    };
    let assignment = LinkAssignment::from_list(0..specs.len(), specs)?;
    let link = unfold_semi(&f, &assignment, include)?;
    let mut labels = BTreeMap::new();
    labels.insert("x".to_string(), link.x0);
    labels.insert("y".to_string(), link.y0);
    let trace = link.trace.as_ref().expect("unfold_semi records a trace");
    for (t, name) in trace.edges.iter().zip(["a", "b", "c"]) {
        // For N1 the first endpoint (vertex 0) is the far triangle; for N2 it holds x.
        let (near, far) = if near_first { (t.ends.0, t.ends.1) } else { (t.ends.1, t.ends.0) };
        labels.insert(name.to_string(), near);
        labels.insert(format!("{name}'"), far);
        let inner: Vec<usize> = if near_first { t.inner.clone() } else { t.inner.iter().rev().copied().collect() };
        for (j, &r) in inner.iter().enumerate() {
            labels.insert(format!("{name}~{name}'#{}", j + 1), r);
        }
    }
    Ok(LabeledLink { link, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::EdgeMultiset;

    #[test]
    fn catalog_degrees() {
        let deg = |i| {
            let mut d = m_graph(i).unwrap().degrees();
            d.sort_unstable();
            d
        };
        assert_eq!(deg(1), vec![3, 3, 3, 3]);
        assert_eq!(deg(2), vec![3, 3, 3, 5]);
        assert_eq!(deg(3), vec![3, 3, 3, 7]);
        assert_eq!(deg(4), vec![3, 3, 3, 9]);
        assert_eq!(m_graph(4).unwrap().edge_connectivity().unwrap(), 3);
        assert_eq!(m_graph(6).unwrap().edge_connectivity().unwrap(), 2);
        assert_eq!(n_graph(1).unwrap().degrees(), vec![3, 5]);
        assert!("M8".parse::<Catalog>().is_err());
        assert_eq!("n2".parse::<Catalog>().unwrap(), Catalog::N(2));
    }

    #[test]
    fn link_sizes() {
        let t = PureLinkSpec::Triangle;
        let l1 = gen_link(LinkClass::L1, &[t; 3]).unwrap();
        assert_eq!(l1.link.graph.n(), 11);
        let five: Vec<usize> = ["x", "y", "a", "b", "c"].iter().map(|s| l1.labels[*s]).collect();
        for (i, &p) in five.iter().enumerate() {
            for &q in &five[i + 1..] {
                assert!(l1.link.graph.has_edge(p, q));
            }
        }
        let l2 = gen_link(LinkClass::L2, &[t; 2]).unwrap();
        assert_eq!(l2.link.graph.n(), 8);
        assert!(!l2.link.graph.has_edge(l2.labels["x"], l2.labels["y"]));
        assert!(l2.link.graph.has_edge(l2.labels["x"], l2.labels["a"]));
        assert!(l2.link.graph.has_edge(l2.labels["y"], l2.labels["a'"]));
        let l3 = gen_link(LinkClass::L3, &[t; 2]).unwrap();
        assert_eq!(l3.link.graph.edge_count(), l2.link.graph.edge_count() + 1);
        assert!(gen_link(LinkClass::L1, &[t; 2]).is_err());
    }
}
