use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use super::catalog::{gen_link, m_edges, m_graph, LinkClass};
use super::chain::{gen_chain, ChainSpec, ChainType, PureChain};
use super::LabeledGraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::unfold::{unfold, LinkAssignment, PureLinkSpec};

/// Number of pure links in a member of each family, index 0 for family 1.
pub const H_LINK_COUNTS: [usize; 7] = [6, 7, 8, 9, 6, 5, 4];

/// Parameters of one member of a minimal family.
///
/// For families 1 to 4 `links[i]` replaces the i-th edge of the base multigraph.
/// For 5 to 7 the first link's shapes come first, then the second link's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HFamilySpec {
    pub family: u8,
    pub links: Vec<PureLinkSpec>,
    pub chain: Option<ChainSpec>,
}

impl HFamilySpec {
    /// All links triangles and, where a chain is needed, the trivial chain.
    pub fn default_for(family: u8) -> Result<Self> {
        let count = link_count(family)?;
        Ok(HFamilySpec {
            family,
            links: vec![PureLinkSpec::Triangle; count],
            chain: (family >= 5).then(ChainSpec::trivial),
        })
    }

    pub fn validate(&self) -> Result<()> {
        let count = link_count(self.family)?;
        if self.links.len() != count {
            return Err(Error::FamilyParams(format!(
                "family {} takes {count} pure links, got {}",
                self.family,
                self.links.len()
            )));
        }
        match (&self.chain, self.family) {
            (Some(_), 1..=4) => Err(Error::FamilyParams(format!("family {} has no chain", self.family))),
            (None, 5..=7) => Err(Error::FamilyParams(format!("family {} needs a chain", self.family))),
            (Some(c), f) => {
                let t = c.chain_type()?;
                let ok = match f {
                    6 => matches!(t, ChainType::BB | ChainType::TB),
                    7 => t == ChainType::BB,
                    _ => true,
                };
                if ok {
                    Ok(())
                } else {
                    Err(Error::Chain(format!("family {f} does not admit a chain of type {t:?}")))
                }
            }
            (None, _) => Ok(()),
        }
    }
}

fn link_count(family: u8) -> Result<usize> {
    match family {
        1..=7 => Ok(H_LINK_COUNTS[family as usize - 1]),
        _ => Err(Error::FamilyParams(format!("no minimal family {family}"))),
    }
}

pub fn gen_h(spec: &HFamilySpec) -> Result<LabeledGraph> {
    spec.validate()?;
    if spec.family <= 4 {
        from_multigraph(spec)
    } else {
        from_chain(spec)
    }
}

fn from_multigraph(spec: &HFamilySpec) -> Result<LabeledGraph> {
    let f = m_graph(spec.family)?;
    let assignment = LinkAssignment::from_list(0..spec.links.len(), &spec.links)?;
    let cg = unfold(&f, &assignment)?;
    let trace = cg.trace.as_ref().expect("unfold records a trace");
    let mut labels = BTreeMap::new();
    for (t, (_, _, lu, lv)) in trace.edges.iter().zip(m_edges(spec.family)) {
        labels.insert(lu.to_string(), t.ends.0);
        labels.insert(lv.to_string(), t.ends.1);
        for (j, &r) in t.inner.iter().enumerate() {
            labels.insert(format!("{lu}~{lv}#{}", j + 1), r);
        }
    }
    Ok(LabeledGraph { graph: cg.graph.clone(), labels, colors: Some(cg.colors.clone()) })
}

fn from_chain(spec: &HFamilySpec) -> Result<LabeledGraph> {
    let (first, second) = match spec.family {
        5 => (LinkClass::L1, LinkClass::L1),
        6 => (LinkClass::L1, LinkClass::L2),
        _ => (LinkClass::L2, LinkClass::L2),
    };
    let chain = gen_chain(spec.chain.as_ref().expect("validated"))?;
    let mut labels = chain.labels.clone();
    let mut edges: Vec<(usize, usize)> = chain.graph.edges().collect();
    let mut next = chain.graph.n();
    let split = first.arity();
    let pieces = [
        (first, &spec.links[..split], chain.origin, 1),
        (second, &spec.links[split..], chain.terminus, 2),
    ];
    for (class, shapes, (cx, cy), side) in pieces {
        let link = gen_link(class, shapes)?;
        let g = &link.link.graph;
        let mut map = vec![usize::MAX; g.n()];
        map[link.link.x0] = cx;
        map[link.link.y0] = cy;
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = next;
            next += 1;
        }
        edges.extend(g.edges().map(|(u, v)| (map[u], map[v])));
        for (name, &v) in &link.labels {
            if name == "x" || name == "y" {
                continue;
            }
            let tagged = match name.split_once('~') {
                Some((a, rest)) => {
                    let (b, j) = rest.split_once('#').expect("inner labels carry an index");
                    format!("{a}_{side}~{b}_{side}#{j}")
                }
                None => format!("{name}_{side}"),
            };
            labels.insert(tagged, map[v]);
        }
    }
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = SimpleGraph::new(next, &edges)?;
    Ok(LabeledGraph { graph, labels, colors: None })
}

/// Random pure-link shapes: triangles and paths of length 2 to `max_path`.
pub fn sample_link_specs<R: Rng + ?Sized>(rng: &mut R, count: usize, max_path: usize) -> Vec<PureLinkSpec> {
    (0..count)
        .map(|_| match rng.gen_range(1..max_path.max(2)) {
            1 => PureLinkSpec::Triangle,
            l => PureLinkSpec::Path(l),
        })
        .collect()
}

/// A random admissible member description of `family`, with at most
/// `max_pieces` pure chains whose sizes stay small.
pub fn sample_h_spec<R: Rng + ?Sized>(rng: &mut R, family: u8, max_path: usize, max_pieces: usize) -> Result<HFamilySpec> {
    let count = link_count(family)?;
    let links = sample_link_specs(rng, count, max_path);
    let chain = if family <= 4 {
        None
    } else {
        let pieces = rng.gen_range(1..=max_pieces.max(1));
        let mut parts: Vec<PureChain> = (0..pieces)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    PureChain::Triangle(rng.gen_range(3..=5))
                } else {
                    let a = rng.gen_range(0..=2);
                    let b = rng.gen_range(if a == 0 { 1 } else { 0 }..=2);
                    PureChain::Bipath(a, b)
                }
            })
            .collect();
        if pieces == 1 && rng.gen_bool(0.25) {
            parts = vec![PureChain::Bipath(0, 0)];
        }
        let bipath = || PureChain::Bipath(1, 1);
        let last = parts.len() - 1;
        if family >= 6 && matches!(parts[last], PureChain::Triangle(_)) {
            parts[last] = bipath();
        }
        if family == 7 && matches!(parts[0], PureChain::Triangle(_)) {
            parts[0] = bipath();
        }
        Some(ChainSpec(parts))
    };
    let spec = HFamilySpec { family, links, chain };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_biconnected;
    use crate::forbidden::is_claw_free;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn smallest_members() {
        let sizes: Vec<usize> = (1..=7)
            .map(|f| gen_h(&HFamilySpec::default_for(f).unwrap()).unwrap().graph.n())
            .collect();
        // three vertices per link; chain families share x, y with the chain
        assert_eq!(sizes, vec![18, 21, 24, 27, 20, 17, 14]);
    }

    #[test]
    fn labels_resolve() {
        let g = gen_h(&HFamilySpec::default_for(1).unwrap()).unwrap();
        let (a, b, c) = (g.vertex("x'_1").unwrap(), g.vertex("y'_2").unwrap(), g.vertex("z'_3").unwrap());
        assert!(g.graph.has_edge(a, b) && g.graph.has_edge(b, c) && g.graph.has_edge(a, c));
        let h = gen_h(&HFamilySpec::default_for(6).unwrap()).unwrap();
        assert!(h.graph.has_edge(h.vertex("x_2").unwrap(), h.vertex("a_2").unwrap()));
        assert!(h.graph.has_edge(h.vertex("y_2").unwrap(), h.vertex("b'_2").unwrap()));
        assert!(h.graph.has_edge(h.vertex("a'_1").unwrap(), h.vertex("c'_1").unwrap()));
    }

    #[test]
    fn chain_type_restrictions() {
        let mut s = HFamilySpec::default_for(6).unwrap();
        s.chain = Some("T(3)".parse().unwrap());
        assert!(matches!(gen_h(&s), Err(Error::Chain(_))));
        s.chain = Some("T(3) B(1,1)".parse().unwrap());
        assert!(gen_h(&s).is_ok());
        let mut s = HFamilySpec::default_for(7).unwrap();
        s.chain = Some("B(1,0) T(4)".parse().unwrap());
        assert!(gen_h(&s).is_err());
        assert!(HFamilySpec::default_for(8).is_err());
    }

    #[test]
    fn sampled_members_are_claw_free_and_biconnected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in 1..=7 {
            for _ in 0..5 {
                let s = sample_h_spec(&mut rng, f, 4, 3).unwrap();
                let g = gen_h(&s).unwrap().graph;
                assert!(is_claw_free(&g), "{s:?}");
                assert!(is_biconnected(&g), "{s:?}");
            }
        }
    }
}
