use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// One pure chain: two disjoint paths, or a triangle strip on `k >= 3` vertices
/// where `t_i t_j` is an edge iff `|i - j|` is 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PureChain {
    Bipath(usize, usize),
    Triangle(usize),
}

impl PureChain {
    pub fn vertex_count(self) -> usize {
        match self {
            PureChain::Bipath(a, b) => a + b + 2,
            PureChain::Triangle(k) => k,
        }
    }

    fn kind(self) -> char {
        match self {
            PureChain::Bipath(..) => 'B',
            PureChain::Triangle(_) => 'T',
        }
    }
}

impl fmt::Display for PureChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PureChain::Bipath(a, b) => write!(f, "B({a},{b})"),
            PureChain::Triangle(k) => write!(f, "T({k})"),
        }
    }
}

impl FromStr for PureChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Chain(format!("cannot parse pure chain {s:?}"));
        let t = s.trim();
        let (head, rest) = t.split_at(1.min(t.len()));
        let args = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head.to_ascii_uppercase().as_str(), nums.as_slice()) {
            ("B", &[a, b]) => Ok(PureChain::Bipath(a, b)),
            ("T", &[k]) if k >= 3 => Ok(PureChain::Triangle(k)),
            ("T", &[k]) => Err(Error::Chain(format!("triangle chain needs k >= 3, got {k}"))),
            _ => Err(bad()),
        }
    }
}

/// Type tag of a chain: kind of its first and of its last pure chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChainType {
    BB,
    BT,
    TB,
    TT,
}

/// A sequence of pure chains glued terminus to origin by 4-cliques.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ChainSpec(pub Vec<PureChain>);

impl ChainSpec {
    pub fn trivial() -> Self {
        ChainSpec(vec![PureChain::Bipath(0, 0)])
    }

    pub fn validate(&self) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::Chain("empty chain".into()));
        }
        for p in &self.0 {
            if let PureChain::Triangle(k) = p {
                if *k < 3 {
                    return Err(Error::Chain(format!("triangle chain needs k >= 3, got {k}")));
                }
            }
        }
        if self.0.len() > 1 && self.0.contains(&PureChain::Bipath(0, 0)) {
            return Err(Error::Chain("the trivial chain B(0,0) must stand alone".into()));
        }
        Ok(())
    }

    pub fn chain_type(&self) -> Result<ChainType> {
        self.validate()?;
        let first = self.0[0].kind();
        let last = self.0[self.0.len() - 1].kind();
        Ok(match (first, last) {
            ('B', 'B') => ChainType::BB,
            ('B', _) => ChainType::BT,
            ('T', 'B') => ChainType::TB,
            _ => ChainType::TT,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.0 == [PureChain::Bipath(0, 0)]
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for ChainSpec {
    type Err = Error;

    /// Accepts pure chains separated by spaces, `+` or commas outside parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut cur = String::new();
        let mut depth = 0usize;
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                _ => {}
            }
            if depth == 0 && (ch == ',' || ch == '+' || ch.is_whitespace()) {
                if !cur.trim().is_empty() {
                    parts.push(cur.parse()?);
                }
                cur.clear();
            } else {
                cur.push(ch);
            }
        }
        if !cur.trim().is_empty() {
            parts.push(cur.parse()?);
        }
        let spec = ChainSpec(parts);
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledChain {
    pub graph: SimpleGraph,
    /// `x_1`, `y_1` (origin), `x_2`, `y_2` (terminus) and, per pure chain `i`,
    /// `h{i}.p{j}` / `h{i}.q{j}` for bipath vertices or `h{i}.t{j}` for strips.
    pub labels: BTreeMap<String, usize>,
    pub origin: (usize, usize),
    pub terminus: (usize, usize),
}

pub fn gen_chain(spec: &ChainSpec) -> Result<LabeledChain> {
    spec.validate()?;
    let mut labels = BTreeMap::new();
    let mut edges = Vec::new();
    let mut next = 0usize;
    let mut ends: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for (i, p) in spec.0.iter().enumerate() {
        let h = i + 1;
        match *p {
            PureChain::Bipath(l1, l2) => {
                let mut side = |len: usize, tag: char, labels: &mut BTreeMap<String, usize>| {
                    let ids: Vec<usize> = (next..=next + len).collect();
                    next += len + 1;
                    for (j, &v) in ids.iter().enumerate() {
                        labels.insert(format!("h{h}.{tag}{j}"), v);
                    }
                    edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
                    ids
                };
                let ps = side(l1, 'p', &mut labels);
                let qs = side(l2, 'q', &mut labels);
                ends.push(((ps[0], qs[0]), (ps[l1], qs[l2])));
            }
            PureChain::Triangle(k) => {
                let ids: Vec<usize> = (next..next + k).collect();
                next += k;
                for (j, &v) in ids.iter().enumerate() {
                    labels.insert(format!("h{h}.t{}", j + 1), v);
                }
                for a in 0..k {
                    for b in a + 1..k.min(a + 3) {
                        edges.push((ids[a], ids[b]));
                    }
                }
                ends.push(((ids[0], ids[1]), (ids[k - 2], ids[k - 1])));
            }
        }
    }
    for w in ends.windows(2) {
        let (c, d) = w[0].1;
        let (a, b) = w[1].0;
        let q = [c, d, a, b];
        for s in 0..4 {
            for t in s + 1..4 {
                edges.push((q[s], q[t]));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = SimpleGraph::new(next, &edges)?;
    let origin = ends[0].0;
    let terminus = ends[ends.len() - 1].1;
    labels.insert("x_1".into(), origin.0);
    labels.insert("y_1".into(), origin.1);
    labels.insert("x_2".into(), terminus.0);
    labels.insert("y_2".into(), terminus.1);
    Ok(LabeledChain { graph, labels, origin, terminus })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_type() {
        let c: ChainSpec = "T(3) B(1,1)".parse().unwrap();
        assert_eq!(c.chain_type().unwrap(), ChainType::TB);
        let c: ChainSpec = "B(2,0),T(4)".parse().unwrap();
        assert_eq!(c.0, vec![PureChain::Bipath(2, 0), PureChain::Triangle(4)]);
        assert_eq!(c.chain_type().unwrap(), ChainType::BT);
        assert!("T(2)".parse::<ChainSpec>().is_err());
        assert!("B(0,0) T(3)".parse::<ChainSpec>().is_err());
        assert_eq!("T(3)".parse::<ChainSpec>().unwrap().chain_type().unwrap(), ChainType::TT);
    }

    #[test]
    fn strip_edges() {
        let c = gen_chain(&ChainSpec(vec![PureChain::Triangle(5)])).unwrap();
        assert_eq!(c.graph.edge_count(), 7);
        assert_eq!(c.origin, (0, 1));
        assert_eq!(c.terminus, (3, 4));
    }

    #[test]
    fn junction_clique() {
        let c = gen_chain(&"B(1,2) T(3)".parse().unwrap()).unwrap();
        // bipath: 0-1, 2-3-4; strip 5,6,7; junction on {1,4,5,6}
        assert_eq!(c.graph.n(), 8);
        for (u, v) in [(1, 4), (1, 5), (1, 6), (4, 5), (4, 6), (5, 6)] {
            assert!(c.graph.has_edge(u, v));
        }
        assert_eq!(c.labels["x_1"], 0);
        assert_eq!(c.labels["y_1"], 2);
        assert_eq!(c.terminus, (6, 7));
    }
}
