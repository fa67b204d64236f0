//! Forbidden-subgraph patterns, induced-copy search and freeness checks.
//!
//! Pattern names: `K1,t` (star), `Pt` (path on t vertices), `Ct` (cycle),
//! `Zi` (triangle with a pendant path of length i), `Bi,j` (triangle with
//! pendant paths of lengths i and j at two corners) and `Ni,j,k` (pendant
//! paths at all three corners). Names are case-insensitive and may be listed
//! comma-separated, e.g. `K1,3,P6,B1,5`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Largest pattern accepted by [`find_induced`].
pub const MAX_PATTERN_VERTICES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ForbiddenSpec {
    Star(usize),
    Path(usize),
    Cycle(usize),
    Z(usize),
    B(usize, usize),
    N(usize, usize, usize),
}

impl ForbiddenSpec {
    pub fn claw() -> Self {
        ForbiddenSpec::Star(3)
    }

    pub fn vertex_count(self) -> usize {
        match self {
            ForbiddenSpec::Star(t) => t + 1,
            ForbiddenSpec::Path(t) | ForbiddenSpec::Cycle(t) => t,
            ForbiddenSpec::Z(i) => 3 + i,
            ForbiddenSpec::B(i, j) => 3 + i + j,
            ForbiddenSpec::N(i, j, k) => 3 + i + j + k,
        }
    }

    fn validate(self) -> Result<Self> {
        let bad = match self {
            ForbiddenSpec::Star(t) => t < 1,
            ForbiddenSpec::Path(t) => t < 1,
            ForbiddenSpec::Cycle(t) => t < 3,
            _ => false,
        };
        if bad {
            return Err(Error::ForbiddenSpec(format!("degenerate parameters in {self}")));
        }
        if self.vertex_count() > 128 {
            return Err(Error::ForbiddenSpec(format!("{self} has more than 128 vertices")));
        }
        Ok(self)
    }
}

impl fmt::Display for ForbiddenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ForbiddenSpec::Star(t) => write!(f, "K1,{t}"),
            ForbiddenSpec::Path(t) => write!(f, "P{t}"),
            ForbiddenSpec::Cycle(t) => write!(f, "C{t}"),
            ForbiddenSpec::Z(i) => write!(f, "Z{i}"),
            ForbiddenSpec::B(i, j) => write!(f, "B{i},{j}"),
            ForbiddenSpec::N(i, j, k) => write!(f, "N{i},{j},{k}"),
        }
    }
}

impl FromStr for ForbiddenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_forbidden_list(s)?.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::ForbiddenSpec(format!("expected a single pattern, got {s:?}"))),
        }
    }
}

/// Parses a comma-, semicolon- or space-separated list of pattern names.
pub fn parse_forbidden_list(s: &str) -> Result<Vec<ForbiddenSpec>> {
    let toks: Vec<&str> = s
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    let num = |t: &str| -> Result<usize> {
        t.parse()
            .map_err(|_| Error::ForbiddenSpec(format!("expected a number, got {t:?} in {s:?}")))
    };
    while i < toks.len() {
        let tok = toks[i];
        let (head, first) = tok.split_at(tok.find(|c: char| c.is_ascii_digit()).unwrap_or(tok.len()));
        let arity = match head.to_ascii_lowercase().as_str() {
            "p" | "c" | "z" => 1,
            "k" | "b" => 2,
            "n" => 3,
            _ => return Err(Error::ForbiddenSpec(format!("unknown pattern {tok:?}"))),
        };
        if first.is_empty() {
            return Err(Error::ForbiddenSpec(format!("missing parameters in {tok:?}")));
        }
        let mut params = vec![num(first)?];
        while params.len() < arity {
            i += 1;
            let t = toks
                .get(i)
                .ok_or_else(|| Error::ForbiddenSpec(format!("too few parameters for {head} in {s:?}")))?;
            params.push(num(t)?);
        }
        i += 1;
        let spec = match (head.to_ascii_lowercase().as_str(), params.as_slice()) {
            ("k", [1, t]) => ForbiddenSpec::Star(*t),
            ("k", _) => return Err(Error::ForbiddenSpec(format!("only stars K1,t are supported, got {tok}"))),
            ("p", [t]) => ForbiddenSpec::Path(*t),
            ("c", [t]) => ForbiddenSpec::Cycle(*t),
            ("z", [a]) => ForbiddenSpec::Z(*a),
            ("b", [a, b]) => ForbiddenSpec::B(*a, *b),
            ("n", [a, b, c]) => ForbiddenSpec::N(*a, *b, *c),
            _ => unreachable!("arity checked above"),
        };
        out.push(spec.validate()?);
    }
    Ok(out)
}

/// Builds the pattern graph. Triangle-based patterns put the triangle on
/// vertices 0, 1, 2 and the pendant paths after it; stars put the centre at 0.
pub fn make_forbidden(spec: ForbiddenSpec) -> Result<SimpleGraph> {
    let spec = spec.validate()?;
    let n = spec.vertex_count();
    let mut edges = Vec::new();
    match spec {
        ForbiddenSpec::Star(t) => edges.extend((1..=t).map(|i| (0, i))),
        ForbiddenSpec::Path(t) => edges.extend((1..t).map(|i| (i - 1, i))),
        ForbiddenSpec::Cycle(t) => edges.extend((0..t).map(|i| (i, (i + 1) % t))),
        ForbiddenSpec::Z(_) | ForbiddenSpec::B(..) | ForbiddenSpec::N(..) => {
            let (i, j, k) = match spec {
                ForbiddenSpec::Z(i) => (i, 0, 0),
                ForbiddenSpec::B(i, j) => (i, j, 0),
                ForbiddenSpec::N(i, j, k) => (i, j, k),
                _ => unreachable!(),
            };
            edges.extend([(0, 1), (1, 2), (0, 2)]);
            let mut next = 3;
            for (corner, len) in [(0, i), (1, j), (2, k)] {
                let mut prev = corner;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
        }
    }
    SimpleGraph::new(n, &edges)
}

/// An induced embedding: pattern vertex `i` maps to host vertex `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

/// First induced copy of `pattern` in `host`, lexicographically smallest in the
/// tuple of images of pattern vertices `0, 1, ..`.
pub fn find_induced(host: &SimpleGraph, pattern: &SimpleGraph) -> Result<Option<Embedding>> {
    let k = pattern.n();
    if k > MAX_PATTERN_VERTICES {
        return Err(Error::TooLarge(format!("pattern has {k} vertices, limit is 16")));
    }
    if k > host.n() {
        return Ok(None);
    }
    let pdeg = pattern.degrees();
    let hdeg = host.degrees();
    let all = host.vertices();
    let mut map = Vec::with_capacity(k);
    fn go(
        host: &SimpleGraph,
        pattern: &SimpleGraph,
        pdeg: &[usize],
        hdeg: &[usize],
        all: VertexSet,
        used: VertexSet,
        map: &mut Vec<usize>,
    ) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        let mut cand = all.difference(used);
        for (j, &hj) in map.iter().enumerate() {
            let nb = host.neighbors(hj);
            cand = if pattern.has_edge(i, j) {
                cand.intersection(nb)
            } else {
                cand.difference(nb)
            };
        }
        for c in cand.iter() {
            if hdeg[c] < pdeg[i] {
                continue;
            }
            map.push(c);
            let mut u = used;
            u.insert(c);
            if go(host, pattern, pdeg, hdeg, all, u, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    let found = go(host, pattern, &pdeg, &hdeg, all, VertexSet::EMPTY, &mut map);
    Ok(found.then_some(Embedding { map }))
}

/// Finds an induced copy of the named pattern.
pub fn find_forbidden(host: &SimpleGraph, spec: ForbiddenSpec) -> Result<Option<Embedding>> {
    find_induced(host, &make_forbidden(spec)?)
}

/// Whether `host` has no induced copy of any listed pattern. Smaller patterns are
/// tried first.
pub fn is_free(host: &SimpleGraph, specs: &[ForbiddenSpec]) -> Result<bool> {
    let mut sorted = specs.to_vec();
    sorted.sort_by_key(|s| s.vertex_count());
    for s in sorted {
        if find_forbidden(host, s)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Claw-freeness via neighbourhoods: no vertex has three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &SimpleGraph) -> bool {
    first_claw(g).is_none()
}

/// First claw as `[centre, a, b, c]`.
pub fn first_claw(g: &SimpleGraph) -> Option<[usize; 4]> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for a in nb.iter() {
            let ra = nb.difference(g.neighbors(a)).0 & !((2u128 << a).wrapping_sub(1));
            for b in crate::graph::Bits(ra) {
                let rb = ra & !g.rows()[b] & !((2u128 << b).wrapping_sub(1));
                if let Some(c) = VertexSet(rb).first() {
                    return Some([v, a, b, c]);
                }
            }
        }
    }
    None
}

/// Number of vertices of a longest induced path.
pub fn longest_induced_path(g: &SimpleGraph) -> usize {
    let mut best = 1;
    // Extend from `end`; `blocked` holds the path and the neighbours of all path
    // vertices other than `end`.
    fn go(g: &SimpleGraph, end: usize, len: usize, blocked: VertexSet, best: &mut usize) {
        *best = (*best).max(len);
        let ext = g.neighbors(end).difference(blocked);
        let reachable = crate::connectivity::reach(g, end, g.vertices().difference(blocked).union(VertexSet::singleton(end)));
        if len + reachable.len() - 1 <= *best {
            return;
        }
        let next_block = blocked.union(g.neighbors(end)).union(VertexSet::singleton(end));
        for w in ext.iter() {
            go(g, w, len + 1, next_block, best);
        }
    }
    for v in 0..g.n() {
        go(g, v, 1, VertexSet::singleton(v), &mut best);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(
            parse_forbidden_list("K1,3, P6 ,b1,5;N1,1,2,z3,C4").unwrap(),
            vec![
                ForbiddenSpec::Star(3),
                ForbiddenSpec::Path(6),
                ForbiddenSpec::B(1, 5),
                ForbiddenSpec::N(1, 1, 2),
                ForbiddenSpec::Z(3),
                ForbiddenSpec::Cycle(4)
            ]
        );
        assert!(parse_forbidden_list("K2,3").is_err());
        assert!(parse_forbidden_list("C2").is_err());
        assert!(parse_forbidden_list("B1").is_err());
        assert!(parse_forbidden_list("Q4").is_err());
        assert_eq!("N1,2,3".parse::<ForbiddenSpec>().unwrap().to_string(), "N1,2,3");
    }

    #[test]
    fn pattern_shapes() {
        let b = make_forbidden(ForbiddenSpec::B(1, 2)).unwrap();
        assert_eq!((b.n(), b.edge_count()), (6, 6));
        assert_eq!(make_forbidden(ForbiddenSpec::N(0, 0, 0)).unwrap(), SimpleGraph::complete(3).unwrap());
        assert_eq!(make_forbidden(ForbiddenSpec::Star(3)).unwrap().degree(0), 3);
    }

    #[test]
    fn claw_in_star() {
        let star = crate::codec::from_graph6("D?{").unwrap();
        let e = find_forbidden(&star, ForbiddenSpec::claw()).unwrap().unwrap();
        assert_eq!(e.map, vec![4, 0, 1, 2]);
        assert_eq!(first_claw(&star), Some([4, 0, 1, 2]));
        assert!(is_free(&SimpleGraph::complete(6).unwrap(), &[ForbiddenSpec::claw()]).unwrap());
    }

    #[test]
    fn induced_not_subgraph() {
        // C4 contains P3 as an induced subgraph, but K4 does not.
        let p3 = make_forbidden(ForbiddenSpec::Path(3)).unwrap();
        assert!(find_induced(&SimpleGraph::cycle(4).unwrap(), &p3).unwrap().is_some());
        assert!(find_induced(&SimpleGraph::complete(4).unwrap(), &p3).unwrap().is_none());
    }

    #[test]
    fn longest_paths() {
        assert_eq!(longest_induced_path(&SimpleGraph::cycle(7).unwrap()), 6);
        assert_eq!(longest_induced_path(&SimpleGraph::complete(5).unwrap()), 2);
        assert_eq!(longest_induced_path(&SimpleGraph::path(6).unwrap()), 6);
        assert_eq!(longest_induced_path(&SimpleGraph::empty(3).unwrap()), 1);
    }
}
