//! Unfoldments: coloured claw-free graphs built from a multigraph by replacing
//! each edge with a pure link and each vertex with a clique on the link ends.
//!
//! Blue vertices are link ends, red vertices are link interiors, and black
//! vertices are the two ends of a coloured link. Two blue vertices are
//! associated when some path joins them through red vertices only.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::codec::parse_edge_list;
use crate::connectivity::components_within;
use crate::error::{Error, Result};
use crate::forbidden::first_claw;
use crate::graph::{SimpleGraph, VertexSet, MAX_VERTICES};
use crate::multigraph::{EdgeMultiset, MultiGraph, SemiLooplessMultiGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    Red,
    Blue,
    Black,
}

impl Color {
    pub fn code(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
            Color::Black => 'k',
        }
    }

    pub fn from_code(c: char) -> Option<Color> {
        match c {
            'r' | 'R' => Some(Color::Red),
            'b' | 'B' => Some(Color::Blue),
            'k' | 'K' => Some(Color::Black),
            _ => None,
        }
    }
}

/// Shape of the pure link that replaces one multigraph edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PureLinkSpec {
    /// Triangle: the two ends are adjacent and share one red neighbour.
    Triangle,
    /// Path of the given length (at least 2) between the ends.
    Path(usize),
}

impl PureLinkSpec {
    pub fn inner_count(self) -> usize {
        match self {
            PureLinkSpec::Triangle => 1,
            PureLinkSpec::Path(l) => l - 1,
        }
    }

    fn validate(self) -> Result<Self> {
        match self {
            PureLinkSpec::Path(l) if l < 2 => Err(Error::Assignment(format!("path links need length >= 2, got {l}"))),
            s => Ok(s),
        }
    }
}

impl fmt::Display for PureLinkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PureLinkSpec::Triangle => write!(f, "t"),
            PureLinkSpec::Path(l) => write!(f, "p{l}"),
        }
    }
}

impl FromStr for PureLinkSpec {
    type Err = Error;

    /// `t` for a triangle, `p<l>` for a path of length `l`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let spec = match s.as_str() {
            "t" | "triangle" => PureLinkSpec::Triangle,
            _ => {
                let l = s
                    .strip_prefix('p')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Assignment(format!("unknown link shape {s:?}")))?;
                PureLinkSpec::Path(l)
            }
        };
        spec.validate()
    }
}

/// Parses a comma-separated list of link shapes.
pub fn parse_link_specs(s: &str) -> Result<Vec<PureLinkSpec>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

/// Pure-link shape per multigraph edge index.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct LinkAssignment {
    pub specs: BTreeMap<usize, PureLinkSpec>,
}

impl LinkAssignment {
    pub fn uniform(edges: impl IntoIterator<Item = usize>, spec: PureLinkSpec) -> Self {
        LinkAssignment {
            specs: edges.into_iter().map(|e| (e, spec)).collect(),
        }
    }

    /// Assigns `specs[i]` to the i-th edge listed in `edges`.
    pub fn from_list(edges: impl IntoIterator<Item = usize>, specs: &[PureLinkSpec]) -> Result<Self> {
        let edges: Vec<usize> = edges.into_iter().collect();
        if edges.len() != specs.len() {
            return Err(Error::Assignment(format!(
                "{} link shapes given for {} edges",
                specs.len(),
                edges.len()
            )));
        }
        Ok(LinkAssignment {
            specs: edges.into_iter().zip(specs.iter().copied()).collect(),
        })
    }

    fn get(&self, e: usize) -> Result<PureLinkSpec> {
        self.specs
            .get(&e)
            .copied()
            .ok_or_else(|| Error::Assignment(format!("no link shape for edge {e}")))?
            .validate()
    }

    fn check_keys(&self, m: usize, skip: Option<usize>) -> Result<()> {
        match self.specs.keys().find(|&&e| e >= m) {
            Some(e) => Err(Error::Assignment(format!("edge {e} does not exist"))),
            None => (0..m).filter(|&e| Some(e) != skip).try_for_each(|e| self.get(e).map(|_| ())),
        }
    }
}

/// Where each multigraph edge and vertex went in an unfoldment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeTrace {
    pub edge: usize,
    /// Link end at the edge's first endpoint, then at its second.
    pub ends: (usize, usize),
    /// Inner vertices in order from the first end to the second.
    pub inner: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnfoldmentTrace {
    pub edges: Vec<EdgeTrace>,
    /// Clique replacing each multigraph vertex.
    pub cliques: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredGraph {
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub colors: Vec<Color>,
    pub trace: Option<UnfoldmentTrace>,
}

impl ColoredGraph {
    pub fn new(graph: SimpleGraph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::Precondition(format!(
                "{} colours for {} vertices",
                colors.len(),
                graph.n()
            )));
        }
        if colors.contains(&Color::Black) {
            return Err(Error::Precondition("black vertices only occur in coloured links".into()));
        }
        Ok(ColoredGraph { graph, colors, trace: None })
    }

    pub fn to_text(&self) -> String {
        colored_text(&self.graph, &self.colors)
    }
}

/// A coloured link from `x0` to `y0`; both ends are black.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredLink {
    #[serde(skip)]
    pub graph: SimpleGraph,
    pub colors: Vec<Color>,
    pub x0: usize,
    pub y0: usize,
    pub trace: Option<UnfoldmentTrace>,
}

impl ColoredLink {
    /// Builds a coloured link; the ends are the two black vertices in id order.
    pub fn new(graph: SimpleGraph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::Precondition(format!(
                "{} colours for {} vertices",
                colors.len(),
                graph.n()
            )));
        }
        let black: Vec<usize> = (0..graph.n()).filter(|&v| colors[v] == Color::Black).collect();
        let [x0, y0] = black[..] else {
            return Err(Error::Precondition(format!(
                "a coloured link has exactly two black vertices, found {}",
                black.len()
            )));
        };
        Ok(ColoredLink { graph, colors, x0, y0, trace: None })
    }

    pub fn has_end_edge(&self) -> bool {
        self.graph.has_edge(self.x0, self.y0)
    }

    pub fn to_link(&self) -> crate::graph::Link {
        crate::graph::Link {
            graph: self.graph.clone(),
            x: self.x0,
            y: self.y0,
        }
    }

    pub fn to_text(&self) -> String {
        colored_text(&self.graph, &self.colors)
    }
}

fn colored_text(g: &SimpleGraph, colors: &[Color]) -> String {
    let mut out = String::new();
    let codes: String = colors.iter().map(|c| c.code()).collect();
    writeln!(out, "colors: {codes}").expect("writing to a String");
    out.push_str(&crate::codec::to_edge_list(g, None));
    out
}

/// Parses an edge list carrying a `colors:` line (one of `r`, `b`, `k` per vertex).
pub fn parse_colored(text: &str) -> Result<(SimpleGraph, Vec<Color>)> {
    let mut colors = None;
    let mut rest = String::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(c) = line.trim().strip_prefix("colors:") {
            let parsed: Option<Vec<Color>> = c.chars().filter(|c| !c.is_whitespace()).map(Color::from_code).collect();
            colors = Some(parsed.ok_or(Error::Parse {
                line: i + 1,
                message: "colours must be r, b or k".into(),
            })?);
        } else {
            rest.push_str(line);
            rest.push('\n');
        }
    }
    let colors = colors.ok_or(Error::Parse {
        line: 1,
        message: "missing `colors:` line".into(),
    })?;
    Ok((parse_edge_list(&rest)?, colors))
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<Color>,
}

impl Builder {
    fn vertex(&mut self, c: Color) -> usize {
        self.colors.push(c);
        self.n += 1;
        self.n - 1
    }

    fn link(&mut self, e: usize, spec: PureLinkSpec) -> EdgeTrace {
        let a = self.vertex(Color::Blue);
        let b = self.vertex(Color::Blue);
        let inner: Vec<usize> = (0..spec.inner_count()).map(|_| self.vertex(Color::Red)).collect();
        let mut prev = a;
        for &r in &inner {
            self.edges.push((prev, r));
            prev = r;
        }
        self.edges.push((prev, b));
        if spec == PureLinkSpec::Triangle {
            self.edges.push((a, b));
        }
        EdgeTrace { edge: e, ends: (a, b), inner }
    }

    fn clique(&mut self, members: &[usize]) {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                self.edges.push((a, b));
            }
        }
    }

    fn finish(self) -> Result<SimpleGraph> {
        if self.n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("unfoldment has {} vertices, limit is 128", self.n)));
        }
        SimpleGraph::new(self.n, &self.edges)
    }
}

/// Unfoldment of a loopless multigraph. For each edge in index order the two
/// link ends come first (end at the first endpoint, then the second), then the
/// inner vertices in order.
pub fn unfold(f: &MultiGraph, assignment: &LinkAssignment) -> Result<ColoredGraph> {
    assignment.check_keys(f.edge_count(), None)?;
    let mut b = Builder { n: 0, edges: Vec::new(), colors: Vec::new() };
    let mut cliques = vec![Vec::new(); f.n()];
    let mut traces = Vec::new();
    for (e, &(u, v)) in f.edges().iter().enumerate() {
        let t = b.link(e, assignment.get(e)?);
        cliques[u].push(t.ends.0);
        cliques[v].push(t.ends.1);
        traces.push(t);
    }
    for k in &cliques {
        b.clique(k);
    }
    let colors = std::mem::take(&mut b.colors);
    let graph = b.finish()?;
    Ok(ColoredGraph {
        graph,
        colors,
        trace: Some(UnfoldmentTrace { edges: traces, cliques }),
    })
}

/// Unfoldment of a semi-loopless multigraph: vertex 0 is `x0`, vertex 1 is
/// `y0`, then the links of the unlabelled edges as in [`unfold`]. The edge
/// `x0y0` is added when `include_end_edge` is set, and always when `e0` is a loop.
pub fn unfold_semi(f: &SemiLooplessMultiGraph, assignment: &LinkAssignment, include_end_edge: bool) -> Result<ColoredLink> {
    assignment.check_keys(f.edge_count(), Some(f.e0()))?;
    let mut b = Builder { n: 0, edges: Vec::new(), colors: Vec::new() };
    let x0 = b.vertex(Color::Black);
    let y0 = b.vertex(Color::Black);
    let (u0, v0) = f.e0_ends();
    let mut cliques = vec![Vec::new(); f.n()];
    cliques[u0].push(x0);
    cliques[v0].push(y0);
    let mut traces = Vec::new();
    for (e, &(u, v)) in f.edges().iter().enumerate() {
        if e == f.e0() {
            continue;
        }
        let t = b.link(e, assignment.get(e)?);
        cliques[u].push(t.ends.0);
        cliques[v].push(t.ends.1);
        traces.push(t);
    }
    for k in &cliques {
        b.clique(k);
    }
    if include_end_edge && u0 != v0 {
        b.edges.push((x0, y0));
    }
    let colors = std::mem::take(&mut b.colors);
    let graph = b.finish()?;
    Ok(ColoredLink {
        graph,
        colors,
        x0,
        y0,
        trace: Some(UnfoldmentTrace { edges: traces, cliques }),
    })
}

/// Outcome of one structural condition with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub id: u8,
    pub holds: bool,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<ConditionResult>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| !c.holds)
    }
}

fn cond(id: u8, failure: Option<(Vec<usize>, String)>) -> ConditionResult {
    match failure {
        None => ConditionResult { id, holds: true, witness: Vec::new(), detail: String::new() },
        Some((witness, detail)) => ConditionResult { id, holds: false, witness, detail },
    }
}

fn set_of(colors: &[Color], c: Color) -> VertexSet {
    colors.iter().enumerate().filter(|(_, &k)| k == c).map(|(v, _)| v).collect()
}

/// Pairs `(a, b)`, `a < b`, of blue vertices joined by a path with only red inner vertices.
pub fn associated_pairs(g: &SimpleGraph, colors: &[Color]) -> Vec<(usize, usize)> {
    let red = set_of(colors, Color::Red);
    let blue = set_of(colors, Color::Blue);
    let mut pairs = Vec::new();
    for comp in components_within(g, red) {
        let touching: Vec<usize> = comp
            .iter()
            .fold(VertexSet::EMPTY, |acc, r| acc.union(g.neighbors(r)))
            .intersection(blue)
            .iter()
            .collect();
        for (i, &a) in touching.iter().enumerate() {
            for &b in &touching[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn base_conditions(g: &SimpleGraph, colors: &[Color], assoc: &[(usize, usize)], check_black: bool) -> Vec<ConditionResult> {
    let red = set_of(colors, Color::Red);
    let blue = set_of(colors, Color::Blue);
    let black = set_of(colors, Color::Black);
    let c1 = first_claw(g).map(|c| (c.to_vec(), "claw".to_string()));
    let c2 = red
        .iter()
        .find(|&r| g.degree(r) != 2)
        .map(|r| (vec![r], format!("red vertex of degree {}", g.degree(r))));
    let c3 = blue.iter().find_map(|b| {
        let k = g.neighbors(b).intersection(red).len();
        (k != 1).then(|| (vec![b], format!("blue vertex with {k} red neighbours")))
    });
    let shared = if check_black { blue.union(black) } else { blue };
    let c4 = assoc.iter().find_map(|&(a, b)| {
        g.neighbors(a)
            .intersection(g.neighbors(b))
            .intersection(shared)
            .first()
            .map(|z| (vec![a, b, z], "associated pair with a common neighbour".to_string()))
    });
    let c5 = assoc.iter().find_map(|&(a, b)| {
        let common_red = g.neighbors(a).intersection(g.neighbors(b)).intersection(red);
        (g.has_edge(a, b) && common_red.is_empty())
            .then(|| (vec![a, b], "adjacent associated pair without a common red neighbour".to_string()))
    });
    vec![cond(1, c1), cond(2, c2), cond(3, c3), cond(4, c4), cond(5, c5)]
}

/// Evaluates the five unfoldment conditions on a red/blue coloured graph.
pub fn check_unfoldment(cg: &ColoredGraph) -> ConditionReport {
    let assoc = associated_pairs(&cg.graph, &cg.colors);
    ConditionReport {
        conditions: base_conditions(&cg.graph, &cg.colors, &assoc, false),
    }
}

/// Evaluates the six coloured-link conditions.
pub fn check_semi_unfoldment(l: &ColoredLink) -> ConditionReport {
    let g = &l.graph;
    let assoc = associated_pairs(g, &l.colors);
    let mut conditions = base_conditions(g, &l.colors, &assoc, true);
    let red = set_of(&l.colors, Color::Red);
    let blue = set_of(&l.colors, Color::Blue);
    let c6 = [l.x0, l.y0].into_iter().find_map(|k| {
        if let Some(r) = g.neighbors(k).intersection(red).first() {
            return Some((vec![k, r], "black vertex with a red neighbour".to_string()));
        }
        let nb: Vec<usize> = g.neighbors(k).intersection(blue).iter().collect();
        nb.iter().enumerate().find_map(|(i, &a)| {
            nb[i + 1..]
                .iter()
                .find(|&&b| !g.has_edge(a, b))
                .map(|&b| (vec![k, a, b], "black vertex with non-adjacent blue neighbours".to_string()))
        })
    });
    conditions.push(cond(6, c6));
    ConditionReport { conditions }
}

/// A multigraph recovered from an unfoldment, with the correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldResult {
    pub multigraph: MultiGraph,
    /// Multigraph vertex of each blue vertex.
    pub vertex_of: Vec<Option<usize>>,
    /// Feasible path (blue end, reds.., blue end) behind each multigraph edge.
    pub paths: Vec<Vec<usize>>,
}

/// Red interior from blue `a` to its associated partner.
fn feasible_path(g: &SimpleGraph, colors: &[Color], a: usize) -> Result<Vec<usize>> {
    let red = set_of(colors, Color::Red);
    let r = g
        .neighbors(a)
        .intersection(red)
        .first()
        .ok_or_else(|| Error::NotUnfoldment(format!("blue vertex {a} has no red neighbour")))?;
    let mut path = vec![a, r];
    let (mut prev, mut cur) = (a, r);
    loop {
        let next = g.neighbors(cur).difference(VertexSet::singleton(prev));
        let Some(nx) = next.first() else {
            return Err(Error::NotUnfoldment(format!("red vertex {cur} is a dead end")));
        };
        path.push(nx);
        if colors[nx] != Color::Red {
            return Ok(path);
        }
        if path.len() > g.n() {
            return Err(Error::NotUnfoldment("red cycle".into()));
        }
        prev = cur;
        cur = nx;
    }
}

fn fold_parts(g: &SimpleGraph, colors: &[Color]) -> Result<FoldResult> {
    let blue = set_of(colors, Color::Blue);
    let red = set_of(colors, Color::Red);
    if blue.is_empty() {
        return Err(Error::NotUnfoldment("no blue vertices".into()));
    }
    for comp in components_within(g, red) {
        let ends = comp
            .iter()
            .fold(VertexSet::EMPTY, |acc, r| acc.union(g.neighbors(r)))
            .difference(red);
        if ends.len() != 2 || !ends.is_subset(blue) {
            return Err(Error::NotUnfoldment(format!("red component {comp:?} does not join two blue vertices")));
        }
    }
    let assoc = associated_pairs(g, colors);
    let mut gb = g.induced_by_order(&(0..g.n()).collect::<Vec<_>>());
    for &(a, b) in &assoc {
        gb.remove_edge(a, b);
    }
    let comps = components_within(&gb, blue);
    let mut vertex_of = vec![None; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            vertex_of[v] = Some(i);
        }
    }
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for a in blue.iter() {
        let path = feasible_path(g, colors, a)?;
        let b = *path.last().expect("non-empty path");
        if b > a {
            let (fa, fb) = (vertex_of[a].expect("blue"), vertex_of[b].expect("blue"));
            if fa == fb {
                return Err(Error::NotUnfoldment(format!("associated vertices {a} and {b} share a clique")));
            }
            edges.push((fa, fb));
            paths.push(path);
        }
    }
    Ok(FoldResult {
        multigraph: MultiGraph::new(comps.len(), edges)?,
        vertex_of,
        paths,
    })
}

/// Recovers the multigraph of a coloured graph satisfying the five conditions.
/// Multigraph vertices follow the smallest blue id of each clique; edges follow
/// the smaller end of each feasible path.
pub fn fold(cg: &ColoredGraph) -> Result<FoldResult> {
    let report = check_unfoldment(cg);
    if let Some(c) = report.first_failure() {
        return Err(Error::NotUnfoldment(format!("condition ({}) fails: {} {:?}", c.id, c.detail, c.witness)));
    }
    fold_parts(&cg.graph, &cg.colors)
}

/// A semi-loopless multigraph recovered from a coloured link. When an end of
/// the link has no blue neighbour, the labelled edge gets a fresh endpoint and
/// the matching flag is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiFoldResult {
    pub multigraph: SemiLooplessMultiGraph,
    pub fresh_u0: bool,
    pub fresh_v0: bool,
}

pub fn fold_semi(l: &ColoredLink) -> Result<SemiFoldResult> {
    let report = check_semi_unfoldment(l);
    if let Some(c) = report.first_failure() {
        return Err(Error::NotUnfoldment(format!("condition ({}) fails: {} {:?}", c.id, c.detail, c.witness)));
    }
    let keep: Vec<usize> = (0..l.graph.n()).filter(|&v| v != l.x0 && v != l.y0).collect();
    if keep.is_empty() {
        return Err(Error::NotUnfoldment("link has no inner vertices".into()));
    }
    let inner = l.graph.induced_by_order(&keep);
    let colors: Vec<Color> = keep.iter().map(|&v| l.colors[v]).collect();
    let part = fold_parts(&inner, &colors)?;
    let mut n = part.multigraph.n();
    let mut edges = part.multigraph.edges().to_vec();
    let mut end_vertex = |k: usize| -> (usize, bool) {
        let nb = l.graph.neighbors(k);
        match keep.iter().position(|&v| nb.contains(v) && l.colors[v] == Color::Blue) {
            Some(i) => (part.vertex_of[i].expect("blue"), false),
            None => {
                n += 1;
                (n - 1, true)
            }
        }
    };
    let (u0, fresh_u0) = end_vertex(l.x0);
    let (v0, fresh_v0) = end_vertex(l.y0);
    edges.push((u0, v0));
    let e0 = edges.len() - 1;
    Ok(SemiFoldResult {
        multigraph: SemiLooplessMultiGraph::new(n, edges, e0)?,
        fresh_u0,
        fresh_v0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{multigraph_isomorphic, semi_isomorphic};

    fn k4() -> MultiGraph {
        MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn k4_all_triangles() {
        let f = k4();
        let g = unfold(&f, &LinkAssignment::uniform(0..6, PureLinkSpec::Triangle)).unwrap();
        assert_eq!(g.graph.n(), 18);
        assert_eq!(g.colors.iter().filter(|&&c| c == Color::Red).count(), 6);
        assert!(check_unfoldment(&g).all_hold());
        let back = fold(&g).unwrap();
        assert!(multigraph_isomorphic(&back.multigraph, &f).unwrap().is_some());
    }

    #[test]
    fn missing_assignment() {
        let a = LinkAssignment::uniform(0..5, PureLinkSpec::Triangle);
        assert!(matches!(unfold(&k4(), &a), Err(Error::Assignment(_))));
        let bad = LinkAssignment::uniform(0..6, PureLinkSpec::Path(1));
        assert!(unfold(&k4(), &bad).is_err());
    }

    #[test]
    fn dipole_with_loop_gives_eleven_vertices() {
        let f = SemiLooplessMultiGraph::new(2, vec![(0, 1), (0, 1), (0, 1), (1, 1)], 3).unwrap();
        let l = unfold_semi(&f, &LinkAssignment::uniform(0..3, PureLinkSpec::Triangle), false).unwrap();
        assert_eq!(l.graph.n(), 11);
        assert!(l.has_end_edge());
        assert!(check_semi_unfoldment(&l).all_hold());
        let back = fold_semi(&l).unwrap();
        assert!(!back.fresh_u0 && !back.fresh_v0);
        assert!(semi_isomorphic(&back.multigraph, &f).unwrap().is_some());
    }

    #[test]
    fn colored_text_round_trip() {
        let g = unfold(&k4(), &LinkAssignment::uniform(0..6, PureLinkSpec::Path(3))).unwrap();
        let (h, c) = parse_colored(&g.to_text()).unwrap();
        assert_eq!(h, g.graph);
        assert_eq!(c, g.colors);
    }

    #[test]
    fn non_unfoldment_rejected() {
        let g = SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cg = ColoredGraph::new(g, vec![Color::Blue; 4]).unwrap();
        let r = check_unfoldment(&cg);
        assert!(!r.all_hold());
        assert_eq!(r.first_failure().unwrap().id, 1);
        assert!(fold(&cg).is_err());
    }

    #[test]
    fn shape_parsing() {
        assert_eq!(parse_link_specs("t,p2,P3").unwrap(), vec![PureLinkSpec::Triangle, PureLinkSpec::Path(2), PureLinkSpec::Path(3)]);
        assert!("p1".parse::<PureLinkSpec>().is_err());
        assert!("x".parse::<PureLinkSpec>().is_err());
    }
}
