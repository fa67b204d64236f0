use std::collections::BTreeMap;

use serde::Serialize;

use super::LabeledGraph;
use crate::connectivity::is_biconnected;
use crate::error::{Error, Result};
use crate::forbidden::{find_forbidden, longest_induced_path, ForbiddenSpec};
use crate::graph::SimpleGraph;
use crate::metrics::is_cycle;

/// Smallest admissible `k` for each counterexample graph, index 0 for `G1`.
pub const G_MIN_K: [usize; 9] = [4, 4, 3, 4, 3, 5, 3, 3, 9];

/// A checkable structural claim about one of the counterexample graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CounterexampleFact {
    Biconnected,
    NotCycle,
    NoSpanningTheta,
    Free(ForbiddenSpec),
    LongestInducedPath(usize),
}

/// Facts claimed for `G_i` with clique or row parameter `k`. Everything except
/// `NoSpanningTheta` is checked by the generator itself.
///
/// `G7` is `Z6`-free only at `k = 3`: with a fourth clique vertex `w`, the
/// triangle `w w' x1` and the path `x1 x2 x3 y3 y2 z12 u1` form an induced `Z6`.
pub fn counterexample_facts(i: u8, k: usize) -> Vec<CounterexampleFact> {
    use CounterexampleFact::*;
    use ForbiddenSpec::*;
    let mut facts = vec![Biconnected, NotCycle, NoSpanningTheta];
    let free: &[ForbiddenSpec] = match i {
        2 => &[Cycle(4)],
        3 => &[Star(5)],
        4 => &[Star(4)],
        5 => &[Cycle(4), Star(5), Star(4)],
        6 => &[Cycle(4), Star(5), Star(4), Star(3)],
        7 if k == 3 => &[Star(3), Z(6), N(1, 1, 5), N(2, 2, 2)],
        7 => &[Star(3), N(1, 1, 5), N(2, 2, 2)],
        8 => &[Star(3), B(3, 3)],
        9 => &[Star(3), B(2, 5), N(1, 2, 4)],
        _ => &[],
    };
    facts.extend(free.iter().map(|&s| Free(s)));
    let lip = match i {
        2 | 3 => Some(3),
        4 => Some(4),
        9 => Some(8),
        _ => None,
    };
    facts.extend(lip.map(LongestInducedPath));
    facts
}

struct Builder {
    labels: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder { labels: BTreeMap::new(), edges: Vec::new() }
    }

    fn v(&mut self, name: &str) -> usize {
        let next = self.labels.len();
        *self.labels.entry(name.to_string()).or_insert(next)
    }

    fn path(&mut self, names: &[&str]) {
        for w in names.windows(2) {
            let (a, b) = (self.v(w[0]), self.v(w[1]));
            self.edges.push((a, b));
        }
    }

    fn clique(&mut self, names: &[String]) {
        let ids: Vec<usize> = names.iter().map(|s| self.v(s)).collect();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                self.edges.push((a, b));
            }
        }
    }

    fn triangle(&mut self, a: &str, b: &str, c: &str) {
        self.path(&[a, b, c, a]);
    }

    /// Row of named vertices `prefix1..prefix{len}` joined as a path.
    fn row(&mut self, prefix: &str, len: usize) {
        let names: Vec<String> = (1..=len).map(|j| format!("{prefix}{j}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        for r in &refs {
            self.v(r);
        }
        self.path(&refs);
    }

    fn finish(self) -> Result<LabeledGraph> {
        let mut edges: Vec<(usize, usize)> = self.edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        edges.dedup();
        let graph = SimpleGraph::new(self.labels.len(), &edges)?;
        Ok(LabeledGraph { graph, labels: self.labels, colors: None })
    }
}

/// Clique of size `k` containing the `marked` names plus fillers `w1`, `w2`, ...
fn clique_with(b: &mut Builder, k: usize, marked: &[&str]) {
    let mut names: Vec<String> = marked.iter().map(|s| s.to_string()).collect();
    names.extend((1..=k - marked.len()).map(|j| format!("w{j}")));
    b.clique(&names);
}

fn v_names(k: usize) -> Vec<String> {
    (1..=k).map(|j| format!("v{j}")).collect()
}

/// Builds `G_i` with parameter `k` and checks it against its stated facts.
///
/// Vertex names follow the drawings: `v1..vk` for the numbered row or clique,
/// `w1..` for unnamed clique vertices, and the drawn letters elsewhere.
pub fn gen_g(i: u8, k: usize) -> Result<LabeledGraph> {
    if i == 6 {
        return gen_g6_rows(k, [5, 5, 5]);
    }
    let min = *G_MIN_K
        .get((i as usize).wrapping_sub(1))
        .ok_or_else(|| Error::FamilyParams(format!("no counterexample graph G{i}")))?;
    if k < min {
        return Err(Error::FamilyParams(format!("G{i} needs k >= {min}, got {k}")));
    }
    let mut b = Builder::new();
    match i {
        1 | 2 => {
            for v in v_names(k) {
                b.path(&["u1", &v, "u2"]);
            }
            if i == 2 {
                b.path(&["u1", "u2"]);
            }
        }
        3 => {
            b.clique(&v_names(k));
            for u in ["u1", "u2", "u3"] {
                b.path(&["v1", u, "v2"]);
            }
        }
        4 => {
            b.clique(&v_names(k));
            for (u, x, y) in [("u1", "v1", "v2"), ("u2", "v1", "v2"), ("u3", "v3", "v4"), ("u4", "v3", "v4")] {
                b.path(&[x, u, y]);
            }
        }
        5 => {
            b.path(&["x1", "x2", "x3"]);
            b.path(&["y1", "y2", "y3"]);
            b.row("v", k);
            let vk = format!("v{k}");
            b.path(&["x1", "v1"]);
            b.path(&[&vk, "y1"]);
            for (row, l, r) in [("b", "x1", "y1"), ("c", "x3", "y3"), ("d", "x3", "y3")] {
                b.row(row, 3);
                b.path(&[l, &format!("{row}1")]);
                b.path(&[&format!("{row}3"), r]);
            }
        }
        7 => {
            clique_with(&mut b, k, &["x1", "y1"]);
            for (p, q, r) in [
                ("x1", "x2", "z11"),
                ("y1", "y2", "z12"),
                ("x2", "x3", "z21"),
                ("y2", "y3", "z22"),
                ("z11", "z12", "u1"),
                ("z21", "z22", "u2"),
                ("x3", "y3", "u3"),
            ] {
                b.triangle(p, q, r);
            }
        }
        8 => {
            clique_with(&mut b, k, &["a0", "e0"]);
            b.path(&["a0", "a2", "a3", "a5"]);
            b.path(&["e0", "e2", "e3", "e5"]);
            b.path(&["a0", "b1", "a2"]);
            b.path(&["a3", "b4", "a5"]);
            b.path(&["e0", "d1", "e2"]);
            b.path(&["e3", "d4", "e5"]);
            b.triangle("b1", "c1", "d1");
            b.triangle("b4", "c3", "d4");
            b.triangle("a5", "c4", "e5");
            b.clique(&["a2", "a3", "e2", "e3"].map(String::from));
        }
        _ => {
            let xs: Vec<String> = (1..=9).map(|j| format!("x{j}")).collect();
            let refs: Vec<&str> = xs.iter().map(String::as_str).collect();
            clique_with(&mut b, k, &refs);
            for j in 1..=9 {
                b.triangle(&format!("x{j}"), &format!("y{j}"), &format!("z{j}"));
            }
            for j in [1, 4, 7] {
                b.triangle(&format!("y{j}"), &format!("y{}", j + 1), &format!("y{}", j + 2));
            }
        }
    }
    validated(i, k, b.finish()?)
}

/// `G6` with the lengths (vertex counts, at least 2) of its `b`, `c` and `d`
/// rows given explicitly. The drawing shows 5 vertices in each.
pub fn gen_g6_rows(k: usize, rows: [usize; 3]) -> Result<LabeledGraph> {
    if k < G_MIN_K[5] {
        return Err(Error::FamilyParams(format!("G6 needs k >= {}, got {k}", G_MIN_K[5])));
    }
    if rows.iter().any(|&r| r < 2) {
        return Err(Error::FamilyParams(format!("G6 rows need at least 2 vertices, got {rows:?}")));
    }
    let mut b = Builder::new();
    b.path(&["z11", "x1", "x2", "x3", "z12"]);
    b.path(&["z21", "y1", "y2", "y3", "z22"]);
    b.row("v", k);
    for (row, len) in ["b", "c", "d"].into_iter().zip(rows) {
        b.row(row, len);
    }
    let last = |row: &str, len: usize| format!("{row}{len}");
    let vk = format!("v{k}");
    b.triangle("v1", "z11", "b1");
    b.triangle("c1", "z12", "d1");
    b.triangle(&vk, "z21", &last("b", rows[0]));
    b.triangle(&last("c", rows[1]), "z22", &last("d", rows[2]));
    validated(6, k, b.finish()?)
}

fn validated(i: u8, k: usize, g: LabeledGraph) -> Result<LabeledGraph> {
    for fact in counterexample_facts(i, k) {
        let ok = match &fact {
            CounterexampleFact::Biconnected => is_biconnected(&g.graph),
            CounterexampleFact::NotCycle => !is_cycle(&g.graph),
            CounterexampleFact::NoSpanningTheta => true,
            CounterexampleFact::Free(s) => find_forbidden(&g.graph, *s)?.is_none(),
            CounterexampleFact::LongestInducedPath(l) => longest_induced_path(&g.graph) == *l,
        };
        if !ok {
            return Err(Error::SelfValidation(format!("G{i} on {} vertices violates {fact:?}", g.graph.n())));
        }
    }
    Ok(g)
}

/// Two disjoint triangles `a1a2a3`, `b1b2b3` with each pair `ai, bi` joined
/// by a triangle through `ci` when `ki = 2`, else by a path through
/// `ci.1 .. ci.(ki-2)`.
pub fn gen_brousek(k1: usize, k2: usize, k3: usize) -> Result<LabeledGraph> {
    let ks = [k1, k2, k3];
    if ks.iter().any(|&k| k < 2) {
        return Err(Error::FamilyParams(format!("each k must be at least 2, got {ks:?}")));
    }
    let mut b = Builder::new();
    b.triangle("a1", "a2", "a3");
    b.triangle("b1", "b2", "b3");
    for (i, &k) in ks.iter().enumerate() {
        let (a, bb) = (format!("a{}", i + 1), format!("b{}", i + 1));
        if k == 2 {
            b.triangle(&a, &bb, &format!("c{}", i + 1));
        } else {
            let mut names = vec![a];
            names.extend((1..=k - 2).map(|j| format!("c{}.{j}", i + 1)));
            names.push(bb);
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            b.path(&refs);
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forbidden::{find_induced, is_claw_free, make_forbidden};
    use crate::hamilton::hamilton_cycle;

    #[test]
    fn all_graphs_pass_self_validation() {
        let sizes: Vec<usize> = (1..=9u8).map(|i| gen_g(i, G_MIN_K[i as usize - 1]).unwrap().graph.n()).collect();
        assert_eq!(sizes, vec![6, 6, 6, 8, 18, 30, 14, 16, 27]);
        for i in 1..=9u8 {
            if let Err(e) = gen_g(i, G_MIN_K[i as usize - 1] + 2) { panic!("G{i}: {e}") }
        }
    }

    #[test]
    fn k_below_minimum() {
        assert!(matches!(gen_g(1, 3), Err(Error::FamilyParams(_))));
        assert!(matches!(gen_g(9, 8), Err(Error::FamilyParams(_))));
        assert!(gen_g(10, 9).is_err());
        assert!(gen_g(0, 9).is_err());
    }

    #[test]
    fn g7_z6_only_at_smallest_clique() {
        let z6 = make_forbidden(ForbiddenSpec::Z(6)).unwrap();
        assert!(find_induced(&gen_g(7, 3).unwrap().graph, &z6).unwrap().is_none());
        let g = gen_g(7, 4).unwrap();
        let hit = find_induced(&g.graph, &z6).unwrap();
        assert!(hit.is_some());
    }

    #[test]
    fn g1_is_k2k() {
        let g = gen_g(1, 4).unwrap().graph;
        assert_eq!((g.n(), g.edge_count()), (6, 8));
    }

    #[test]
    fn g6_row_override() {
        assert_eq!(gen_g6_rows(5, [3, 4, 6]).unwrap().graph.n(), 5 + 10 + 13);
        assert!(gen_g6_rows(5, [1, 5, 5]).is_err());
    }

    #[test]
    fn brousek_sizes() {
        let p = gen_brousek(2, 2, 2).unwrap().graph;
        assert_eq!(p.n(), 9);
        assert!(is_claw_free(&p));
        assert_eq!(hamilton_cycle(&p).unwrap(), None);
        assert_eq!(gen_brousek(3, 2, 2).unwrap().graph.n(), 9);
        assert_eq!(gen_brousek(4, 3, 2).unwrap().graph.n(), 6 + 2 + 1 + 1);
        assert!(gen_brousek(1, 2, 2).is_err());
    }
}
