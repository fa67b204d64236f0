use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_N: usize = 10;

/// Exact isomorphism invariant of a graph on at most 10 vertices.
///
/// `bits` holds the upper-triangle adjacency string in column order
/// (`(0,1), (0,2), (1,2), (0,3), ...`), first pair in the most significant of
/// the `n(n-1)/2` low bits. Among all vertex orders reachable by colour
/// refinement and individualization it is the lexicographically smallest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalForm {
    /// `n` followed by the bit string packed big-endian, padded with zeros.
    pub fn to_bytes(&self) -> Vec<u8> {
        let m = pair_count(self.n as usize);
        let mut out = vec![self.n];
        let mut byte = 0u8;
        for k in 0..m {
            let bit = (self.bits >> (m - 1 - k)) & 1;
            byte = (byte << 1) | bit as u8;
            if k % 8 == 7 {
                out.push(byte);
                byte = 0;
            }
        }
        if m % 8 != 0 {
            out.push(byte << (8 - m % 8));
        }
        out
    }

    /// The graph whose vertex order realises this form.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.n as usize;
        let m = pair_count(n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bits >> (m - 1 - k)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        SimpleGraph::new(n.max(1), &edges).expect("valid form")
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Column-order adjacency string of `g` read in the vertex order `order`.
pub(crate) fn string_for_order(rows: &[u16], order: &[usize]) -> u64 {
    let mut s = 0u64;
    for j in 1..order.len() {
        let row = rows[order[j]];
        for &u in &order[..j] {
            s = (s << 1) | ((row >> u) & 1) as u64;
        }
    }
    s
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(Error::TooLarge(format!("canonical form supports n <= {MAX_CANON_N}, got {n}")));
    }
    let rows: Vec<u16> = g.rows().iter().map(|&r| r as u16).collect();
    let mut search = Search { rows: &rows, n, best: None };
    let initial = refine(&rows, vec![((1u32 << n) - 1) as u16]);
    search.descend(initial);
    Ok(CanonicalForm { n: n as u8, bits: search.best.expect("at least one leaf") })
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell. Sub-cells are ordered by that count vector,
/// so the result depends only on the isomorphism type of (graph, partition).
fn refine(rows: &[u16], mut cells: Vec<u16>) -> Vec<u16> {
    loop {
        let mut changed = false;
        let mut next = Vec::with_capacity(cells.len());
        for &cell in &cells {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(u64, u16)> = Vec::new();
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let sig = cells
                    .iter()
                    .fold(0u64, |acc, &c| (acc << 4) | (rows[v] & c).count_ones() as u64);
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, m)) => *m |= 1 << v,
                    None => groups.push((sig, 1 << v)),
                }
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort_unstable_by_key(|&(s, _)| s);
            }
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    best: Option<u64>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u16>) {
        // Leading singleton cells fix a prefix of the final order.
        let fixed: Vec<usize> = cells
            .iter()
            .take_while(|c| c.count_ones() == 1)
            .map(|c| c.trailing_zeros() as usize)
            .collect();
        if let Some(best) = self.best {
            let p = fixed.len();
            let total = pair_count(self.n);
            let prefix = string_for_order(self.rows, &fixed);
            if prefix > best >> (total - pair_count(p)) {
                return;
            }
        }
        if fixed.len() == self.n {
            let s = string_for_order(self.rows, &fixed);
            if self.best.is_none_or(|b| s < b) {
                self.best = Some(s);
            }
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition");
        let cell = cells[target];
        let mut tried: u16 = 0;
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Skip v when it is a twin of an already individualized vertex of
            // this cell: swapping twins is an automorphism fixing the partition.
            let twin_of_tried = {
                let mut t = tried;
                let mut hit = false;
                while t != 0 {
                    let u = t.trailing_zeros() as usize;
                    t &= t - 1;
                    let mask = !((1u16 << u) | (1u16 << v));
                    if self.rows[u] & mask == self.rows[v] & mask {
                        hit = true;
                        break;
                    }
                }
                hit
            };
            if twin_of_tried {
                continue;
            }
            tried |= 1 << v;
            let mut split = cells.clone();
            split[target] = cell & !(1 << v);
            split.insert(target, 1 << v);
            let refined = refine(self.rows, split);
            self.descend(refined);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_cycles() {
        let k3 = canonical_form(&SimpleGraph::complete(3).unwrap()).unwrap();
        assert_eq!(k3, CanonicalForm { n: 3, bits: 0b111 });
        let c4a = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c4b = SimpleGraph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c4a).unwrap(), canonical_form(&c4b).unwrap());
        assert_ne!(canonical_form(&c4a).unwrap(), canonical_form(&SimpleGraph::path(4).unwrap()).unwrap());
    }

    #[test]
    fn bytes_and_graph() {
        let f = canonical_form(&SimpleGraph::path(4).unwrap()).unwrap();
        assert_eq!(canonical_form(&f.to_graph()).unwrap(), f);
        let b = f.to_bytes();
        assert_eq!(b[0], 4);
        assert_eq!(b.len(), 2);
        assert!(canonical_form(&SimpleGraph::empty(11).unwrap()).is_err());
    }
}
