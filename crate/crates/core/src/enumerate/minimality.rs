use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Largest graph accepted by [`minimality_scan`].
pub const MAX_SCAN_N: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    /// No proper nonempty induced subgraph has the property.
    pub is_minimal: bool,
    /// Whether the whole graph has the property.
    pub whole_satisfies: bool,
    /// Largest proper vertex subset found whose induced subgraph has the property.
    pub witness: Option<Vec<usize>>,
    pub subsets_checked: u64,
}

/// Combinations of `k` out of `0..n` as bitmasks in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<u128> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u128, |m, &i| m | 1 << i));
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Checks every proper nonempty vertex subset, largest first, and stops at
/// the first whose induced subgraph satisfies `property`. Within one size,
/// subsets are visited in lexicographic order, so the result is deterministic.
pub fn minimality_scan<P>(g: &SimpleGraph, property: P) -> Result<MinimalityVerdict>
where
    P: Fn(&SimpleGraph) -> bool + Sync,
{
    let n = g.n();
    if n > MAX_SCAN_N {
        return Err(Error::TooLarge(format!("minimality scan supports n <= {MAX_SCAN_N}, got {n}")));
    }
    let whole_satisfies = property(g);
    let mut checked = 0u64;
    for size in (1..n).rev() {
        let subsets = combinations(n, size);
        checked += subsets.len() as u64;
        let hit = subsets.par_iter().find_first(|&&mask| {
            let (sub, _) = g.induced_subgraph(VertexSet(mask)).expect("nonempty subset");
            property(&sub)
        });
        if let Some(&mask) = hit {
            return Ok(MinimalityVerdict {
                is_minimal: false,
                whole_satisfies,
                witness: Some(VertexSet(mask).iter().collect()),
                subsets_checked: checked,
            });
        }
    }
    Ok(MinimalityVerdict { is_minimal: true, whole_satisfies, witness: None, subsets_checked: checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_biconnected;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(combinations(3, 3), vec![0b111]);
    }

    #[test]
    fn k5_is_not_minimal_for_biconnectivity() {
        let v = minimality_scan(&SimpleGraph::complete(5).unwrap(), is_biconnected).unwrap();
        assert!(!v.is_minimal && v.whole_satisfies);
        assert_eq!(v.witness, Some(vec![0, 1, 2, 3]));
        let c = minimality_scan(&SimpleGraph::cycle(5).unwrap(), is_biconnected).unwrap();
        assert!(c.is_minimal);
    }
}
