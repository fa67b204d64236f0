//! Isomorph-free generation of small graphs and multigraphs, canonical forms,
//! and exhaustive minimality scans.

mod canon;
mod minimality;
mod multi;

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

pub use canon::{canonical_form, CanonicalForm, MAX_CANON_N};
pub use minimality::{minimality_scan, MinimalityVerdict, MAX_SCAN_N};
pub use multi::{
    enumerate_multigraphs, is_minimal_odd_multigraph, is_minimal_odd_semi, MultigraphMode, MAX_MULTIPLICITY,
    MAX_MULTI_N_LOOPLESS, MAX_MULTI_N_SEMI,
};

/// Largest order generated natively.
pub const MAX_ENUM_N: usize = 9;

/// Class representatives on `1..=max_n` vertices of a hereditary class given
/// by `keep`. Level `k` (index `k - 1`) is sorted by canonical form and each
/// graph is returned in its canonical vertex order.
///
/// Every member on `k` vertices arises from a member on `k - 1` vertices by
/// adding one vertex, so completeness needs `keep` to be closed under taking
/// induced subgraphs. With a non-hereditary `keep` the levels are incomplete.
pub fn enumerate_hereditary<K>(max_n: usize, keep: K) -> Result<Vec<Vec<SimpleGraph>>>
where
    K: Fn(&SimpleGraph) -> bool + Sync,
{
    if max_n == 0 || max_n > MAX_ENUM_N {
        return Err(Error::TooLarge(format!("graph enumeration supports 1 <= n <= {MAX_ENUM_N}, got {max_n}")));
    }
    let single = SimpleGraph::empty(1)?;
    let mut levels: Vec<Vec<SimpleGraph>> = vec![if keep(&single) { vec![single] } else { Vec::new() }];
    for k in 1..max_n {
        let parents = &levels[k - 1];
        let mut forms: Vec<CanonicalForm> = parents
            .par_iter()
            .map(|p| {
                let mut local = HashSet::new();
                for nbrs in 0u128..(1 << k) {
                    let mut child = p.clone();
                    child.add_vertex(VertexSet(nbrs)).expect("order stays small");
                    if keep(&child) {
                        local.insert(canonical_form(&child).expect("order <= 9"));
                    }
                }
                local.into_iter().collect::<Vec<_>>()
            })
            .flatten()
            .collect();
        forms.par_sort_unstable();
        forms.dedup();
        levels.push(forms.iter().map(CanonicalForm::to_graph).collect());
    }
    Ok(levels)
}

/// One representative per isomorphism class of graphs on `n` vertices that
/// satisfy `predicate`, sorted by canonical form. The predicate is applied
/// after deduplication.
pub fn enumerate_graphs<P>(n: usize, predicate: P) -> Result<Vec<SimpleGraph>>
where
    P: Fn(&SimpleGraph) -> bool + Sync,
{
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::TooLarge(format!("graph enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")));
    }
    let mut levels = enumerate_hereditary(n, |_| true)?;
    let all = levels.pop().expect("n >= 1");
    Ok(all.into_par_iter().filter(|g| predicate(g)).collect())
}

/// Deduplicates an external stream (for instance graph6 lines) by canonical
/// form, keeping the first graph of each class in input order.
pub fn canonical_classes<I>(graphs: I) -> Result<Vec<SimpleGraph>>
where
    I: IntoIterator<Item = SimpleGraph>,
{
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert(canonical_form(&g)?) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{is_biconnected, is_connected};

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = enumerate_hereditary(6, |_| true).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        assert_eq!(enumerate_graphs(4, is_connected).unwrap().len(), 6);
        assert_eq!(enumerate_graphs(5, is_biconnected).unwrap().len(), 10);
        assert_eq!(enumerate_graphs(3, |_| true).unwrap().len(), 4);
    }

    #[test]
    fn range_checks() {
        assert!(enumerate_graphs(0, |_| true).is_err());
        assert!(enumerate_graphs(10, |_| true).is_err());
    }

    #[test]
    fn hereditary_triangle_free() {
        let tf = |g: &SimpleGraph| crate::metrics::clique_number(g) < 3;
        let levels = enumerate_hereditary(6, tf).unwrap();
        // triangle-free graphs on 1..6 vertices
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38]);
    }
}
