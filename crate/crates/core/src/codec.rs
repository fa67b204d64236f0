//! graph6 (short form, n <= 62) and the plain edge-list text format.
//!
//! Edge-list format: first non-comment line `n m`, then `m` lines `u v`.
//! Lines starting with `#` are comments; `# label <name> = <vertex>` lines
//! carry vertex names and are collected by [`parse_edge_list_labeled`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest order representable in the short graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

pub fn to_graph6(g: &SimpleGraph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::TooLarge(format!("graph6 short form supports n <= 62, got {n}")));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut len = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            len += 1;
            if len == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                len = 0;
            }
        }
    }
    if len > 0 {
        out.push(((acc << (6 - len)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(s: &str) -> Result<SimpleGraph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad header byte {head}")));
    }
    if head == 126 {
        return Err(Error::Graph6("long-form header (n > 62) unsupported".into()));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("zero vertices".into()));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "payload has {} bytes, expected {need}",
            body.len()
        )));
    }
    let mut g = SimpleGraph::empty(n)?;
    let mut k = 0;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("bad payload byte {b}")));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let bit = v >> shift & 1 == 1;
            if k < bits {
                let (i, j) = pairs.next().expect("pair count matches bit count");
                if bit {
                    g.add_edge(i, j);
                }
            } else if bit {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Writes the edge-list text format, with optional label comment lines.
pub fn to_edge_list(g: &SimpleGraph, labels: Option<&BTreeMap<String, usize>>) -> String {
    let mut out = String::new();
    if let Some(labels) = labels {
        for (name, v) in labels {
            let _ = writeln!(out, "# label {name} = {v}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    parse_edge_list_labeled(text).map(|(g, _)| g)
}

pub fn parse_edge_list_labeled(text: &str) -> Result<(SimpleGraph, BTreeMap<String, usize>)> {
    let mut labels = BTreeMap::new();
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("label ") {
                if let Some((name, v)) = rest.split_once('=') {
                    let v = parse_usize(v.trim(), idx + 1)?;
                    labels.insert(name.trim().to_string(), v);
                }
            }
            continue;
        }
        if !line.is_empty() {
            lines.push((idx + 1, line));
        }
    }
    let mut it = lines.into_iter();
    let (hl, header) = it.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let (n, m) = parse_pair(header, hl)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in it.by_ref().take(m) {
        edges.push(parse_pair(line, ln)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hl,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    if let Some((ln, _)) = it.next() {
        return Err(Error::Parse {
            line: ln,
            message: "trailing content after the edge list".into(),
        });
    }
    Ok((SimpleGraph::new(n, &edges)?, labels))
}

pub(crate) fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected an integer, got {s:?}"),
    })
}

pub(crate) fn parse_pair(line: &str, ln: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => Ok((parse_usize(a, ln)?, parse_usize(b, ln)?)),
        _ => Err(Error::Parse {
            line: ln,
            message: format!("expected two integers, got {line:?}"),
        }),
    }
}

/// Parses a file holding either one edge-list graph or graph6 strings, one per line.
pub fn parse_graphs(text: &str) -> Result<Vec<SimpleGraph>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.split_whitespace().count() == 2 => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(from_graph6)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_from_graph6() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&SimpleGraph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(to_graph6(&SimpleGraph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&SimpleGraph::path(3).unwrap()).unwrap(), "Bg");
    }

    #[test]
    fn malformed_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("?").is_err());
        assert!(from_graph6("D?").is_err());
        assert!(from_graph6("D?{{").is_err());
        assert!(from_graph6("~").is_err());
        assert!(from_graph6("D? ").is_err());
        // padding bits must be zero: n=3 has 3 bits, byte 'A' (2) sets padding
        assert!(from_graph6("BA").is_err());
    }

    #[test]
    fn too_large_for_graph6() {
        assert!(to_graph6(&SimpleGraph::empty(63).unwrap()).is_err());
    }

    #[test]
    fn edge_list_round_trip_with_labels() {
        let g = SimpleGraph::cycle(4).unwrap();
        let mut labels = BTreeMap::new();
        labels.insert("x".to_string(), 2);
        let text = to_edge_list(&g, Some(&labels));
        let (h, l) = parse_edge_list_labeled(&text).unwrap();
        assert_eq!(h, g);
        assert_eq!(l, labels);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn detects_file_kind() {
        assert_eq!(parse_graphs("D?{\nC~\n").unwrap().len(), 2);
        assert_eq!(parse_graphs("# c\n2 1\n0 1\n").unwrap().len(), 1);
    }
}
