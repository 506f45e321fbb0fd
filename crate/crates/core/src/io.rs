//! Reading and writing DIMACS-style and plain edge lists.
//!
//! Vertex labels are positive integers. Identifiers are assigned in ascending
//! label order, so iteration order always follows the input labels.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `p edge n m` header followed by `e u v` lines; `c` lines are comments.
    Dimacs,
    /// One `u v` pair per line; `#` and `%` start comments.
    EdgeList,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: u64 },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Guesses the format: anything with a `p` or `e` record is DIMACS.
pub fn detect_format(text: &str) -> Format {
    let dimacs = text
        .lines()
        .map(str::trim_start)
        .any(|l| l.starts_with("p ") || l.starts_with("e "));
    if dimacs {
        Format::Dimacs
    } else {
        Format::EdgeList
    }
}

fn parse_label(tok: Option<&str>, line: usize) -> Result<u64, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, "missing vertex label"))?;
    let label: u64 = tok
        .parse()
        .map_err(|_| syntax(line, format!("bad vertex label `{tok}`")))?;
    if label == 0 {
        return Err(syntax(line, "vertex labels must be positive"));
    }
    Ok(label)
}

pub fn parse_edge_list(text: &str, format: Format) -> Result<Graph, ParseError> {
    let mut declared: Option<u64> = None;
    let mut edges: Vec<(u64, u64, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match format {
            Format::Dimacs => match toks.next() {
                Some("c") => continue,
                Some("p") => {
                    if declared.is_some() {
                        return Err(syntax(line, "duplicate problem line"));
                    }
                    let kind = toks
                        .next()
                        .ok_or_else(|| syntax(line, "missing problem kind"))?;
                    if !matches!(kind, "edge" | "col" | "edges") {
                        return Err(syntax(line, format!("unsupported problem kind `{kind}`")));
                    }
                    let n: u64 = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| syntax(line, "bad vertex count"))?;
                    toks.next()
                        .and_then(|t| t.parse::<u64>().ok())
                        .ok_or_else(|| syntax(line, "bad edge count"))?;
                    declared = Some(n);
                }
                Some("e") => {
                    let u = parse_label(toks.next(), line)?;
                    let v = parse_label(toks.next(), line)?;
                    if toks.next().is_some() {
                        return Err(syntax(line, "trailing tokens"));
                    }
                    edges.push((u, v, line));
                }
                Some(other) => return Err(syntax(line, format!("unknown record `{other}`"))),
                None => continue,
            },
            Format::EdgeList => {
                if trimmed.starts_with('#') || trimmed.starts_with('%') {
                    continue;
                }
                let u = parse_label(toks.next(), line)?;
                let v = parse_label(toks.next(), line)?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                edges.push((u, v, line));
            }
        }
    }

    let mut labels: BTreeSet<u64> = BTreeSet::new();
    if let Some(n) = declared {
        labels.extend(1..=n);
    }
    for &(u, v, line) in &edges {
        if u == v {
            return Err(ParseError::SelfLoop { line, label: u });
        }
        if let Some(n) = declared {
            if u > n || v > n {
                return Err(syntax(
                    line,
                    format!("vertex label exceeds declared count {n}"),
                ));
            }
        }
        labels.insert(u);
        labels.insert(v);
    }

    let mut g = Graph::new();
    let ids: std::collections::BTreeMap<u64, VertexId> =
        labels.iter().map(|&l| (l, g.add_vertex(l))).collect();
    for (u, v, _) in edges {
        g.add_edge(ids[&u], ids[&v])
            .expect("labels registered, loops rejected");
    }
    Ok(g)
}

/// Serialises `g` as DIMACS. Merged vertices are renumbered past the largest input label.
pub fn to_dimacs(g: &Graph) -> String {
    let labels = output_labels(g);
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", labels[&u], labels[&v]);
    }
    out
}

/// Dense relabelling `1..=n` of the live vertices, in identifier order.
pub fn output_labels(g: &Graph) -> std::collections::BTreeMap<VertexId, u64> {
    g.vertices()
        .enumerate()
        .map(|(i, v)| (v, i as u64 + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_edge_list("p edge 2 1\ne 1 2\n", Format::Dimacs).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(g.label(VertexId(0)), Some(1));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("e 1 2\ne 1 2\ne 2 1\n", Format::Dimacs).unwrap();
        assert_eq!(g.edge_count(), 1);
        let h = parse_edge_list("1 2\n2 1\n", Format::EdgeList).unwrap();
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn self_loop_rejected_with_line() {
        assert_eq!(
            parse_edge_list("c hi\ne 1 1\n", Format::Dimacs).unwrap_err(),
            ParseError::SelfLoop { line: 2, label: 1 }
        );
    }

    #[test]
    fn syntax_errors_report_line() {
        let err = parse_edge_list("p edge 3 1\ne 1 x\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_edge_list("1 2\n3\n", Format::EdgeList).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_edge_list("p edge 2 1\ne 1 3\n", Format::Dimacs).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
    }

    #[test]
    fn isolated_vertices_from_header_and_sparse_labels() {
        let g = parse_edge_list("p edge 4 1\ne 2 3\n", Format::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 4);
        let h = parse_edge_list("# x\n10 30\n30 20\n", Format::EdgeList).unwrap();
        assert_eq!(
            h.vertices()
                .map(|v| h.label(v).unwrap())
                .collect::<Vec<_>>(),
            vec![10, 20, 30]
        );
    }

    #[test]
    fn detect_and_write() {
        assert_eq!(detect_format("p edge 1 0\n"), Format::Dimacs);
        assert_eq!(detect_format("1 2\n"), Format::EdgeList);
        let g = parse_edge_list("p edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs).unwrap();
        let back = parse_edge_list(&to_dimacs(&g), Format::Dimacs).unwrap();
        assert_eq!(back, g);
    }
}
