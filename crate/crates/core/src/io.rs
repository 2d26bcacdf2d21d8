//! Edge-list and DIMACS readers, the edge-list writer, and the canonical hash.
//!
//! Edge-list files start with `n m` followed by `m` lines `u v` (0-indexed).
//! Lines beginning with `#` are comments. DIMACS files use `p edge n m` and
//! `e u v` (1-indexed) with `c` comments. [`parse_graph`] detects the format.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        None => parse_err(line, format!("missing {what}")),
        Some(t) => t
            .parse()
            .map_err(|_| Error::Parse {
                line,
                message: format!("invalid {what} {t:?}"),
            }),
    }
}

fn content_lines<'a>(
    text: &'a str,
    comment: &'a [&'a str],
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !comment.iter().any(|c| l.starts_with(c)))
}

/// Picks DIMACS when the first content line is a `p` or `c` line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with("p ") || l.starts_with("c ") || l == "c" => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text, &["#"]);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "empty input, expected header \"n m\"");
    };
    let mut toks = header.split_whitespace();
    let n = parse_num(toks.next(), hl, "vertex count")?;
    let m = parse_num(toks.next(), hl, "edge count")?;
    if toks.next().is_some() {
        return parse_err(hl, "trailing tokens in header");
    }
    let mut g = Graph::new(n);
    let mut seen = 0;
    let mut last = hl;
    for (ln, l) in lines {
        last = ln;
        let mut toks = l.split_whitespace();
        let u = parse_num(toks.next(), ln, "endpoint")?;
        let v = parse_num(toks.next(), ln, "endpoint")?;
        if toks.next().is_some() {
            return parse_err(ln, "trailing tokens after edge");
        }
        add_checked(&mut g, u, v, ln)?;
        seen += 1;
    }
    if seen != m {
        return parse_err(last, format!("header declares {m} edges, found {seen}"));
    }
    Ok(g)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared = 0;
    let mut seen = 0;
    let mut last = 0;
    for (ln, l) in content_lines(text, &["c"]) {
        last = ln;
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("p") => {
                if g.is_some() {
                    return parse_err(ln, "duplicate problem line");
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => return parse_err(ln, format!("unsupported problem type {other:?}")),
                }
                let n = parse_num(toks.next(), ln, "vertex count")?;
                declared = parse_num(toks.next(), ln, "edge count")?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let Some(graph) = g.as_mut() else {
                    return parse_err(ln, "edge before problem line");
                };
                let u = parse_num(toks.next(), ln, "endpoint")?;
                let v = parse_num(toks.next(), ln, "endpoint")?;
                if u == 0 || v == 0 {
                    return parse_err(ln, "DIMACS vertices are 1-indexed");
                }
                // Some DIMACS files list both orientations of each edge.
                if u != v && u <= graph.n() && v <= graph.n() && graph.has_edge(u - 1, v - 1) {
                    seen += 1;
                    continue;
                }
                add_checked(graph, u - 1, v - 1, ln)?;
                seen += 1;
            }
            Some(t) => return parse_err(ln, format!("unknown line type {t:?}")),
            None => unreachable!(),
        }
    }
    let Some(g) = g else {
        return parse_err(last.max(1), "missing problem line");
    };
    if seen != declared && seen != 2 * declared && g.edge_count() != declared {
        return parse_err(last, format!("problem line declares {declared} edges, found {seen}"));
    }
    Ok(g)
}

fn add_checked(g: &mut Graph, u: usize, v: usize, line: usize) -> Result<()> {
    if u >= g.n() || v >= g.n() {
        return parse_err(line, format!("vertex out of range for n = {}", g.n()));
    }
    if u == v {
        return parse_err(line, format!("self-loop at {u}"));
    }
    if !g.add_edge(u, v) {
        return parse_err(line, format!("repeated edge {u} {v}"));
    }
    Ok(())
}

/// Writes the edge-list format, edges in lexicographic order, with optional
/// leading `#` comment lines.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// SHA-256 of the comment-free edge list, hex encoded.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(write_edge_list(g, &[]).as_bytes());
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}
