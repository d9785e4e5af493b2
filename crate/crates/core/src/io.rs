//! Edge-list and DOT text formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v` (0-based ids,
//! whitespace separated). Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let nums: Vec<&str> = text.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("expected a non-negative integer, found {s:?}"),
        })
    };
    match nums.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Error::Parse {
            line,
            message: format!("expected two integers, found {text:?}"),
        }),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        edges.push((line, parse_pair(line, text)?));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let pairs: Vec<_> = edges.iter().map(|&(_, e)| e).collect();
    Graph::from_edges(n, &pairs).map_err(|e| match e {
        Error::VertexOutOfRange { position, .. } | Error::SelfLoop { position, .. } => Error::Parse {
            line: edges[position].0,
            message: e.to_string(),
        },
        other => other,
    })
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT subset written by [`to_dot`]: an undirected `graph` with
/// numeric node statements and `u -- v` edge statements.
pub fn parse_dot(text: &str) -> Result<Graph> {
    let mut nodes: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    let mut opened = false;
    for (line, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if raw.is_empty() || raw.starts_with("//") {
            continue;
        }
        if !opened {
            if raw.starts_with("graph") && raw.ends_with('{') {
                opened = true;
                continue;
            }
            return Err(Error::Parse {
                line,
                message: "expected \"graph <name> {\"".into(),
            });
        }
        if raw == "}" {
            let n = nodes.iter().chain(edges.iter().flat_map(|(u, v)| [u, v])).max().map_or(0, |m| m + 1);
            return Graph::from_edges(n, &edges);
        }
        let stmt = raw.trim_end_matches(';').trim();
        let parse = |s: &str| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a numeric node id, found {s:?}"),
            })
        };
        match stmt.split_once("--") {
            Some((u, v)) => edges.push((parse(u)?, parse(v)?)),
            None => nodes.push(parse(stmt)?),
        }
    }
    Err(Error::Parse {
        line: text.lines().count(),
        message: "unterminated graph body".into(),
    })
}

/// Parses either format, choosing DOT when the text starts with `graph`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with("graph") {
        parse_dot(text)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        let text = to_edge_list(&g);
        assert!(text.starts_with("10 15\n0 1\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn dot_round_trip_keeps_isolated_vertices() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parse_dot(&to_dot(&g)).unwrap(), g);
        assert_eq!(parse_graph(&to_dot(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n# comment\n1 x\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n\n2 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_dot("graph G {\n 0 -- 1;\n").is_err());
    }
}
