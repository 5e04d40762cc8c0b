//! `C <v1> <v2> ... <vk>` records, one cycle `v1 -> v2 -> ... -> vk -> v1`
//! per line.

use std::fmt::Write;

use super::content_lines;
use crate::error::ParseError;
use crate::graph::{ColoredDigraph, Cycle, CycleSet};

/// Cycles as vertex-name sequences, without a graph to resolve them.
pub fn parse_solution_names(text: &str) -> Result<Vec<Vec<String>>, ParseError> {
    content_lines(text)
        .map(|(line, tokens)| match tokens.split_first() {
            Some((&"C", rest)) if !rest.is_empty() => Ok(rest.iter().map(|t| t.to_string()).collect()),
            Some((&"C", _)) => Err(ParseError::syntax(line, "empty cycle")),
            _ => Err(ParseError::syntax(
                line,
                format!("expected `C` record, found `{}`", tokens[0]),
            )),
        })
        .collect()
}

/// Resolves every step to the lowest-id edge between the two vertices. The
/// result is not validated.
pub fn parse_solution(g: &ColoredDigraph, text: &str) -> Result<CycleSet, ParseError> {
    let mut cycles = Vec::new();
    for (line, tokens) in content_lines(text) {
        let Some((&"C", names)) = tokens.split_first() else {
            return Err(ParseError::syntax(
                line,
                format!("expected `C` record, found `{}`", tokens[0]),
            ));
        };
        if names.is_empty() {
            return Err(ParseError::syntax(line, "empty cycle"));
        }
        let vertices = names
            .iter()
            .map(|&n| {
                g.vertex_by_name(n).ok_or_else(|| ParseError::UnknownVertex {
                    line,
                    name: n.to_owned(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut edges = Vec::with_capacity(vertices.len());
        for i in 0..vertices.len() {
            let (u, v) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            let e = g.find_edge(u, v).ok_or_else(|| {
                ParseError::syntax(line, format!("no edge {} -> {}", g.vertex_name(u), g.vertex_name(v)))
            })?;
            edges.push(e);
        }
        cycles.push(Cycle::new(edges));
    }
    Ok(CycleSet::new(cycles))
}

/// Writes the canonical form of `s`.
pub fn write_solution(g: &ColoredDigraph, s: &CycleSet) -> String {
    let mut out = String::new();
    for c in s.canonical(g).cycles() {
        out.push('C');
        for v in c.vertices(g) {
            write!(out, " {}", g.vertex_name(v)).unwrap();
        }
        out.push('\n');
    }
    out
}
