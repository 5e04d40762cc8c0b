//! `V <vertex> <color-label>` and `E <from> <to>` records.

use std::fmt::Write;

use super::content_lines;
use crate::error::ParseError;
use crate::graph::{ColoredDigraph, GraphBuilder};

/// Parses the graph format. Colors are numbered in order of first
/// appearance, vertices and edges in record order. A vertex must be declared
/// before an edge uses it.
pub fn parse_graph(text: &str) -> Result<ColoredDigraph, ParseError> {
    let mut b = GraphBuilder::new();
    for (line, tokens) in content_lines(text) {
        let graph_err = |source| ParseError::Graph { line, source };
        match tokens.as_slice() {
            ["V", name, color] => {
                let c = b.color_for_label(color).map_err(graph_err)?;
                b.add_vertex(*name, c).map_err(graph_err)?;
            }
            ["E", from, to] => {
                let lookup = |name: &str| {
                    b.vertex_by_name(name).ok_or_else(|| ParseError::UnknownVertex {
                        line,
                        name: name.to_owned(),
                    })
                };
                let (u, v) = (lookup(from)?, lookup(to)?);
                b.add_edge(u, v).map_err(graph_err)?;
            }
            [kind, ..] if *kind == "V" || *kind == "E" => {
                return Err(ParseError::syntax(
                    line,
                    format!("`{kind}` record needs exactly two fields"),
                ))
            }
            [kind, ..] => return Err(ParseError::syntax(line, format!("unknown record `{kind}`"))),
            [] => unreachable!("blank lines are skipped"),
        }
    }
    b.build().map_err(ParseError::InvalidGraph)
}

pub fn write_graph(g: &ColoredDigraph) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# {} vertices, {} edges, {} colors",
        g.vertex_count(),
        g.edge_count(),
        g.color_count()
    )
    .unwrap();
    for v in g.vertices() {
        writeln!(out, "V {} {}", g.vertex_name(v), g.color_label(g.color(v))).unwrap();
    }
    for (_, e) in g.edges() {
        writeln!(out, "E {} {}", g.vertex_name(e.from), g.vertex_name(e.to)).unwrap();
    }
    out
}
