//! Want lists: `<agent> <item> : <wanted-item>*`, one offered item per line.

use std::collections::HashMap;
use std::fmt::Write;

use super::content_lines;
use crate::error::ParseError;
use crate::graph::{ColoredDigraph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WantEntry {
    pub agent: String,
    pub item: String,
    pub wants: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WantList {
    pub entries: Vec<WantEntry>,
}

impl WantList {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut entries: Vec<WantEntry> = Vec::new();
        let mut lines: Vec<usize> = Vec::new();
        let mut declared: HashMap<String, usize> = HashMap::new();
        for (line, tokens) in content_lines(text) {
            let [agent, item, colon, wants @ ..] = tokens.as_slice() else {
                return Err(ParseError::syntax(line, "expected `<agent> <item> : <wants>...`"));
            };
            if *colon != ":" {
                return Err(ParseError::syntax(line, format!("expected `:`, found `{colon}`")));
            }
            if let Some(w) = wants.iter().find(|w| **w == ":") {
                return Err(ParseError::syntax(line, format!("unexpected `{w}`")));
            }
            if declared.insert(item.to_string(), entries.len()).is_some() {
                return Err(ParseError::DuplicateItem {
                    line,
                    item: item.to_string(),
                });
            }
            entries.push(WantEntry {
                agent: agent.to_string(),
                item: item.to_string(),
                wants: wants.iter().map(|w| w.to_string()).collect(),
            });
            lines.push(line);
        }
        for (entry, &line) in entries.iter().zip(&lines) {
            if let Some(w) = entry.wants.iter().find(|w| !declared.contains_key(*w)) {
                return Err(ParseError::UnknownWantedItem { line, item: w.clone() });
            }
        }
        Ok(Self { entries })
    }

    pub fn write(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            write!(out, "{} {} :", e.agent, e.item).unwrap();
            for w in &e.wants {
                write!(out, " {w}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// One vertex per item colored by its agent, one edge per wanted item.
    /// With `no_self_trades`, an item wanting itself contributes no edge.
    pub fn to_graph(&self, no_self_trades: bool) -> Result<ColoredDigraph, ParseError> {
        let mut b = GraphBuilder::new();
        for e in &self.entries {
            let c = b.color_for_label(&e.agent).map_err(ParseError::InvalidGraph)?;
            b.add_vertex(e.item.as_str(), c).map_err(ParseError::InvalidGraph)?;
        }
        for e in &self.entries {
            let from = b.vertex_by_name(&e.item).expect("declared above");
            for w in &e.wants {
                let to = b.vertex_by_name(w).expect("wanted items are declared");
                if no_self_trades && from == to {
                    continue;
                }
                b.add_edge(from, to).expect("both endpoints exist");
            }
        }
        b.build().map_err(ParseError::InvalidGraph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    #[test]
    fn pair_market() {
        let w = WantList::parse("alice a1 : b1\nbob b1 : a1\n").unwrap();
        let g = w.to_graph(false).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.color_count()), (2, 2, 2));
        assert_eq!(g.color_label(g.color(VertexId(1))), "bob");
        assert_eq!(WantList::parse(&w.write()).unwrap(), w);
    }

    #[test]
    fn empty_wants_and_self_trades() {
        let g = WantList::parse("alice a1 :\n").unwrap().to_graph(false).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let w = WantList::parse("alice a1 : a1\n").unwrap();
        assert_eq!(w.to_graph(false).unwrap().edge_count(), 1);
        assert_eq!(w.to_graph(true).unwrap().edge_count(), 0);
    }

    #[test]
    fn agent_with_several_items() {
        let text = "# math trade\nalice a1 : b1\nalice a2 : b1 a1\nbob b1 : a2\n";
        let g = WantList::parse(text).unwrap().to_graph(false).unwrap();
        assert_eq!((g.vertex_count(), g.color_count(), g.edge_count()), (3, 2, 4));
    }

    #[test]
    fn errors() {
        assert_eq!(
            WantList::parse("alice a1 : b1\nbob a1 :\n"),
            Err(ParseError::DuplicateItem {
                line: 2,
                item: "a1".into()
            })
        );
        assert_eq!(
            WantList::parse("alice a1 : zz\n"),
            Err(ParseError::UnknownWantedItem {
                line: 1,
                item: "zz".into()
            })
        );
        assert!(matches!(
            WantList::parse("alice a1 b1\n"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            WantList::parse("\nalice\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
    }
}
