//! Line-oriented text formats. `#` starts a comment; tokens are separated by
//! whitespace; line numbers in errors are 1-based.

mod dimacs;
mod gadget_map;
mod graph_text;
mod solution;
mod wantlist;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use gadget_map::GadgetMap;
pub use graph_text::{parse_graph, write_graph};
pub use solution::{parse_solution, parse_solution_names, write_solution};
pub use wantlist::{WantEntry, WantList};

/// Non-blank lines with comments stripped, paired with their line number.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}
