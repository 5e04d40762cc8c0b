//! Clearing engine for barter exchanges modelled as vertex-colored digraphs.
//!
//! Items are vertices, agents are colors, and an edge `u -> v` means the
//! owner of `u` accepts `v` in exchange. A clearing is a set of
//! vertex-disjoint cycles. Four objectives are supported:
//!
//! | objective | solver |
//! |-----------|--------|
//! | most items traded | [`solve_max_size`] (assignment problem, polynomial) |
//! | most agents trading | [`solve_tex`] (branch and bound) |
//! | most agents among item-maximum clearings | [`solve_tmaxex`] |
//! | most items among agent-maximum clearings | [`solve_maxtex`] |
//!
//! [`approx_jpc`] is the color-blind approximation, and [`reductions`]
//! compiles CNF formulas into gadget graphs whose clearings encode truth
//! assignments.

pub mod approx;
pub mod cnf;
pub mod error;
pub mod exact;
pub mod format;
pub mod gen;
pub mod graph;
pub mod max_size;
pub mod oracle;
pub mod reductions;
pub mod report;
pub mod sat;

pub use approx::{approx_jpc, per_color_bound, ApproxOutcome, PerColorBound, Ratio};
pub use cnf::{Assignment, Clause, CnfInstance, Literal};
pub use exact::{
    decide_maxtex, decide_tex, decide_tmaxex, solve, solve_maxtex, solve_tex, solve_tmaxex, Objective, SearchBudget,
    SearchOutcome,
};
pub use graph::{ColorId, ColoredDigraph, Cycle, CycleSet, Edge, EdgeId, GraphBuilder, SolutionMetrics, VertexId};
pub use max_size::{
    exchange_at_least, max_vertex_count, solve_assignment, solve_max_size, AssignmentInstance, Matching,
};
pub use oracle::{brute_force_best, brute_force_many, enumerate_cycle_sets};
pub use reductions::{
    add_balance_vertices, build_2pc_graph, build_sat_graph, clause_colors_covered, extract_assignment,
    l_reduction_check, LReductionCheck, ReductionArtifact, Variant,
};
pub use report::RunReport;
pub use sat::{is_satisfiable, max_satisfiable};
