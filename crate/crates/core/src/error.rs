use thiserror::Error;

use crate::graph::{ColorId, EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge endpoint {vertex} is out of range (graph has {vertex_count} vertices)")]
    EndpointOutOfRange { vertex: VertexId, vertex_count: usize },
    #[error("color {0} is declared but carried by no vertex")]
    EmptyColor(ColorId),
    #[error("color {0} has not been declared")]
    UnknownColor(ColorId),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertexName(String),
    #[error("duplicate color label `{0}`")]
    DuplicateColorLabel(String),
    #[error("`{0}` is not a valid name token")]
    BadToken(String),
}

/// Reasons a cycle set is not a set of vertex-disjoint simple cycles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("cycle {cycle} references nonexistent edge {edge}")]
    NonexistentEdge { cycle: usize, edge: EdgeId },
    #[error("cycle {cycle} does not chain at edge {edge}")]
    BrokenChain { cycle: usize, edge: EdgeId },
    #[error("cycle {cycle} visits vertex {vertex} twice")]
    RepeatedVertexInCycle { cycle: usize, vertex: VertexId },
    #[error("cycles {first} and {second} share vertex {vertex}")]
    OverlapBetweenCycles {
        first: usize,
        second: usize,
        vertex: VertexId,
    },
    #[error("cycle {cycle} has no edges")]
    EmptyCycle { cycle: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exceeded after {nodes} nodes ({reason})")]
    BudgetExceeded { nodes: u64, reason: BudgetKind },
    #[error("graph has {vertices} vertices; the exhaustive oracle accepts at most {limit}")]
    TooLarge { vertices: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    Nodes,
    Time,
}

impl std::fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BudgetKind::Nodes => "node limit",
            BudgetKind::Time => "time limit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("the per-color approximation needs a nonempty graph")]
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("literal {literal} is out of range for {num_vars} variables")]
    LiteralOutOfRange { literal: i64, num_vars: usize },
    #[error("clause {clause} has {len} literals; the 2-per-color construction allows at most 2")]
    ClauseTooLarge { clause: usize, len: usize },
    #[error("{num_vars} variables exceed the exhaustive oracle limit of {limit}")]
    TooManyVariables { num_vars: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("invalid solution for the gadget graph: {0}")]
    InvalidSolution(#[from] SolutionError),
    #[error("the cycle through variable x{var} is neither of its loops")]
    LoopMismatch { var: usize },
    #[error("vertex `{0}` lies on more than one cycle")]
    SharedVertex(String),
}

/// Parse failures of the text formats, with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate item `{item}`")]
    DuplicateItem { line: usize, item: String },
    #[error("line {line}: wanted item `{item}` is never declared")]
    UnknownWantedItem { line: usize, item: String },
    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("invalid graph: {0}")]
    InvalidGraph(GraphError),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad generator parameters: {0}")]
    BadParameters(String),
}
