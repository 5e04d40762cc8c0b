use serde::{Deserialize, Serialize};

use crate::graph::{ColoredDigraph, CycleSet, SolutionMetrics};

/// Summary of one clearing run, serialized as JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub objective: String,
    pub method: String,
    pub metrics: SolutionMetrics,
    /// Agents (colors) that give away at least one item.
    pub traded_agents: usize,
    pub total_agents: usize,
    pub cycles: Vec<Vec<String>>,
    pub nodes: Option<u64>,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn new(g: &ColoredDigraph, s: &CycleSet, metrics: SolutionMetrics, objective: &str, method: &str) -> Self {
        let cycles = s
            .canonical(g)
            .cycles()
            .iter()
            .map(|c| c.vertices(g).into_iter().map(|v| g.vertex_name(v).to_owned()).collect())
            .collect();
        RunReport {
            objective: objective.to_owned(),
            method: method.to_owned(),
            metrics,
            traded_agents: metrics.color_count,
            total_agents: g.color_count(),
            cycles,
            nodes: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
