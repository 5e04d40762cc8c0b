//! Exhaustive ground truth for the cycle-set objectives.
//!
//! Enumerates successor functions: each vertex maps to a distinct
//! out-neighbour or to "unused". Only configurations whose used part is a
//! permutation survive, and those decompose into vertex-disjoint cycles.
//! No bounds, no shared code with the branch-and-bound solver.

use crate::error::SearchError;
use crate::exact::Objective;
use crate::graph::{ColoredDigraph, CycleSet, SolutionMetrics, VertexId};

pub const ORACLE_VERTEX_LIMIT: usize = 12;

/// Calls `visit` with the successor map of every vertex-disjoint cycle set
/// of `g` (including the empty set).
pub fn enumerate_cycle_sets<F>(g: &ColoredDigraph, mut visit: F) -> Result<(), SearchError>
where
    F: FnMut(&[Option<VertexId>]),
{
    let n = g.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(SearchError::TooLarge {
            vertices: n,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    let targets: Vec<Vec<VertexId>> = g
        .vertices()
        .map(|v| {
            let mut out: Vec<VertexId> = g.out_edges(v).iter().map(|&e| g.edge(e).unwrap().to).collect();
            out.sort();
            out.dedup();
            out
        })
        .collect();
    let mut succ = vec![None; n];
    let mut taken = vec![false; n];
    enumerate_from(0, &targets, &mut succ, &mut taken, &mut visit);
    Ok(())
}

fn enumerate_from<F>(
    v: usize,
    targets: &[Vec<VertexId>],
    succ: &mut Vec<Option<VertexId>>,
    taken: &mut Vec<bool>,
    visit: &mut F,
) where
    F: FnMut(&[Option<VertexId>]),
{
    let n = succ.len();
    if v == n {
        // used part must be a permutation: each used vertex is also a target
        let closed = (0..n).all(|u| succ[u].is_some() == taken[u]);
        if closed {
            visit(succ);
        }
        return;
    }
    // a vertex already decided "unused" cannot be a target
    let unused_before = |w: usize, succ: &[Option<VertexId>]| w < v && succ[w].is_none();

    if !taken[v] {
        enumerate_from(v + 1, targets, succ, taken, visit);
    }
    for &w in &targets[v] {
        if taken[w.0] || unused_before(w.0, succ) {
            continue;
        }
        taken[w.0] = true;
        succ[v] = Some(w);
        enumerate_from(v + 1, targets, succ, taken, visit);
        succ[v] = None;
        taken[w.0] = false;
    }
}

fn metrics_of(g: &ColoredDigraph, succ: &[Option<VertexId>]) -> SolutionMetrics {
    let mut colors = vec![false; g.color_count()];
    let mut vertices = 0;
    for (v, s) in succ.iter().enumerate() {
        if s.is_some() {
            vertices += 1;
            colors[g.color(VertexId(v)).0] = true;
        }
    }
    SolutionMetrics::new(vertices, colors.into_iter().filter(|&c| c).count())
}

struct Best {
    objective: Objective,
    score: Option<(usize, usize)>,
    key: Vec<Vec<VertexId>>,
    succ: Vec<Option<VertexId>>,
}

impl Best {
    fn offer(&mut self, g: &ColoredDigraph, succ: &[Option<VertexId>], m: SolutionMetrics) {
        let score = self.objective.score(m);
        match self.score {
            Some(s) if score < s => {}
            Some(s) if score == s => {
                let key = g.cycles_from_successors(succ).canonical_key(g);
                if key < self.key {
                    self.key = key;
                    self.succ = succ.to_vec();
                }
            }
            _ => {
                self.score = Some(score);
                self.key = g.cycles_from_successors(succ).canonical_key(g);
                self.succ = succ.to_vec();
            }
        }
    }
}

/// Lexicographically least optimal cycle set under `objective`, found by
/// exhaustive enumeration.
pub fn brute_force_best(g: &ColoredDigraph, objective: Objective) -> Result<CycleSet, SearchError> {
    let [best] = brute_force_many(g, [objective])?;
    Ok(best)
}

/// [`brute_force_best`] for several objectives sharing one enumeration.
pub fn brute_force_many<const N: usize>(
    g: &ColoredDigraph,
    objectives: [Objective; N],
) -> Result<[CycleSet; N], SearchError> {
    let mut best = objectives.map(|objective| Best {
        objective,
        score: None,
        key: Vec::new(),
        succ: vec![None; g.vertex_count()],
    });
    enumerate_cycle_sets(g, |succ| {
        let m = metrics_of(g, succ);
        for b in &mut best {
            b.offer(g, succ, m);
        }
    })?;
    Ok(best.map(|b| g.cycles_from_successors(&b.succ)))
}
