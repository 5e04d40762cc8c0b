//! Exact solvers for the color-aware objectives.
//!
//! Branch and bound over per-vertex successor choices in ascending vertex
//! order. Each vertex either gives to one of its out-neighbours or stays
//! out of every cycle. The used part is kept injective, and a used vertex
//! that has lost every possible predecessor kills the branch, so every
//! complete configuration is a vertex-disjoint cycle set and each set is
//! reached once. Bounds:
//!
//! * vertices: known-used vertices plus undecided vertices;
//! * colors: covered colors plus uncovered colors that still have an
//!   undecided vertex.
//!
//! The incumbent is seeded with the maximum-size solution, which is optimal
//! on the vertex tier already.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{BudgetKind, SearchError};
use crate::graph::{ColoredDigraph, CycleSet, SolutionMetrics, VertexId};
use crate::max_size::{max_vertex_count, solve_max_size};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    /// Maximum-size exchange.
    MaxVertices,
    /// Tropical exchange: as many colors as possible.
    MaxColors,
    /// Tropical max-size exchange: colors among the vertex-maximum sets.
    MaxColorsAmongMaxVertices,
    /// Max-size tropical exchange: vertices among the color-maximum sets.
    MaxVerticesAmongMaxColors,
}

impl Objective {
    pub const ALL: [Objective; 4] = [
        Objective::MaxVertices,
        Objective::MaxColors,
        Objective::MaxColorsAmongMaxVertices,
        Objective::MaxVerticesAmongMaxColors,
    ];

    /// Lexicographic score; larger is better.
    pub fn score(self, m: SolutionMetrics) -> (usize, usize) {
        match self {
            Objective::MaxVertices => (m.vertex_count, 0),
            Objective::MaxColors => (m.color_count, 0),
            Objective::MaxColorsAmongMaxVertices => (m.vertex_count, m.color_count),
            Objective::MaxVerticesAmongMaxColors => (m.color_count, m.vertex_count),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        Self { node_limit, time_limit }
    }

    pub fn unlimited() -> Self {
        Self {
            node_limit: u64::MAX,
            time_limit: Duration::MAX,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            node_limit: 10_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub cycles: CycleSet,
    pub metrics: SolutionMetrics,
    pub nodes: u64,
    pub elapsed: Duration,
}

pub fn solve_tex(g: &ColoredDigraph, budget: SearchBudget) -> Result<CycleSet, SearchError> {
    solve(g, Objective::MaxColors, budget).map(|o| o.cycles)
}

pub fn decide_tex(g: &ColoredDigraph, budget: SearchBudget) -> Result<bool, SearchError> {
    Ok(solve(g, Objective::MaxColors, budget)?.metrics.is_tropical(g))
}

pub fn solve_tmaxex(g: &ColoredDigraph, budget: SearchBudget) -> Result<CycleSet, SearchError> {
    solve(g, Objective::MaxColorsAmongMaxVertices, budget).map(|o| o.cycles)
}

pub fn decide_tmaxex(g: &ColoredDigraph, budget: SearchBudget) -> Result<bool, SearchError> {
    Ok(solve(g, Objective::MaxColorsAmongMaxVertices, budget)?
        .metrics
        .is_tropical(g))
}

pub fn solve_maxtex(g: &ColoredDigraph, budget: SearchBudget) -> Result<CycleSet, SearchError> {
    solve(g, Objective::MaxVerticesAmongMaxColors, budget).map(|o| o.cycles)
}

/// Is there a set with at least `x` vertices among those with the maximum
/// number of colors?
pub fn decide_maxtex(g: &ColoredDigraph, x: usize, budget: SearchBudget) -> Result<bool, SearchError> {
    Ok(solve(g, Objective::MaxVerticesAmongMaxColors, budget)?
        .metrics
        .vertex_count
        >= x)
}

/// Exact optimum of `objective`, in canonical form.
pub fn solve(g: &ColoredDigraph, objective: Objective, budget: SearchBudget) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let seed = solve_max_size(g);
    let seed_metrics = g.validate(&seed).expect("max-size solver emits valid cycle sets");
    let min_vertices = match objective {
        Objective::MaxColorsAmongMaxVertices => max_vertex_count(g),
        _ => 0,
    };
    let mut search = Search::new(g, objective, min_vertices, budget, start);
    search.incumbent = Some(Incumbent {
        score: objective.score(seed_metrics),
        key: seed.canonical_key(g),
        cycles: seed,
        metrics: seed_metrics,
    });
    if objective != Objective::MaxVertices {
        search.visit(0)?;
    }
    let best = search.incumbent.take().expect("seeded");
    Ok(SearchOutcome {
        cycles: best.cycles,
        metrics: best.metrics,
        nodes: search.nodes,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Undecided,
    Used,
    Unused,
}

#[derive(Debug, Clone, Copy)]
enum Change {
    State(usize, State),
    Pred(usize),
    Succ(usize),
    Pending(usize),
}

struct Incumbent {
    score: (usize, usize),
    key: Vec<Vec<VertexId>>,
    cycles: CycleSet,
    metrics: SolutionMetrics,
}

struct Search<'g> {
    g: &'g ColoredDigraph,
    objective: Objective,
    min_vertices: usize,
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    successors: Vec<Vec<usize>>,
    color_of: Vec<usize>,
    state: Vec<State>,
    has_pred: Vec<bool>,
    succ: Vec<Option<VertexId>>,
    /// Unprocessed distinct in-neighbours of each vertex.
    pending: Vec<usize>,
    cover: Vec<usize>,
    open: Vec<usize>,
    covered: usize,
    used: usize,
    undecided: usize,
    trail: Vec<Change>,
    incumbent: Option<Incumbent>,
}

impl<'g> Search<'g> {
    fn new(
        g: &'g ColoredDigraph,
        objective: Objective,
        min_vertices: usize,
        budget: SearchBudget,
        start: Instant,
    ) -> Self {
        let n = g.vertex_count();
        let successors: Vec<Vec<usize>> = g
            .vertices()
            .map(|v| g.successors(v).into_iter().map(|(w, _)| w.0).collect())
            .collect();
        let mut pending = vec![0; n];
        for out in &successors {
            for &w in out {
                pending[w] += 1;
            }
        }
        let color_of: Vec<usize> = g.vertices().map(|v| g.color(v).0).collect();
        let mut s = Search {
            g,
            objective,
            min_vertices,
            budget,
            start,
            nodes: 0,
            successors,
            state: vec![State::Undecided; n],
            has_pred: vec![false; n],
            succ: vec![None; n],
            pending,
            cover: vec![0; g.color_count()],
            open: g.color_multiplicities(),
            color_of,
            covered: 0,
            used: 0,
            undecided: n,
            trail: Vec::new(),
            incumbent: None,
        };
        for v in 0..n {
            if s.pending[v] == 0 {
                s.set_state(v, State::Unused);
            }
        }
        s.trail.clear();
        s
    }

    fn set_state(&mut self, v: usize, to: State) {
        let from = self.state[v];
        debug_assert_eq!(from, State::Undecided);
        self.trail.push(Change::State(v, from));
        self.state[v] = to;
        let c = self.color_of[v];
        self.open[c] -= 1;
        self.undecided -= 1;
        if to == State::Used {
            self.used += 1;
            self.cover[c] += 1;
            if self.cover[c] == 1 {
                self.covered += 1;
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("above mark") {
                Change::State(v, from) => {
                    let c = self.color_of[v];
                    if self.state[v] == State::Used {
                        self.used -= 1;
                        self.cover[c] -= 1;
                        if self.cover[c] == 0 {
                            self.covered -= 1;
                        }
                    }
                    self.open[c] += 1;
                    self.undecided += 1;
                    self.state[v] = from;
                }
                Change::Pred(v) => self.has_pred[v] = false,
                Change::Succ(v) => self.succ[v] = None,
                Change::Pending(v) => self.pending[v] += 1,
            }
        }
    }

    fn upper_bound(&self) -> (usize, usize) {
        let vertices = self.used + self.undecided;
        let colors = self.covered
            + self
                .cover
                .iter()
                .zip(&self.open)
                .filter(|&(&cov, &open)| cov == 0 && open > 0)
                .count();
        self.objective.score(SolutionMetrics::new(vertices, colors))
    }

    fn check_budget(&self) -> Result<(), SearchError> {
        if self.nodes > self.budget.node_limit {
            return Err(SearchError::BudgetExceeded {
                nodes: self.nodes,
                reason: BudgetKind::Nodes,
            });
        }
        if self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_limit {
            return Err(SearchError::BudgetExceeded {
                nodes: self.nodes,
                reason: BudgetKind::Time,
            });
        }
        Ok(())
    }

    /// Applies the choice of vertex `u` and marks it processed. Returns
    /// false if the branch can no longer complete.
    fn step(&mut self, u: usize, target: Option<usize>) -> bool {
        match target {
            Some(w) => {
                if self.state[u] == State::Undecided {
                    self.set_state(u, State::Used);
                }
                self.succ[u] = Some(VertexId(w));
                self.trail.push(Change::Succ(u));
                self.has_pred[w] = true;
                self.trail.push(Change::Pred(w));
                if self.state[w] == State::Undecided {
                    self.set_state(w, State::Used);
                }
            }
            None => {
                if self.state[u] == State::Undecided {
                    self.set_state(u, State::Unused);
                }
            }
        }
        for i in 0..self.successors[u].len() {
            let x = self.successors[u][i];
            self.pending[x] -= 1;
            self.trail.push(Change::Pending(x));
            if self.pending[x] > 0 || self.has_pred[x] {
                continue;
            }
            match self.state[x] {
                State::Used => return false,
                State::Undecided => self.set_state(x, State::Unused),
                State::Unused => {}
            }
        }
        true
    }

    fn visit(&mut self, u: usize) -> Result<(), SearchError> {
        self.nodes += 1;
        self.check_budget()?;
        let bound = self.upper_bound();
        if self.used + self.undecided < self.min_vertices {
            return Ok(());
        }
        if let Some(inc) = &self.incumbent {
            if bound <= inc.score {
                return Ok(());
            }
        }
        if u == self.g.vertex_count() {
            self.record_leaf();
            return Ok(());
        }

        if self.state[u] != State::Unused {
            for i in 0..self.successors[u].len() {
                let w = self.successors[u][i];
                let available = !self.has_pred[w]
                    && match self.state[w] {
                        State::Unused => false,
                        State::Used => true,
                        // an undecided vertex below u has been processed
                        State::Undecided => w >= u,
                    };
                if !available {
                    continue;
                }
                let mark = self.trail.len();
                if self.step(u, Some(w)) {
                    self.visit(u + 1)?;
                }
                self.undo_to(mark);
            }
        }
        if self.state[u] != State::Used {
            let mark = self.trail.len();
            if self.step(u, None) {
                self.visit(u + 1)?;
            }
            self.undo_to(mark);
        }
        Ok(())
    }

    fn record_leaf(&mut self) {
        let metrics = SolutionMetrics::new(self.used, self.covered);
        let score = self.objective.score(metrics);
        let cycles = self.g.cycles_from_successors(&self.succ);
        let key = cycles.canonical_key(self.g);
        let better = match &self.incumbent {
            None => true,
            Some(inc) => score > inc.score || (score == inc.score && key < inc.key),
        };
        if better {
            self.incumbent = Some(Incumbent {
                score,
                key,
                cycles,
                metrics,
            });
        }
    }
}
