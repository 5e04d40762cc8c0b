//! Maximum-size exchange through the assignment problem.
//!
//! Every item is assigned to the item it receives. A real edge `u -> v`
//! scores 1, keeping one's own item (the diagonal) scores 0 unless `u` has a
//! real self-loop. A maximum-weight perfect assignment is a permutation whose
//! non-dummy cycles are a vertex-disjoint cycle set with as many vertices as
//! possible.

use crate::graph::{ColoredDigraph, CycleSet, VertexId};

/// Square weight matrix of the assignment reduction. `None` marks an
/// infeasible pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentInstance {
    size: usize,
    weights: Vec<Option<i64>>,
    self_loop: Vec<bool>,
}

impl AssignmentInstance {
    pub fn from_graph(g: &ColoredDigraph) -> Self {
        let n = g.vertex_count();
        let mut weights = vec![None; n * n];
        let mut self_loop = vec![false; n];
        for u in 0..n {
            weights[u * n + u] = Some(0);
        }
        for (_, e) in g.edges() {
            weights[e.from.0 * n + e.to.0] = Some(1);
            if e.from == e.to {
                self_loop[e.from.0] = true;
            }
        }
        Self {
            size: n,
            weights,
            self_loop,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn weight(&self, giver: usize, receiver: usize) -> Option<i64> {
        self.weights[giver * self.size + receiver]
    }

    /// True when the diagonal entry of `u` is the weight-0 "keep" assignment.
    pub fn is_dummy(&self, u: usize) -> bool {
        !self.self_loop[u]
    }

    pub fn feasible_count(&self) -> usize {
        self.weights.iter().filter(|w| w.is_some()).count()
    }

    pub fn unit_entries(&self) -> usize {
        self.weights.iter().filter(|&&w| w == Some(1)).count()
    }
}

/// A perfect assignment: `perm[u]` is the item `u` receives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub perm: Vec<usize>,
    pub dummy: Vec<bool>,
}

impl Matching {
    pub fn weight(&self) -> usize {
        self.dummy.iter().filter(|&&d| !d).count()
    }
}

/// Maximum-weight perfect matching by the Hungarian method with potentials,
/// O(n^3) in the worst case. A greedy pass over rows in ascending order
/// matches zero-cost entries first; the remaining rows are then inserted in
/// ascending order with ties on slack going to the lowest column, so the
/// result is deterministic.
///
/// Only feasible entries are scanned, and each phase tracks the columns it
/// has reached, which keeps sparse market graphs far below the cubic bound.
pub fn solve_assignment(inst: &AssignmentInstance) -> Matching {
    const INF: i64 = i64::MAX / 4;
    let n = inst.size;
    // Minimise cost = 1 - weight over feasible pairs; rows and columns are
    // 1-based with a sentinel column 0.
    let rows: Vec<Vec<(usize, i64)>> = (0..=n)
        .map(|r| match r {
            0 => Vec::new(),
            _ => (1..=n)
                .filter_map(|j| inst.weight(r - 1, j - 1).map(|w| (j, 1 - w)))
                .collect(),
        })
        .collect();
    let mut row_pot = vec![0i64; n + 1];
    let mut col_pot = vec![0i64; n + 1];
    let mut col_owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    let mut min_slack = vec![INF; n + 1];
    let mut used = vec![false; n + 1];
    let mut used_cols: Vec<usize> = Vec::new();
    let mut touched: Vec<usize> = Vec::new();

    // Zero potentials are feasible because every cost is non-negative, so
    // any matching of cost-0 entries is tight and can seed the search.
    let mut greedy = vec![false; n + 1];
    for r in 1..=n {
        if let Some(&(j, _)) = rows[r].iter().find(|&&(j, c)| c == 0 && col_owner[j] == 0) {
            col_owner[j] = r;
            greedy[r] = true;
        }
    }

    for row in (1..=n).filter(|&r| !greedy[r]) {
        col_owner[0] = row;
        let mut col = 0;
        loop {
            used[col] = true;
            used_cols.push(col);
            let r = col_owner[col];
            for &(j, c) in &rows[r] {
                if used[j] {
                    continue;
                }
                let slack = c - row_pot[r] - col_pot[j];
                if slack < min_slack[j] {
                    if min_slack[j] == INF {
                        touched.push(j);
                    }
                    min_slack[j] = slack;
                    way[j] = col;
                }
            }
            let next = touched
                .iter()
                .copied()
                .filter(|&j| !used[j])
                .min_by_key(|&j| (min_slack[j], j))
                .expect("diagonal feasibility guarantees an augmenting path");
            let delta = min_slack[next];
            for &j in &used_cols {
                row_pot[col_owner[j]] += delta;
                col_pot[j] -= delta;
            }
            for &j in &touched {
                if !used[j] {
                    min_slack[j] -= delta;
                }
            }
            col = next;
            if col_owner[col] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col];
            col_owner[col] = col_owner[prev];
            col = prev;
            if col == 0 {
                break;
            }
        }
        for j in used_cols.drain(..) {
            used[j] = false;
        }
        for j in touched.drain(..) {
            min_slack[j] = INF;
        }
    }

    let mut perm = vec![0; n];
    for j in 1..=n {
        perm[col_owner[j] - 1] = j - 1;
    }
    let dummy = (0..n).map(|u| perm[u] == u && inst.is_dummy(u)).collect();
    Matching { perm, dummy }
}

/// A vertex-disjoint cycle set with the maximum number of vertices, in
/// canonical form.
pub fn solve_max_size(g: &ColoredDigraph) -> CycleSet {
    let inst = AssignmentInstance::from_graph(g);
    let m = solve_assignment(&inst);
    cycles_of_matching(g, &m)
}

/// Decomposes the non-dummy part of a matching of `g`'s instance.
pub fn cycles_of_matching(g: &ColoredDigraph, m: &Matching) -> CycleSet {
    let succ: Vec<Option<VertexId>> = m
        .perm
        .iter()
        .zip(&m.dummy)
        .map(|(&to, &dummy)| (!dummy).then_some(VertexId(to)))
        .collect();
    g.cycles_from_successors(&succ)
}

/// Optimal vertex count of the maximum-size exchange.
pub fn max_vertex_count(g: &ColoredDigraph) -> usize {
    solve_assignment(&AssignmentInstance::from_graph(g)).weight()
}

/// Is there a vertex-disjoint cycle set covering at least `x` vertices?
pub fn exchange_at_least(g: &ColoredDigraph, x: usize) -> bool {
    max_vertex_count(g) >= x
}
