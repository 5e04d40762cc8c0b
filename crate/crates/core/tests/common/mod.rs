#![allow(dead_code)]

use std::collections::BTreeSet;

use tropex::format::{parse_dimacs, parse_graph};
use tropex::{CnfInstance, ColoredDigraph, VertexId};

pub const G_PAIR: &str = "V a red\nV b blue\nE a b\nE b a\n";
pub const G_CONFLICT: &str = "V a red\nV b red\nV c red\nV d blue\nE a b\nE b c\nE c a\nE a d\nE d a\n";
pub const G_TIE: &str = "V r1 red\nV r2 red\nV b1 blue\nE r1 r2\nE r2 r1\nE r1 b1\nE b1 r1\n";

pub const CNF_A: &str = "p cnf 2 2\n1 -2 0\n2 0\n";
pub const CNF_B: &str = "p cnf 1 2\n1 0\n-1 0\n";
pub const CNF_C: &str = "p cnf 2 2\n1 2 0\n-1 -2 0\n";

pub fn graph(text: &str) -> ColoredDigraph {
    parse_graph(text).expect("fixture graph parses")
}

pub fn cnf(text: &str) -> CnfInstance {
    parse_dimacs(text).expect("fixture cnf parses")
}

/// Optimal scores for `Objective::ALL`, in the same form as
/// `Objective::score`.
///
/// Works on vertex sets instead of successor functions: every simple cycle
/// is found by a DFS rooted at its smallest vertex, and the reachable unions
/// of pairwise disjoint cycle vertex sets are closed under adding one more
/// cycle.
pub fn independent_optima(g: &ColoredDigraph) -> [(usize, usize); 4] {
    let n = g.vertex_count();
    assert!(n <= 16, "mask oracle is for small graphs");
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (_, e) in g.edges() {
        succ[e.from.0].push(e.to.0);
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }

    let mut cycle_masks = BTreeSet::new();
    for root in 0..n {
        let mut stack = vec![(root, 1u32 << root)];
        while let Some((at, mask)) = stack.pop() {
            for &w in &succ[at] {
                if w == root {
                    cycle_masks.insert(mask);
                } else if w > root && mask & (1 << w) == 0 {
                    stack.push((w, mask | (1 << w)));
                }
            }
        }
    }

    let mut unions = BTreeSet::from([0u32]);
    for &c in &cycle_masks {
        let extra: Vec<u32> = unions.iter().filter(|&&u| u & c == 0).map(|&u| u | c).collect();
        unions.extend(extra);
    }

    let measures: Vec<(usize, usize)> = unions
        .iter()
        .map(|&m| {
            let colors: BTreeSet<usize> = (0..n)
                .filter(|&v| m & (1 << v) != 0)
                .map(|v| g.color(VertexId(v)).0)
                .collect();
            (m.count_ones() as usize, colors.len())
        })
        .collect();
    let best = |key: fn(&(usize, usize)) -> (usize, usize)| measures.iter().map(key).max().unwrap();
    [
        best(|&(v, _)| (v, 0)),
        best(|&(_, c)| (c, 0)),
        best(|&(v, c)| (v, c)),
        best(|&(v, c)| (c, v)),
    ]
}
