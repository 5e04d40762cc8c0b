mod common;

use proptest::prelude::*;

use common::independent_optima;
use tropex::format::{
    parse_dimacs, parse_graph, parse_solution, write_dimacs, write_graph, write_solution, WantEntry, WantList,
};
use tropex::gen::{gen_random, gen_random_cnf};
use tropex::{
    add_balance_vertices, brute_force_best, build_sat_graph, clause_colors_covered, extract_assignment, is_satisfiable,
    max_satisfiable, max_vertex_count, solve, solve_max_size, CnfInstance, ColoredDigraph, CycleSet, Objective,
    SearchBudget,
};

fn small_graph() -> impl Strategy<Value = ColoredDigraph> {
    (1usize..=8, 1usize..=5, 0.0f64..=0.7, any::<u64>())
        .prop_map(|(n, k, p, seed)| gen_random(n, k.min(n), p, seed).unwrap())
}

/// Arbitrary edge lists, so self-loops and parallel edges show up.
fn multigraph() -> impl Strategy<Value = ColoredDigraph> {
    (1usize..=8, 1usize..=4).prop_flat_map(|(n, k)| {
        let k = k.min(n);
        (
            prop::collection::vec(0..k, n - k),
            prop::collection::vec((0..n, 0..n), 0..=3 * n),
        )
            .prop_map(move |(rest, edges)| {
                let colors: Vec<usize> = (0..k).chain(rest).collect();
                ColoredDigraph::from_parts(&colors, &edges).unwrap()
            })
    })
}

fn small_cnf() -> impl Strategy<Value = CnfInstance> {
    (1usize..=5, 0usize..=7, 1usize..=3, any::<u64>())
        .prop_map(|(n, q, len, seed)| gen_random_cnf(n, q, len, seed).unwrap())
}

fn score(g: &ColoredDigraph, obj: Objective, s: &CycleSet) -> (usize, usize) {
    obj.score(g.validate(s).expect("solver output is valid"))
}

/// Drops every edge whose id is congruent to `phase` modulo `stride`.
fn thin(g: &ColoredDigraph, stride: usize, phase: usize) -> ColoredDigraph {
    let colors: Vec<usize> = g.vertices().map(|v| g.color(v).0).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|(id, _)| id.0 % stride != phase)
        .map(|(_, e)| (e.from.0, e.to.0))
        .collect();
    ColoredDigraph::from_parts(&colors, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solvers_match_both_oracles(g in prop_oneof![small_graph(), multigraph()]) {
        let ind = independent_optima(&g);
        for (obj, want) in Objective::ALL.into_iter().zip(ind) {
            let s = if obj == Objective::MaxVertices {
                solve_max_size(&g)
            } else {
                solve(&g, obj, SearchBudget::unlimited()).unwrap().cycles
            };
            prop_assert_eq!(score(&g, obj, &s), want);
            prop_assert_eq!(score(&g, obj, &brute_force_best(&g, obj).unwrap()), want);
        }
    }

    #[test]
    fn objective_chains(g in prop_oneof![small_graph(), multigraph()]) {
        let [mv, mc, tm, mt] = independent_optima(&g);
        // tmaxex keeps the maximum vertex count, maxtex keeps the maximum color count
        prop_assert_eq!(tm.0, mv.0);
        prop_assert_eq!(mt.0, mc.0);
        prop_assert!(tm.1 <= mc.0);
        prop_assert!(mt.1 <= mv.0);
    }

    #[test]
    fn removing_edges_never_helps(g in small_graph(), stride in 2usize..5, phase in 0usize..5) {
        let h = thin(&g, stride, phase % stride);
        prop_assert!(max_vertex_count(&h) <= max_vertex_count(&g));
        let tex = |x: &ColoredDigraph| {
            x.validate(&solve(x, Objective::MaxColors, SearchBudget::unlimited()).unwrap().cycles).unwrap().color_count
        };
        prop_assert!(tex(&h) <= tex(&g));
    }

    #[test]
    fn dropping_self_loops_never_helps(g in multigraph()) {
        let h = g.without_self_loops();
        prop_assert!(h.edges().all(|(_, e)| e.from != e.to));
        prop_assert!(max_vertex_count(&h) <= max_vertex_count(&g));
    }

    #[test]
    fn graph_and_solution_round_trip(g in prop_oneof![small_graph(), multigraph()]) {
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        let s = solve_max_size(&g);
        let back = parse_solution(&g, &write_solution(&g, &s)).unwrap();
        prop_assert_eq!(back.canonical(&g), s.canonical(&g));
    }

    #[test]
    fn dimacs_round_trip(f in small_cnf()) {
        prop_assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
    }

    #[test]
    fn wantlist_round_trip(n in 1usize..7, agents in 1usize..4, mask in any::<u64>()) {
        let entries: Vec<WantEntry> = (0..n)
            .map(|i| WantEntry {
                agent: format!("agent{}", i % agents),
                item: format!("item{i}"),
                wants: (0..n).filter(|&j| mask >> (i * n + j) & 1 == 1).map(|j| format!("item{j}")).collect(),
            })
            .collect();
        let w = WantList { entries };
        let back = WantList::parse(&w.write()).unwrap();
        prop_assert_eq!(&back, &w);
        let g = back.to_graph(false).unwrap();
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert_eq!(g.edge_count(), w.entries.iter().map(|e| e.wants.len()).sum::<usize>());
    }

    #[test]
    fn generator_is_deterministic(n in 1usize..20, k in 1usize..5, p in 0.0f64..1.0, seed in any::<u64>()) {
        let k = k.min(n);
        prop_assert_eq!(write_graph(&gen_random(n, k, p, seed).unwrap()), write_graph(&gen_random(n, k, p, seed).unwrap()));
    }

    #[test]
    fn sat_oracle_consistency(f in small_cnf()) {
        let (best, witness) = max_satisfiable(&f).unwrap();
        prop_assert_eq!(f.satisfied_count(&witness), best);
        prop_assert_eq!(is_satisfiable(&f).unwrap(), best == f.num_clauses());
        if f.num_clauses() > 0 {
            let rest: Vec<Vec<i64>> = f.clauses()[1..]
                .iter()
                .map(|c| c.literals().iter().map(|l| l.to_dimacs()).collect())
                .collect();
            let smaller = CnfInstance::from_dimacs(f.num_vars(), &rest).unwrap();
            let (rest_best, _) = max_satisfiable(&smaller).unwrap();
            prop_assert!(rest_best <= best && best <= rest_best + 1);
        }
    }

    /// Any choice of at most one loop per variable is a valid cycle set, and
    /// the pulled-back assignment satisfies at least every covered clause.
    #[test]
    fn pullback_bound(f in small_cnf(), picks in prop::collection::vec(0u8..3, 5), balanced in any::<bool>()) {
        let plain = build_sat_graph(&f);
        let art = if balanced { add_balance_vertices(&plain) } else { plain };
        let cycles = (1..=f.num_vars())
            .filter_map(|var| match picks[var - 1] {
                0 => None,
                1 => Some(art.loop_for(var, true).clone()),
                _ => Some(art.loop_for(var, false).clone()),
            })
            .collect();
        let s = CycleSet::new(cycles);
        art.graph.validate(&s).unwrap();
        let a = extract_assignment(&art, &s).unwrap();
        prop_assert!(f.satisfied_count(&a) >= clause_colors_covered(&art, &s).unwrap());
        for var in 1..=f.num_vars() {
            prop_assert_eq!(a.value(var), picks[var - 1] != 2);
        }
    }
}
