//! CNF formulas compiled into gadget graphs, and pullback of cycle sets to
//! truth assignments.
//!
//! Each variable `xi` gets a variable vertex with two loops through it, a
//! TRUE loop and a FALSE loop. Every literal of clause `j` becomes a vertex
//! of the clause's color, spliced into the loop of its polarity. A loop with
//! no literal vertex is a self-loop. The only cycles of the graph are these
//! loops, and a vertex-disjoint set picks at most one loop per variable, so
//! cycle sets and partial truth assignments correspond.
//!
//! Balancing pads every loop with vertices of a fresh color until all loops
//! have the length of the longest one plus one. The 2-per-color variant gives
//! every variable vertex and every balance vertex its own color and closes
//! the balance colors into one extra cycle.

use crate::cnf::{Assignment, CnfInstance};
use crate::error::{CnfError, ReductionError};
use crate::graph::{ColorId, ColoredDigraph, Cycle, CycleSet, EdgeId, GraphBuilder, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    Balanced,
    TwoPerColor,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Balanced => "balanced",
            Variant::TwoPerColor => "2pc",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: ColoredDigraph,
    pub cnf: CnfInstance,
    pub variant: Variant,
    /// Indexed by `var - 1`.
    pub variable_vertex: Vec<VertexId>,
    pub true_loop: Vec<Cycle>,
    pub false_loop: Vec<Cycle>,
    /// Indexed by clause position.
    pub clause_color: Vec<ColorId>,
    /// One shared color in the plain and balanced graphs, one per variable in
    /// the 2-per-color graph.
    pub variable_colors: Vec<ColorId>,
    pub balance_colors: Vec<ColorId>,
    pub balance_cycle: Option<Cycle>,
}

impl ReductionArtifact {
    /// Loop of `var` (1-based) for the given truth value.
    pub fn loop_for(&self, var: usize, value: bool) -> &Cycle {
        if value {
            &self.true_loop[var - 1]
        } else {
            &self.false_loop[var - 1]
        }
    }

    pub fn loops(&self) -> impl Iterator<Item = &Cycle> {
        self.true_loop.iter().zip(&self.false_loop).flat_map(|(t, f)| [t, f])
    }

    pub fn balance_vertex_count(&self) -> usize {
        let balance: Vec<bool> = (0..self.graph.color_count())
            .map(|c| self.balance_colors.contains(&ColorId(c)))
            .collect();
        self.graph
            .vertices()
            .filter(|&v| balance[self.graph.color(v).0])
            .count()
            - self.balance_cycle.as_ref().map_or(0, Cycle::len)
    }

    /// One loop per variable chosen by `a`, plus the balance cycle if any.
    pub fn selection_for(&self, a: &Assignment) -> CycleSet {
        let mut cycles: Vec<Cycle> = (1..=self.cnf.num_vars())
            .map(|var| self.loop_for(var, a.value(var)).clone())
            .collect();
        cycles.extend(self.balance_cycle.clone());
        CycleSet::new(cycles).canonical(&self.graph)
    }
}

struct Layout {
    builder: GraphBuilder,
    variable_vertex: Vec<VertexId>,
    /// `[true, false]` vertex sequences, each starting at the variable vertex.
    loops: Vec<[Vec<VertexId>; 2]>,
    balance_cycle: Option<Vec<VertexId>>,
}

impl Layout {
    fn finish(self) -> (ColoredDigraph, Vec<Cycle>, Vec<Cycle>, Option<Cycle>) {
        let mut b = self.builder;
        let mut add = |seq: &[VertexId]| -> Cycle {
            let edges: Vec<EdgeId> = (0..seq.len())
                .map(|i| {
                    b.add_edge(seq[i], seq[(i + 1) % seq.len()])
                        .expect("gadget vertices exist")
                })
                .collect();
            Cycle::new(edges)
        };
        let mut true_loop = Vec::new();
        let mut false_loop = Vec::new();
        for [t, f] in &self.loops {
            true_loop.push(add(t));
            false_loop.push(add(f));
        }
        let balance_cycle = self.balance_cycle.as_deref().map(&mut add);
        let graph = b.build().expect("every gadget color is carried");
        (graph, true_loop, false_loop, balance_cycle)
    }
}

fn literal_vertex_name(clause: usize, var: usize, positive: bool) -> String {
    if positive {
        format!("c{clause}_x{var}")
    } else {
        format!("c{clause}_!x{var}")
    }
}

fn layout_sat_graph(cnf: &CnfInstance, per_variable_colors: bool) -> (Layout, Vec<ColorId>, Vec<ColorId>) {
    let mut b = GraphBuilder::new();
    let n = cnf.num_vars();
    let variable_colors: Vec<ColorId> = if per_variable_colors {
        (1..=n).map(|i| b.add_color(format!("var{i}")).unwrap()).collect()
    } else if n > 0 {
        vec![b.add_color("var").unwrap()]
    } else {
        Vec::new()
    };
    let clause_color: Vec<ColorId> = (1..=cnf.num_clauses())
        .map(|j| b.add_color(format!("clause{j}")).unwrap())
        .collect();
    let variable_vertex: Vec<VertexId> = (1..=n)
        .map(|i| {
            let c = if per_variable_colors {
                variable_colors[i - 1]
            } else {
                variable_colors[0]
            };
            b.add_vertex(format!("x{i}"), c).unwrap()
        })
        .collect();
    let mut loops: Vec<[Vec<VertexId>; 2]> = variable_vertex.iter().map(|&v| [vec![v], vec![v]]).collect();
    for (j, clause) in cnf.clauses().iter().enumerate() {
        for lit in clause.literals() {
            let v = b
                .add_vertex(
                    literal_vertex_name(j + 1, lit.var(), lit.is_positive()),
                    clause_color[j],
                )
                .unwrap();
            let side = if lit.is_positive() { 0 } else { 1 };
            loops[lit.var() - 1][side].push(v);
        }
    }
    (
        Layout {
            builder: b,
            variable_vertex,
            loops,
            balance_cycle: None,
        },
        variable_colors,
        clause_color,
    )
}

/// Plain gadget graph: one shared variable color, one color per clause.
pub fn build_sat_graph(cnf: &CnfInstance) -> ReductionArtifact {
    let (layout, variable_colors, clause_color) = layout_sat_graph(cnf, false);
    let variable_vertex = layout.variable_vertex.clone();
    let (graph, true_loop, false_loop, balance_cycle) = layout.finish();
    ReductionArtifact {
        graph,
        cnf: cnf.clone(),
        variant: Variant::Plain,
        variable_vertex,
        true_loop,
        false_loop,
        clause_color,
        variable_colors,
        balance_colors: Vec::new(),
        balance_cycle,
    }
}

/// Number of balance vertices each loop receives, in loop order (TRUE then
/// FALSE per variable). The first longest loop receives exactly one.
pub fn balance_padding(loop_lengths: &[usize]) -> Vec<usize> {
    let longest = loop_lengths.iter().copied().max().unwrap_or(0);
    loop_lengths.iter().map(|&len| longest + 1 - len).collect()
}

enum BalanceColoring {
    Shared,
    UniqueWithCycle,
}

fn fresh_label(b: &mut GraphBuilder, base: &str) -> ColorId {
    if let Ok(c) = b.add_color(base) {
        return c;
    }
    (2..)
        .find_map(|k| b.add_color(format!("{base}{k}")).ok())
        .expect("some suffix is free")
}

fn balance(art: &ReductionArtifact, coloring: BalanceColoring) -> ReductionArtifact {
    let g = &art.graph;
    let mut b = GraphBuilder::new();
    for c in 0..g.color_count() {
        b.add_color(g.color_label(ColorId(c))).unwrap();
    }
    for v in g.vertices() {
        b.add_vertex(g.vertex_name(v), g.color(v)).unwrap();
    }
    let mut loops: Vec<[Vec<VertexId>; 2]> = art
        .true_loop
        .iter()
        .zip(&art.false_loop)
        .map(|(t, f)| [t.vertices(g), f.vertices(g)])
        .collect();
    let lengths: Vec<usize> = loops.iter().flat_map(|[t, f]| [t.len(), f.len()]).collect();
    let padding = balance_padding(&lengths);

    let mut balance_colors = art.balance_colors.clone();
    let shared = match coloring {
        BalanceColoring::Shared if !loops.is_empty() => Some(fresh_label(&mut b, "balance")),
        _ => None,
    };
    balance_colors.extend(shared);
    let mut cycle_colors = Vec::new();
    let mut next_id = g.vertex_count();
    for (i, seq) in loops.iter_mut().flat_map(|[t, f]| [t, f]).enumerate() {
        for _ in 0..padding[i] {
            let color = match shared {
                Some(c) => c,
                None => {
                    let c = fresh_label(&mut b, &format!("balance{}", cycle_colors.len() + 1));
                    cycle_colors.push(c);
                    c
                }
            };
            let id = next_id;
            next_id += 1;
            // appended right before the edge back to the variable vertex
            seq.push(b.add_vertex(format!("b{id}"), color).unwrap());
        }
    }
    balance_colors.extend(cycle_colors.iter().copied());
    let mut balance_cycle = art.balance_cycle.as_ref().map(|c| c.vertices(g));
    if !cycle_colors.is_empty() {
        let mut seq = balance_cycle.take().unwrap_or_default();
        for &c in &cycle_colors {
            let id = next_id;
            next_id += 1;
            seq.push(b.add_vertex(format!("bc{id}"), c).unwrap());
        }
        balance_cycle = Some(seq);
    }

    let layout = Layout {
        builder: b,
        variable_vertex: art.variable_vertex.clone(),
        loops,
        balance_cycle,
    };
    let (graph, true_loop, false_loop, balance_cycle) = layout.finish();
    ReductionArtifact {
        graph,
        cnf: art.cnf.clone(),
        variant: match coloring {
            BalanceColoring::Shared => Variant::Balanced,
            BalanceColoring::UniqueWithCycle => Variant::TwoPerColor,
        },
        variable_vertex: art.variable_vertex.clone(),
        true_loop,
        false_loop,
        clause_color: art.clause_color.clone(),
        variable_colors: art.variable_colors.clone(),
        balance_colors,
        balance_cycle,
    }
}

/// Pads every loop to the same length with vertices of one new color.
pub fn add_balance_vertices(art: &ReductionArtifact) -> ReductionArtifact {
    balance(art, BalanceColoring::Shared)
}

/// 2-per-color gadget: unique variable colors, unique balance colors, and a
/// cycle through one extra vertex of every balance color.
pub fn build_2pc_graph(cnf: &CnfInstance) -> Result<ReductionArtifact, CnfError> {
    if let Some((i, c)) = cnf.clauses().iter().enumerate().find(|(_, c)| c.len() > 2) {
        return Err(CnfError::ClauseTooLarge {
            clause: i + 1,
            len: c.len(),
        });
    }
    let (layout, variable_colors, clause_color) = layout_sat_graph(cnf, true);
    let variable_vertex = layout.variable_vertex.clone();
    let (graph, true_loop, false_loop, balance_cycle) = layout.finish();
    let plain = ReductionArtifact {
        graph,
        cnf: cnf.clone(),
        variant: Variant::Plain,
        variable_vertex,
        true_loop,
        false_loop,
        clause_color,
        variable_colors,
        balance_colors: Vec::new(),
        balance_cycle,
    };
    Ok(balance(&plain, BalanceColoring::UniqueWithCycle))
}

/// Reads the truth assignment chosen by `s`. A variable whose loops are both
/// unselected defaults to TRUE.
pub fn extract_assignment(art: &ReductionArtifact, s: &CycleSet) -> Result<Assignment, ReductionError> {
    art.graph.validate(s)?;
    let mut out_edge: Vec<Option<EdgeId>> = vec![None; art.graph.vertex_count()];
    for c in s.cycles() {
        for &e in c.edges() {
            out_edge[art.graph.edge(e).expect("validated").from.0] = Some(e);
        }
    }
    let mut a = Assignment::all(art.cnf.num_vars(), true);
    for var in 1..=art.cnf.num_vars() {
        let v = art.variable_vertex[var - 1];
        if let Some(e) = out_edge[v.0] {
            if art.false_loop[var - 1].edges()[0] == e {
                a.set(var, false);
            }
        }
    }
    Ok(a)
}

/// Clause colors present among the vertices covered by `s`.
pub fn clause_colors_covered(art: &ReductionArtifact, s: &CycleSet) -> Result<usize, ReductionError> {
    art.graph.validate(s)?;
    let mut seen = vec![false; art.graph.color_count()];
    for v in s.covered_vertices(&art.graph) {
        seen[art.graph.color(v).0] = true;
    }
    Ok(art.clause_color.iter().filter(|c| seen[c.0]).count())
}

/// Measures of the color-count reduction from MaxSAT for one solution `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LReductionCheck {
    /// Optimal satisfied clauses of the formula.
    pub opt_a: usize,
    /// Optimal color count of the gadget graph.
    pub opt_b: usize,
    /// Colors covered by `y`.
    pub measure_b: usize,
    /// Clauses satisfied by the pulled-back assignment.
    pub measure_a: usize,
    pub error_a: usize,
    pub error_b: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl LReductionCheck {
    pub const ALPHA: usize = 3;
    pub const BETA: usize = 1;

    /// True when `opt_b <= alpha * opt_a` and `error_a <= beta * error_b`.
    pub fn holds(&self) -> bool {
        self.opt_b <= self.alpha * self.opt_a && self.error_a <= self.beta * self.error_b
    }
}

/// Records the reduction measures for solution `y` of the plain gadget,
/// given the optimal color count `opt_b`.
pub fn l_reduction_check(
    art: &ReductionArtifact,
    y: &CycleSet,
    opt_b: usize,
) -> Result<LReductionCheck, ReductionError> {
    let opt_a = crate::sat::max_satisfiable(&art.cnf)?.0;
    let measure_b = art.graph.validate(y)?.color_count;
    let measure_a = art.cnf.satisfied_count(&extract_assignment(art, y)?);
    Ok(LReductionCheck {
        opt_a,
        opt_b,
        measure_b,
        measure_a,
        error_a: opt_a.abs_diff(measure_a),
        error_b: opt_b.abs_diff(measure_b),
        alpha: LReductionCheck::ALPHA,
        beta: LReductionCheck::BETA,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::fixtures::*;
    use crate::exact::{decide_tex, SearchBudget};

    fn loop_lengths(art: &ReductionArtifact) -> Vec<usize> {
        art.loops().map(Cycle::len).collect()
    }

    #[test]
    fn plain_cnf_a() {
        let art = build_sat_graph(&cnf_a());
        assert_eq!(art.graph.vertex_count(), 5);
        assert_eq!(art.graph.color_count(), 3);
        assert_eq!(loop_lengths(&art), vec![2, 1, 2, 2]);
        // every loop is a valid cycle from the variable vertex
        for (i, c) in art.loops().enumerate() {
            assert_eq!(c.vertices(&art.graph)[0], art.variable_vertex[i / 2]);
            art.graph.validate(&CycleSet::new(vec![c.clone()])).unwrap();
        }
    }

    #[test]
    fn plain_cnf_b_and_single_clause() {
        let art = build_sat_graph(&cnf_b());
        assert_eq!((art.graph.vertex_count(), art.graph.color_count()), (3, 3));
        assert_eq!(loop_lengths(&art), vec![2, 2]);
        let single = CnfInstance::from_dimacs(1, &[vec![1]]).unwrap();
        let art = build_sat_graph(&single);
        assert_eq!((art.graph.vertex_count(), art.graph.color_count()), (2, 2));
        assert!(decide_tex(&art.graph, SearchBudget::default()).unwrap());
    }

    #[test]
    fn literal_vertices_carry_clause_colors() {
        let art = build_sat_graph(&cnf_a());
        let g = &art.graph;
        let on_loop = |var: usize, value: bool| art.loop_for(var, value).vertices(g);
        // clause 1 = (x1 | !x2)
        let c1 = art.clause_color[0];
        assert!(on_loop(1, true).iter().any(|&v| g.color(v) == c1));
        assert!(on_loop(2, false).iter().any(|&v| g.color(v) == c1));
        assert!(!on_loop(2, true).iter().any(|&v| g.color(v) == c1));
        // TRUE and FALSE loops share only the variable vertex
        for var in 1..=2 {
            let t = on_loop(var, true);
            let shared: Vec<_> = on_loop(var, false).into_iter().filter(|v| t.contains(v)).collect();
            assert_eq!(shared, vec![art.variable_vertex[var - 1]]);
        }
    }

    #[test]
    fn balancing_counts() {
        let bal = add_balance_vertices(&build_sat_graph(&cnf_a()));
        assert_eq!(loop_lengths(&bal), vec![3, 3, 3, 3]);
        assert_eq!(bal.balance_vertex_count(), 5);
        assert_eq!(bal.graph.color_count(), 4);
        assert_eq!(bal.variant, Variant::Balanced);

        let bal = add_balance_vertices(&build_sat_graph(&cnf_b()));
        assert_eq!(loop_lengths(&bal), vec![3, 3]);
        assert_eq!(bal.balance_vertex_count(), 2);
        assert_eq!(bal.graph.color_count(), 4);

        let single = CnfInstance::from_dimacs(1, &[vec![1]]).unwrap();
        let bal = add_balance_vertices(&build_sat_graph(&single));
        assert_eq!(loop_lengths(&bal), vec![3, 3]);
        assert_eq!(bal.balance_vertex_count(), 3);
        assert_eq!(balance_padding(&[2, 1]), vec![1, 2]);
    }

    #[test]
    fn balance_vertex_sits_before_return_edge() {
        let bal = add_balance_vertices(&build_sat_graph(&cnf_b()));
        let g = &bal.graph;
        let seq = bal.true_loop[0].vertices(g);
        assert_eq!(g.vertex_name(seq[0]), "x1");
        assert_eq!(g.vertex_name(seq[1]), "c1_x1");
        assert_eq!(g.color_label(g.color(seq[2])), "balance");
    }

    #[test]
    fn two_per_color_counts() {
        let art = build_2pc_graph(&cnf_c()).unwrap();
        assert_eq!(loop_lengths(&art), vec![3, 3, 3, 3]);
        assert_eq!(art.balance_vertex_count(), 4);
        assert_eq!(art.balance_cycle.as_ref().unwrap().len(), 4);
        assert_eq!(art.graph.color_count(), 8);
        assert!(art.graph.color_multiplicities().iter().all(|&m| m <= 2));

        let single = CnfInstance::from_dimacs(1, &[vec![1]]).unwrap();
        let art = build_2pc_graph(&single).unwrap();
        assert_eq!(art.balance_vertex_count(), 3);
        assert_eq!(art.graph.color_count(), 5);

        let empty = CnfInstance::new(1, vec![]).unwrap();
        let art = build_2pc_graph(&empty).unwrap();
        assert_eq!(art.balance_vertex_count(), 2);
        assert_eq!(art.graph.color_count(), 3);
        // the two self-loops of x1 are parallel edges
        assert_eq!(loop_lengths(&art), vec![2, 2]);
    }

    #[test]
    fn two_per_color_rejects_long_clauses() {
        let f = CnfInstance::from_dimacs(3, &[vec![1], vec![1, 2, 3]]).unwrap();
        assert_eq!(build_2pc_graph(&f), Err(CnfError::ClauseTooLarge { clause: 2, len: 3 }));
    }

    #[test]
    fn zero_variables() {
        let f = CnfInstance::new(0, vec![]).unwrap();
        let art = build_sat_graph(&f);
        assert!(art.graph.is_empty());
        let bal = add_balance_vertices(&art);
        assert!(bal.graph.is_empty());
        assert!(build_2pc_graph(&f).unwrap().graph.is_empty());
    }

    #[test]
    fn pullback() {
        let art = build_sat_graph(&cnf_a());
        let both_true = CycleSet::new(vec![art.true_loop[0].clone(), art.true_loop[1].clone()]);
        assert_eq!(
            extract_assignment(&art, &both_true).unwrap(),
            Assignment::new(vec![true, true])
        );
        assert_eq!(clause_colors_covered(&art, &both_true).unwrap(), 2);
        assert_eq!(
            extract_assignment(&art, &CycleSet::empty()).unwrap(),
            Assignment::new(vec![true, true])
        );
        assert_eq!(clause_colors_covered(&art, &CycleSet::empty()).unwrap(), 0);
        let f1 = CycleSet::new(vec![art.false_loop[0].clone()]);
        assert_eq!(
            extract_assignment(&art, &f1).unwrap(),
            Assignment::new(vec![false, true])
        );

        let b = build_sat_graph(&cnf_b());
        let t1 = CycleSet::new(vec![b.true_loop[0].clone()]);
        let a = extract_assignment(&b, &t1).unwrap();
        assert_eq!(a, Assignment::new(vec![true]));
        assert_eq!(b.cnf.satisfied_count(&a), 1);
        assert_eq!(clause_colors_covered(&b, &t1).unwrap(), 1);

        let overlapping = CycleSet::new(vec![b.true_loop[0].clone(), b.false_loop[0].clone()]);
        assert!(matches!(
            extract_assignment(&b, &overlapping),
            Err(ReductionError::InvalidSolution(_))
        ));
    }

    #[test]
    fn parallel_self_loops_pull_back_by_edge() {
        let f = CnfInstance::new(1, vec![]).unwrap();
        let art = build_sat_graph(&f);
        let false_only = CycleSet::new(vec![art.false_loop[0].clone()]);
        assert_eq!(
            extract_assignment(&art, &false_only).unwrap(),
            Assignment::new(vec![false])
        );
    }

    #[test]
    fn selections_have_equal_size_after_balancing() {
        let art = build_2pc_graph(&cnf_c()).unwrap();
        let sizes: Vec<usize> = (0..4)
            .map(|b| {
                let a = Assignment::new(vec![b & 2 != 0, b & 1 != 0]);
                art.graph.validate(&art.selection_for(&a)).unwrap().vertex_count
            })
            .collect();
        assert!(sizes.iter().all(|&s| s == sizes[0]));
        assert_eq!(sizes[0], 2 * 3 + 4);
    }

    #[test]
    fn l_reduction_on_cnf_b() {
        let art = build_sat_graph(&cnf_b());
        let y = CycleSet::new(vec![art.true_loop[0].clone()]);
        let check = l_reduction_check(&art, &y, 2).unwrap();
        assert_eq!(
            (check.opt_a, check.opt_b, check.measure_b, check.measure_a),
            (1, 2, 2, 1)
        );
        assert_eq!((check.error_a, check.error_b), (0, 0));
        assert!(check.holds());
    }
}
