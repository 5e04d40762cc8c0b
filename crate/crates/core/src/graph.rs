//! Vertex-colored directed multigraphs and vertex-disjoint cycle sets.
//!
//! A [`ColoredDigraph`] is the exchange market: one vertex per item, one
//! color per agent, an edge `u -> v` when the owner of `u` accepts `v` in
//! exchange. Self-loops and parallel edges are allowed. A [`CycleSet`] is a
//! clearing outcome and is checked by [`ColoredDigraph::validate`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{GraphError, SolutionError};

macro_rules! index_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub usize);

        impl $name {
            #[inline]
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt(f)
            }
        }
    };
}

index_type!(
    /// Dense vertex index, `0..vertex_count`.
    VertexId
);
index_type!(
    /// Dense edge index in insertion order.
    EdgeId
);
index_type!(
    /// Dense color index, `0..color_count`.
    ColorId
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
}

/// Immutable vertex-colored directed multigraph.
///
/// Every vertex has a name (a whitespace-free token used by the text
/// formats) and every color a unique label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    vertex_names: Vec<String>,
    vertex_colors: Vec<ColorId>,
    color_labels: Vec<String>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<EdgeId>>,
}

impl ColoredDigraph {
    /// Builds a graph from raw color ids and endpoint pairs. Vertices are
    /// named by their index and colors are labelled `c<id>`.
    pub fn from_parts(vertex_colors: &[usize], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let color_count = vertex_colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut b = GraphBuilder::new();
        for c in 0..color_count {
            b.add_color(format!("c{c}"))?;
        }
        for (v, &c) in vertex_colors.iter().enumerate() {
            b.add_vertex(v.to_string(), ColorId(c))?;
        }
        for &(u, v) in edges {
            b.add_edge(VertexId(u), VertexId(v))?;
        }
        b.build()
    }

    pub fn empty() -> Self {
        GraphBuilder::new().build().expect("empty graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn color_count(&self) -> usize {
        self.color_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_colors.is_empty()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn edge(&self, e: EdgeId) -> Option<Edge> {
        self.edges.get(e.0).copied()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (EdgeId, Edge)> + '_ {
        self.edges.iter().enumerate().map(|(i, &e)| (EdgeId(i), e))
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn color(&self, v: VertexId) -> ColorId {
        self.vertex_colors[v.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn color_label(&self, c: ColorId) -> &str {
        &self.color_labels[c.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name).map(VertexId)
    }

    pub fn color_by_label(&self, label: &str) -> Option<ColorId> {
        self.color_labels.iter().position(|l| l == label).map(ColorId)
    }

    /// The set of all colors of the graph; tropicality is measured against it.
    pub fn colors(&self) -> BTreeSet<ColorId> {
        (0..self.color_count()).map(ColorId).collect()
    }

    /// Number of vertices carrying each color, indexed by color id.
    pub fn color_multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.color_count()];
        for c in &self.vertex_colors {
            counts[c.0] += 1;
        }
        counts
    }

    /// Lowest-id edge `from -> to`, if any.
    pub fn find_edge(&self, from: VertexId, to: VertexId) -> Option<EdgeId> {
        self.out_edges
            .get(from.0)?
            .iter()
            .copied()
            .find(|&e| self.edges[e.0].to == to)
    }

    /// Distinct out-neighbours of `v` in ascending order, each paired with the
    /// lowest-id edge reaching it.
    pub fn successors(&self, v: VertexId) -> Vec<(VertexId, EdgeId)> {
        let mut seen: Vec<(VertexId, EdgeId)> = Vec::new();
        for &e in &self.out_edges[v.0] {
            let to = self.edges[e.0].to;
            if !seen.iter().any(|&(w, _)| w == to) {
                seen.push((to, e));
            }
        }
        seen.sort();
        seen
    }

    pub fn has_self_loop(&self, v: VertexId) -> bool {
        self.find_edge(v, v).is_some()
    }

    /// Returns a copy of this graph with every self-loop removed.
    pub fn without_self_loops(&self) -> Self {
        let mut b = GraphBuilder::new();
        for l in &self.color_labels {
            b.add_color(l.clone()).expect("labels already unique");
        }
        for v in self.vertices() {
            b.add_vertex(self.vertex_name(v).to_owned(), self.color(v))
                .expect("names already unique");
        }
        for (_, e) in self.edges() {
            if e.from != e.to {
                b.add_edge(e.from, e.to).expect("endpoints already valid");
            }
        }
        b.build().expect("colors are still carried")
    }

    /// Checks that `set` is a collection of pairwise vertex-disjoint simple
    /// cycles of this graph and returns its metrics.
    pub fn validate(&self, set: &CycleSet) -> Result<SolutionMetrics, SolutionError> {
        let mut owner: Vec<Option<usize>> = vec![None; self.vertex_count()];
        let mut covered_colors = vec![false; self.color_count()];
        let mut vertex_count = 0;
        for (ci, cycle) in set.cycles().iter().enumerate() {
            let edges = cycle.edges();
            let Some(&first) = edges.first() else {
                return Err(SolutionError::EmptyCycle { cycle: ci });
            };
            let resolve = |e: EdgeId| {
                self.edge(e)
                    .ok_or(SolutionError::NonexistentEdge { cycle: ci, edge: e })
            };
            let start = resolve(first)?.from;
            let mut at = start;
            for &e in edges {
                let edge = resolve(e)?;
                if edge.from != at {
                    return Err(SolutionError::BrokenChain { cycle: ci, edge: e });
                }
                match owner[edge.from.0] {
                    Some(o) if o == ci => {
                        return Err(SolutionError::RepeatedVertexInCycle {
                            cycle: ci,
                            vertex: edge.from,
                        })
                    }
                    Some(o) => {
                        return Err(SolutionError::OverlapBetweenCycles {
                            first: o,
                            second: ci,
                            vertex: edge.from,
                        })
                    }
                    None => owner[edge.from.0] = Some(ci),
                }
                vertex_count += 1;
                covered_colors[self.color(edge.from).0] = true;
                at = edge.to;
            }
            if at != start {
                let last = *edges.last().expect("nonempty");
                return Err(SolutionError::BrokenChain { cycle: ci, edge: last });
            }
        }
        Ok(SolutionMetrics {
            vertex_count,
            color_count: covered_colors.iter().filter(|&&c| c).count(),
        })
    }

    /// Turns a successor map (`succ[v] = Some(w)` when `v` gives to `w`) that
    /// is a bijection on its used vertices into a canonical cycle set, using
    /// the lowest-id edge for every step.
    ///
    /// Panics if the map is not a permutation of its used part or names a
    /// missing edge; callers construct it from edges of this graph.
    pub(crate) fn cycles_from_successors(&self, succ: &[Option<VertexId>]) -> CycleSet {
        let mut seen = vec![false; succ.len()];
        let mut cycles = Vec::new();
        for start in 0..succ.len() {
            if seen[start] || succ[start].is_none() {
                continue;
            }
            let mut edges = Vec::new();
            let mut at = VertexId(start);
            loop {
                seen[at.0] = true;
                let next = succ[at.0].expect("successor map is a permutation");
                edges.push(self.find_edge(at, next).expect("successor uses an edge"));
                at = next;
                if at.0 == start {
                    break;
                }
                assert!(!seen[at.0], "successor map is not injective");
            }
            cycles.push(Cycle::new(edges));
        }
        CycleSet::new(cycles)
    }
}

/// Incremental construction of a [`ColoredDigraph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertex_names: Vec<String>,
    vertex_colors: Vec<ColorId>,
    color_labels: Vec<String>,
    edges: Vec<Edge>,
    name_index: HashMap<String, VertexId>,
    label_index: HashMap<String, ColorId>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_color(&mut self, label: impl Into<String>) -> Result<ColorId, GraphError> {
        let label = label.into();
        check_token(&label)?;
        if self.label_index.contains_key(&label) {
            return Err(GraphError::DuplicateColorLabel(label));
        }
        let id = ColorId(self.color_labels.len());
        self.label_index.insert(label.clone(), id);
        self.color_labels.push(label);
        Ok(id)
    }

    /// Returns the color with this label, declaring it when new.
    pub fn color_for_label(&mut self, label: &str) -> Result<ColorId, GraphError> {
        match self.label_index.get(label) {
            Some(&c) => Ok(c),
            None => self.add_color(label),
        }
    }

    pub fn add_vertex(&mut self, name: impl Into<String>, color: ColorId) -> Result<VertexId, GraphError> {
        let name = name.into();
        check_token(&name)?;
        if color.0 >= self.color_labels.len() {
            return Err(GraphError::UnknownColor(color));
        }
        if self.name_index.contains_key(&name) {
            return Err(GraphError::DuplicateVertexName(name));
        }
        let id = VertexId(self.vertex_names.len());
        self.name_index.insert(name.clone(), id);
        self.vertex_names.push(name);
        self.vertex_colors.push(color);
        Ok(id)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.name_index.get(name).copied()
    }

    pub fn add_edge(&mut self, from: VertexId, to: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.vertex_names.len();
        for v in [from, to] {
            if v.0 >= n {
                return Err(GraphError::EndpointOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
        }
        self.edges.push(Edge { from, to });
        Ok(EdgeId(self.edges.len() - 1))
    }

    pub fn build(self) -> Result<ColoredDigraph, GraphError> {
        let mut carried = vec![false; self.color_labels.len()];
        for c in &self.vertex_colors {
            carried[c.0] = true;
        }
        if let Some(c) = carried.iter().position(|&x| !x) {
            return Err(GraphError::EmptyColor(ColorId(c)));
        }
        let mut out_edges = vec![Vec::new(); self.vertex_names.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out_edges[e.from.0].push(EdgeId(i));
        }
        Ok(ColoredDigraph {
            vertex_names: self.vertex_names,
            vertex_colors: self.vertex_colors,
            color_labels: self.color_labels,
            edges: self.edges,
            out_edges,
        })
    }
}

fn check_token(s: &str) -> Result<(), GraphError> {
    if s.is_empty() || s.chars().any(char::is_whitespace) || s.starts_with('#') {
        Err(GraphError::BadToken(s.to_owned()))
    } else {
        Ok(())
    }
}

/// A simple directed cycle stored as its edge sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn new(edges: Vec<EdgeId>) -> Self {
        Self { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Tails of the edges, in cycle order. Edges must exist in `g`.
    pub fn vertices(&self, g: &ColoredDigraph) -> Vec<VertexId> {
        self.edges
            .iter()
            .map(|&e| g.edge(e).expect("edge of graph").from)
            .collect()
    }

    /// Rotation that starts at the smallest vertex id.
    pub fn canonical(&self, g: &ColoredDigraph) -> Cycle {
        let verts = self.vertices(g);
        let Some(pos) = verts.iter().enumerate().min_by_key(|(_, v)| **v).map(|(i, _)| i) else {
            return self.clone();
        };
        let mut edges = self.edges[pos..].to_vec();
        edges.extend_from_slice(&self.edges[..pos]);
        Cycle { edges }
    }
}

/// A set of vertex-disjoint cycles. Construction does not validate; use
/// [`ColoredDigraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn new(cycles: Vec<Cycle>) -> Self {
        Self { cycles }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Every cycle rotated to start at its smallest vertex, cycles sorted by
    /// that leading vertex.
    pub fn canonical(&self, g: &ColoredDigraph) -> CycleSet {
        let mut cycles: Vec<Cycle> = self.cycles.iter().map(|c| c.canonical(g)).collect();
        cycles.sort_by_key(|c| c.vertices(g));
        CycleSet { cycles }
    }

    /// Vertex sequences of the canonical form; the total order on these keys
    /// is the lexicographic tie-break used by the solvers.
    pub fn canonical_key(&self, g: &ColoredDigraph) -> Vec<Vec<VertexId>> {
        self.canonical(g).cycles.iter().map(|c| c.vertices(g)).collect()
    }

    /// Successor of every covered vertex.
    pub fn successor_map(&self, g: &ColoredDigraph) -> Vec<Option<VertexId>> {
        let mut succ = vec![None; g.vertex_count()];
        for c in &self.cycles {
            for &e in c.edges() {
                let edge = g.edge(e).expect("edge of graph");
                succ[edge.from.0] = Some(edge.to);
            }
        }
        succ
    }

    pub fn covered_vertices(&self, g: &ColoredDigraph) -> BTreeSet<VertexId> {
        self.cycles.iter().flat_map(|c| c.vertices(g)).collect()
    }
}

/// The two clearing objectives of a cycle set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
pub struct SolutionMetrics {
    pub vertex_count: usize,
    pub color_count: usize,
}

impl SolutionMetrics {
    pub fn new(vertex_count: usize, color_count: usize) -> Self {
        Self {
            vertex_count,
            color_count,
        }
    }

    pub fn is_tropical(&self, g: &ColoredDigraph) -> bool {
        self.color_count == g.color_count()
    }
}

impl fmt::Display for SolutionMetrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.vertex_count, self.color_count)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn named(colors: &[(&str, &str)], edges: &[(&str, &str)]) -> ColoredDigraph {
        let mut b = GraphBuilder::new();
        for &(v, c) in colors {
            let c = b.color_for_label(c).unwrap();
            b.add_vertex(v, c).unwrap();
        }
        for &(u, v) in edges {
            let (u, v) = (b.vertex_by_name(u).unwrap(), b.vertex_by_name(v).unwrap());
            b.add_edge(u, v).unwrap();
        }
        b.build().unwrap()
    }

    pub fn g_pair() -> ColoredDigraph {
        named(&[("a", "red"), ("b", "blue")], &[("a", "b"), ("b", "a")])
    }

    pub fn g_conflict() -> ColoredDigraph {
        named(
            &[("a", "red"), ("b", "red"), ("c", "red"), ("d", "blue")],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("d", "a")],
        )
    }

    pub fn g_tie() -> ColoredDigraph {
        named(
            &[("r1", "red"), ("r2", "red"), ("b1", "blue")],
            &[("r1", "r2"), ("r2", "r1"), ("r1", "b1"), ("b1", "r1")],
        )
    }

    pub fn cycle(g: &ColoredDigraph, names: &[&str]) -> Cycle {
        let ids: Vec<VertexId> = names.iter().map(|n| g.vertex_by_name(n).unwrap()).collect();
        let edges = (0..ids.len())
            .map(|i| g.find_edge(ids[i], ids[(i + 1) % ids.len()]).unwrap())
            .collect();
        Cycle::new(edges)
    }
}
