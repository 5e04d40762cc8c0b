//! Seeded instance generators. ChaCha8 keeps the streams stable across
//! platforms and crate versions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfInstance, Literal};
use crate::error::GenError;
use crate::graph::ColoredDigraph;

fn check_prob(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::BadParameters(format!(
            "edge probability {p} is outside [0, 1]"
        )))
    }
}

fn random_edges(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Random colored digraph: vertex `i < num_colors` gets color `i`, the rest a
/// uniform color; every ordered pair `u != v` is an edge with probability
/// `edge_prob`.
pub fn gen_random(
    num_vertices: usize,
    num_colors: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<ColoredDigraph, GenError> {
    check_prob(edge_prob)?;
    if num_colors > num_vertices {
        return Err(GenError::BadParameters(format!(
            "{num_colors} colors cannot all be carried by {num_vertices} vertices"
        )));
    }
    if num_colors == 0 && num_vertices > 0 {
        return Err(GenError::BadParameters("vertices need at least one color".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors: Vec<usize> = (0..num_vertices)
        .map(|i| {
            if i < num_colors {
                i
            } else {
                rng.random_range(0..num_colors)
            }
        })
        .collect();
    let edges = random_edges(&mut rng, num_vertices, edge_prob);
    Ok(ColoredDigraph::from_parts(&colors, &edges).expect("generated graph is well formed"))
}

/// Random digraph whose largest color class has exactly `j` vertices.
/// Colors are blocks of `j` vertices (the last may be shorter), shuffled
/// over the vertex order.
pub fn gen_with_multiplicity(
    num_vertices: usize,
    j: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<ColoredDigraph, GenError> {
    check_prob(edge_prob)?;
    if j == 0 || j > num_vertices {
        return Err(GenError::BadParameters(format!(
            "multiplicity {j} needs 1 <= j <= {num_vertices}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: Vec<usize> = (0..num_vertices).map(|i| i / j).collect();
    blocks.shuffle(&mut rng);
    // renumber by first appearance so color ids stay canonical
    let mut renumber = vec![usize::MAX; num_vertices.div_ceil(j)];
    let mut next = 0;
    let colors: Vec<usize> = blocks
        .into_iter()
        .map(|b| {
            if renumber[b] == usize::MAX {
                renumber[b] = next;
                next += 1;
            }
            renumber[b]
        })
        .collect();
    let edges = random_edges(&mut rng, num_vertices, edge_prob);
    Ok(ColoredDigraph::from_parts(&colors, &edges).expect("generated graph is well formed"))
}

/// Random CNF with `num_clauses` clauses of 1..=`max_clause_len` literals
/// over distinct variables.
pub fn gen_random_cnf(
    num_vars: usize,
    num_clauses: usize,
    max_clause_len: usize,
    seed: u64,
) -> Result<CnfInstance, GenError> {
    if num_vars == 0 && num_clauses > 0 {
        return Err(GenError::BadParameters("clauses need at least one variable".into()));
    }
    if max_clause_len == 0 && num_clauses > 0 {
        return Err(GenError::BadParameters("clauses need at least one literal".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vars: Vec<usize> = (1..=num_vars).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let len = rng.random_range(1..=max_clause_len.min(num_vars));
            vars.shuffle(&mut rng);
            vars[..len]
                .iter()
                .map(|&v| Literal::new(v, rng.random_bool(0.5)))
                .collect()
        })
        .collect();
    Ok(CnfInstance::new(num_vars, clauses).expect("generated literals are in range"))
}
