//! Per-color approximation: solve the color-blind maximum-size exchange and
//! report its colors. With at most `j` vertices of any color, every color of
//! an optimum is matched by at least one of `j` covered vertices, so the
//! result keeps at least `1/j` of the optimal color count.

use crate::error::ApproxError;
use crate::graph::{ColoredDigraph, CycleSet};
use crate::max_size::solve_max_size;

/// Largest number of vertices sharing one color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PerColorBound(pub usize);

/// A ratio `numerator / denominator`, never reduced below its stated form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub numerator: u64,
    pub denominator: u64,
}

impl Ratio {
    /// `value >= ratio * reference`, compared without division.
    pub fn admits(self, value: usize, reference: usize) -> bool {
        value as u64 * self.denominator >= reference as u64 * self.numerator
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

pub fn per_color_bound(g: &ColoredDigraph) -> Result<PerColorBound, ApproxError> {
    g.color_multiplicities()
        .into_iter()
        .max()
        .map(PerColorBound)
        .ok_or(ApproxError::EmptyGraph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxOutcome {
    pub cycles: CycleSet,
    pub bound: PerColorBound,
    pub guarantee: Ratio,
}

pub fn approx_jpc(g: &ColoredDigraph) -> Result<ApproxOutcome, ApproxError> {
    let bound = per_color_bound(g)?;
    Ok(ApproxOutcome {
        cycles: solve_max_size(g),
        bound,
        guarantee: Ratio {
            numerator: 1,
            denominator: bound.0 as u64,
        },
    })
}
