//! Exhaustive SAT and MaxSAT over all `2^n` assignments.
//!
//! Assignments are visited in lexicographic order (FALSE before TRUE,
//! `x1` most significant), so the first maximum found is the least one.

use crate::cnf::{Assignment, CnfInstance};
use crate::error::CnfError;

pub const SAT_ORACLE_VAR_LIMIT: usize = 24;

fn check_size(cnf: &CnfInstance) -> Result<(), CnfError> {
    if cnf.num_vars() > SAT_ORACLE_VAR_LIMIT {
        Err(CnfError::TooManyVariables {
            num_vars: cnf.num_vars(),
            limit: SAT_ORACLE_VAR_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Positive and negative literal masks per clause; bit `n - var` holds `var`.
fn clause_masks(cnf: &CnfInstance) -> Vec<(u32, u32)> {
    let n = cnf.num_vars();
    cnf.clauses()
        .iter()
        .map(|c| {
            c.literals().iter().fold((0, 0), |(pos, neg), l| {
                let bit = 1u32 << (n - l.var());
                if l.is_positive() {
                    (pos | bit, neg)
                } else {
                    (pos, neg | bit)
                }
            })
        })
        .collect()
}

fn decode(n: usize, bits: u32) -> Assignment {
    Assignment::new((1..=n).map(|var| bits >> (n - var) & 1 == 1).collect())
}

fn satisfied(masks: &[(u32, u32)], bits: u32) -> usize {
    masks
        .iter()
        .filter(|&&(pos, neg)| bits & pos != 0 || !bits & neg != 0)
        .count()
}

pub fn is_satisfiable(cnf: &CnfInstance) -> Result<bool, CnfError> {
    check_size(cnf)?;
    let masks = clause_masks(cnf);
    let q = masks.len();
    Ok((0..1u32 << cnf.num_vars()).any(|bits| satisfied(&masks, bits) == q))
}

/// Maximum number of simultaneously satisfied clauses, with the least
/// assignment attaining it.
pub fn max_satisfiable(cnf: &CnfInstance) -> Result<(usize, Assignment), CnfError> {
    check_size(cnf)?;
    let masks = clause_masks(cnf);
    let mut best = (0usize, 0u32);
    let mut first = true;
    for bits in 0..1u32 << cnf.num_vars() {
        let s = satisfied(&masks, bits);
        if first || s > best.0 {
            best = (s, bits);
            first = false;
            if s == masks.len() {
                break;
            }
        }
    }
    Ok((best.0, decode(cnf.num_vars(), best.1)))
}
