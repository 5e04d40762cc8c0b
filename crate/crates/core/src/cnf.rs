//! CNF formulas over variables `x1..xn`.

use std::fmt;

use crate::error::CnfError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    var: usize,
    positive: bool,
}

impl Literal {
    /// `var` is 1-based.
    pub fn new(var: usize, positive: bool) -> Self {
        assert!(var >= 1, "variables are numbered from 1");
        Self { var, positive }
    }

    pub fn pos(var: usize) -> Self {
        Self::new(var, true)
    }

    pub fn neg(var: usize) -> Self {
        Self::new(var, false)
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn eval(self, a: &Assignment) -> bool {
        a.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

/// A nonempty disjunction without repeated literals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause(Vec<Literal>);

impl Clause {
    pub fn literals(&self) -> &[Literal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_satisfied(&self, a: &Assignment) -> bool {
        self.0.iter().any(|l| l.eval(a))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfInstance {
    /// Validates literals and collapses duplicates, keeping first occurrences.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, CnfError> {
        let mut out = Vec::with_capacity(clauses.len());
        for (i, lits) in clauses.into_iter().enumerate() {
            if lits.is_empty() {
                return Err(CnfError::EmptyClause(i + 1));
            }
            let mut clause: Vec<Literal> = Vec::with_capacity(lits.len());
            for l in lits {
                if l.var > num_vars {
                    return Err(CnfError::LiteralOutOfRange {
                        literal: l.to_dimacs(),
                        num_vars,
                    });
                }
                if !clause.contains(&l) {
                    clause.push(l);
                }
            }
            out.push(Clause(clause));
        }
        Ok(Self { num_vars, clauses: out })
    }

    /// Builds from signed DIMACS literals (`3` is `x3`, `-3` is `!x3`).
    pub fn from_dimacs(num_vars: usize, clauses: &[Vec<i64>]) -> Result<Self, CnfError> {
        let mut lits = Vec::with_capacity(clauses.len());
        for c in clauses {
            let mut clause = Vec::with_capacity(c.len());
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(CnfError::LiteralOutOfRange { literal: l, num_vars });
                }
                clause.push(Literal::new(l.unsigned_abs() as usize, l > 0));
            }
            lits.push(clause);
        }
        Self::new(num_vars, lits)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfied_count(&self, a: &Assignment) -> usize {
        self.clauses.iter().filter(|c| c.is_satisfied(a)).count()
    }
}

/// Total truth assignment over `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Self { values }
    }

    pub fn all(num_vars: usize, value: bool) -> Self {
        Self {
            values: vec![value; num_vars],
        }
    }

    /// `var` is 1-based.
    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    pub fn set(&mut self, var: usize, value: bool) {
        self.values[var - 1] = value;
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}={}", i + 1, if *v { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}
