//! DIMACS CNF: `c` comments, a `p cnf <vars> <clauses>` header, then
//! zero-terminated clauses that may span lines. A `%` line ends the body.

use std::fmt::Write;

use crate::cnf::{CnfInstance, Literal};
use crate::error::{CnfError, ParseError};

pub fn parse_dimacs(text: &str) -> Result<CnfInstance, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::syntax(line, "duplicate problem line"));
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let ["p", "cnf", vars, count] = fields.as_slice() else {
                return Err(ParseError::syntax(line, "expected `p cnf <vars> <clauses>`"));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| ParseError::syntax(line, format!("bad count `{s}`")))
            };
            header = Some((parse(vars)?, parse(count)?));
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(ParseError::syntax(line, "clause before `p cnf` header"));
        };
        for tok in trimmed.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| ParseError::syntax(line, format!("bad literal `{tok}`")))?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(CnfError::EmptyClause(clauses.len() + 1).into());
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > num_vars {
                return Err(CnfError::LiteralOutOfRange { literal: lit, num_vars }.into());
            }
            current.push(Literal::new(var, lit > 0));
        }
    }
    let Some((num_vars, expected)) = header else {
        return Err(ParseError::syntax(last_line.max(1), "missing `p cnf` header"));
    };
    // accept a final clause without its terminating 0
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != expected {
        return Err(ParseError::syntax(
            last_line.max(1),
            format!("header declares {expected} clauses, found {}", clauses.len()),
        ));
    }
    Ok(CnfInstance::new(num_vars, clauses)?)
}

pub fn write_dimacs(cnf: &CnfInstance) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.num_vars(), cnf.num_clauses());
    for c in cnf.clauses() {
        for l in c.literals() {
            write!(out, "{} ", l.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}
