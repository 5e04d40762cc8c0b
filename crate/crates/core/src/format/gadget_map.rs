//! Sidecar map of a gadget graph.
//!
//! ```text
//! VARIANT balanced
//! VAR 1 TRUE x1 c1_x1 b5
//! VAR 1 FALSE x1 b6 b7
//! CLAUSECOLOR 1 clause1
//! CLAUSE 1 1 -2 0
//! BALANCECOLOR balance
//! BALANCECYCLE bc9 bc10
//! ```
//!
//! Loop vertex lists start at the variable vertex. `CLAUSE` lines carry the
//! DIMACS literals so that a solution can be pulled back without the graph.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use super::content_lines;
use crate::cnf::{Assignment, CnfInstance};
use crate::error::{ParseError, ReductionError};
use crate::reductions::ReductionArtifact;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GadgetMap {
    pub variant: String,
    /// `[TRUE, FALSE]` loop vertex names per variable.
    pub loops: Vec<[Vec<String>; 2]>,
    pub clause_colors: Vec<String>,
    pub clauses: Vec<Vec<i64>>,
    pub balance_colors: Vec<String>,
    pub balance_cycle: Option<Vec<String>>,
}

impl GadgetMap {
    pub fn from_artifact(art: &ReductionArtifact) -> Self {
        let g = &art.graph;
        let names = |c: &crate::Cycle| -> Vec<String> {
            c.vertices(g).into_iter().map(|v| g.vertex_name(v).to_owned()).collect()
        };
        GadgetMap {
            variant: art.variant.name().to_owned(),
            loops: art
                .true_loop
                .iter()
                .zip(&art.false_loop)
                .map(|(t, f)| [names(t), names(f)])
                .collect(),
            clause_colors: art.clause_color.iter().map(|&c| g.color_label(c).to_owned()).collect(),
            clauses: art
                .cnf
                .clauses()
                .iter()
                .map(|c| c.literals().iter().map(|l| l.to_dimacs()).collect())
                .collect(),
            balance_colors: art
                .balance_colors
                .iter()
                .map(|&c| g.color_label(c).to_owned())
                .collect(),
            balance_cycle: art.balance_cycle.as_ref().map(names),
        }
    }

    pub fn write(&self) -> String {
        let mut out = format!("VARIANT {}\n", self.variant);
        for (i, [t, f]) in self.loops.iter().enumerate() {
            writeln!(out, "VAR {} TRUE {}", i + 1, t.join(" ")).unwrap();
            writeln!(out, "VAR {} FALSE {}", i + 1, f.join(" ")).unwrap();
        }
        for (j, label) in self.clause_colors.iter().enumerate() {
            writeln!(out, "CLAUSECOLOR {} {label}", j + 1).unwrap();
        }
        for (j, lits) in self.clauses.iter().enumerate() {
            write!(out, "CLAUSE {}", j + 1).unwrap();
            for l in lits {
                write!(out, " {l}").unwrap();
            }
            out.push_str(" 0\n");
        }
        if !self.balance_colors.is_empty() {
            writeln!(out, "BALANCECOLOR {}", self.balance_colors.join(" ")).unwrap();
        }
        if let Some(c) = &self.balance_cycle {
            writeln!(out, "BALANCECYCLE {}", c.join(" ")).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut map = GadgetMap::default();
        let mut loops: BTreeMap<usize, [Option<Vec<String>>; 2]> = BTreeMap::new();
        let mut clause_colors: BTreeMap<usize, String> = BTreeMap::new();
        let mut clauses: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        let mut last = 0;
        for (line, tokens) in content_lines(text) {
            last = line;
            let index = |s: &str| -> Result<usize, ParseError> {
                match s.parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i),
                    _ => Err(ParseError::syntax(line, format!("bad index `{s}`"))),
                }
            };
            let owned = |ts: &[&str]| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>();
            match tokens.as_slice() {
                ["VARIANT", v] => map.variant = v.to_string(),
                ["VAR", i, side, verts @ ..] if !verts.is_empty() => {
                    let slot = match *side {
                        "TRUE" => 0,
                        "FALSE" => 1,
                        other => return Err(ParseError::syntax(line, format!("bad loop side `{other}`"))),
                    };
                    let entry = loops.entry(index(i)?).or_default();
                    if entry[slot].replace(owned(verts)).is_some() {
                        return Err(ParseError::syntax(line, "loop listed twice"));
                    }
                }
                ["CLAUSECOLOR", j, label] => {
                    clause_colors.insert(index(j)?, label.to_string());
                }
                ["CLAUSE", j, lits @ .., "0"] => {
                    let lits = lits
                        .iter()
                        .map(|l| match l.parse::<i64>() {
                            Ok(v) if v != 0 => Ok(v),
                            _ => Err(ParseError::syntax(line, format!("bad literal `{l}`"))),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    clauses.insert(index(j)?, lits);
                }
                ["BALANCECOLOR", labels @ ..] => map.balance_colors.extend(owned(labels)),
                ["BALANCECYCLE", verts @ ..] if !verts.is_empty() => map.balance_cycle = Some(owned(verts)),
                [kind, ..] => return Err(ParseError::syntax(line, format!("malformed `{kind}` record"))),
                [] => unreachable!("blank lines are skipped"),
            }
        }
        let dense = |keys: Vec<usize>, what: &str| -> Result<(), ParseError> {
            if keys.iter().enumerate().all(|(i, &k)| k == i + 1) {
                Ok(())
            } else {
                Err(ParseError::syntax(last.max(1), format!("{what} indices are not 1..n")))
            }
        };
        dense(loops.keys().copied().collect(), "VAR")?;
        dense(clause_colors.keys().copied().collect(), "CLAUSECOLOR")?;
        dense(clauses.keys().copied().collect(), "CLAUSE")?;
        for (i, [t, f]) in loops {
            match (t, f) {
                (Some(t), Some(f)) => map.loops.push([t, f]),
                _ => return Err(ParseError::syntax(last.max(1), format!("variable {i} lacks a loop"))),
            }
        }
        map.clause_colors = clause_colors.into_values().collect();
        map.clauses = clauses.into_values().collect();
        Ok(map)
    }

    pub fn cnf(&self) -> Result<CnfInstance, ParseError> {
        Ok(CnfInstance::from_dimacs(self.loops.len(), &self.clauses)?)
    }

    /// Truth assignment chosen by a solution given as vertex-name cycles,
    /// with the number of clauses it satisfies. Unselected variables default
    /// to TRUE.
    pub fn pullback(&self, cycles: &[Vec<String>]) -> Result<(Assignment, usize), ReductionError> {
        let mut position: HashMap<&str, (usize, usize)> = HashMap::new();
        for (ci, c) in cycles.iter().enumerate() {
            for (k, name) in c.iter().enumerate() {
                if position.insert(name.as_str(), (ci, k)).is_some() {
                    return Err(ReductionError::SharedVertex(name.clone()));
                }
            }
        }
        let mut a = Assignment::all(self.loops.len(), true);
        for (i, [t, f]) in self.loops.iter().enumerate() {
            let Some(&(ci, k)) = position.get(t[0].as_str()) else {
                continue;
            };
            let c = &cycles[ci];
            let rotated: Vec<&String> = c[k..].iter().chain(&c[..k]).collect();
            let is = |seq: &[String]| seq.iter().eq(rotated.iter().copied());
            if is(t) {
                a.set(i + 1, true);
            } else if is(f) {
                a.set(i + 1, false);
            } else {
                return Err(ReductionError::LoopMismatch { var: i + 1 });
            }
        }
        let cnf = self.cnf().map_err(|e| match e {
            ParseError::Cnf(c) => ReductionError::Cnf(c),
            other => unreachable!("cnf() only fails on literals: {other}"),
        })?;
        let satisfied = cnf.satisfied_count(&a);
        Ok((a, satisfied))
    }
}
