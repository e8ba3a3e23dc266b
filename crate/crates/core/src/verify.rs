// Copyright 2026 The tabcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Brute-force solution enumeration and equivalence checking.
//!
//! Backtracking over variables in declaration order and values in ascending
//! order. A constraint is checked as soon as its last scope variable is
//! assigned; there is no other propagation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::model::{ConstraintNetwork, Tuple, Value, VariableId};

pub const DEFAULT_MAX_SEARCH_SPACE: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Stop after this many solutions. When set, the search-space bound is not enforced.
    pub limit: Option<usize>,
    /// Largest accepted product of domain sizes.
    pub max_search_space: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            limit: None,
            max_search_space: DEFAULT_MAX_SEARCH_SPACE,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("search space of {size} assignments exceeds the bound {bound}")]
    SearchSpaceTooLarge { size: u128, bound: u128 },
    #[error("variables missing from a network: {}", .0.iter().map(|v| v.as_str()).collect::<Vec<_>>().join(", "))]
    MissingVariables(Vec<VariableId>),
}

/// A total assignment over some set of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(BTreeMap<VariableId, Value>);

impl Assignment {
    pub fn new(values: BTreeMap<VariableId, Value>) -> Self {
        Self(values)
    }

    pub fn get(&self, var: &VariableId) -> Option<&Value> {
        self.0.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableId, &Value)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn restrict(&self, vars: &BTreeSet<VariableId>) -> Assignment {
        Assignment(
            self.0
                .iter()
                .filter(|(k, _)| vars.contains(*k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, "}}")
    }
}

/// Product of domain sizes, saturating.
pub fn search_space(network: &ConstraintNetwork) -> u128 {
    network
        .domains()
        .values()
        .fold(1u128, |acc, d| acc.saturating_mul(d.len() as u128))
}

struct Search<'a> {
    domains: Vec<Vec<&'a Value>>,
    /// Constraints to check once depth `i` is assigned: (scope var indices, relation).
    checks: Vec<Vec<(Vec<usize>, &'a BTreeSet<Tuple>)>>,
    current: Vec<Option<&'a Value>>,
    limit: Option<usize>,
    found: Vec<Vec<&'a Value>>,
}

impl Search<'_> {
    fn limit_reached(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn run(&mut self, depth: usize) {
        if depth == self.domains.len() {
            self.found
                .push(self.current.iter().map(|v| v.expect("total")).collect());
            return;
        }
        for vi in 0..self.domains[depth].len() {
            if self.limit_reached() {
                break;
            }
            self.current[depth] = Some(self.domains[depth][vi]);
            let ok = self.checks[depth].iter().all(|(vars, relation)| {
                let t: Tuple = vars
                    .iter()
                    .map(|&i| self.current[i].expect("assigned").clone())
                    .collect();
                relation.contains(&t)
            });
            if ok {
                self.run(depth + 1);
            }
        }
        self.current[depth] = None;
    }
}

/// Every solution, in lexicographic order of (declaration order, value order).
pub fn solve_all(network: &ConstraintNetwork, options: &SolveOptions) -> Result<Vec<Assignment>, VerifyError> {
    if options.limit.is_none() {
        let size = search_space(network);
        if size > options.max_search_space {
            return Err(VerifyError::SearchSpaceTooLarge {
                size,
                bound: options.max_search_space,
            });
        }
    }
    let names: Vec<&VariableId> = network.variables().collect();
    let index: BTreeMap<&VariableId, usize> = names.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut checks = vec![Vec::new(); names.len()];
    for c in network.constraints() {
        let vars: Vec<usize> = c.scope().iter().map(|v| index[v]).collect();
        match vars.iter().max() {
            Some(&last) => checks[last].push((vars, c.relation())),
            None => {
                if !c.relation().contains(&Tuple::default()) {
                    return Ok(Vec::new());
                }
            }
        }
    }
    let mut search = Search {
        domains: network.domains().values().map(|d| d.iter().collect()).collect(),
        checks,
        current: vec![None; names.len()],
        limit: options.limit,
        found: Vec::new(),
    };
    if options.limit != Some(0) {
        search.run(0);
    }
    Ok(search
        .found
        .into_iter()
        .map(|values| {
            Assignment(
                names
                    .iter()
                    .zip(values)
                    .map(|(k, v)| ((*k).clone(), v.clone()))
                    .collect(),
            )
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equivalent,
    /// One network has solutions and the other has none.
    SatMismatch,
    /// Both have solutions but the projected solution sets differ.
    ProjectionMismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equivalent => "equivalent",
            Verdict::SatMismatch => "sat-mismatch",
            Verdict::ProjectionMismatch => "projection-mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preservation {
    pub verdict: Verdict,
    pub original_solutions: usize,
    pub compressed_solutions: usize,
}

/// Compares the solutions of `original` with those of `compressed`
/// restricted to `original_vars`.
pub fn check_preservation(
    original: &ConstraintNetwork,
    compressed: &ConstraintNetwork,
    original_vars: &BTreeSet<VariableId>,
    options: &SolveOptions,
) -> Result<Preservation, VerifyError> {
    let missing: Vec<VariableId> = original_vars
        .iter()
        .filter(|v| !original.has_variable(v) || !compressed.has_variable(v))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(VerifyError::MissingVariables(missing));
    }
    let left = solve_all(original, options)?;
    let right = solve_all(compressed, options)?;
    let project =
        |sols: &[Assignment]| -> BTreeSet<Assignment> { sols.iter().map(|s| s.restrict(original_vars)).collect() };
    let verdict = if left.is_empty() != right.is_empty() {
        Verdict::SatMismatch
    } else if project(&left) != project(&right) {
        Verdict::ProjectionMismatch
    } else {
        Verdict::Equivalent
    };
    Ok(Preservation {
        verdict,
        original_solutions: left.len(),
        compressed_solutions: right.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cgr_apply, CgrCandidate};
    use crate::model::{TableConstraint, Tuple};
    use crate::samples::overlapping_ternary;

    fn all_vars(p: &ConstraintNetwork) -> BTreeSet<VariableId> {
        p.variables().cloned().collect()
    }

    fn render(sols: &[Assignment]) -> Vec<String> {
        sols.iter()
            .map(|s| s.iter().map(|(_, v)| v.as_str()).collect::<String>())
            .collect()
    }

    #[test]
    fn overlapping_pair_has_three_solutions() {
        let sols = solve_all(&overlapping_ternary(), &SolveOptions::default()).unwrap();
        assert_eq!(render(&sols), ["aaba", "abaa", "abab"]);
    }

    #[test]
    fn empty_relation_means_no_solution() {
        let p = overlapping_ternary();
        let emptied = ConstraintNetwork::from_parts(
            p.domains().clone(),
            vec![
                p.constraints()[0].clone(),
                TableConstraint::new("c2", p.constraints()[1].scope().to_vec(), []),
            ],
        );
        assert!(solve_all(&emptied, &SolveOptions::default()).unwrap().is_empty());
        let verdict = check_preservation(&p, &emptied, &all_vars(&p), &SolveOptions::default()).unwrap();
        assert_eq!(verdict.verdict, Verdict::SatMismatch);
    }

    #[test]
    fn unconstrained_variable() {
        let p = ConstraintNetwork::from_parts(
            [(
                VariableId::from("x"),
                BTreeSet::from([Value::from("a"), Value::from("b")]),
            )],
            vec![],
        );
        let sols = solve_all(&p, &SolveOptions::default()).unwrap();
        assert_eq!(render(&sols), ["a", "b"]);
    }

    #[test]
    fn nullary_constraints() {
        let x = (VariableId::from("x"), BTreeSet::from([Value::from("a")]));
        let sat =
            ConstraintNetwork::from_parts([x.clone()], vec![TableConstraint::new("t", vec![], [Tuple::default()])]);
        assert_eq!(solve_all(&sat, &SolveOptions::default()).unwrap().len(), 1);
        let unsat = ConstraintNetwork::from_parts([x], vec![TableConstraint::new("f", vec![], [])]);
        assert!(solve_all(&unsat, &SolveOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn limit_stops_early() {
        let opts = SolveOptions {
            limit: Some(2),
            max_search_space: 1,
        };
        let sols = solve_all(&overlapping_ternary(), &opts).unwrap();
        assert_eq!(render(&sols), ["aaba", "abaa"]);
        let none = SolveOptions { limit: Some(0), ..opts };
        assert!(solve_all(&overlapping_ternary(), &none).unwrap().is_empty());
    }

    #[test]
    fn search_space_bound() {
        let opts = SolveOptions {
            limit: None,
            max_search_space: 15,
        };
        assert_eq!(
            solve_all(&overlapping_ternary(), &opts),
            Err(VerifyError::SearchSpaceTooLarge { size: 16, bound: 15 })
        );
    }

    #[test]
    fn compressed_pair_is_equivalent() {
        let p = overlapping_ternary();
        let cand = CgrCandidate::new(vec!["x2".into(), "x3".into()], vec!["c1".into(), "c2".into()]);
        let (q, _) = cgr_apply(&p, &cand).unwrap();
        let result = check_preservation(&p, &q, &all_vars(&p), &SolveOptions::default()).unwrap();
        assert_eq!(result.verdict, Verdict::Equivalent);
        assert_eq!((result.original_solutions, result.compressed_solutions), (3, 3));
        let reflexive = check_preservation(&p, &p, &all_vars(&p), &SolveOptions::default()).unwrap();
        assert_eq!(reflexive.verdict, Verdict::Equivalent);
    }

    #[test]
    fn projection_mismatch() {
        let p = overlapping_ternary();
        let c1 = &p.constraints()[0];
        let fewer = TableConstraint::new(
            "c1",
            c1.scope().to_vec(),
            c1.relation().iter().filter(|t| t.values()[1].as_str() == "b").cloned(),
        );
        let q = ConstraintNetwork::from_parts(p.domains().clone(), vec![fewer, p.constraints()[1].clone()]);
        let result = check_preservation(&p, &q, &all_vars(&p), &SolveOptions::default()).unwrap();
        assert_eq!(result.verdict, Verdict::ProjectionMismatch);
    }

    #[test]
    fn missing_variables_are_reported() {
        let p = overlapping_ternary();
        let mut vars = all_vars(&p);
        vars.insert("ghost".into());
        assert_eq!(
            check_preservation(&p, &p, &vars, &SolveOptions::default()),
            Err(VerifyError::MissingVariables(vec!["ghost".into()]))
        );
    }
}
