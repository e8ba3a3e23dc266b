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

//! Constraint-graph compression (CGR).
//!
//! The constraint graph is encoded as one transaction per constraint whose
//! items are the scope variables. A set of variables `s` shared by `k`
//! constraints is factored through a fresh variable `y`: an interface
//! constraint over `(y) ⊕ s` lists every sub-tuple the `k` constraints agree
//! on, and each constraint keeps only its residual columns plus `y`. Tuples
//! whose projection on `s` is not common to all `k` constraints are dropped.

use std::collections::BTreeSet;

use crate::mining::{Tid, TransactionDb};
use crate::model::{project_relation, ConstraintId, ConstraintNetwork, TableConstraint, Tuple, VariableId};
use crate::rewrite::{interface, mappings, RewriteError, RewriteKind, RewritePattern, RewriteRecord};

/// One transaction per constraint, tid = constraint id, items = scope.
pub fn build_graph_db(network: &ConstraintNetwork) -> TransactionDb<VariableId> {
    TransactionDb::new(
        network
            .constraints()
            .iter()
            .map(|c| (Tid::new(c.id().as_str()), c.scope().iter().cloned())),
    )
    .expect("constraint ids are unique in a valid network")
}

/// Variables `s` (with `n = |s|`) shared by `k` listed constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgrCandidate {
    pub shared: Vec<VariableId>,
    pub constraints: Vec<ConstraintId>,
}

impl CgrCandidate {
    pub fn new(shared: Vec<VariableId>, constraints: Vec<ConstraintId>) -> Self {
        Self { shared, constraints }
    }

    /// `k`, the number of constraints.
    pub fn support(&self) -> usize {
        self.constraints.len()
    }

    pub fn validate<'a>(&self, network: &'a ConstraintNetwork) -> Result<Vec<&'a TableConstraint>, RewriteError> {
        if self.shared.len() < 2 {
            return Err(RewriteError::InvalidCandidate(
                "at least two shared variables are required".into(),
            ));
        }
        if self.constraints.len() < 2 {
            return Err(RewriteError::InvalidCandidate(
                "at least two constraints are required".into(),
            ));
        }
        if self.shared.iter().collect::<BTreeSet<_>>().len() != self.shared.len() {
            return Err(RewriteError::InvalidCandidate("repeated shared variable".into()));
        }
        if self.constraints.iter().collect::<BTreeSet<_>>().len() != self.constraints.len() {
            return Err(RewriteError::InvalidCandidate("repeated constraint".into()));
        }
        self.constraints
            .iter()
            .map(|id| {
                let c = network
                    .constraint(id)
                    .ok_or_else(|| RewriteError::UnknownConstraint(id.clone()))?;
                if let Some(v) = self.shared.iter().find(|v| !c.contains(v)) {
                    return Err(RewriteError::InvalidCandidate(format!(
                        "variable {v} is not in the scope of {id}"
                    )));
                }
                Ok(c)
            })
            .collect()
    }
}

/// Applies the CGR rule, returning the rewritten network and its record.
///
/// The fresh value for the `i`-th common sub-tuple (ascending order) is the
/// `i`-th unused `_v` symbol. An empty intersection is not an error: the
/// result then has empty relations and the record is flagged.
pub fn cgr_apply(
    network: &ConstraintNetwork,
    candidate: &CgrCandidate,
) -> Result<(ConstraintNetwork, RewriteRecord), RewriteError> {
    let members = candidate.validate(network)?;
    let shared = &candidate.shared;

    let mut common: Option<BTreeSet<Tuple>> = None;
    for c in &members {
        let projected = project_relation(c, shared).expect("validated scope");
        common = Some(match common {
            None => projected,
            Some(acc) => acc.intersection(&projected).cloned().collect(),
        });
    }
    let common = common.unwrap_or_default();

    let counters = network.fresh_counters();
    let fresh = VariableId::fresh(counters.variable);
    let interface_id = ConstraintId::fresh(counters.constraint);
    let (c0, f) = interface(interface_id.clone(), &fresh, shared, &common, counters.value);

    let mut dropped = 0;
    let mut added = vec![c0];
    for c in &members {
        let shared_pos: Vec<usize> = shared
            .iter()
            .map(|v| c.position_of(v).expect("validated scope"))
            .collect();
        let residual_pos: Vec<usize> = (0..c.arity()).filter(|p| !shared_pos.contains(p)).collect();
        let mut scope: Vec<VariableId> = residual_pos.iter().map(|&p| c.scope()[p].clone()).collect();
        scope.push(fresh.clone());
        let mut tuples = Vec::with_capacity(c.tuple_count());
        for t in c.relation() {
            match f.get(&t.select(&shared_pos)) {
                Some(v) => tuples.push(t.select(&residual_pos).concat(&Tuple::new(vec![v.clone()]))),
                None => dropped += 1,
            }
        }
        added.push(TableConstraint::new(c.id().clone(), scope, tuples));
    }

    let domain = f.values().cloned().collect();
    let rewritten = network.rewritten(fresh.clone(), domain, &candidate.constraints, added);
    let mut added_ids = vec![interface_id.clone()];
    added_ids.extend(candidate.constraints.iter().cloned());
    let record = RewriteRecord {
        kind: RewriteKind::Cgr,
        pattern: RewritePattern::Variables(shared.clone()),
        factored_variables: shared.clone(),
        support: candidate.support(),
        fresh_variable: fresh,
        interface_constraint: interface_id,
        value_map: mappings(&f),
        removed_constraint_ids: candidate.constraints.clone(),
        added_constraint_ids: added_ids,
        size_before: network.size(),
        size_after: rewritten.size(),
        dropped_tuples: dropped,
        empty_intersection: common.is_empty(),
    };
    Ok((rewritten, record))
}

/// Guaranteed size reduction of CGR on a pairwise consistent network where
/// each of the `k` constraints has exactly `p` tuples and `n = |s|`.
pub fn cgr_gain_bound(n: u64, p: u64, k: u64) -> i64 {
    let (n, p, k) = (n as i64, p as i64, k as i64);
    n * p * k - (p * k + n * p + p)
}

/// Whether `k` constraints sharing `n` variables guarantee a reduction:
/// `k > (n + 1) / (n - 1)`, never when `n < 2`.
pub fn cgr_profitable(n: u64, k: u64) -> bool {
    // k (n - 1) > n + 1, exact in integers
    n >= 2 && k * (n - 1) > n + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mining::{mine, PatternKind};
    use crate::model::{is_pairwise_consistent, validate_network, Value};
    use crate::samples::overlapping_ternary;

    fn vars(names: &[&str]) -> Vec<VariableId> {
        names.iter().map(|&n| VariableId::from(n)).collect()
    }

    fn ids(names: &[&str]) -> Vec<ConstraintId> {
        names.iter().map(|&n| ConstraintId::from(n)).collect()
    }

    fn rel(rows: &[&[&str]]) -> BTreeSet<Tuple> {
        rows.iter().map(|r| Tuple::from_strs(r)).collect()
    }

    #[test]
    fn graph_db_has_one_transaction_per_constraint() {
        let db = build_graph_db(&overlapping_ternary());
        assert_eq!(db.to_string(), "c1: x1 x2 x3\nc2: x2 x3 x4\n");
        assert!(build_graph_db(&ConstraintNetwork::new()).is_empty());
        let closed = mine(&db, 2, PatternKind::Closed).unwrap();
        assert_eq!(closed.len(), 1);
        assert_eq!(closed[0].items, vars(&["x2", "x3"]));
        assert_eq!(closed[0].cover, vec![Tid::from("c1"), Tid::from("c2")]);
    }

    #[test]
    fn rewrites_overlapping_pair() {
        let p = overlapping_ternary();
        let cand = CgrCandidate::new(vars(&["x2", "x3"]), ids(&["c1", "c2"]));
        let (q, record) = cgr_apply(&p, &cand).unwrap();

        let c0 = q.constraint(&"_c0".into()).unwrap();
        assert_eq!(c0.scope(), vars(&["_y0", "x2", "x3"]).as_slice());
        assert_eq!(c0.relation(), &rel(&[&["_v0", "a", "b"], &["_v1", "b", "a"]]));
        let c1 = q.constraint(&"c1".into()).unwrap();
        assert_eq!(c1.scope(), vars(&["x1", "_y0"]).as_slice());
        assert_eq!(c1.relation(), &rel(&[&["a", "_v0"], &["a", "_v1"]]));
        let c2 = q.constraint(&"c2".into()).unwrap();
        assert_eq!(c2.scope(), vars(&["x4", "_y0"]).as_slice());
        assert_eq!(c2.relation(), &rel(&[&["a", "_v0"], &["a", "_v1"], &["b", "_v1"]]));

        assert_eq!((record.size_before, record.size_after), (18, 16));
        assert_eq!(record.delta(), 2);
        assert_eq!(record.dropped_tuples, 1);
        assert!(!record.empty_intersection);
        assert_eq!(
            q.domain(&"_y0".into()).unwrap(),
            &BTreeSet::from([Value::from("_v0"), Value::from("_v1")])
        );
        assert!(validate_network(&q).is_empty());
    }

    #[test]
    fn full_scope_single_tuple() {
        let tuple = Tuple::from_strs(&["a", "b"]);
        let domains = [("x1", &["a"][..]), ("x2", &["b"][..])]
            .map(|(v, d)| (VariableId::from(v), d.iter().map(|&s| Value::from(s)).collect()));
        let p = ConstraintNetwork::from_parts(
            domains,
            vec![
                TableConstraint::new("c1", vars(&["x1", "x2"]), [tuple.clone()]),
                TableConstraint::new("c2", vars(&["x1", "x2"]), [tuple.clone()]),
            ],
        );
        let (q, record) = cgr_apply(&p, &CgrCandidate::new(vars(&["x1", "x2"]), ids(&["c1", "c2"]))).unwrap();
        for id in ["c1", "c2"] {
            let c = q.constraint(&id.into()).unwrap();
            assert_eq!(c.scope(), vars(&["_y0"]).as_slice());
            assert_eq!(c.relation(), &rel(&[&["_v0"]]));
        }
        assert_eq!(
            q.constraint(&"_c0".into()).unwrap().relation(),
            &rel(&[&["_v0", "a", "b"]])
        );
        assert_eq!(record.fresh_value_count(), 1);
    }

    #[test]
    fn disjoint_projections_empty_everything() {
        let domains = ["x1", "x2", "x3"].map(|v| {
            (
                VariableId::from(v),
                ["a", "b"].iter().map(|&s| Value::from(s)).collect(),
            )
        });
        let p = ConstraintNetwork::from_parts(
            domains,
            vec![
                TableConstraint::new("c1", vars(&["x1", "x2"]), [Tuple::from_strs(&["a", "a"])]),
                TableConstraint::new("c2", vars(&["x1", "x2", "x3"]), [Tuple::from_strs(&["b", "b", "a"])]),
            ],
        );
        let (q, record) = cgr_apply(&p, &CgrCandidate::new(vars(&["x1", "x2"]), ids(&["c1", "c2"]))).unwrap();
        assert!(record.empty_intersection);
        assert_eq!(record.dropped_tuples, 2);
        assert!(q.constraints().iter().all(|c| c.relation().is_empty()));
        assert!(q.domain(&"_y0".into()).unwrap().is_empty());
        assert!(validate_network(&q).is_empty());
        assert!(!is_pairwise_consistent(&q));
    }

    #[test]
    fn untouched_constraints_are_identical() {
        let mut p = overlapping_ternary();
        let extra = TableConstraint::new("c3", vars(&["x1", "x4"]), [Tuple::from_strs(&["a", "b"])]);
        p = ConstraintNetwork::from_parts(
            p.domains().clone(),
            p.constraints().iter().cloned().chain([extra.clone()]).collect(),
        );
        let (q, record) = cgr_apply(&p, &CgrCandidate::new(vars(&["x2", "x3"]), ids(&["c1", "c2"]))).unwrap();
        assert_eq!(q.constraint(&"c3".into()), Some(&extra));
        let with_y = q
            .constraints()
            .iter()
            .filter(|c| c.contains(&record.fresh_variable))
            .count();
        assert_eq!(with_y, 3);
    }

    #[test]
    fn invalid_candidates() {
        let p = overlapping_ternary();
        let bad = [
            CgrCandidate::new(vars(&["x2"]), ids(&["c1", "c2"])),
            CgrCandidate::new(vars(&["x2", "x3"]), ids(&["c1"])),
            CgrCandidate::new(vars(&["x1", "x2"]), ids(&["c1", "c2"])),
            CgrCandidate::new(vars(&["x2", "x2"]), ids(&["c1", "c2"])),
            CgrCandidate::new(vars(&["x2", "x3"]), ids(&["c1", "c1"])),
        ];
        for cand in bad {
            assert!(
                matches!(cgr_apply(&p, &cand), Err(RewriteError::InvalidCandidate(_))),
                "{cand:?}"
            );
        }
        assert_eq!(
            cgr_apply(&p, &CgrCandidate::new(vars(&["x2", "x3"]), ids(&["c1", "c9"]))).unwrap_err(),
            RewriteError::UnknownConstraint("c9".into())
        );
    }

    #[test]
    fn gain_bound_values() {
        assert_eq!(cgr_gain_bound(2, 3, 2), -3);
        assert_eq!(cgr_gain_bound(2, 1, 4), 1);
        assert_eq!(cgr_gain_bound(3, 2, 3), 4);
    }

    #[test]
    fn profitability_thresholds() {
        assert!(cgr_profitable(2, 4));
        assert!(!cgr_profitable(2, 3));
        assert!(cgr_profitable(3, 3));
        assert!(!cgr_profitable(3, 2));
        assert!(!cgr_profitable(1, 10));
        assert!(!cgr_profitable(0, 10));
        assert!(cgr_profitable(4, 2));
        assert!(!cgr_profitable(4, 1));
    }
}
