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

//! Microstructure compression (MRR) of a single table constraint.
//!
//! Each tuple becomes a transaction of position-indexed values. An itemset
//! picks a set of positions `Y`; the rule introduces a fresh variable `z`
//! whose values name the distinct projections of the table onto `Y`, and
//! splits the table into an interface constraint over `(z) ⊕ Y` and a
//! residual constraint over the remaining columns plus `z`. No tuple is lost.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::mining::{Tid, TransactionDb};
use crate::model::{project_relation, ConstraintId, ConstraintNetwork, TableConstraint, Tuple, Value, VariableId};
use crate::rewrite::{interface, mappings, RewriteError, RewriteKind, RewritePattern, RewriteRecord};

/// A value tagged with its 1-based position in a tuple, written `v^i`.
///
/// Items order by position first, then value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexedItem {
    pub value: Value,
    pub position: usize,
}

impl IndexedItem {
    pub fn new(value: impl Into<Value>, position: usize) -> Self {
        Self {
            value: value.into(),
            position,
        }
    }
}

impl Ord for IndexedItem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.position
            .cmp(&other.position)
            .then_with(|| self.value.cmp(&other.value))
    }
}

impl PartialOrd for IndexedItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexedItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.value, self.position)
    }
}

pub fn indexed(tuple: &Tuple) -> Vec<IndexedItem> {
    tuple
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| IndexedItem::new(v.clone(), i + 1))
        .collect()
}

/// One transaction per tuple. Tuples are numbered `001`, `002`, ... in
/// ascending lexicographic order.
pub fn build_constraint_db(constraint: &TableConstraint) -> TransactionDb<IndexedItem> {
    let width = constraint.tuple_count().to_string().len().max(3);
    TransactionDb::new(
        constraint
            .relation()
            .iter()
            .enumerate()
            .map(|(i, t)| (Tid::new(format!("{:0width$}", i + 1)), indexed(t))),
    )
    .expect("tids are distinct")
}

/// Position-indexed values of one constraint to factor out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrrCandidate {
    pub constraint: ConstraintId,
    /// Sorted by position.
    pub items: Vec<IndexedItem>,
}

impl MrrCandidate {
    pub fn new(constraint: impl Into<ConstraintId>, mut items: Vec<IndexedItem>) -> Self {
        items.sort();
        Self {
            constraint: constraint.into(),
            items,
        }
    }

    /// 1-based positions of the items.
    pub fn positions(&self) -> Vec<usize> {
        self.items.iter().map(|i| i.position).collect()
    }

    /// `k`: how many tuples of `constraint` contain every item.
    pub fn support_in(&self, constraint: &TableConstraint) -> usize {
        constraint
            .relation()
            .iter()
            .filter(|t| self.items.iter().all(|it| t.get(it.position - 1) == Some(&it.value)))
            .count()
    }

    pub fn validate<'a>(&self, network: &'a ConstraintNetwork) -> Result<&'a TableConstraint, RewriteError> {
        let c = network
            .constraint(&self.constraint)
            .ok_or_else(|| RewriteError::UnknownConstraint(self.constraint.clone()))?;
        if self.items.is_empty() {
            return Err(RewriteError::InvalidCandidate("empty itemset".into()));
        }
        let positions = self.positions();
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(RewriteError::InvalidCandidate("two items share a position".into()));
        }
        if let Some(p) = positions.iter().find(|&&p| p == 0 || p > c.arity()) {
            return Err(RewriteError::InvalidCandidate(format!(
                "position {p} outside 1..={}",
                c.arity()
            )));
        }
        Ok(c)
    }
}

/// Applies the MRR rule to the candidate's constraint.
///
/// The fresh domain enumerates every distinct projection onto the chosen
/// positions, whether or not it matches the itemset.
pub fn mrr_apply(
    network: &ConstraintNetwork,
    candidate: &MrrCandidate,
) -> Result<(ConstraintNetwork, RewriteRecord), RewriteError> {
    let c = candidate.validate(network)?;
    let positions: Vec<usize> = candidate.positions().iter().map(|p| p - 1).collect();
    let factored: Vec<VariableId> = positions.iter().map(|&p| c.scope()[p].clone()).collect();
    let residual: Vec<usize> = (0..c.arity()).filter(|p| !positions.contains(p)).collect();
    let projections: BTreeSet<Tuple> = project_relation(c, &factored).expect("positions in scope");

    let counters = network.fresh_counters();
    let fresh = VariableId::fresh(counters.variable);
    let interface_id = ConstraintId::fresh(counters.constraint);
    let (c0, f) = interface(interface_id.clone(), &fresh, &factored, &projections, counters.value);

    let mut scope: Vec<VariableId> = residual.iter().map(|&p| c.scope()[p].clone()).collect();
    scope.push(fresh.clone());
    let tuples = c.relation().iter().map(|t| {
        let z = f[&t.select(&positions)].clone();
        t.select(&residual).concat(&Tuple::new(vec![z]))
    });
    let rest = TableConstraint::new(c.id().clone(), scope, tuples);

    let domain: BTreeSet<Value> = f.values().cloned().collect();
    let rewritten = network.rewritten(
        fresh.clone(),
        domain,
        std::slice::from_ref(&candidate.constraint),
        vec![c0, rest],
    );
    let record = RewriteRecord {
        kind: RewriteKind::Mrr,
        pattern: RewritePattern::Values(candidate.items.clone()),
        factored_variables: factored,
        support: candidate.support_in(c),
        fresh_variable: fresh,
        interface_constraint: interface_id.clone(),
        value_map: mappings(&f),
        removed_constraint_ids: vec![candidate.constraint.clone()],
        added_constraint_ids: vec![interface_id, candidate.constraint.clone()],
        size_before: network.size(),
        size_after: rewritten.size(),
        dropped_tuples: 0,
        empty_intersection: false,
    };
    Ok((rewritten, record))
}

/// Guaranteed reduction of MRR on a table of `p` tuples when `k` of them
/// share a sub-tuple of `n` values: `n k - (p + 1 + n + (p - k))`.
pub fn mrr_gain_bound(n: u64, p: u64, k: u64) -> i64 {
    let (n, p, k) = (n as i64, p as i64, k as i64);
    n * k - (p + 1 + n + (p - k))
}

/// `k > (2p + n + 1) / (n + 1)`, compared exactly.
pub fn mrr_profitable(n: u64, p: u64, k: u64) -> bool {
    k * (n + 1) > 2 * p + n + 1
}
