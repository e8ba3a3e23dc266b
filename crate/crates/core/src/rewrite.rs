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

//! Records describing one applied rewrite, shared by both rules.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{ConstraintId, TableConstraint, Tuple, Value, VariableId};
use crate::table::IndexedItem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RewriteKind {
    /// Shared variables factored across several constraints.
    Cgr,
    /// Columns of a single table factored through a fresh variable.
    Mrr,
}

/// The itemset that drove a rewrite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RewritePattern {
    Variables(Vec<VariableId>),
    Values(Vec<IndexedItem>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueMapping {
    pub sub_tuple: Tuple,
    pub value: Value,
}

/// Everything needed to replay one rewrite by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteRecord {
    pub kind: RewriteKind,
    pub pattern: RewritePattern,
    /// The factored variables, in the order they appear in the new interface constraint.
    pub factored_variables: Vec<VariableId>,
    /// Constraints (CGR) or tuples (MRR) supporting the pattern.
    pub support: usize,
    pub fresh_variable: VariableId,
    /// Id of the interface constraint linking the fresh variable to the factored ones.
    pub interface_constraint: ConstraintId,
    pub value_map: Vec<ValueMapping>,
    pub removed_constraint_ids: Vec<ConstraintId>,
    pub added_constraint_ids: Vec<ConstraintId>,
    pub size_before: usize,
    pub size_after: usize,
    pub dropped_tuples: usize,
    /// The factored sub-tuples had no common element, so the result has no solution.
    pub empty_intersection: bool,
}

impl RewriteRecord {
    /// Size reduction achieved; negative when the network grew.
    pub fn delta(&self) -> i64 {
        self.size_before as i64 - self.size_after as i64
    }

    /// Number of fresh values, `l`.
    pub fn fresh_value_count(&self) -> usize {
        self.value_map.len()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("unknown constraint {0}")]
    UnknownConstraint(ConstraintId),
    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),
}

/// Builds the interface constraint `(fresh) ⊕ factored` with one tuple
/// `f(a) ⊕ a` per sub-tuple `a`, numbering fresh values in ascending
/// sub-tuple order from `first_value`.
pub(crate) fn interface(
    id: ConstraintId,
    fresh: &VariableId,
    factored: &[VariableId],
    sub_tuples: &BTreeSet<Tuple>,
    first_value: u64,
) -> (TableConstraint, BTreeMap<Tuple, Value>) {
    let map: BTreeMap<Tuple, Value> = sub_tuples
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), Value::fresh(first_value + i as u64)))
        .collect();
    let mut scope = Vec::with_capacity(factored.len() + 1);
    scope.push(fresh.clone());
    scope.extend_from_slice(factored);
    let tuples = map.iter().map(|(a, v)| Tuple::new(vec![v.clone()]).concat(a));
    (TableConstraint::new(id, scope, tuples), map)
}

pub(crate) fn mappings(map: &BTreeMap<Tuple, Value>) -> Vec<ValueMapping> {
    map.iter()
        .map(|(a, v)| ValueMapping {
            sub_tuple: a.clone(),
            value: v.clone(),
        })
        .collect()
}
