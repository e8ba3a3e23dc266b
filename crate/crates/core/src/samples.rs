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

//! Small hand-made instances used by the examples and tests.

use std::collections::BTreeSet;

use crate::mining::{Tid, TransactionDb};
use crate::model::{ConstraintNetwork, TableConstraint, Tuple, Value, VariableId};

fn binary_domains(names: &[&str]) -> Vec<(VariableId, BTreeSet<Value>)> {
    names
        .iter()
        .map(|&n| {
            (
                VariableId::from(n),
                BTreeSet::from([Value::from("a"), Value::from("b")]),
            )
        })
        .collect()
}

fn table(id: &str, scope: &[&str], rows: &[&[&str]]) -> TableConstraint {
    TableConstraint::new(
        id,
        scope.iter().map(|&v| VariableId::from(v)).collect(),
        rows.iter().map(|r| Tuple::from_strs(r)),
    )
}

/// Favourite writers of six library members.
pub fn favorite_writers() -> TransactionDb<String> {
    let rows: [(&str, &[&str]); 6] = [
        ("001", &["Joyce", "Beckett", "Proust"]),
        ("002", &["Faulkner", "Hemingway", "Melville"]),
        ("003", &["Joyce", "Proust"]),
        ("004", &["Hemingway", "Melville"]),
        ("005", &["Flaubert", "Zola"]),
        ("006", &["Hemingway", "Golding"]),
    ];
    TransactionDb::new(
        rows.iter()
            .map(|(tid, items)| (Tid::from(*tid), items.iter().map(|s| s.to_string()))),
    )
    .expect("distinct tids")
}

/// Two ternary constraints over `{a, b}` sharing `x2, x3`; size 18.
pub fn overlapping_ternary() -> ConstraintNetwork {
    ConstraintNetwork::from_parts(
        binary_domains(&["x1", "x2", "x3", "x4"]),
        vec![
            table(
                "c1",
                &["x1", "x2", "x3"],
                &[&["b", "a", "a"], &["a", "a", "b"], &["a", "b", "a"]],
            ),
            table(
                "c2",
                &["x2", "x3", "x4"],
                &[&["a", "b", "a"], &["b", "a", "a"], &["b", "a", "b"]],
            ),
        ],
    )
}

/// A single quaternary constraint `c` with five tuples; size 20.
pub fn quaternary_table() -> ConstraintNetwork {
    ConstraintNetwork::from_parts(
        binary_domains(&["x1", "x2", "x3", "x4"]),
        vec![table(
            "c",
            &["x1", "x2", "x3", "x4"],
            &[
                &["a", "b", "b", "a"],
                &["a", "a", "b", "b"],
                &["a", "b", "a", "a"],
                &["b", "b", "a", "a"],
                &["b", "b", "b", "a"],
            ],
        )],
    )
}
