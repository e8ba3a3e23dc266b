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

//! JSON instance and report files.
//!
//! An instance document looks like
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "variables": [
//!     {"name": "x1", "domain": ["a", "b"]}
//!   ],
//!   "constraints": [
//!     {
//!       "id": "c1",
//!       "scope": ["x1"],
//!       "tuples": [
//!         ["a"]
//!       ]
//!     }
//!   ]
//! }
//! ```
//!
//! Every value is a string. A constraint without an `id` is named `c<n>`
//! after its 1-based position in the list. [`serialize_instance`] writes a
//! canonical form: variables in declaration order, sorted domains,
//! constraints by id, sorted tuples, LF line endings.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{validate_network, ConstraintNetwork, TableConstraint, Tuple, Value, VariableId, Violation};
use crate::pipeline::CompressionReport;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub format_version: String,
    pub variables: Vec<VariableDocument>,
    pub constraints: Vec<ConstraintDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDocument {
    pub name: String,
    pub domain: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub scope: Vec<String>,
    pub tuples: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {0:?}")]
    UnsupportedVersion(String),
    #[error("invalid instance: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Validation(Vec<Violation>),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// A parsed network plus what was silently fixed while loading it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedInstance {
    pub network: ConstraintNetwork,
    /// Tuples dropped because they repeated an earlier tuple of the same constraint.
    pub duplicate_tuples: usize,
}

pub fn parse_instance(text: &str) -> Result<LoadedInstance, IoError> {
    let doc: InstanceDocument = serde_json::from_str(text)?;
    instance_from_document(doc)
}

pub fn instance_from_document(doc: InstanceDocument) -> Result<LoadedInstance, IoError> {
    if doc.format_version != FORMAT_VERSION {
        return Err(IoError::UnsupportedVersion(doc.format_version));
    }
    let mut violations = Vec::new();
    let mut seen = HashSet::new();
    let mut domains = Vec::with_capacity(doc.variables.len());
    for var in doc.variables {
        if !seen.insert(var.name.clone()) {
            violations.push(Violation::DuplicateVariable {
                variable: VariableId::new(var.name),
            });
            continue;
        }
        let domain: BTreeSet<Value> = var.domain.into_iter().map(Value::new).collect();
        domains.push((VariableId::new(var.name), domain));
    }
    let mut duplicate_tuples = 0;
    let constraints = doc
        .constraints
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let id = c.id.unwrap_or_else(|| format!("c{}", i + 1));
            let given = c.tuples.len();
            let constraint = TableConstraint::new(
                id,
                c.scope.into_iter().map(VariableId::new).collect(),
                c.tuples
                    .into_iter()
                    .map(|t| t.into_iter().map(Value::new).collect::<Tuple>()),
            );
            duplicate_tuples += given - constraint.tuple_count();
            constraint
        })
        .collect();
    let network = ConstraintNetwork::from_parts(domains, constraints);
    violations.extend(validate_network(&network));
    if !violations.is_empty() {
        return Err(IoError::Validation(violations));
    }
    Ok(LoadedInstance {
        network,
        duplicate_tuples,
    })
}

pub fn document_from_network(network: &ConstraintNetwork) -> InstanceDocument {
    InstanceDocument {
        format_version: FORMAT_VERSION.to_owned(),
        variables: network
            .domains()
            .iter()
            .map(|(name, domain)| VariableDocument {
                name: name.to_string(),
                domain: domain.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
        constraints: network
            .constraints()
            .iter()
            .map(|c| ConstraintDocument {
                id: Some(c.id().to_string()),
                scope: c.scope().iter().map(|v| v.to_string()).collect(),
                tuples: c
                    .relation()
                    .iter()
                    .map(|t| t.values().iter().map(|v| v.to_string()).collect())
                    .collect(),
            })
            .collect(),
    }
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn inline_list<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    let inner: Vec<String> = items.into_iter().map(quoted).collect();
    format!("[{}]", inner.join(", "))
}

/// Canonical, byte-deterministic text of `network`.
pub fn serialize_instance(network: &ConstraintNetwork) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"format_version\": {},", quoted(FORMAT_VERSION));
    if network.num_variables() == 0 {
        out.push_str("  \"variables\": [],\n");
    } else {
        out.push_str("  \"variables\": [\n");
        let n = network.num_variables();
        for (i, (name, domain)) in network.domains().iter().enumerate() {
            let _ = write!(
                out,
                "    {{\"name\": {}, \"domain\": {}}}",
                quoted(name.as_str()),
                inline_list(domain.iter().map(Value::as_str))
            );
            out.push_str(if i + 1 < n { ",\n" } else { "\n" });
        }
        out.push_str("  ],\n");
    }
    if network.constraints().is_empty() {
        out.push_str("  \"constraints\": []\n");
    } else {
        out.push_str("  \"constraints\": [\n");
        let m = network.constraints().len();
        for (i, c) in network.constraints().iter().enumerate() {
            out.push_str("    {\n");
            let _ = writeln!(out, "      \"id\": {},", quoted(c.id().as_str()));
            let _ = writeln!(
                out,
                "      \"scope\": {},",
                inline_list(c.scope().iter().map(VariableId::as_str))
            );
            if c.relation().is_empty() {
                out.push_str("      \"tuples\": []\n");
            } else {
                out.push_str("      \"tuples\": [\n");
                let p = c.tuple_count();
                for (j, t) in c.relation().iter().enumerate() {
                    let _ = write!(out, "        {}", inline_list(t.values().iter().map(Value::as_str)));
                    out.push_str(if j + 1 < p { ",\n" } else { "\n" });
                }
                out.push_str("      ]\n");
            }
            out.push_str(if i + 1 < m { "    },\n" } else { "    }\n" });
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out
}

/// Pretty JSON of a compression report, newline terminated.
pub fn serialize_report(report: &CompressionReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn parse_report(text: &str) -> Result<CompressionReport, IoError> {
    Ok(serde_json::from_str(text)?)
}
