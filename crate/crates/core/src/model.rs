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

//! Constraint networks whose constraints are all given in extension.
//!
//! A network is a list of variables with finite domains plus a list of
//! table constraints. Scopes are ordered, and the order fixes which tuple
//! position belongs to which variable. Relations are sets: duplicate tuples
//! collapse on construction.

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Prefix reserved for variables introduced by rewriting.
pub const FRESH_VARIABLE_PREFIX: &str = "_y";
/// Prefix reserved for values introduced by rewriting.
pub const FRESH_VALUE_PREFIX: &str = "_v";
/// Prefix reserved for constraints introduced by rewriting.
pub const FRESH_CONSTRAINT_PREFIX: &str = "_c";

/// Whether a symbol came from the input or was minted by a rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Original,
    Fresh,
}

macro_rules! symbol {
    ($(#[$meta:meta])* $name:ident, $prefix:expr) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(symbol: impl Into<String>) -> Self {
                Self(symbol.into())
            }

            /// The `index`-th fresh symbol of this kind.
            pub fn fresh(index: u64) -> Self {
                Self(format!("{}{}", $prefix, index))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }

            pub fn origin(&self) -> Origin {
                if self.0.starts_with($prefix) {
                    Origin::Fresh
                } else {
                    Origin::Original
                }
            }

            /// Numeric suffix of a fresh symbol, if it has one.
            pub(crate) fn fresh_index(&self) -> Option<u64> {
                let rest = self.0.strip_prefix($prefix)?;
                if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                rest.parse().ok()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }
    };
}

symbol!(
    /// Name of a variable. Names starting with `_y` are reserved.
    VariableId,
    FRESH_VARIABLE_PREFIX
);
symbol!(
    /// A domain value. Symbols starting with `_v` are reserved.
    Value,
    FRESH_VALUE_PREFIX
);
symbol!(
    /// Identifier of a table constraint. Ids starting with `_c` are reserved.
    ConstraintId,
    FRESH_CONSTRAINT_PREFIX
);

/// An ordered sequence of values.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tuple(Vec<Value>);

impl Tuple {
    pub fn new(values: Vec<Value>) -> Self {
        Self(values)
    }

    pub fn from_strs<S: AsRef<str>>(values: &[S]) -> Self {
        Self(values.iter().map(|v| Value::new(v.as_ref())).collect())
    }

    pub fn values(&self) -> &[Value] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, position: usize) -> Option<&Value> {
        self.0.get(position)
    }

    /// `self ⊕ other`: the values of `self` followed by those of `other`.
    pub fn concat(&self, other: &Tuple) -> Tuple {
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend_from_slice(&self.0);
        values.extend_from_slice(&other.0);
        Tuple(values)
    }

    /// The values at the given 0-based positions, in the order given.
    pub fn select(&self, positions: &[usize]) -> Tuple {
        Tuple(positions.iter().map(|&p| self.0[p].clone()).collect())
    }
}

impl FromIterator<Value> for Tuple {
    fn from_iter<T: IntoIterator<Item = Value>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Debug for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Non-commutative tuple concatenation.
pub fn concat(t1: &Tuple, t2: &Tuple) -> Tuple {
    t1.concat(t2)
}

/// A constraint given by its ordered scope and its set of allowed tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableConstraint {
    id: ConstraintId,
    scope: Vec<VariableId>,
    relation: BTreeSet<Tuple>,
}

impl TableConstraint {
    pub fn new(id: impl Into<ConstraintId>, scope: Vec<VariableId>, tuples: impl IntoIterator<Item = Tuple>) -> Self {
        Self {
            id: id.into(),
            scope,
            relation: tuples.into_iter().collect(),
        }
    }

    pub fn id(&self) -> &ConstraintId {
        &self.id
    }

    pub fn scope(&self) -> &[VariableId] {
        &self.scope
    }

    pub fn relation(&self) -> &BTreeSet<Tuple> {
        &self.relation
    }

    pub fn arity(&self) -> usize {
        self.scope.len()
    }

    /// Number of allowed tuples.
    pub fn tuple_count(&self) -> usize {
        self.relation.len()
    }

    /// Contribution of this constraint to the network size.
    pub fn size(&self) -> usize {
        self.relation.len() * self.scope.len()
    }

    pub fn position_of(&self, var: &VariableId) -> Option<usize> {
        self.scope.iter().position(|v| v == var)
    }

    pub fn contains(&self, var: &VariableId) -> bool {
        self.scope.contains(var)
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("variable {variable} is not in the scope of constraint {constraint}")]
    VariableNotInScope {
        constraint: ConstraintId,
        variable: VariableId,
    },
    #[error("invalid network: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

/// One broken well-formedness rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UndeclaredVariable {
        constraint: ConstraintId,
        variable: VariableId,
    },
    DuplicateScopeVariable {
        constraint: ConstraintId,
        variable: VariableId,
    },
    ArityMismatch {
        constraint: ConstraintId,
        tuple: Tuple,
        arity: usize,
    },
    ValueOutsideDomain {
        constraint: ConstraintId,
        variable: VariableId,
        value: Value,
        tuple: Tuple,
    },
    EmptyDomain {
        variable: VariableId,
    },
    DuplicateVariable {
        variable: VariableId,
    },
    DuplicateConstraintId {
        constraint: ConstraintId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UndeclaredVariable { constraint, variable } => {
                write!(f, "constraint {constraint}: undeclared variable {variable}")
            }
            Violation::DuplicateScopeVariable { constraint, variable } => {
                write!(f, "constraint {constraint}: variable {variable} appears twice in scope")
            }
            Violation::ArityMismatch {
                constraint,
                tuple,
                arity,
            } => write!(
                f,
                "constraint {constraint}: tuple {tuple} has length {} but arity is {arity}",
                tuple.len()
            ),
            Violation::ValueOutsideDomain {
                constraint,
                variable,
                value,
                tuple,
            } => write!(
                f,
                "constraint {constraint}: tuple {tuple} assigns {value} outside the domain of {variable}"
            ),
            Violation::EmptyDomain { variable } => {
                write!(f, "variable {variable} has an empty domain")
            }
            Violation::DuplicateVariable { variable } => {
                write!(f, "variable {variable} declared twice")
            }
            Violation::DuplicateConstraintId { constraint } => {
                write!(f, "constraint id {constraint} used twice")
            }
        }
    }
}

/// Variables with their domains plus table constraints.
///
/// Variables keep declaration order. Constraints are kept sorted by id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintNetwork {
    domains: IndexMap<VariableId, BTreeSet<Value>>,
    constraints: Vec<TableConstraint>,
}

impl ConstraintNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a network without checking it; see [`validate_network`].
    pub fn from_parts(
        domains: impl IntoIterator<Item = (VariableId, BTreeSet<Value>)>,
        constraints: Vec<TableConstraint>,
    ) -> Self {
        let mut constraints = constraints;
        constraints.sort_by(|a, b| a.id.cmp(&b.id));
        Self {
            domains: domains.into_iter().collect(),
            constraints,
        }
    }

    /// Like [`ConstraintNetwork::from_parts`], rejecting ill-formed input.
    pub fn try_from_parts(
        domains: impl IntoIterator<Item = (VariableId, BTreeSet<Value>)>,
        constraints: Vec<TableConstraint>,
    ) -> Result<Self, ModelError> {
        let network = Self::from_parts(domains, constraints);
        let violations = validate_network(&network);
        if violations.is_empty() {
            Ok(network)
        } else {
            Err(ModelError::Invalid(violations))
        }
    }

    pub fn variables(&self) -> impl ExactSizeIterator<Item = &VariableId> + '_ {
        self.domains.keys()
    }

    pub fn domains(&self) -> &IndexMap<VariableId, BTreeSet<Value>> {
        &self.domains
    }

    pub fn domain(&self, var: &VariableId) -> Option<&BTreeSet<Value>> {
        self.domains.get(var)
    }

    pub fn has_variable(&self, var: &VariableId) -> bool {
        self.domains.contains_key(var)
    }

    pub fn num_variables(&self) -> usize {
        self.domains.len()
    }

    pub fn constraints(&self) -> &[TableConstraint] {
        &self.constraints
    }

    pub fn constraint(&self, id: &ConstraintId) -> Option<&TableConstraint> {
        self.constraints
            .binary_search_by(|c| c.id.cmp(id))
            .ok()
            .map(|i| &self.constraints[i])
    }

    /// Largest domain size, `d`.
    pub fn max_domain_size(&self) -> usize {
        self.domains.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        network_size(self)
    }

    /// Next unused indices for fresh variables, values and constraint ids.
    pub(crate) fn fresh_counters(&self) -> FreshCounters {
        let next = |it: &mut dyn Iterator<Item = Option<u64>>| it.flatten().max().map_or(0, |m| m + 1);
        let variable = next(&mut self.domains.keys().map(VariableId::fresh_index));
        let value = next(
            &mut self
                .domains
                .values()
                .flat_map(|d| d.iter().map(Value::fresh_index))
                .chain(
                    self.constraints
                        .iter()
                        .flat_map(|c| c.relation.iter())
                        .flat_map(|t| t.values().iter().map(Value::fresh_index)),
                ),
        );
        let constraint = next(&mut self.constraints.iter().map(|c| c.id.fresh_index()));
        FreshCounters {
            variable,
            value,
            constraint,
        }
    }

    /// Replaces the constraints named in `removed` and inserts `added`,
    /// declaring `new_variable` with `domain` at the end of the variable list.
    pub(crate) fn rewritten(
        &self,
        new_variable: VariableId,
        domain: BTreeSet<Value>,
        removed: &[ConstraintId],
        added: Vec<TableConstraint>,
    ) -> ConstraintNetwork {
        let mut domains = self.domains.clone();
        domains.insert(new_variable, domain);
        let mut constraints: Vec<TableConstraint> = self
            .constraints
            .iter()
            .filter(|c| !removed.contains(&c.id))
            .cloned()
            .collect();
        constraints.extend(added);
        constraints.sort_by(|a, b| a.id.cmp(&b.id));
        ConstraintNetwork { domains, constraints }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct FreshCounters {
    pub variable: u64,
    pub value: u64,
    pub constraint: u64,
}

/// `|P|`: the sum over constraints of tuple count times arity.
pub fn network_size(network: &ConstraintNetwork) -> usize {
    network.constraints.iter().map(TableConstraint::size).sum()
}

/// `R_c[s]`: the relation of `constraint` projected onto `vars`, in that order.
pub fn project_relation(constraint: &TableConstraint, vars: &[VariableId]) -> Result<BTreeSet<Tuple>, ModelError> {
    let positions = vars
        .iter()
        .map(|v| {
            constraint.position_of(v).ok_or_else(|| ModelError::VariableNotInScope {
                constraint: constraint.id.clone(),
                variable: v.clone(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(constraint.relation.iter().map(|t| t.select(&positions)).collect())
}

/// True when every relation is non-empty and every pair of constraints
/// agrees on the projection onto their shared variables.
///
/// Shared variables are taken in the order they occur in the first
/// constraint of the pair, on both sides.
pub fn is_pairwise_consistent(network: &ConstraintNetwork) -> bool {
    let constraints = &network.constraints;
    if constraints.iter().any(|c| c.relation.is_empty()) {
        return false;
    }
    for (i, ci) in constraints.iter().enumerate() {
        for cj in &constraints[i + 1..] {
            let shared: Vec<VariableId> = ci.scope.iter().filter(|v| cj.contains(v)).cloned().collect();
            if shared.is_empty() {
                continue;
            }
            let left = project_relation(ci, &shared).expect("shared variables are in scope");
            let right = project_relation(cj, &shared).expect("shared variables are in scope");
            if left != right {
                return false;
            }
        }
    }
    true
}

/// Every well-formedness rule the network breaks; empty when it is valid.
///
/// Fresh variables may have an empty domain: that is how a rewrite marks a
/// network with no solutions.
pub fn validate_network(network: &ConstraintNetwork) -> Vec<Violation> {
    let mut violations = Vec::new();
    for (var, domain) in &network.domains {
        if domain.is_empty() && var.origin() == Origin::Original {
            violations.push(Violation::EmptyDomain { variable: var.clone() });
        }
    }
    for pair in network.constraints.windows(2) {
        if pair[0].id == pair[1].id {
            violations.push(Violation::DuplicateConstraintId {
                constraint: pair[0].id.clone(),
            });
        }
    }
    for c in &network.constraints {
        let mut seen = BTreeSet::new();
        for var in &c.scope {
            if !seen.insert(var) {
                violations.push(Violation::DuplicateScopeVariable {
                    constraint: c.id.clone(),
                    variable: var.clone(),
                });
            }
            if !network.has_variable(var) {
                violations.push(Violation::UndeclaredVariable {
                    constraint: c.id.clone(),
                    variable: var.clone(),
                });
            }
        }
        for t in &c.relation {
            if t.len() != c.arity() {
                violations.push(Violation::ArityMismatch {
                    constraint: c.id.clone(),
                    tuple: t.clone(),
                    arity: c.arity(),
                });
                continue;
            }
            for (var, value) in c.scope.iter().zip(t.values()) {
                if let Some(domain) = network.domain(var) {
                    if !domain.contains(value) {
                        violations.push(Violation::ValueOutsideDomain {
                            constraint: c.id.clone(),
                            variable: var.clone(),
                            value: value.clone(),
                            tuple: t.clone(),
                        });
                    }
                }
            }
        }
    }
    violations
}

pub fn validate(network: &ConstraintNetwork) -> Result<(), ModelError> {
    let violations = validate_network(network);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ModelError::Invalid(violations))
    }
}
