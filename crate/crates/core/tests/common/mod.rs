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

//! Helpers shared by the integration tests: random instances, a naive
//! solver independent of the library's backtracking, and fresh-symbol
//! renaming.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tabcomp::mining::{Tid, TransactionDb};
use tabcomp::model::{ConstraintId, ConstraintNetwork, TableConstraint, Tuple, Value, VariableId};
use tabcomp::verify::Assignment;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const VALUES: [&str; 4] = ["a", "b", "c", "d"];

/// A random transaction database over items `0..items`.
pub fn random_db(rng: &mut impl Rng, max_items: usize, max_transactions: usize) -> TransactionDb<u32> {
    let items = rng.gen_range(1..=max_items) as u32;
    let count = rng.gen_range(0..=max_transactions);
    let density: f64 = rng.gen_range(0.2..0.8);
    let rows: Vec<(Tid, Vec<u32>)> = (0..count)
        .map(|t| {
            let row = (0..items).filter(|_| rng.gen_bool(density)).collect();
            (Tid::new(format!("t{t:02}")), row)
        })
        .collect();
    TransactionDb::new(rows).unwrap()
}

pub struct NetworkShape {
    pub max_variables: usize,
    pub max_domain: usize,
    pub max_constraints: usize,
    pub min_arity: usize,
    pub max_arity: usize,
}

impl Default for NetworkShape {
    fn default() -> Self {
        Self {
            max_variables: 6,
            max_domain: 4,
            max_constraints: 5,
            min_arity: 2,
            max_arity: 4,
        }
    }
}

fn cartesian(domains: &[Vec<Value>]) -> Vec<Tuple> {
    let mut out = vec![Vec::new()];
    for d in domains {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Value>| {
                d.iter().map(move |v| {
                    let mut t = prefix.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    out.into_iter().map(Tuple::new).collect()
}

/// A random valid network. Relations are random subsets of the product of
/// the scope domains, with a density picked per constraint.
pub fn random_network(rng: &mut impl Rng, shape: &NetworkShape) -> ConstraintNetwork {
    let n = rng.gen_range(shape.min_arity.max(1)..=shape.max_variables);
    let domains: Vec<(VariableId, BTreeSet<Value>)> = (0..n)
        .map(|i| {
            let size = rng.gen_range(1..=shape.max_domain);
            let mut vals = VALUES.to_vec();
            vals.shuffle(rng);
            (
                VariableId::new(format!("x{}", i + 1)),
                vals[..size].iter().map(|&v| Value::from(v)).collect(),
            )
        })
        .collect();
    let m = rng.gen_range(1..=shape.max_constraints);
    let constraints = (0..m)
        .map(|j| {
            let arity = rng.gen_range(shape.min_arity..=shape.max_arity.min(n));
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let scope: Vec<usize> = order[..arity].to_vec();
            let doms: Vec<Vec<Value>> = scope.iter().map(|&i| domains[i].1.iter().cloned().collect()).collect();
            let density = [0.25, 0.5, 0.8, 1.0][rng.gen_range(0..4)];
            let tuples: Vec<Tuple> = cartesian(&doms).into_iter().filter(|_| rng.gen_bool(density)).collect();
            TableConstraint::new(
                format!("c{}", j + 1),
                scope.iter().map(|&i| domains[i].0.clone()).collect(),
                tuples,
            )
        })
        .collect();
    ConstraintNetwork::from_parts(domains, constraints)
}

/// Every total assignment satisfying every constraint, by filtering the full
/// Cartesian product.
pub fn naive_solutions(network: &ConstraintNetwork) -> BTreeSet<BTreeMap<VariableId, Value>> {
    let names: Vec<VariableId> = network.variables().cloned().collect();
    let doms: Vec<Vec<Value>> = network
        .domains()
        .values()
        .map(|d| d.iter().cloned().collect())
        .collect();
    cartesian(&doms)
        .into_iter()
        .map(|t| {
            names
                .iter()
                .cloned()
                .zip(t.values().iter().cloned())
                .collect::<BTreeMap<_, _>>()
        })
        .filter(|a| {
            network.constraints().iter().all(|c| {
                let t: Tuple = c.scope().iter().map(|v| a[v].clone()).collect();
                c.relation().contains(&t)
            })
        })
        .collect()
}

pub fn as_maps(sols: &[Assignment]) -> BTreeSet<BTreeMap<VariableId, Value>> {
    sols.iter()
        .map(|s| s.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
        .collect()
}

/// Constraints as (scope, relation) pairs with every fresh value renamed by
/// `rename`; other symbols are kept.
pub fn renamed_constraints(
    network: &ConstraintNetwork,
    rename: &BTreeMap<&str, &str>,
) -> BTreeSet<(Vec<String>, BTreeSet<Vec<String>>)> {
    let map = |s: &str| rename.get(s).map_or_else(|| s.to_owned(), |r| r.to_string());
    network
        .constraints()
        .iter()
        .map(|c| {
            (
                c.scope().iter().map(|v| map(v.as_str())).collect(),
                c.relation()
                    .iter()
                    .map(|t| t.values().iter().map(|v| map(v.as_str())).collect())
                    .collect(),
            )
        })
        .collect()
}

pub fn table(id: &str, scope: &[&str], rows: &[&[&str]]) -> TableConstraint {
    TableConstraint::new(
        id,
        scope.iter().map(|&v| VariableId::from(v)).collect(),
        rows.iter().map(|r| Tuple::from_strs(r)),
    )
}

pub fn original_vars(network: &ConstraintNetwork) -> BTreeSet<VariableId> {
    network.variables().cloned().collect()
}

/// `k` constraints over `s = (s1..sn)` plus `residual` private variables
/// each, all holding `p` tuples whose projections on `s` are the same `l`
/// sub-tuples (`1 <= l <= min(p, 3^n)`). The first private variable numbers
/// the tuples so they stay distinct.
pub fn consistent_family(
    rng: &mut impl Rng,
    n: usize,
    k: usize,
    p: usize,
    l: usize,
    residual: usize,
) -> (ConstraintNetwork, Vec<VariableId>, Vec<ConstraintId>) {
    assert!(residual >= 1 && l >= 1 && l <= p);
    let small: Vec<Value> = VALUES[..3].iter().map(|&v| Value::from(v)).collect();
    let numbered: Vec<Value> = (0..p).map(|i| Value::new(format!("r{i}"))).collect();
    let shared: Vec<VariableId> = (1..=n).map(|i| VariableId::new(format!("s{i}"))).collect();
    let mut subs = cartesian(&vec![small.clone(); n]);
    subs.shuffle(rng);
    subs.truncate(l);
    assert_eq!(subs.len(), l, "not enough sub-tuples");
    let mut domains: Vec<(VariableId, BTreeSet<Value>)> = shared
        .iter()
        .map(|v| (v.clone(), small.iter().cloned().collect()))
        .collect();
    let mut constraints = Vec::new();
    for j in 0..k {
        let own: Vec<VariableId> = (0..residual).map(|i| VariableId::new(format!("r{j}_{i}"))).collect();
        domains.push((own[0].clone(), numbered.iter().cloned().collect()));
        domains.extend(own[1..].iter().map(|v| (v.clone(), small.iter().cloned().collect())));
        let mut scope = shared.clone();
        scope.extend(own.iter().cloned());
        scope.shuffle(rng);
        let tuples: Vec<Tuple> = (0..p)
            .map(|i| {
                let s = if i < l { &subs[i] } else { &subs[rng.gen_range(0..l)] };
                let mut rest = vec![numbered[i].clone()];
                rest.extend((1..residual).map(|_| small[rng.gen_range(0..3)].clone()));
                scope
                    .iter()
                    .map(|v| match shared.iter().position(|x| x == v) {
                        Some(i) => s.values()[i].clone(),
                        None => rest[own.iter().position(|x| x == v).unwrap()].clone(),
                    })
                    .collect()
            })
            .collect();
        constraints.push(TableConstraint::new(format!("c{j}"), scope, tuples));
    }
    let ids = (0..k).map(|j| ConstraintId::new(format!("c{j}"))).collect();
    (ConstraintNetwork::from_parts(domains, constraints), shared, ids)
}
