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

//! Greedy two-level compression: constraint graph first, then each table.
//!
//! Each iteration mines the current network, trial-applies every candidate
//! the patterns suggest and keeps the one with the largest strictly positive
//! size reduction. The network is re-mined after every accepted rewrite.
//! Ties on reduction go to the larger pattern, then to the lexicographically
//! smaller one.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{build_graph_db, cgr_apply, cgr_profitable, CgrCandidate};
use crate::mining::{mine, MiningError, PatternKind};
use crate::model::{validate_network, ConstraintId, ConstraintNetwork, Violation};
use crate::rewrite::{RewriteError, RewriteRecord};
use crate::table::{build_constraint_db, mrr_apply, mrr_profitable, MrrCandidate};

/// How candidate rewrites are judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GainMode {
    /// Apply each candidate and measure the real size change.
    ExactTrial,
    /// Discard candidates the worst-case gain formula rejects, then measure the rest.
    Prefilter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Passes {
    GraphAndTable,
    GraphOnly,
    TableOnly,
}

impl Passes {
    fn graph(self) -> bool {
        matches!(self, Passes::GraphAndTable | Passes::GraphOnly)
    }

    fn table(self) -> bool {
        matches!(self, Passes::GraphAndTable | Passes::TableOnly)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompressionConfig {
    pub min_support: usize,
    pub pattern_kind: PatternKind,
    /// Cap on accepted rewrites per graph pass, per constraint in a table
    /// pass, and on the number of graph+table rounds.
    pub max_iterations: usize,
    pub gain_mode: GainMode,
    pub passes: Passes,
}

impl Default for CompressionConfig {
    fn default() -> Self {
        Self {
            min_support: 2,
            pattern_kind: PatternKind::Closed,
            max_iterations: 100,
            gain_mode: GainMode::ExactTrial,
            passes: Passes::GraphAndTable,
        }
    }
}

impl CompressionConfig {
    pub fn validate(&self) -> Result<(), PipelineError> {
        if self.min_support < 2 {
            return Err(PipelineError::InvalidConfig("min_support must be at least 2".into()));
        }
        if self.max_iterations == 0 {
            return Err(PipelineError::InvalidConfig("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid network: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidNetwork(Vec<Violation>),
    #[error(transparent)]
    Mining(#[from] MiningError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassStats {
    pub iterations: usize,
    pub candidates_considered: usize,
    pub accepted: usize,
    pub rejected_by_gain: usize,
}

impl PassStats {
    fn absorb(&mut self, other: &PassStats) {
        self.iterations += other.iterations;
        self.candidates_considered += other.candidates_considered;
        self.accepted += other.accepted;
        self.rejected_by_gain += other.rejected_by_gain;
    }
}

/// Output of a single pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PassReport {
    pub records: Vec<RewriteRecord>,
    pub stats: PassStats,
    pub unsat_detected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressionReport {
    pub input_size: usize,
    pub output_size: usize,
    pub rounds: usize,
    pub records: Vec<RewriteRecord>,
    pub graph_pass: PassStats,
    pub table_pass: PassStats,
    pub unsat_detected: bool,
}

/// A candidate with its measured size reduction, or `None` if the gain
/// formula rejected it without a trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial<C> {
    pub candidate: C,
    pub delta: Option<i64>,
}

/// Every CGR candidate suggested by the current constraint graph.
pub fn graph_trials(
    network: &ConstraintNetwork,
    config: &CompressionConfig,
) -> Result<Vec<Trial<CgrCandidate>>, PipelineError> {
    let db = build_graph_db(network);
    let patterns = mine(&db, config.min_support, config.pattern_kind)?;
    let mut trials = Vec::new();
    for pattern in patterns {
        if pattern.items.len() < 2 || pattern.support < 2 {
            continue;
        }
        let candidate = CgrCandidate::new(
            pattern.items,
            pattern.cover.iter().map(|t| ConstraintId::new(t.as_str())).collect(),
        );
        let n = candidate.shared.len() as u64;
        let k = candidate.support() as u64;
        let delta = if config.gain_mode == GainMode::Prefilter && !cgr_profitable(n, k) {
            None
        } else {
            Some(cgr_apply(network, &candidate)?.1.delta())
        };
        trials.push(Trial { candidate, delta });
    }
    Ok(trials)
}

/// Every MRR candidate suggested by the microstructure of one constraint.
pub fn table_trials(
    network: &ConstraintNetwork,
    constraint: &ConstraintId,
    config: &CompressionConfig,
) -> Result<Vec<Trial<MrrCandidate>>, PipelineError> {
    let c = network
        .constraint(constraint)
        .ok_or_else(|| RewriteError::UnknownConstraint(constraint.clone()))?;
    let p = c.tuple_count() as u64;
    let db = build_constraint_db(c);
    let patterns = mine(&db, config.min_support, config.pattern_kind)?;
    let mut trials = Vec::new();
    for pattern in patterns {
        let n = pattern.items.len() as u64;
        let k = pattern.support as u64;
        let candidate = MrrCandidate::new(constraint.clone(), pattern.items);
        let delta = if config.gain_mode == GainMode::Prefilter && !mrr_profitable(n, p, k) {
            None
        } else {
            Some(mrr_apply(network, &candidate)?.1.delta())
        };
        trials.push(Trial { candidate, delta });
    }
    Ok(trials)
}

/// Picks the best strictly positive trial and updates `stats`.
fn select<C, K: Ord>(trials: Vec<Trial<C>>, stats: &mut PassStats, key: impl Fn(&C) -> K) -> Option<C> {
    stats.candidates_considered += trials.len();
    let mut best: Option<((i64, K), C)> = None;
    for trial in trials {
        match trial.delta {
            Some(d) if d > 0 => {
                let k = (d, key(&trial.candidate));
                if best.as_ref().is_none_or(|(bk, _)| k > *bk) {
                    best = Some((k, trial.candidate));
                }
            }
            _ => stats.rejected_by_gain += 1,
        }
    }
    best.map(|(_, c)| c)
}

fn graph_pass_inner(
    mut network: ConstraintNetwork,
    config: &CompressionConfig,
) -> Result<(ConstraintNetwork, PassReport), PipelineError> {
    let mut report = PassReport::default();
    while report.stats.accepted < config.max_iterations {
        report.stats.iterations += 1;
        let trials = graph_trials(&network, config)?;
        let Some(best) = select(trials, &mut report.stats, |c: &CgrCandidate| {
            (c.shared.len(), Reverse(c.shared.clone()))
        }) else {
            break;
        };
        let (next, record) = cgr_apply(&network, &best)?;
        report.stats.accepted += 1;
        network = next;
        let unsat = record.empty_intersection;
        report.records.push(record);
        if unsat {
            report.unsat_detected = true;
            break;
        }
    }
    Ok((network, report))
}

fn table_pass_inner(
    mut network: ConstraintNetwork,
    config: &CompressionConfig,
) -> Result<(ConstraintNetwork, PassReport), PipelineError> {
    let mut report = PassReport::default();
    let mut pending: BTreeSet<ConstraintId> = network.constraints().iter().map(|c| c.id().clone()).collect();
    while let Some(id) = pending.pop_first() {
        let mut accepted_here = 0;
        while accepted_here < config.max_iterations {
            report.stats.iterations += 1;
            let trials = table_trials(&network, &id, config)?;
            let Some(best) = select(trials, &mut report.stats, |c: &MrrCandidate| {
                (c.items.len(), Reverse(c.items.clone()))
            }) else {
                break;
            };
            let (next, record) = mrr_apply(&network, &best)?;
            report.stats.accepted += 1;
            accepted_here += 1;
            network = next;
            pending.insert(record.interface_constraint.clone());
            report.records.push(record);
        }
    }
    Ok((network, report))
}

fn check_inputs(network: &ConstraintNetwork, config: &CompressionConfig) -> Result<(), PipelineError> {
    config.validate()?;
    let violations = validate_network(network);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(PipelineError::InvalidNetwork(violations))
    }
}

/// Repeatedly applies the best CGR rewrite until none reduces the size.
pub fn compress_graph_pass(
    network: &ConstraintNetwork,
    config: &CompressionConfig,
) -> Result<(ConstraintNetwork, PassReport), PipelineError> {
    check_inputs(network, config)?;
    graph_pass_inner(network.clone(), config)
}

/// For each constraint in id order, repeatedly applies the best MRR
/// rewrite until none reduces the size. Interface constraints created
/// along the way are processed too.
pub fn compress_table_pass(
    network: &ConstraintNetwork,
    config: &CompressionConfig,
) -> Result<(ConstraintNetwork, PassReport), PipelineError> {
    check_inputs(network, config)?;
    table_pass_inner(network.clone(), config)
}

/// Graph pass followed by table pass, repeated until a round accepts no
/// rewrite (at most `max_iterations` rounds), or until a rewrite shows the
/// network has no solution.
pub fn compress(
    network: &ConstraintNetwork,
    config: &CompressionConfig,
) -> Result<(ConstraintNetwork, CompressionReport), PipelineError> {
    check_inputs(network, config)?;
    let mut report = CompressionReport {
        input_size: network.size(),
        output_size: network.size(),
        rounds: 0,
        records: Vec::new(),
        graph_pass: PassStats::default(),
        table_pass: PassStats::default(),
        unsat_detected: false,
    };
    let mut current = network.clone();
    while report.rounds < config.max_iterations && !report.unsat_detected {
        report.rounds += 1;
        let mut accepted = 0;
        if config.passes.graph() {
            let (next, part) = graph_pass_inner(current, config)?;
            current = next;
            accepted += part.stats.accepted;
            report.graph_pass.absorb(&part.stats);
            report.records.extend(part.records);
            report.unsat_detected |= part.unsat_detected;
        }
        if config.passes.table() && !report.unsat_detected {
            let (next, part) = table_pass_inner(current, config)?;
            current = next;
            accepted += part.stats.accepted;
            report.table_pass.absorb(&part.stats);
            report.records.extend(part.records);
        }
        if accepted == 0 {
            break;
        }
    }
    report.output_size = current.size();
    Ok((current, report))
}
