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

//! Size reduction for constraint networks made of table constraints.
//!
//! Closed frequent itemsets are mined from two encodings of a network. On
//! the constraint graph (one transaction per constraint, items are scope
//! variables) they drive the CGR rule, which factors variables shared by
//! several constraints through a fresh variable. On each table's
//! microstructure (one transaction per tuple, items are position-indexed
//! values) they drive the MRR rule, which factors a group of columns. Both
//! rules keep the set of solutions on the original variables, which the
//! brute-force [`verify`] module checks.
//!
//! ```
//! use tabcomp::pipeline::{compress, CompressionConfig};
//! use tabcomp::samples::overlapping_ternary;
//!
//! let network = overlapping_ternary();
//! let (smaller, report) = compress(&network, &CompressionConfig::default()).unwrap();
//! assert_eq!((report.input_size, smaller.size()), (18, 16));
//! ```

pub mod cli;
pub mod graph;
pub mod io;
pub mod mining;
pub mod model;
pub mod pipeline;
pub mod rewrite;
pub mod samples;
pub mod table;
pub mod verify;

pub use graph::{build_graph_db, cgr_apply, cgr_gain_bound, cgr_profitable, CgrCandidate};
pub use mining::{cover, frequency, mine, oracle_mine, support, MinedPattern, PatternKind, Tid, TransactionDb};
pub use model::{
    concat, is_pairwise_consistent, network_size, project_relation, validate_network, ConstraintId, ConstraintNetwork,
    TableConstraint, Tuple, Value, VariableId, Violation,
};
pub use pipeline::{compress, CompressionConfig, CompressionReport, GainMode, Passes};
pub use rewrite::{RewriteKind, RewriteRecord};
pub use table::{build_constraint_db, indexed, mrr_apply, mrr_gain_bound, mrr_profitable, IndexedItem, MrrCandidate};
pub use verify::{check_preservation, solve_all, Assignment, SolveOptions, Verdict};
