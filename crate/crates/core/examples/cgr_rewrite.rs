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

//! Factor two shared variables out of a pair of ternary constraints.
//!
//! ```text
//! cargo run --example cgr_rewrite
//! ```

use tabcomp::graph::{build_graph_db, cgr_apply, cgr_gain_bound, CgrCandidate};
use tabcomp::mining::{mine, PatternKind};
use tabcomp::model::{ConstraintId, ConstraintNetwork};
use tabcomp::samples::overlapping_ternary;

fn show(title: &str, network: &ConstraintNetwork) {
    println!("{title} (size {})", network.size());
    for c in network.constraints() {
        let scope: Vec<&str> = c.scope().iter().map(|v| v.as_str()).collect();
        let tuples: Vec<String> = c.relation().iter().map(|t| t.to_string()).collect();
        println!("  {} ({}): {}", c.id(), scope.join(", "), tuples.join(" "));
    }
}

fn main() {
    let p = overlapping_ternary();
    show("input", &p);

    // The constraint graph as a transaction database: one row per constraint.
    let db = build_graph_db(&p);
    print!("\ngraph database:\n{db}");
    let pattern = mine(&db, 2, PatternKind::Closed).expect("mining").remove(0);
    let candidate = CgrCandidate::new(
        pattern.items,
        pattern.cover.iter().map(|t| ConstraintId::new(t.as_str())).collect(),
    );

    let (q, record) = cgr_apply(&p, &candidate).expect("valid candidate");
    println!();
    show("after CGR", &q);
    for m in &record.value_map {
        println!("  {} = f{}", m.value, m.sub_tuple);
    }
    println!(
        "delta {} (bound for p=3 {}), {} tuple(s) dropped",
        record.delta(),
        cgr_gain_bound(2, 3, 2),
        record.dropped_tuples
    );
}
