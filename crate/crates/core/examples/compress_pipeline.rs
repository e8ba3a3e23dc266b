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

//! Run the full pipeline on a table with constant columns and print the
//! JSON report.
//!
//! ```text
//! cargo run --example compress_pipeline
//! cargo run --example compress_pipeline -- prefilter
//! ```

use std::collections::BTreeSet;

use tabcomp::io::serialize_report;
use tabcomp::model::{ConstraintNetwork, TableConstraint, Tuple, Value, VariableId};
use tabcomp::pipeline::{compress, CompressionConfig, GainMode};

fn network() -> ConstraintNetwork {
    let domain: BTreeSet<Value> = ["a", "b", "c", "d"].map(Value::from).into();
    let vars = ["x1", "x2", "x3", "x4"];
    // x1..x3 are fixed to `a`; only x4 varies.
    let tuples = ["a", "b", "c", "d"].map(|v| Tuple::from_strs(&["a", "a", "a", v]));
    ConstraintNetwork::from_parts(
        vars.map(|v| (VariableId::from(v), domain.clone())),
        vec![TableConstraint::new("c1", vars.map(VariableId::from).to_vec(), tuples)],
    )
}

fn main() {
    let mut config = CompressionConfig::default();
    if std::env::args().nth(1).as_deref() == Some("prefilter") {
        config.gain_mode = GainMode::Prefilter;
    }
    let p = network();
    let (q, report) = compress(&p, &config).expect("compression");
    println!("size {} -> {} in {} round(s)", p.size(), q.size(), report.rounds);
    print!("{}", serialize_report(&report));
}
