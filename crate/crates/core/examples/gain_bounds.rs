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

//! Tabulate when each rewrite can pay off.
//!
//! ```text
//! cargo run --example gain_bounds
//! ```

use tabcomp::graph::{cgr_gain_bound, cgr_profitable};
use tabcomp::table::{mrr_gain_bound, mrr_profitable};

fn main() {
    println!("CGR: smallest number of constraints k sharing n variables that guarantees a gain");
    for n in 1..=6u64 {
        match (1..=10).find(|&k| cgr_profitable(n, k)) {
            Some(k) => println!("  n={n}: k >= {k} (bound at p=10, k={k}: {})", cgr_gain_bound(n, 10, k)),
            None => println!("  n={n}: never"),
        }
    }

    let p = 10;
    println!("\nMRR on a {p}-tuple table: smallest support k for an n-value pattern");
    for n in 1..=6u64 {
        match (1..=p).find(|&k| mrr_profitable(n, p, k)) {
            Some(k) => println!("  n={n}: k >= {k} (bound {})", mrr_gain_bound(n, p, k)),
            None => println!("  n={n}: never"),
        }
    }
}
