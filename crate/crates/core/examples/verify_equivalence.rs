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

//! Enumerate solutions before and after compression and compare them on
//! the original variables.
//!
//! ```text
//! cargo run --example verify_equivalence
//! ```

use tabcomp::pipeline::{compress, CompressionConfig};
use tabcomp::samples::overlapping_ternary;
use tabcomp::verify::{check_preservation, solve_all, SolveOptions};

fn main() {
    let p = overlapping_ternary();
    let (q, _) = compress(&p, &CompressionConfig::default()).expect("compression");
    let opts = SolveOptions::default();

    println!("original:");
    for s in solve_all(&p, &opts).expect("small instance") {
        println!("  {s}");
    }
    println!("compressed:");
    for s in solve_all(&q, &opts).expect("small instance") {
        println!("  {s}");
    }

    let vars = p.variables().cloned().collect();
    let result = check_preservation(&p, &q, &vars, &opts).expect("small instances");
    println!(
        "{} ({} vs {} solutions)",
        result.verdict, result.original_solutions, result.compressed_solutions
    );
}
