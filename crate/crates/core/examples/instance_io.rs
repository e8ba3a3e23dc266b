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

//! Read a JSON instance (or use a built-in one), print its shape and write
//! it back in canonical form.
//!
//! ```text
//! cargo run --example instance_io -- data/overlapping_ternary.json
//! cargo run --example instance_io -- quaternary > table.json
//! ```

use std::fs;

use tabcomp::io::{parse_instance, serialize_instance};
use tabcomp::samples::{overlapping_ternary, quaternary_table};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "overlapping".into());
    let network = match arg.as_str() {
        "overlapping" => overlapping_ternary(),
        "quaternary" => quaternary_table(),
        path => {
            let text = fs::read_to_string(path).unwrap_or_else(|e| panic!("{path}: {e}"));
            let loaded = parse_instance(&text).unwrap_or_else(|e| panic!("{path}: {e}"));
            if loaded.duplicate_tuples > 0 {
                eprintln!("merged {} duplicate tuple(s)", loaded.duplicate_tuples);
            }
            loaded.network
        }
    };
    eprintln!(
        "{} variables, {} constraints, size {}",
        network.num_variables(),
        network.constraints().len(),
        network.size()
    );
    print!("{}", serialize_instance(&network));
}
