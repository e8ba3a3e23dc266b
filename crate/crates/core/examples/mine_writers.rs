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

//! Mine the favourite-writers database.
//!
//! ```text
//! cargo run --example mine_writers -- 2
//! ```

use tabcomp::mining::{frequency, mine, support, PatternKind};
use tabcomp::samples::favorite_writers;

fn main() {
    let min_support: usize = std::env::args()
        .nth(1)
        .map_or(2, |s| s.parse().expect("integer support"));
    let db = favorite_writers();
    print!("{db}");

    for kind in [PatternKind::Frequent, PatternKind::Closed, PatternKind::Maximal] {
        println!("\n{kind} itemsets at support >= {min_support}:");
        for p in mine(&db, min_support, kind).expect("mining") {
            let cover: Vec<String> = p.cover.iter().map(|t| t.to_string()).collect();
            println!(
                "  {{{}}} support={} cover={{{}}}",
                p.items.join(", "),
                p.support,
                cover.join(" ")
            );
        }
    }

    let pair: std::collections::BTreeSet<String> = ["Hemingway", "Melville"].map(String::from).into();
    println!(
        "\nS(Hemingway, Melville) = {}, F = {}",
        support(&pair, &db),
        frequency(&pair, &db).expect("non-empty database")
    );
}
