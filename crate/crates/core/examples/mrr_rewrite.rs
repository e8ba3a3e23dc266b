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

//! Factor two columns of a single table through a fresh variable, and see
//! that the rewrite does not pay off on a table this small.
//!
//! ```text
//! cargo run --example mrr_rewrite
//! ```

use tabcomp::mining::{mine, PatternKind};
use tabcomp::samples::quaternary_table;
use tabcomp::table::{build_constraint_db, mrr_apply, mrr_gain_bound, IndexedItem, MrrCandidate};

fn main() {
    let p = quaternary_table();
    let c = &p.constraints()[0];
    let db = build_constraint_db(c);
    print!("microstructure of {}:\n{db}", c.id());

    println!("\nclosed itemsets at support >= 4:");
    for pat in mine(&db, 4, PatternKind::Closed).expect("mining") {
        let items: Vec<String> = pat.items.iter().map(|i| i.to_string()).collect();
        println!("  {{{}}} support={}", items.join(" "), pat.support);
    }

    let candidate = MrrCandidate::new("c", vec![IndexedItem::new("b", 2), IndexedItem::new("a", 4)]);
    let (q, record) = mrr_apply(&p, &candidate).expect("valid candidate");
    for c in q.constraints() {
        let scope: Vec<&str> = c.scope().iter().map(|v| v.as_str()).collect();
        let tuples: Vec<String> = c.relation().iter().map(|t| t.to_string()).collect();
        println!(
            "{} ({}) size {}: {}",
            c.id(),
            scope.join(", "),
            c.size(),
            tuples.join(" ")
        );
    }
    println!(
        "size {} -> {}, delta {}, bound {}",
        record.size_before,
        record.size_after,
        record.delta(),
        mrr_gain_bound(2, 5, 4)
    );
}
