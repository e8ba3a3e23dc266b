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

use std::collections::BTreeSet;

use proptest::collection::{btree_set, vec};
use proptest::prelude::*;

use tabcomp::mining::{cover, mine, oracle_mine, support, MinedPattern, PatternKind, Tid, TransactionDb};

fn db_strategy() -> impl Strategy<Value = TransactionDb<u8>> {
    vec(btree_set(0u8..8, 0..8), 0..12).prop_map(|rows| {
        TransactionDb::new(
            rows.into_iter()
                .enumerate()
                .map(|(i, r)| (Tid::new(format!("{i:03}")), r)),
        )
        .unwrap()
    })
}

fn sets(patterns: &[MinedPattern<u8>]) -> BTreeSet<BTreeSet<u8>> {
    patterns.iter().map(|p| p.items.iter().copied().collect()).collect()
}

proptest! {
    #[test]
    fn lcm_matches_oracle(db in db_strategy(), min_support in 1usize..5) {
        for kind in [PatternKind::Frequent, PatternKind::Closed, PatternKind::Maximal] {
            let fast = mine(&db, min_support, kind).unwrap();
            let slow = oracle_mine(&db, min_support, kind, 20).unwrap();
            prop_assert_eq!(fast, slow);
        }
    }

    #[test]
    fn families_nest(db in db_strategy(), min_support in 1usize..5) {
        let fim = sets(&mine(&db, min_support, PatternKind::Frequent).unwrap());
        let clo = sets(&mine(&db, min_support, PatternKind::Closed).unwrap());
        let max = sets(&mine(&db, min_support, PatternKind::Maximal).unwrap());
        prop_assert!(max.is_subset(&clo));
        prop_assert!(clo.is_subset(&fim));
        for f in &fim {
            prop_assert!(max.iter().any(|m| f.is_subset(m)));
        }
    }

    #[test]
    fn closed_sets_have_no_equal_cover_superset(db in db_strategy(), min_support in 1usize..4) {
        let alphabet: Vec<u8> = db.alphabet().iter().copied().collect();
        for p in mine(&db, min_support, PatternKind::Closed).unwrap() {
            let base: BTreeSet<u8> = p.items.iter().copied().collect();
            let c = cover(&base, &db);
            prop_assert_eq!(c.len(), p.support);
            prop_assert_eq!(c, p.cover.iter().cloned().collect::<BTreeSet<_>>());
            for &extra in alphabet.iter().filter(|i| !base.contains(i)) {
                let mut bigger = base.clone();
                bigger.insert(extra);
                prop_assert_ne!(cover(&bigger, &db), cover(&base, &db));
            }
        }
    }

    #[test]
    fn support_is_antimonotone(db in db_strategy(), small in btree_set(0u8..8, 0..4), more in btree_set(0u8..8, 0..4)) {
        let big: BTreeSet<u8> = small.union(&more).copied().collect();
        prop_assert!(support(&small, &db) >= support(&big, &db));
    }

    #[test]
    fn cover_of_union_is_intersection(db in db_strategy(), i in btree_set(0u8..8, 0..4), j in btree_set(0u8..8, 0..4)) {
        let union: BTreeSet<u8> = i.union(&j).copied().collect();
        let expected: BTreeSet<Tid> = cover(&i, &db).intersection(&cover(&j, &db)).cloned().collect();
        prop_assert_eq!(cover(&union, &db), expected);
    }

    #[test]
    fn patterns_meet_threshold(db in db_strategy(), min_support in 1usize..5) {
        for kind in [PatternKind::Frequent, PatternKind::Closed, PatternKind::Maximal] {
            for p in mine(&db, min_support, kind).unwrap() {
                prop_assert!(p.support >= min_support);
                prop_assert_eq!(p.support, p.cover.len());
                prop_assert!(!p.items.is_empty());
                prop_assert_eq!(p.kind, kind);
            }
        }
    }
}

#[test]
fn frequent_sets_are_subsets_of_closed_writers() {
    let db = tabcomp::samples::favorite_writers();
    let clo: Vec<BTreeSet<String>> = mine(&db, 2, PatternKind::Closed)
        .unwrap()
        .into_iter()
        .map(|p| p.items.into_iter().collect())
        .collect();
    let mut expected = BTreeSet::new();
    for c in &clo {
        let items: Vec<&String> = c.iter().collect();
        for mask in 1u32..(1 << items.len()) {
            let subset: BTreeSet<String> = (0..items.len())
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| items[b].clone())
                .collect();
            expected.insert(subset);
        }
    }
    let fim: BTreeSet<BTreeSet<String>> = mine(&db, 2, PatternKind::Frequent)
        .unwrap()
        .into_iter()
        .map(|p| p.items.into_iter().collect())
        .collect();
    assert_eq!(fim, expected);
}

#[test]
fn output_order_is_support_size_lex() {
    let db = tabcomp::samples::favorite_writers();
    let got = mine(&db, 1, PatternKind::Closed).unwrap();
    for w in got.windows(2) {
        let key = |p: &MinedPattern<String>| {
            (
                std::cmp::Reverse(p.support),
                std::cmp::Reverse(p.items.len()),
                p.items.clone(),
            )
        };
        assert!(key(&w[0]) < key(&w[1]));
    }
}
