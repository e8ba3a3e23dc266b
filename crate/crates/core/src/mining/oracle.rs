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

//! Exhaustive itemset enumeration used as a reference for [`super::mine`].
//!
//! Every subset of the alphabet is checked directly against the definitions
//! of frequent, closed and maximal itemsets. Exponential in the alphabet size.

use super::{sort_patterns, MinedPattern, MiningError, PatternKind, TransactionDb};

pub const ORACLE_DEFAULT_MAX_ITEMS: usize = 20;

/// Same contract as [`super::mine`], restricted to alphabets of at most
/// `max_items` items.
pub fn oracle_mine<I: Ord + Clone>(
    db: &TransactionDb<I>,
    min_support: usize,
    kind: PatternKind,
    max_items: usize,
) -> Result<Vec<MinedPattern<I>>, MiningError> {
    let items: Vec<I> = db.alphabet().iter().cloned().collect();
    if items.len() > max_items.min(63) {
        return Err(MiningError::AlphabetTooLarge {
            size: items.len(),
            bound: max_items.min(63),
        });
    }
    if min_support == 0 {
        return Err(MiningError::ZeroSupport);
    }
    let masks: Vec<u64> = db
        .transactions()
        .iter()
        .map(|t| {
            items
                .iter()
                .enumerate()
                .filter(|(_, item)| t.items.contains(item))
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect();

    // (itemset mask, covering transaction indices)
    let frequent: Vec<(u64, Vec<usize>)> = (1u64..(1u64 << items.len()))
        .filter_map(|set| {
            let cover: Vec<usize> = masks
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m & set == set)
                .map(|(t, _)| t)
                .collect();
            (cover.len() >= min_support).then_some((set, cover))
        })
        .collect();

    let strict_superset = |big: u64, small: u64| big != small && big & small == small;
    let selected: Vec<&(u64, Vec<usize>)> = frequent
        .iter()
        .filter(|(set, cover)| match kind {
            PatternKind::Frequent => true,
            PatternKind::Closed => !frequent
                .iter()
                .any(|(other, oc)| strict_superset(*other, *set) && oc == cover),
            PatternKind::Maximal => !frequent.iter().any(|(other, _)| strict_superset(*other, *set)),
        })
        .collect();

    let transactions = db.transactions();
    let mut patterns: Vec<MinedPattern<I>> = selected
        .into_iter()
        .map(|(set, cover)| MinedPattern {
            items: (0..items.len())
                .filter(|i| set & (1 << i) != 0)
                .map(|i| items[i].clone())
                .collect(),
            support: cover.len(),
            cover: cover.iter().map(|&t| transactions[t].tid.clone()).collect(),
            kind,
        })
        .collect();
    sort_patterns(&mut patterns);
    Ok(patterns)
}
