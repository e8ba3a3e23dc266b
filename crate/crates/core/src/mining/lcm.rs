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

//! Closed itemset enumeration by prefix-preserving closure extension.
//!
//! Items are renumbered densely in ascending order. Starting from the
//! closure of the empty set, each closed set `P` with core index `c` is
//! extended by every item `i > c` not in `P`; the closure `Q` of `P ∪ {i}`
//! is a child of `P` exactly when `Q` and `P` agree on all items below `i`.
//! Every closed frequent set is reached exactly once, with polynomial work
//! between consecutive outputs.

use super::{sort_patterns, MinedPattern, MiningError, PatternKind, TransactionDb};

struct Dense {
    /// Item indices of each transaction, ascending.
    rows: Vec<Vec<usize>>,
    /// Transaction indices containing each item, ascending.
    occurrences: Vec<Vec<usize>>,
}

impl Dense {
    fn build<I: Ord + Clone>(db: &TransactionDb<I>) -> (Vec<I>, Dense) {
        let items: Vec<I> = db.alphabet().iter().cloned().collect();
        let mut occurrences = vec![Vec::new(); items.len()];
        let rows = db
            .transactions()
            .iter()
            .enumerate()
            .map(|(row, t)| {
                t.items
                    .iter()
                    .map(|item| {
                        let idx = items.binary_search(item).expect("item in alphabet");
                        occurrences[idx].push(row);
                        idx
                    })
                    .collect()
            })
            .collect();
        (items, Dense { rows, occurrences })
    }

    /// Items shared by every listed transaction.
    fn closure(&self, tids: &[usize], counts: &mut [usize]) -> Vec<usize> {
        counts.iter_mut().for_each(|c| *c = 0);
        for &t in tids {
            for &i in &self.rows[t] {
                counts[i] += 1;
            }
        }
        counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == tids.len())
            .map(|(i, _)| i)
            .collect()
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

struct ClosedMiner<'a> {
    dense: &'a Dense,
    min_support: usize,
    counts: Vec<usize>,
    out: Vec<(Vec<usize>, Vec<usize>)>,
}

impl ClosedMiner<'_> {
    fn expand(&mut self, closed: Vec<usize>, tids: Vec<usize>, core: Option<usize>) {
        let start = core.map_or(0, |c| c + 1);
        for i in start..self.dense.occurrences.len() {
            if closed.binary_search(&i).is_ok() {
                continue;
            }
            let ext = intersect(&tids, &self.dense.occurrences[i]);
            if ext.len() < self.min_support {
                continue;
            }
            let candidate = self.dense.closure(&ext, &mut self.counts);
            let keeps_prefix = candidate
                .iter()
                .take_while(|&&x| x < i)
                .eq(closed.iter().take_while(|&&x| x < i));
            if keeps_prefix {
                self.out.push((candidate.clone(), ext.clone()));
                self.expand(candidate, ext, Some(i));
            }
        }
    }
}

fn closed_dense(dense: &Dense, n_rows: usize, min_support: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    if n_rows < min_support {
        return Vec::new();
    }
    let mut miner = ClosedMiner {
        dense,
        min_support,
        counts: vec![0; dense.occurrences.len()],
        out: Vec::new(),
    };
    let all: Vec<usize> = (0..n_rows).collect();
    let root = dense.closure(&all, &mut miner.counts);
    if !root.is_empty() {
        miner.out.push((root.clone(), all.clone()));
    }
    miner.expand(root, all, None);
    miner.out
}

fn frequent_dense(dense: &Dense, n_rows: usize, min_support: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn grow(
        dense: &Dense,
        min_support: usize,
        prefix: &mut Vec<usize>,
        tids: &[usize],
        start: usize,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        for i in start..dense.occurrences.len() {
            let ext = intersect(tids, &dense.occurrences[i]);
            if ext.len() < min_support {
                continue;
            }
            prefix.push(i);
            out.push((prefix.clone(), ext.clone()));
            grow(dense, min_support, prefix, &ext, i + 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n_rows >= min_support {
        let all: Vec<usize> = (0..n_rows).collect();
        grow(dense, min_support, &mut Vec::new(), &all, 0, &mut out);
    }
    out
}

fn is_strict_subset(small: &[usize], big: &[usize]) -> bool {
    small.len() < big.len() && small.iter().all(|x| big.binary_search(x).is_ok())
}

/// All non-empty itemsets of the requested kind with support at least
/// `min_support`, sorted by support, then size (both descending), then items.
pub fn mine<I: Ord + Clone>(
    db: &TransactionDb<I>,
    min_support: usize,
    kind: PatternKind,
) -> Result<Vec<MinedPattern<I>>, MiningError> {
    if min_support == 0 {
        return Err(MiningError::ZeroSupport);
    }
    let (items, dense) = Dense::build(db);
    let n_rows = db.len();
    let raw = match kind {
        PatternKind::Frequent => frequent_dense(&dense, n_rows, min_support),
        PatternKind::Closed => closed_dense(&dense, n_rows, min_support),
        PatternKind::Maximal => {
            // every frequent superset has a closed frequent superset (its closure)
            let closed = closed_dense(&dense, n_rows, min_support);
            closed
                .iter()
                .filter(|(p, _)| !closed.iter().any(|(q, _)| is_strict_subset(p, q)))
                .cloned()
                .collect()
        }
    };
    let transactions = db.transactions();
    let mut patterns: Vec<MinedPattern<I>> = raw
        .into_iter()
        .map(|(set, tids)| MinedPattern {
            items: set.iter().map(|&i| items[i].clone()).collect(),
            support: tids.len(),
            cover: tids.iter().map(|&t| transactions[t].tid.clone()).collect(),
            kind,
        })
        .collect();
    sort_patterns(&mut patterns);
    Ok(patterns)
}
