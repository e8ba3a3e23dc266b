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

//! Transaction databases and frequent / closed / maximal itemset mining.
//!
//! Items can be any totally ordered type. The constraint graph encoding uses
//! variables as items and the microstructure encoding uses position-indexed
//! values.

mod lcm;
pub mod oracle;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use lcm::mine;
pub use oracle::{oracle_mine, ORACLE_DEFAULT_MAX_ITEMS};

/// Transaction identifier.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tid(String);

impl Tid {
    pub fn new(tid: impl Into<String>) -> Self {
        Self(tid.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Tid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Tid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Tid {
    fn from(s: &str) -> Self {
        Self(s.to_owned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transaction<I> {
    pub tid: Tid,
    pub items: BTreeSet<I>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MiningError {
    #[error("transaction id {0} used twice")]
    DuplicateTid(Tid),
    #[error("transaction {0} contains items outside the alphabet")]
    ItemOutsideAlphabet(Tid),
    #[error("frequency is undefined on an empty database")]
    EmptyDatabase,
    #[error("minimum support must be at least 1")]
    ZeroSupport,
    #[error("alphabet has {size} items, oracle bound is {bound}")]
    AlphabetTooLarge { size: usize, bound: usize },
}

/// A finite set of transactions with unique tids over an item alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransactionDb<I> {
    transactions: Vec<Transaction<I>>,
    alphabet: BTreeSet<I>,
}

impl<I: Ord + Clone> TransactionDb<I> {
    /// Builds a database whose alphabet is the union of its transactions.
    pub fn new<T, S>(transactions: T) -> Result<Self, MiningError>
    where
        T: IntoIterator<Item = (Tid, S)>,
        S: IntoIterator<Item = I>,
    {
        let transactions: Vec<Transaction<I>> = transactions
            .into_iter()
            .map(|(tid, items)| Transaction {
                tid,
                items: items.into_iter().collect(),
            })
            .collect();
        let alphabet = transactions.iter().flat_map(|t| t.items.iter().cloned()).collect();
        Self::with_alphabet(transactions, alphabet)
    }

    pub fn with_alphabet(transactions: Vec<Transaction<I>>, alphabet: BTreeSet<I>) -> Result<Self, MiningError> {
        let mut tids = BTreeSet::new();
        for t in &transactions {
            if !tids.insert(&t.tid) {
                return Err(MiningError::DuplicateTid(t.tid.clone()));
            }
            if !t.items.is_subset(&alphabet) {
                return Err(MiningError::ItemOutsideAlphabet(t.tid.clone()));
            }
        }
        Ok(Self { transactions, alphabet })
    }
}

impl<I> TransactionDb<I> {
    pub fn transactions(&self) -> &[Transaction<I>] {
        &self.transactions
    }

    pub fn alphabet(&self) -> &BTreeSet<I> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }
}

impl<I: fmt::Display> fmt::Display for TransactionDb<I> {
    /// One line per transaction: `tid: item item item`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.transactions {
            write!(f, "{}:", t.tid)?;
            for item in &t.items {
                write!(f, " {item}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Which family of itemsets to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    Frequent,
    Closed,
    Maximal,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::Frequent => "frequent",
            PatternKind::Closed => "closed",
            PatternKind::Maximal => "maximal",
        })
    }
}

/// A mined itemset with its cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinedPattern<I> {
    /// Items in ascending order.
    pub items: Vec<I>,
    pub support: usize,
    /// Covering tids, in database order.
    pub cover: Vec<Tid>,
    pub kind: PatternKind,
}

/// Tids of the transactions containing every item of `itemset`.
pub fn cover<I: Ord>(itemset: &BTreeSet<I>, db: &TransactionDb<I>) -> BTreeSet<Tid> {
    db.transactions
        .iter()
        .filter(|t| itemset.is_subset(&t.items))
        .map(|t| t.tid.clone())
        .collect()
}

pub fn support<I: Ord>(itemset: &BTreeSet<I>, db: &TransactionDb<I>) -> usize {
    db.transactions.iter().filter(|t| itemset.is_subset(&t.items)).count()
}

/// Support divided by database size, as an exact fraction.
pub fn frequency<I: Ord>(itemset: &BTreeSet<I>, db: &TransactionDb<I>) -> Result<Ratio<usize>, MiningError> {
    if db.is_empty() {
        return Err(MiningError::EmptyDatabase);
    }
    Ok(Ratio::new(support(itemset, db), db.len()))
}

/// Support descending, then size descending, then items ascending.
pub(crate) fn sort_patterns<I: Ord>(patterns: &mut [MinedPattern<I>]) {
    patterns.sort_by(|a, b| {
        b.support
            .cmp(&a.support)
            .then(b.items.len().cmp(&a.items.len()))
            .then_with(|| a.items.cmp(&b.items))
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::favorite_writers;

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    fn tids(ids: &[&str]) -> BTreeSet<Tid> {
        ids.iter().map(|&s| Tid::from(s)).collect()
    }

    #[test]
    fn cover_and_support_on_writers() {
        let db = favorite_writers();
        assert_eq!(cover(&set(&["Hemingway", "Melville"]), &db), tids(&["002", "004"]));
        assert_eq!(cover(&set(&["Hemingway"]), &db), tids(&["002", "004", "006"]));
        assert_eq!(cover(&set(&[]), &db).len(), 6);
        assert_eq!(support(&set(&["Hemingway", "Melville"]), &db), 2);
        assert_eq!(support(&set(&[]), &db), 6);
        assert_eq!(support(&set(&["Flaubert", "Joyce"]), &db), 0);
        assert_eq!(support(&set(&["Tolstoy"]), &db), 0);
    }

    #[test]
    fn frequency_is_exact() {
        let db = favorite_writers();
        assert_eq!(
            frequency(&set(&["Hemingway", "Melville"]), &db).unwrap(),
            Ratio::new(1, 3)
        );
        assert_eq!(frequency(&set(&[]), &db).unwrap(), Ratio::from_integer(1));
        assert_eq!(frequency(&set(&["Joyce", "Proust"]), &db).unwrap(), Ratio::new(1, 3));
        let empty: TransactionDb<String> = TransactionDb::new(Vec::<(Tid, Vec<String>)>::new()).unwrap();
        assert_eq!(frequency(&set(&[]), &empty), Err(MiningError::EmptyDatabase));
    }

    #[test]
    fn duplicate_tids_are_rejected() {
        let err = TransactionDb::new(vec![(Tid::from("1"), vec!["a"]), (Tid::from("1"), vec!["b"])]).unwrap_err();
        assert_eq!(err, MiningError::DuplicateTid(Tid::from("1")));
    }

    #[test]
    fn alphabet_must_cover_items() {
        let t = Transaction {
            tid: Tid::from("1"),
            items: BTreeSet::from(["a", "z"]),
        };
        let err = TransactionDb::with_alphabet(vec![t], BTreeSet::from(["a"])).unwrap_err();
        assert_eq!(err, MiningError::ItemOutsideAlphabet(Tid::from("1")));
    }

    #[test]
    fn debug_dump_format() {
        let db = TransactionDb::new(vec![(Tid::from("t1"), vec!["b", "a"]), (Tid::from("t2"), vec![])]).unwrap();
        assert_eq!(db.to_string(), "t1: a b\nt2:\n");
    }
}
