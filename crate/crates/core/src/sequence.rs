//! The A006012 recurrence `a_n = 4 a_{n-1} - 2 a_{n-2}` in arbitrary
//! precision, and comparison of indexed sequence tables.
//!
//! Paper indexing starts `a_1 = 1, a_2 = 2`; OEIS indexing starts
//! `a_0 = 1, a_1 = 2`. The values are the same, shifted by one index.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::SequenceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffsetMode {
    /// First index 1.
    Paper,
    /// First index 0.
    Oeis,
}

impl OffsetMode {
    pub fn first_index(self) -> i64 {
        match self {
            OffsetMode::Paper => 1,
            OffsetMode::Oeis => 0,
        }
    }
}

/// Terms indexed `offset, offset + 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    offset: i64,
    terms: Vec<BigUint>,
}

impl SequenceTable {
    pub fn new(offset: i64, terms: Vec<BigUint>) -> Result<Self, SequenceError> {
        if terms.is_empty() {
            return Err(SequenceError::Empty);
        }
        Ok(SequenceTable { offset, terms })
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Last index.
    pub fn end(&self) -> i64 {
        self.offset + self.terms.len() as i64 - 1
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&BigUint> {
        let i = usize::try_from(index.checked_sub(self.offset)?).ok()?;
        self.terms.get(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigUint)> {
        (self.offset..).zip(self.terms.iter())
    }
}

pub fn recurrence_terms(count: usize, mode: OffsetMode) -> Result<SequenceTable, SequenceError> {
    let mut terms: Vec<BigUint> = Vec::with_capacity(count);
    for i in 0..count {
        let next = match i {
            0 => BigUint::one(),
            1 => BigUint::from(2u32),
            // 4x - 2y stays nonnegative: the terms at least double each step
            _ => (&terms[i - 1] << 2u32) - (&terms[i - 2] << 1u32),
        };
        terms.push(next);
    }
    SequenceTable::new(mode.first_index(), terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexComparison {
    pub index: i64,
    pub computed: BigUint,
    pub reference: BigUint,
}

impl IndexComparison {
    pub fn matches(&self) -> bool {
        self.computed == self.reference
    }
}

/// Per-index comparison over the overlap of two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub first: i64,
    pub last: i64,
    pub entries: Vec<IndexComparison>,
}

impl ComparisonReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(IndexComparison::matches)
    }

    pub fn first_mismatch(&self) -> Option<&IndexComparison> {
        self.entries.iter().find(|c| !c.matches())
    }

    pub fn mismatched_indices(&self) -> Vec<i64> {
        self.entries
            .iter()
            .filter(|c| !c.matches())
            .map(|c| c.index)
            .collect()
    }
}

pub fn compare_tables(
    computed: &SequenceTable,
    reference: &SequenceTable,
) -> Result<ComparisonReport, SequenceError> {
    let first = computed.offset().max(reference.offset());
    let last = computed.end().min(reference.end());
    if first > last {
        return Err(SequenceError::DisjointRanges {
            computed: (computed.offset(), computed.end()),
            reference: (reference.offset(), reference.end()),
        });
    }
    let entries = (first..=last)
        .map(|index| IndexComparison {
            index,
            computed: computed.get(index).expect("in range").clone(),
            reference: reference.get(index).expect("in range").clone(),
        })
        .collect();
    Ok(ComparisonReport {
        first,
        last,
        entries,
    })
}
