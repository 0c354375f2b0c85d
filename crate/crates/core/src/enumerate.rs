//! Brute-force enumeration of `Av_n(S)`.
//!
//! Hosts are visited in lexicographic order with an in-place successor
//! step. The scan splits by first value, so `first = 1, 2, ..., n` are
//! independent partitions whose outputs concatenate into sorted order.
//!
//! Levels are stored packed: a permutation of length `n <= 16` is a
//! `u64` with four bits per value, first value most significant, so
//! numeric order on codes is lexicographic order on permutations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::EnumerateError;
use crate::matcher::avoids_all_values;
use crate::pattern::PatternSet;
use crate::perm::{next_lexicographic, Permutation};

pub const DEFAULT_CUTOFF: usize = 10;
pub const MAX_LEVEL_LEN: usize = 16;

pub fn pack(values: &[u32]) -> u64 {
    debug_assert!(values.len() <= MAX_LEVEL_LEN);
    values
        .iter()
        .fold(0u64, |code, &v| (code << 4) | u64::from(v - 1))
}

pub fn unpack(code: u64, n: usize) -> Vec<u32> {
    (0..n)
        .rev()
        .map(|i| ((code >> (4 * i)) & 0xf) as u32 + 1)
        .collect()
}

/// The sorted, duplicate-free members of `Av_n(S)` for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoiderLevel {
    n: usize,
    set_name: String,
    codes: Vec<u64>,
}

impl AvoiderLevel {
    /// Builds a level from packed codes, sorting and deduplicating.
    pub fn from_codes(
        n: usize,
        set_name: impl Into<String>,
        mut codes: Vec<u64>,
    ) -> Result<Self, EnumerateError> {
        if n > MAX_LEVEL_LEN {
            return Err(EnumerateError::TooLong(n));
        }
        codes.sort_unstable();
        codes.dedup();
        Ok(AvoiderLevel {
            n,
            set_name: set_name.into(),
            codes,
        })
    }

    pub fn from_permutations<I>(
        n: usize,
        set_name: impl Into<String>,
        members: I,
    ) -> Result<Self, EnumerateError>
    where
        I: IntoIterator<Item = Permutation>,
    {
        if n > MAX_LEVEL_LEN {
            return Err(EnumerateError::TooLong(n));
        }
        let codes = members
            .into_iter()
            .map(|p| {
                if p.len() == n {
                    Ok(pack(p.values()))
                } else {
                    Err(EnumerateError::LengthMismatch {
                        expected: n,
                        got: p.len(),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_codes(n, set_name, codes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_name(&self) -> &str {
        &self.set_name
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Permutation> + '_ {
        self.codes
            .iter()
            .map(move |&c| Permutation::from_values_unchecked(unpack(c, self.n)))
    }

    pub fn members(&self) -> Vec<Permutation> {
        self.iter().collect()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.len() == self.n && self.codes.binary_search(&pack(p.values())).is_ok()
    }

    /// Same length and members, ignoring the set name.
    pub fn same_members(&self, other: &AvoiderLevel) -> bool {
        self.n == other.n && self.codes == other.codes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Largest n accepted, guarding against factorial blowup.
    pub cutoff: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            cutoff: DEFAULT_CUTOFF,
        }
    }
}

impl EnumerateOptions {
    pub fn check(&self, n: usize) -> Result<(), EnumerateError> {
        if n > self.cutoff {
            return Err(EnumerateError::CutoffExceeded {
                n,
                cutoff: self.cutoff,
            });
        }
        Ok(())
    }
}

/// Visits, in lexicographic order, every permutation of length `n`
/// whose first value is `first`.
pub fn for_each_with_first<F>(n: usize, first: u32, mut visit: F) -> Result<(), EnumerateError>
where
    F: FnMut(&[u32]),
{
    if first == 0 || first as usize > n {
        return Err(EnumerateError::BadPrefix { first, n });
    }
    let mut buf: Vec<u32> = core::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        visit(&buf);
        if !next_lexicographic(&mut buf[1..]) {
            return Ok(());
        }
    }
}

/// Packed avoiders of length `n` starting with `first`, sorted.
pub fn avoiders_with_first(
    n: usize,
    set: &PatternSet,
    first: u32,
) -> Result<Vec<u64>, EnumerateError> {
    if n > MAX_LEVEL_LEN {
        return Err(EnumerateError::TooLong(n));
    }
    let mut codes = Vec::new();
    for_each_with_first(n, first, |host| {
        if avoids_all_values(host, set) {
            codes.push(pack(host));
        }
    })?;
    Ok(codes)
}

pub fn count_with_first(n: usize, set: &PatternSet, first: u32) -> Result<u64, EnumerateError> {
    let mut count = 0;
    for_each_with_first(n, first, |host| {
        if avoids_all_values(host, set) {
            count += 1;
        }
    })?;
    Ok(count)
}

pub fn enumerate_avoiders(n: usize, set: &PatternSet) -> Result<AvoiderLevel, EnumerateError> {
    enumerate_avoiders_with(n, set, &EnumerateOptions::default())
}

pub fn enumerate_avoiders_with(
    n: usize,
    set: &PatternSet,
    options: &EnumerateOptions,
) -> Result<AvoiderLevel, EnumerateError> {
    options.check(n)?;
    if n > MAX_LEVEL_LEN {
        return Err(EnumerateError::TooLong(n));
    }
    if n == 0 {
        return AvoiderLevel::from_codes(0, set.name(), alloc::vec![0]);
    }
    let mut codes = Vec::new();
    for first in 1..=n as u32 {
        codes.extend(avoiders_with_first(n, set, first)?);
    }
    AvoiderLevel::from_codes(n, set.name(), codes)
}

pub fn count_avoiders(n: usize, set: &PatternSet) -> Result<u64, EnumerateError> {
    count_avoiders_with(n, set, &EnumerateOptions::default())
}

pub fn count_avoiders_with(
    n: usize,
    set: &PatternSet,
    options: &EnumerateOptions,
) -> Result<u64, EnumerateError> {
    options.check(n)?;
    if n == 0 {
        return Ok(1);
    }
    (1..=n as u32)
        .map(|first| count_with_first(n, set, first))
        .sum()
}
