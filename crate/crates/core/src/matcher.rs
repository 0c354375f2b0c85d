//! The occurrence engine.
//!
//! A pattern is split into maximal glued blocks. Blocks are placed left
//! to right over windows of consecutive host positions; each letter is
//! checked against its nearest-valued earlier letters as soon as it is
//! placed, so a partial placement that already breaks the relative
//! order is abandoned. Occurrences come out in lexicographic order of
//! their position tuples.

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::error::PositionError;
use crate::pattern::{PatternSet, VincularPattern, MAX_PATTERN_LEN};
use crate::perm::Permutation;

/// Strictly increasing 1-based positions into a host permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    positions: Vec<usize>,
}

impl Occurrence {
    pub fn new(positions: Vec<usize>) -> Result<Self, PositionError> {
        if positions.first() == Some(&0) {
            return Err(PositionError::OutOfRange {
                position: 0,
                len: 0,
            });
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PositionError::NotIncreasing);
        }
        Ok(Occurrence { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Host values at the occurrence's positions.
    pub fn values_in(&self, host: &Permutation) -> Result<Vec<u32>, PositionError> {
        self.check_range(host.len())?;
        Ok(self
            .positions
            .iter()
            .map(|&p| host.values()[p - 1])
            .collect())
    }

    pub(crate) fn check_range(&self, len: usize) -> Result<(), PositionError> {
        match self.positions.last() {
            Some(&p) if p > len => Err(PositionError::OutOfRange { position: p, len }),
            _ => Ok(()),
        }
    }

    /// Positions as a fixed quadruple, for the length-4 characterizations.
    pub(crate) fn quadruple(&self, host_len: usize) -> Result<[usize; 4], PositionError> {
        let q: [usize; 4] =
            self.positions
                .as_slice()
                .try_into()
                .map_err(|_| PositionError::WrongLength {
                    expected: 4,
                    got: self.positions.len(),
                })?;
        self.check_range(host_len)?;
        Ok(q)
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Drives `visit` over every occurrence of `pattern` in `host`, with
/// 0-based positions, until it breaks.
pub fn for_each_occurrence<F>(
    host: &[u32],
    pattern: &VincularPattern,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = pattern.len();
    if host.len() < k {
        return ControlFlow::Continue(());
    }
    let mut positions = [0usize; MAX_PATTERN_LEN];
    place_block(host, pattern, 0, 0, &mut positions, &mut visit)
}

fn place_block<F>(
    host: &[u32],
    pattern: &VincularPattern,
    block: usize,
    min_start: usize,
    positions: &mut [usize; MAX_PATTERN_LEN],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = pattern.len();
    let Some(&(first, len)) = pattern.blocks().get(block) else {
        return visit(&positions[..k]);
    };
    // letters first..k still need k - first distinct positions
    let last_start = host.len() - (k - first);
    for start in min_start..=last_start {
        let mut fits = true;
        for offset in 0..len {
            let letter = first + offset;
            let value = host[start + offset];
            positions[letter] = start + offset;
            if let Some(j) = pattern.neighbour_below(letter) {
                if host[positions[j]] > value {
                    fits = false;
                    break;
                }
            }
            if let Some(j) = pattern.neighbour_above(letter) {
                if host[positions[j]] < value {
                    fits = false;
                    break;
                }
            }
        }
        if fits {
            place_block(host, pattern, block + 1, start + len, positions, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// Every occurrence of `pattern` in `host`, sorted lexicographically.
pub fn find_occurrences(host: &Permutation, pattern: &VincularPattern) -> Vec<Occurrence> {
    let mut found = Vec::new();
    let _ = for_each_occurrence(host.values(), pattern, |pos| {
        found.push(Occurrence {
            positions: pos.iter().map(|p| p + 1).collect(),
        });
        ControlFlow::Continue(())
    });
    found
}

/// The lexicographically first occurrence, if any.
pub fn first_occurrence(host: &Permutation, pattern: &VincularPattern) -> Option<Occurrence> {
    let mut found = None;
    let _ = for_each_occurrence(host.values(), pattern, |pos| {
        found = Some(Occurrence {
            positions: pos.iter().map(|p| p + 1).collect(),
        });
        ControlFlow::Break(())
    });
    found
}

pub fn contains(host: &Permutation, pattern: &VincularPattern) -> bool {
    contains_values(host.values(), pattern)
}

/// [`contains`] over a raw one-line slice.
pub fn contains_values(host: &[u32], pattern: &VincularPattern) -> bool {
    for_each_occurrence(host, pattern, |_| ControlFlow::Break(())).is_break()
}

pub fn avoids_all(host: &Permutation, set: &PatternSet) -> bool {
    avoids_all_values(host.values(), set)
}

pub fn avoids_all_values(host: &[u32], set: &PatternSet) -> bool {
    set.iter().all(|p| !contains_values(host, p))
}
