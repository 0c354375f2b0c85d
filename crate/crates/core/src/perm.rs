//! Permutations in one-line notation.
//!
//! Values and positions are 1-based on the public surface. Two text
//! grammars are accepted: the compact digit string (`31542`, only for
//! n <= 9) and comma-separated integers (`10,2,1,3,4,5,6,7,8,9`).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ParseError;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a permutation of `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self, ParseError> {
        if !is_permutation(&values) {
            return Err(ParseError::NotAPermutation(values.len()));
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(is_permutation(&values));
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Ok(Permutation::empty());
        }
        let values = if text.contains(',') {
            parse_comma(text)?
        } else {
            parse_compact(text)?
        };
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// Value at a 1-based position.
    pub fn at(&self, position: usize) -> Option<u32> {
        position
            .checked_sub(1)
            .and_then(|i| self.values.get(i).copied())
    }

    /// 1-based position of `value`.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.values.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Comma grammar, regardless of length.
    pub fn to_comma_string(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&v.to_string());
        }
        out
    }
}

/// Canonical rendering: compact for n <= 9, comma grammar above.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_comma_string())
        }
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse(s)
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.values
    }
}

fn parse_compact(text: &str) -> Result<Vec<u32>, ParseError> {
    text.char_indices()
        .map(|(offset, ch)| match ch {
            '1'..='9' => Ok(ch as u32 - '0' as u32),
            _ => Err(ParseError::InvalidChar { ch, offset }),
        })
        .collect()
}

fn parse_comma(text: &str) -> Result<Vec<u32>, ParseError> {
    let mut values = Vec::new();
    let mut long_tokens = Vec::new();
    let mut offset = 0;
    for token in text.split(',') {
        if token.is_empty() {
            return Err(ParseError::EmptyToken(offset));
        }
        if let Some((i, ch)) = token.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(ParseError::InvalidChar {
                ch,
                offset: offset + i,
            });
        }
        if token.starts_with('0') {
            return Err(ParseError::InvalidToken(token.to_string()));
        }
        let value: u32 = token
            .parse()
            .map_err(|_| ParseError::InvalidToken(token.to_string()))?;
        if token.len() > 1 {
            long_tokens.push((token, value));
        }
        values.push(value);
        offset += token.len() + 1;
    }
    // "3,142": a multi-digit token too large for n reads as a compact run
    // embedded in a comma list.
    let n = values.len();
    if let Some((token, _)) = long_tokens.iter().find(|(_, v)| *v as usize > n) {
        return Err(ParseError::MixedGrammar(token.to_string()));
    }
    Ok(values)
}

pub(crate) fn is_permutation(values: &[u32]) -> bool {
    let n = values.len();
    let mut seen = alloc::vec![false; n];
    for &v in values {
        let v = v as usize;
        if v == 0 || v > n || seen[v - 1] {
            return false;
        }
        seen[v - 1] = true;
    }
    true
}

/// Advances `values` to its lexicographic successor in place.
///
/// Returns `false` (leaving the slice sorted ascending) once the last
/// permutation has been passed.
pub fn next_lexicographic(values: &mut [u32]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        values.reverse();
        return false;
    }
    let mut j = n - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Relative order of `values`, as a permutation of `1..=values.len()`.
/// Values must be distinct.
pub fn standardize(values: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut out = alloc::vec![0u32; values.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation::from_values_unchecked(out)
}
