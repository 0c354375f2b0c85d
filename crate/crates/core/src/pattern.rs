//! Vincular patterns in dashed notation, and named pattern sets.
//!
//! Adjacent digits are glued: their images in the host must sit at
//! consecutive positions. A dash lifts that constraint. `1-32-4` is
//! the pattern 1324 whose middle letters are glued.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ParseError;
use crate::perm::is_permutation;

/// Longest supported pattern; the grammar has single-digit letters.
pub const MAX_PATTERN_LEN: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    letters: Vec<u32>,
    glued: Vec<bool>,
    plan: Plan,
}

/// Precomputed matching plan.
///
/// `blocks` are the maximal glued runs as `(first letter, length)`.
/// For letter `i`, `below[i]`/`above[i]` index the earlier letter whose
/// value is the nearest below/above `letters[i]`; checking only those two
/// neighbours keeps an incremental placement order-isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Plan {
    blocks: Vec<(usize, usize)>,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl VincularPattern {
    pub fn new(letters: Vec<u32>, glued: Vec<bool>) -> Result<Self, ParseError> {
        if letters.is_empty() {
            return Err(ParseError::EmptyPattern);
        }
        if letters.len() > MAX_PATTERN_LEN {
            return Err(ParseError::PatternTooLong(letters.len()));
        }
        if !is_permutation(&letters) {
            return Err(ParseError::NotAPermutation(letters.len()));
        }
        if glued.len() != letters.len() - 1 {
            return Err(ParseError::GlueLength {
                expected: letters.len() - 1,
                got: glued.len(),
            });
        }
        let plan = Plan::build(&letters, &glued);
        Ok(VincularPattern {
            letters,
            glued,
            plan,
        })
    }

    /// Parses `digit (('-')? digit)*` over the digits 1-9.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Err(ParseError::EmptyPattern);
        }
        let mut letters = Vec::new();
        let mut glued = Vec::new();
        let mut dash_pending = false;
        for (offset, ch) in text.char_indices() {
            match ch {
                '-' => {
                    if letters.is_empty() {
                        return Err(ParseError::DanglingDash);
                    }
                    if dash_pending {
                        return Err(ParseError::ConsecutiveDashes(offset));
                    }
                    dash_pending = true;
                }
                '1'..='9' => {
                    if !letters.is_empty() {
                        glued.push(!dash_pending);
                    }
                    dash_pending = false;
                    letters.push(ch as u32 - '0' as u32);
                }
                _ => return Err(ParseError::InvalidChar { ch, offset }),
            }
        }
        if dash_pending {
            return Err(ParseError::DanglingDash);
        }
        VincularPattern::new(letters, glued)
    }

    /// Pattern length k.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// `glued()[i]` is true when letters `i` and `i + 1` carry no dash.
    pub fn glued(&self) -> &[bool] {
        &self.glued
    }

    /// Maximal glued blocks as `(first letter index, length)`, 0-based.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.plan.blocks
    }

    pub(crate) fn neighbour_below(&self, i: usize) -> Option<usize> {
        self.plan.below[i]
    }

    pub(crate) fn neighbour_above(&self, i: usize) -> Option<usize> {
        self.plan.above[i]
    }
}

impl Plan {
    fn build(letters: &[u32], glued: &[bool]) -> Plan {
        let mut blocks = Vec::new();
        let mut start = 0;
        for (i, &g) in glued.iter().enumerate() {
            if !g {
                blocks.push((start, i + 1 - start));
                start = i + 1;
            }
        }
        blocks.push((start, letters.len() - start));

        let mut below = Vec::with_capacity(letters.len());
        let mut above = Vec::with_capacity(letters.len());
        for (i, &v) in letters.iter().enumerate() {
            let earlier = letters[..i].iter().enumerate();
            below.push(
                earlier
                    .clone()
                    .filter(|(_, &w)| w < v)
                    .max_by_key(|(_, &w)| w)
                    .map(|(j, _)| j),
            );
            above.push(
                earlier
                    .filter(|(_, &w)| w > v)
                    .min_by_key(|(_, &w)| w)
                    .map(|(j, _)| j),
            );
        }
        Plan {
            blocks,
            below,
            above,
        }
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 && !self.glued[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VincularPattern::parse(s)
    }
}

pub const SET_A: [&str; 4] = ["1-32-4", "1-42-3", "2-31-4", "2-41-3"];
pub const SET_B: [&str; 4] = ["1-3-2-4", "1-4-2-3", "2-3-1-4", "2-4-1-3"];

/// A named, nonempty collection of patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    name: String,
    patterns: Vec<VincularPattern>,
}

impl PatternSet {
    pub fn new(
        name: impl Into<String>,
        patterns: Vec<VincularPattern>,
    ) -> Result<Self, ParseError> {
        if patterns.is_empty() {
            return Err(ParseError::EmptySet);
        }
        Ok(PatternSet {
            name: name.into(),
            patterns,
        })
    }

    /// `{1-32-4, 1-42-3, 2-31-4, 2-41-3}`
    pub fn a() -> Self {
        Self::from_literals("A", &SET_A)
    }

    /// `{1-3-2-4, 1-4-2-3, 2-3-1-4, 2-4-1-3}`
    pub fn b() -> Self {
        Self::from_literals("B", &SET_B)
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "A" => Some(Self::a()),
            "B" => Some(Self::b()),
            _ => None,
        }
    }

    /// A built-in name, or a comma-separated list of patterns.
    pub fn parse_selector(text: &str) -> Result<Self, ParseError> {
        if let Some(set) = Self::builtin(text) {
            return Ok(set);
        }
        if text.is_empty() {
            return Err(ParseError::EmptySet);
        }
        if !text.contains(|c: char| c.is_ascii_digit()) {
            return Err(ParseError::UnknownSet(text.to_string()));
        }
        let patterns = text
            .split(',')
            .map(VincularPattern::parse)
            .collect::<Result<Vec<_>, _>>()?;
        PatternSet::new(text, patterns)
    }

    fn from_literals(name: &str, literals: &[&str]) -> Self {
        let patterns = literals
            .iter()
            .map(|s| VincularPattern::parse(s).expect("built-in pattern parses"))
            .collect();
        PatternSet {
            name: name.to_string(),
            patterns,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &[VincularPattern] {
        &self.patterns
    }

    pub fn iter(&self) -> core::slice::Iter<'_, VincularPattern> {
        self.patterns.iter()
    }
}

impl<'a> IntoIterator for &'a PatternSet {
    type Item = &'a VincularPattern;
    type IntoIter = core::slice::Iter<'a, VincularPattern>;

    fn into_iter(self) -> Self::IntoIter {
        self.patterns.iter()
    }
}
