//! Building `Av_n(B)` from `Av_{n-1}(B)`.
//!
//! In an avoider of `A` (equivalently of `B`) the values 1 and 2 are
//! adjacent, or one of them is last. Each shape has a map that produces
//! it from a shorter permutation by shifting every value up by one:
//!
//! | tag       | map            | image shape        | left inverse          |
//! |-----------|----------------|--------------------|-----------------------|
//! | `Before`  | [`f_before`]   | 1 right before 2   | [`strip_one`]         |
//! | `After`   | [`f_after`]    | 1 right after 2    | [`strip_one`]         |
//! | `EndOne`  | [`f_end_one`]  | 1 last             | [`strip_one`]         |
//! | `EndTwo`  | [`f_end_two`]  | 2 last             | [`strip_one_swap_two`]|
//!
//! A member is produced twice exactly when it ends in `12` or `21`;
//! [`g_reduce`] sends those onto `Av_{n-2}(B)` two-to-one.

use alloc::vec::Vec;
use core::fmt;

use crate::enumerate::{pack, AvoiderLevel, MAX_LEVEL_LEN};
use crate::error::{ConstructError, EnumerateError};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapTag {
    Before,
    After,
    EndOne,
    EndTwo,
}

impl MapTag {
    pub const ALL: [MapTag; 4] = [
        MapTag::Before,
        MapTag::After,
        MapTag::EndOne,
        MapTag::EndTwo,
    ];

    pub fn apply(self, p: &Permutation) -> Result<Permutation, ConstructError> {
        match self {
            MapTag::Before => f_before(p),
            MapTag::After => f_after(p),
            MapTag::EndOne => Ok(f_end_one(p)),
            MapTag::EndTwo => f_end_two(p),
        }
    }

    /// Left inverse of [`MapTag::apply`] on permutations of this shape.
    pub fn invert(self, p: &Permutation) -> Result<Permutation, ConstructError> {
        match self {
            MapTag::EndTwo => strip_one_swap_two(p),
            _ => strip_one(p),
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

impl fmt::Display for MapTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapTag::Before => "BEFORE",
            MapTag::After => "AFTER",
            MapTag::EndOne => "END_ONE",
            MapTag::EndTwo => "END_TWO",
        })
    }
}

/// A subset of the four tags.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TagSet(u8);

impl TagSet {
    pub fn insert(&mut self, tag: MapTag) {
        self.0 |= tag.bit();
    }

    pub fn contains(self, tag: MapTag) -> bool {
        self.0 & tag.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = MapTag> {
        MapTag::ALL.into_iter().filter(move |t| self.contains(*t))
    }
}

impl FromIterator<MapTag> for TagSet {
    fn from_iter<I: IntoIterator<Item = MapTag>>(iter: I) -> Self {
        let mut set = TagSet::default();
        for tag in iter {
            set.insert(tag);
        }
        set
    }
}

fn shifted_up(p: &Permutation) -> Vec<u32> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.extend(p.values().iter().map(|v| v + 1));
    out
}

/// 0-based index of `value`.
fn index_of(values: &[u32], value: u32) -> usize {
    values
        .iter()
        .position(|&v| v == value)
        .expect("value present in permutation")
}

/// Shift up by one, then insert 1 immediately before the new 2.
pub fn f_before(p: &Permutation) -> Result<Permutation, ConstructError> {
    if p.is_empty() {
        return Err(ConstructError::Empty);
    }
    let mut v = shifted_up(p);
    let two = index_of(&v, 2);
    v.insert(two, 1);
    Ok(Permutation::from_values_unchecked(v))
}

/// Shift up by one, then insert 1 immediately after the new 2.
pub fn f_after(p: &Permutation) -> Result<Permutation, ConstructError> {
    if p.is_empty() {
        return Err(ConstructError::Empty);
    }
    let mut v = shifted_up(p);
    let two = index_of(&v, 2);
    v.insert(two + 1, 1);
    Ok(Permutation::from_values_unchecked(v))
}

/// Shift up by one, then append 1.
pub fn f_end_one(p: &Permutation) -> Permutation {
    let mut v = shifted_up(p);
    v.push(1);
    Permutation::from_values_unchecked(v)
}

/// Shift up by one, overwrite the new 2 with 1, then append 2.
pub fn f_end_two(p: &Permutation) -> Result<Permutation, ConstructError> {
    if p.is_empty() {
        return Err(ConstructError::Empty);
    }
    let mut v = shifted_up(p);
    let two = index_of(&v, 2);
    v[two] = 1;
    v.push(2);
    Ok(Permutation::from_values_unchecked(v))
}

/// Which of the four image shapes `p` has.
pub fn classify(p: &Permutation) -> Result<TagSet, ConstructError> {
    let n = p.len();
    if n < 2 {
        return Err(ConstructError::TooShort { min: 2, got: n });
    }
    let v = p.values();
    let one = index_of(v, 1);
    let two = index_of(v, 2);
    let mut tags = TagSet::default();
    if one + 1 == two {
        tags.insert(MapTag::Before);
    }
    if two + 1 == one {
        tags.insert(MapTag::After);
    }
    match v[n - 1] {
        1 => tags.insert(MapTag::EndOne),
        2 => tags.insert(MapTag::EndTwo),
        _ => {}
    }
    Ok(tags)
}

/// Remove 1 and shift the rest down by one.
pub fn strip_one(p: &Permutation) -> Result<Permutation, ConstructError> {
    if p.is_empty() {
        return Err(ConstructError::Empty);
    }
    let v = p
        .values()
        .iter()
        .filter(|&&x| x != 1)
        .map(|x| x - 1)
        .collect();
    Ok(Permutation::from_values_unchecked(v))
}

/// For `p` ending in 2: remove 1, move the 2 into the slot 1 held,
/// and shift the rest down by one.
pub fn strip_one_swap_two(p: &Permutation) -> Result<Permutation, ConstructError> {
    let v = p.values();
    match v.last() {
        None => return Err(ConstructError::Empty),
        Some(&2) => {}
        Some(_) => return Err(ConstructError::LastNotTwo),
    }
    let mut out = v[..v.len() - 1].to_vec();
    let one = index_of(&out, 1);
    out[one] = 2;
    for x in &mut out {
        *x -= 1;
    }
    Ok(Permutation::from_values_unchecked(out))
}

/// Remove 1 and 2 and shift the rest down by two.
pub fn g_reduce(p: &Permutation) -> Result<Permutation, ConstructError> {
    if p.len() < 2 {
        return Err(ConstructError::TooShort {
            min: 2,
            got: p.len(),
        });
    }
    let v = p
        .values()
        .iter()
        .filter(|&&x| x > 2)
        .map(|x| x - 2)
        .collect();
    Ok(Permutation::from_values_unchecked(v))
}

/// The four image lists of a level, each sorted. Their combined length
/// is `4 * |prev|`; duplicates across lists are the double counts.
#[derive(Clone, Debug)]
pub struct Images {
    pub before: AvoiderLevel,
    pub after: AvoiderLevel,
    pub end_one: AvoiderLevel,
    pub end_two: AvoiderLevel,
}

impl Images {
    pub fn get(&self, tag: MapTag) -> &AvoiderLevel {
        match tag {
            MapTag::Before => &self.before,
            MapTag::After => &self.after,
            MapTag::EndOne => &self.end_one,
            MapTag::EndTwo => &self.end_two,
        }
    }

    /// Size of the multiset union.
    pub fn total(&self) -> usize {
        MapTag::ALL.iter().map(|&t| self.get(t).len()).sum()
    }

    /// Deduplicated union, sorted.
    pub fn union(&self) -> Result<AvoiderLevel, ConstructError> {
        let mut codes = Vec::with_capacity(self.total());
        for tag in MapTag::ALL {
            codes.extend_from_slice(self.get(tag).codes());
        }
        Ok(AvoiderLevel::from_codes(self.before.n(), "B", codes)?)
    }
}

fn image_of(prev: &AvoiderLevel, tag: MapTag) -> Result<AvoiderLevel, ConstructError> {
    let n = prev.n() + 1;
    let codes = prev
        .iter()
        .map(|p| tag.apply(&p).map(|q| pack(q.values())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AvoiderLevel::from_codes(n, "B", codes)?)
}

/// Applies all four maps to every member of `prev`.
pub fn images(prev: &AvoiderLevel) -> Result<Images, ConstructError> {
    let n = prev.n() + 1;
    if n > MAX_LEVEL_LEN {
        return Err(EnumerateError::TooLong(n).into());
    }
    Ok(Images {
        before: image_of(prev, MapTag::Before)?,
        after: image_of(prev, MapTag::After)?,
        end_one: image_of(prev, MapTag::EndOne)?,
        end_two: image_of(prev, MapTag::EndTwo)?,
    })
}

/// `Av_n(B)` from `Av_{n-1}(B)` as the union of the four images.
pub fn generate_level(prev: &AvoiderLevel) -> Result<AvoiderLevel, ConstructError> {
    images(prev)?.union()
}

/// Members whose last two values are 1 and 2 in either order.
pub fn double_counted(level: &AvoiderLevel) -> Result<Vec<Permutation>, ConstructError> {
    let n = level.n();
    if n < 2 {
        return Err(ConstructError::TooShort { min: 2, got: n });
    }
    Ok(level
        .iter()
        .filter(|p| {
            let v = p.values();
            matches!((v[n - 2], v[n - 1]), (1, 2) | (2, 1))
        })
        .collect())
}

/// `Av_1(B), Av_2(B), ...` by repeated [`generate_level`], stopping
/// after length 16.
pub struct Levels {
    next: Option<AvoiderLevel>,
}

impl Levels {
    pub fn new() -> Self {
        let first = AvoiderLevel::from_codes(1, "B", alloc::vec![0]).expect("length 1 fits");
        Levels { next: Some(first) }
    }
}

impl Default for Levels {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Levels {
    type Item = AvoiderLevel;

    fn next(&mut self) -> Option<AvoiderLevel> {
        let current = self.next.take()?;
        if current.n() < MAX_LEVEL_LEN {
            self.next = generate_level(&current).ok();
        }
        Some(current)
    }
}
