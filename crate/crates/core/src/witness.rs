//! From a `B`-occurrence to an `A`-occurrence in the same host.
//!
//! Given `a < b < c < d` with `max(π_a, π_c) < min(π_b, π_d)`, let `e`
//! be the last position before `c` whose value exceeds `max(π_a, π_c)`.
//! Then `(a, e, e + 1, d)` is an occurrence of a pattern in `A`, and
//! `b <= e < e + 1 <= c`.

use alloc::vec;

use crate::characterize::{b_condition, check_a_characterization};
use crate::error::WitnessError;
use crate::matcher::{first_occurrence, Occurrence};
use crate::pattern::{PatternSet, VincularPattern};
use crate::perm::{standardize, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    /// 1-based pivot position.
    pub e: usize,
    /// `(a, e, e + 1, d)`.
    pub occurrence: Occurrence,
}

pub fn transform_occurrence(
    host: &Permutation,
    occ: &Occurrence,
) -> Result<WitnessResult, WitnessError> {
    let [a, b, c, d] = occ.quadruple(host.len())?;
    let values = host.values();
    if !b_condition(values, [a, b, c, d]) {
        return Err(WitnessError::NotBOccurrence([a, b, c, d]));
    }
    let threshold = values[a - 1].max(values[c - 1]);
    // b itself qualifies, so the search cannot come up empty
    let e = (1..c)
        .rev()
        .find(|&i| values[i - 1] > threshold)
        .expect("position b exceeds the threshold");
    debug_assert!(b <= e && e < c);
    let occurrence = Occurrence::new(vec![a, e, e + 1, d])?;
    debug_assert_eq!(check_a_characterization(host, &occurrence), Ok(true));
    Ok(WitnessResult { e, occurrence })
}

/// Lexicographically first occurrence of any pattern in `B`.
pub fn first_b_occurrence(host: &Permutation) -> Option<Occurrence> {
    PatternSet::b()
        .iter()
        .filter_map(|p| first_occurrence(host, p))
        .min()
}

/// The pattern of `set` that `occ` is an occurrence of, if any.
pub fn matching_pattern<'s>(
    host: &Permutation,
    occ: &Occurrence,
    set: &'s PatternSet,
) -> Option<&'s VincularPattern> {
    let values = occ.values_in(host).ok()?;
    let shape = standardize(&values);
    let pos = occ.positions();
    set.iter().find(|p| {
        p.letters() == shape.values()
            && p.glued()
                .iter()
                .zip(pos.windows(2))
                .all(|(&g, w)| !g || w[1] == w[0] + 1)
    })
}
