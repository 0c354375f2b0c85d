//! Index-arithmetic characterizations of the sets `A` and `B`.
//!
//! Positions `a < b < c < d` form an occurrence of some pattern in `B`
//! iff `max(π_a, π_c) < min(π_b, π_d)`, and of some pattern in `A` iff
//! additionally `c = b + 1`.

use alloc::vec::Vec;

use crate::error::PositionError;
use crate::matcher::Occurrence;
use crate::perm::Permutation;

pub fn check_a_characterization(
    host: &Permutation,
    occ: &Occurrence,
) -> Result<bool, PositionError> {
    let [a, b, c, d] = occ.quadruple(host.len())?;
    Ok(c == b + 1 && b_condition(host.values(), [a, b, c, d]))
}

pub fn check_b_characterization(
    host: &Permutation,
    occ: &Occurrence,
) -> Result<bool, PositionError> {
    let q = occ.quadruple(host.len())?;
    Ok(b_condition(host.values(), q))
}

/// `max(π_a, π_c) < min(π_b, π_d)` for 1-based positions.
pub(crate) fn b_condition(values: &[u32], [a, b, c, d]: [usize; 4]) -> bool {
    let at = |p: usize| values[p - 1];
    at(a).max(at(c)) < at(b).min(at(d))
}

fn prefix_minima(values: &[u32]) -> Vec<u32> {
    // prefix_min[i] = min(values[..i]), u32::MAX for the empty prefix
    let mut out = Vec::with_capacity(values.len() + 1);
    let mut m = u32::MAX;
    out.push(m);
    for &v in values {
        m = m.min(v);
        out.push(m);
    }
    out
}

fn suffix_maxima(values: &[u32]) -> Vec<u32> {
    // suffix_max[i] = max(values[i..]), 0 for the empty suffix
    let mut out = alloc::vec![0; values.len() + 1];
    for i in (0..values.len()).rev() {
        out[i] = out[i + 1].max(values[i]);
    }
    out
}

/// Linear-time test for an occurrence of any pattern in `A`.
///
/// For a glued pair `(b, b+1)` the best `a` is the prefix minimum
/// before `b` and the best `d` is the suffix maximum after `b + 1`.
pub fn contains_a_pattern(values: &[u32]) -> bool {
    let n = values.len();
    if n < 4 {
        return false;
    }
    let pmin = prefix_minima(values);
    let smax = suffix_maxima(values);
    (1..n - 2).any(|b| {
        let low = pmin[b].max(values[b + 1]);
        let high = values[b].min(smax[b + 2]);
        low < high
    })
}

/// Quadratic-time test for an occurrence of any pattern in `B`.
pub fn contains_b_pattern(values: &[u32]) -> bool {
    let n = values.len();
    if n < 4 {
        return false;
    }
    let pmin = prefix_minima(values);
    let smax = suffix_maxima(values);
    (1..n - 2).any(|b| (b + 1..n - 1).any(|c| pmin[b].max(values[c]) < values[b].min(smax[c + 1])))
}
