//! Points of the circle at infinity as primitive integer vectors up to sign.
//!
//! Walks through the tessellation may pass through intermediate vertices
//! whose coordinates do not fit the public `i64` slope type, so the walk
//! machinery runs on `i128` vectors and only converts at the boundary.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A primitive vector `(a, b)` normalised so that `b > 0`, or `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Proj {
    pub a: i128,
    pub b: i128,
}

impl Proj {
    pub const INFINITY: Proj = Proj { a: 1, b: 0 };

    /// Normalise the sign of a primitive vector. The caller guarantees
    /// primitivity (sums and differences of Farey neighbours are primitive).
    pub fn from_vector(a: i128, b: i128) -> Result<Proj> {
        if b == 0 {
            if a == 0 {
                return Err(Error::InvalidCoefficient);
            }
            return Ok(Proj::INFINITY);
        }
        if b < 0 {
            let a = a.checked_neg().ok_or(Error::Overflow("slope numerator"))?;
            let b = b.checked_neg().ok_or(Error::Overflow("slope denominator"))?;
            Ok(Proj { a, b })
        } else {
            Ok(Proj { a, b })
        }
    }

    pub fn checked_add(self, other: Proj) -> Result<(i128, i128)> {
        Ok((
            self.a.checked_add(other.a).ok_or(Error::Overflow("mediant"))?,
            self.b.checked_add(other.b).ok_or(Error::Overflow("mediant"))?,
        ))
    }

    pub fn checked_sub(self, other: Proj) -> Result<(i128, i128)> {
        Ok((
            self.a.checked_sub(other.a).ok_or(Error::Overflow("mediant"))?,
            self.b.checked_sub(other.b).ok_or(Error::Overflow("mediant"))?,
        ))
    }

    /// The two candidates for the third vertex of a Farey triangle on the
    /// edge `{self, other}`.
    pub fn third_vertices(self, other: Proj) -> Result<[Proj; 2]> {
        let (sa, sb) = self.checked_add(other)?;
        let (da, db) = self.checked_sub(other)?;
        Ok([Proj::from_vector(sa, sb)?, Proj::from_vector(da, db)?])
    }
}

/// Exact comparison of `a1/b1` and `a2/b2` for positive denominators,
/// by comparing continued-fraction digits. No multiplication, so no
/// overflow for any `i128` input.
pub(crate) fn cmp_fractions(mut a1: i128, mut b1: i128, mut a2: i128, mut b2: i128) -> Ordering {
    debug_assert!(b1 > 0 && b2 > 0);
    loop {
        let (q1, r1) = (a1.div_euclid(b1), a1.rem_euclid(b1));
        let (q2, r2) = (a2.div_euclid(b2), a2.rem_euclid(b2));
        if q1 != q2 {
            return q1.cmp(&q2);
        }
        match (r1 == 0, r2 == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            // r1/b1 < r2/b2  <=>  b2/r2 < b1/r1
            (false, false) => (a1, b1, a2, b2) = (b2, r2, b1, r1),
        }
    }
}

impl Ord for Proj {
    /// Position on the boundary circle read as the extended real line,
    /// with infinity the greatest point.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.b == 0, other.b == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => cmp_fractions(self.a, self.b, other.a, other.b),
        }
    }
}

impl PartialOrd for Proj {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `p, q, r` occur in this cyclic order around the circle. Requires
/// three distinct points.
fn cyclic(p: Proj, q: Proj, r: Proj) -> bool {
    (p < q && q < r) || (q < r && r < p) || (r < p && p < q)
}

/// `w` lies in the open arc with endpoints `x`, `y` that avoids `z`.
pub(crate) fn strictly_beyond(x: Proj, y: Proj, z: Proj, w: Proj) -> bool {
    if w == x || w == y || w == z {
        return false;
    }
    cyclic(x, w, y) != cyclic(x, z, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i128, b: i128) -> Proj {
        Proj::from_vector(a, b).unwrap()
    }

    #[test]
    fn fraction_order_matches_cross_multiplication() {
        for a1 in -12..=12 {
            for b1 in 1..=9 {
                for a2 in -12..=12 {
                    for b2 in 1..=9 {
                        assert_eq!(
                            cmp_fractions(a1, b1, a2, b2),
                            (a1 * b2).cmp(&(a2 * b1)),
                            "{a1}/{b1} vs {a2}/{b2}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fraction_order_without_overflow() {
        let big = i128::MAX - 1;
        assert_eq!(cmp_fractions(big, big - 1, big - 1, big - 2), Ordering::Less);
        assert_eq!(cmp_fractions(-big, 3, i128::MIN + 1, 3), Ordering::Greater);
    }

    #[test]
    fn sign_normalisation() {
        assert_eq!(p(-1, -2), p(1, 2));
        assert_eq!(p(-5, 0), Proj::INFINITY);
        assert!(Proj::from_vector(0, 0).is_err());
    }

    #[test]
    fn arcs() {
        let (zero, one, inf) = (p(0, 1), p(1, 1), Proj::INFINITY);
        // beyond edge {1, inf} away from 0: the reals greater than 1
        assert!(strictly_beyond(one, inf, zero, p(5, 1)));
        assert!(strictly_beyond(inf, one, zero, p(3, 2)));
        assert!(!strictly_beyond(one, inf, zero, p(1, 2)));
        assert!(!strictly_beyond(one, inf, zero, p(-1, 1)));
        // beyond edge {inf, 0} away from 1: the negative reals
        assert!(strictly_beyond(inf, zero, one, p(-1, 1)));
        assert!(!strictly_beyond(inf, zero, one, p(2, 1)));
        // beyond edge {0, 1} away from inf
        assert!(strictly_beyond(zero, one, inf, p(1, 2)));
        assert!(!strictly_beyond(zero, one, inf, one));
    }
}
