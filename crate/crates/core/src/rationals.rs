//! Surgery coefficients and their regular continued fractions.
//!
//! A surgery coefficient is a non-negative reduced fraction `p/q` with
//! `q >= 1`. Negative inputs are folded onto their mirror image, since
//! surgery on an amphichiral knot does not see the sign.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest magnitude accepted for `p` and `q` when parsing text.
pub const MAX_INPUT: i64 = 1_000_000_000;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A reduced fraction `p/q` with `p >= 0`, `q >= 1`, both within `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCoefficient")]
pub struct SurgeryCoefficient {
    p: u64,
    q: u64,
}

#[derive(Deserialize)]
struct RawCoefficient {
    p: i64,
    q: i64,
}

impl TryFrom<RawCoefficient> for SurgeryCoefficient {
    type Error = Error;

    fn try_from(raw: RawCoefficient) -> Result<Self> {
        normalize(raw.p, raw.q)
    }
}

/// Reduce `p/q` to lowest terms with a positive denominator and a
/// non-negative numerator.
pub fn normalize(p: i64, q: i64) -> Result<SurgeryCoefficient> {
    match (p, q) {
        (0, 0) => return Err(Error::InvalidCoefficient),
        (_, 0) => return Err(Error::InfiniteCoefficient),
        _ => {}
    }
    let (p, q) = (p.unsigned_abs(), q.unsigned_abs());
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    // |i64::MIN| only survives when it is divisible by q
    if p > i64::MAX as u64 {
        return Err(Error::Overflow("surgery numerator"));
    }
    Ok(SurgeryCoefficient { p, q })
}

impl SurgeryCoefficient {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        normalize(p, q)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `[p/q]`
    pub fn integer_part(&self) -> u64 {
        self.p / self.q
    }

    /// `rem(p, q)`
    pub fn remainder(&self) -> u64 {
        self.p % self.q
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    /// The fractional part `rem(p,q)/q`, which is already reduced.
    pub fn fractional_part(&self) -> SurgeryCoefficient {
        if self.q == 1 {
            SurgeryCoefficient { p: 0, q: 1 }
        } else {
            SurgeryCoefficient {
                p: self.remainder(),
                q: self.q,
            }
        }
    }

    pub fn continued_fraction(&self) -> ContinuedFraction {
        expand_cf(*self)
    }

    pub fn quotient_sum(&self) -> u64 {
        s_sum(*self)
    }

    /// Cross-multiplication order, exact for all `u64` inputs.
    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl fmt::Display for SurgeryCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

pub(crate) fn parse_bounded_int(input: &str, whole: &str) -> Result<i64> {
    let value: i64 = input.parse().map_err(|_| Error::Parse {
        input: whole.to_string(),
        reason: "expected an integer",
    })?;
    if value.unsigned_abs() > MAX_INPUT as u64 {
        return Err(Error::OutOfRange { max: MAX_INPUT });
    }
    Ok(value)
}

impl FromStr for SurgeryCoefficient {
    type Err = Error;

    /// Accepts `p/q` or `p`. `inf` is recognised and rejected.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Err(Error::InfiniteCoefficient);
        }
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (parse_bounded_int(p, s)?, parse_bounded_int(q, s)?),
            None => (parse_bounded_int(s, s)?, 1),
        };
        normalize(p, q)
    }
}

/// Regular continued fraction `[a0; a1, ..., an]` in canonical form:
/// `an >= 2` whenever `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContinuedFraction {
    quotients: Vec<u64>,
}

impl ContinuedFraction {
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn sum(&self) -> u64 {
        self.quotients.iter().sum()
    }

    /// Evaluate back to `(p, q)`. `None` on overflow.
    pub fn evaluate(&self) -> Option<(u64, u64)> {
        evaluate_quotients(&self.quotients)
    }

    /// The other regular expansion of the same rational, ending in `1`.
    /// `None` for `0`, whose only expansion is `[0]`.
    pub fn alternate_form(&self) -> Option<Vec<u64>> {
        let (&last, init) = self.quotients.split_last()?;
        if last == 0 {
            return None;
        }
        let mut alt = init.to_vec();
        alt.push(last - 1);
        alt.push(1);
        Some(alt)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, a) in self.quotients[1..].iter().enumerate() {
            let sep = if i == 0 { "; " } else { ", " };
            write!(f, "{sep}{a}")?;
        }
        write!(f, "]")
    }
}

/// Evaluate an arbitrary regular continued fraction (canonical or not)
/// from the innermost quotient outwards.
pub fn evaluate_quotients(quotients: &[u64]) -> Option<(u64, u64)> {
    let (&last, rest) = quotients.split_last()?;
    let (mut num, mut den) = (last, 1u64);
    for &a in rest.iter().rev() {
        // a + 1/(num/den) = (a*num + den)/num
        let next = a.checked_mul(num)?.checked_add(den)?;
        (num, den) = (next, num);
    }
    Some((num, den))
}

/// Euclidean expansion of `p/q`.
pub fn expand_cf(x: SurgeryCoefficient) -> ContinuedFraction {
    let (mut p, mut q) = (x.p, x.q);
    let mut quotients = Vec::new();
    loop {
        quotients.push(p / q);
        let r = p % q;
        if r == 0 {
            break;
        }
        (p, q) = (q, r);
    }
    ContinuedFraction { quotients }
}

/// `S(p, q)`: the sum of all partial quotients of `p/q`. `S(0, 1) = 0`.
pub fn s_sum(x: SurgeryCoefficient) -> u64 {
    let (mut p, mut q) = (x.p, x.q);
    let mut sum = 0;
    while q != 0 {
        sum += p / q;
        (p, q) = (q, p % q);
    }
    sum
}

/// Every surgery coefficient whose partial-quotient sum is at most
/// `max_sum`, in no particular order. Generated from canonical
/// expansions, so each rational appears once.
pub fn coefficients_with_quotient_sum_at_most(max_sum: u64) -> Vec<SurgeryCoefficient> {
    fn tails(budget: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        // a prefix ending in a quotient >= 2 is itself a canonical tail
        if prefix.last().is_some_and(|&a| a >= 2) {
            out.push(prefix.clone());
        }
        for a in 1..=budget {
            prefix.push(a);
            tails(budget - a, prefix, out);
            prefix.pop();
        }
    }

    let mut all_tails = vec![Vec::new()];
    tails(max_sum, &mut Vec::new(), &mut all_tails);

    let mut out = Vec::new();
    for tail in &all_tails {
        let used: u64 = tail.iter().sum();
        for a0 in 0..=max_sum - used {
            let mut quotients = Vec::with_capacity(tail.len() + 1);
            quotients.push(a0);
            quotients.extend_from_slice(tail);
            let (p, q) = evaluate_quotients(&quotients).expect("small quotients");
            out.push(SurgeryCoefficient { p, q });
        }
    }
    out
}
