//! Exact integer and rational arithmetic.
//!
//! Every operation is checked: overflow surfaces as [`Error::Overflow`]
//! instead of wrapping. Rationals are kept in lowest terms with a positive
//! denominator, so derived equality, ordering and hashing are exact.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

/// Greatest common divisor, always non-negative. `gcd(n, 0) = |n|`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// `[r]_n`: the representative of `r` modulo `n` lying in `1..=n`.
pub fn residue(r: i64, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::InvalidModulus(n));
    }
    let v = r.rem_euclid(n);
    Ok(if v == 0 { n } else { v })
}

/// Least integer strictly greater than `a`; integers map to `a + 1`.
pub fn ceil_strict(a: Rational) -> Result<i64> {
    add(a.floor(), 1)
}

/// An exact rational number in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(Error::Overflow("negation"))?;
            den = den.checked_neg().ok_or(Error::Overflow("negation"))?;
        }
        Ok(Rational { num, den })
    }

    pub fn from_integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn checked_add(self, other: Rational) -> Result<Rational> {
        let g = gcd(self.den, other.den);
        let lhs = mul(self.num, other.den / g)?;
        let rhs = mul(other.num, self.den / g)?;
        Rational::new(add(lhs, rhs)?, mul(self.den / g, other.den)?)
    }

    pub fn checked_neg(self) -> Result<Rational> {
        let num = self.num.checked_neg().ok_or(Error::Overflow("negation"))?;
        Ok(Rational { num, den: self.den })
    }

    pub fn checked_sub(self, other: Rational) -> Result<Rational> {
        self.checked_add(other.checked_neg()?)
    }

    pub fn checked_mul(self, other: Rational) -> Result<Rational> {
        let g1 = gcd(self.num, other.den).max(1);
        let g2 = gcd(other.num, self.den).max(1);
        Rational::new(
            mul(self.num / g1, other.num / g2)?,
            mul(self.den / g2, other.den / g1)?,
        )
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Compares `a/b` with `c/d` for positive `b`, `d` without building rationals.
pub(crate) fn cmp_fractions(a: i64, b: i64, c: i64, d: i64) -> Ordering {
    (a as i128 * d as i128).cmp(&(c as i128 * b as i128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(0, 5), Ok(5));
        assert_eq!(residue(7, 3), Ok(1));
        assert_eq!(residue(-2, 5), Ok(3));
        assert_eq!(residue(4, 1), Ok(1));
        assert_eq!(residue(3, 0), Err(Error::InvalidModulus(0)));
        assert_eq!(residue(3, -4), Err(Error::InvalidModulus(-4)));
    }

    #[test]
    fn ceil_strict_examples() {
        assert_eq!(ceil_strict(q(1, 3)), Ok(1));
        assert_eq!(ceil_strict(q(2, 1)), Ok(3));
        assert_eq!(ceil_strict(q(-3, 2)), Ok(-1));
        assert_eq!(ceil_strict(q(-2, 1)), Ok(-1));
        assert_eq!(ceil_strict(q(i64::MAX, 1)), Err(Error::Overflow("addition")));
    }

    #[test]
    fn normalization() {
        assert_eq!(q(4, 6), q(2, 3));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -7), Rational::ZERO);
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(q(6, 5).to_string(), "6/5");
        assert_eq!(q(-4, 2).to_string(), "-2");
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::from_integer(i64::MAX);
        assert!(big.checked_add(Rational::from_integer(1)).is_err());
        assert!(big.checked_mul(Rational::from_integer(2)).is_err());
        assert!(Rational::from_integer(i64::MIN).checked_neg().is_err());
    }

    #[test]
    fn gcd_of_zero() {
        assert_eq!(gcd(6, 0), 6);
        assert_eq!(gcd(0, -4), 4);
        assert_eq!(gcd(-12, 18), 6);
    }

    proptest! {
        #[test]
        fn residue_is_canonical(r in -10_000i64..10_000, n in 1i64..500) {
            let v = residue(r, n).unwrap();
            prop_assert!((1..=n).contains(&v));
            prop_assert_eq!((v - r).rem_euclid(n), 0);
            prop_assert_eq!(residue(r + n, n).unwrap(), v);
        }

        #[test]
        fn ceil_strict_brackets(num in -10_000i64..10_000, den in 1i64..200) {
            let a = q(num, den);
            let c = ceil_strict(a).unwrap();
            let below = Rational::from_integer(c - 1);
            prop_assert!(below <= a && a < Rational::from_integer(c));
            prop_assert_eq!(below == a, a.is_integer());
        }

        #[test]
        fn addition_is_exact(an in -1000i64..1000, ad in 1i64..100, bn in -1000i64..1000, bd in 1i64..100) {
            let (a, b) = (q(an, ad), q(bn, bd));
            prop_assert_eq!(a.checked_add(b).unwrap().checked_sub(b).unwrap(), a);
            prop_assert_eq!(a.checked_mul(b).unwrap(), q(an * bn, ad * bd));
        }

        #[test]
        fn ordering_matches_cross_multiplication(an in -1000i64..1000, ad in 1i64..100, bn in -1000i64..1000, bd in 1i64..100) {
            prop_assert_eq!(q(an, ad).cmp(&q(bn, bd)), (an * bd).cmp(&(bn * ad)));
            prop_assert_eq!(cmp_fractions(an, ad, bn, bd), (an * bd).cmp(&(bn * ad)));
        }
    }
}
