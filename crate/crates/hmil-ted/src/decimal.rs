//! Arbitrary-precision decimal numbers.
//!
//! JSON numbers are kept in exact decimal form so that label equality is
//! well defined: `1.0`, `1` and `10e-1` are the same number. Two decimals
//! are equal iff their values are equal, regardless of how they were
//! written in the source document.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, Zero};

/// Largest permitted |exponent| in a parsed number. Beyond this, aligning
/// two decimals for subtraction could allocate unbounded big integers.
pub const MAX_EXPONENT: i64 = 1_000_000;

/// An exact decimal: `mantissa * 10^exponent`.
///
/// Normalized so that equal values have equal representations: a zero
/// mantissa forces a zero exponent, and a non-zero mantissa is never
/// divisible by ten.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decimal {
    mantissa: BigInt,
    exponent: i64,
}

impl Decimal {
    pub fn new(mantissa: BigInt, exponent: i64) -> Decimal {
        let mut d = Decimal { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn zero() -> Decimal {
        Decimal { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let ten = BigInt::from(10);
        loop {
            let (q, r) = num::Integer::div_rem(&self.mantissa, &ten);
            if !r.is_zero() {
                break;
            }
            self.mantissa = q;
            self.exponent += 1;
        }
    }

    /// The value as an exact rational.
    pub fn to_rational(&self) -> BigRational {
        let ten = BigInt::from(10);
        if self.exponent >= 0 {
            let scale = num::pow::pow(ten, self.exponent as usize);
            BigRational::from_integer(&self.mantissa * scale)
        } else {
            let scale = num::pow::pow(ten, (-self.exponent) as usize);
            BigRational::new(self.mantissa.clone(), scale)
        }
    }

    /// `|self - other|`, exact.
    pub fn abs_diff(&self, other: &Decimal) -> Decimal {
        let e = self.exponent.min(other.exponent);
        let ten = BigInt::from(10);
        let a = &self.mantissa * num::pow::pow(ten.clone(), (self.exponent - e) as usize);
        let b = &other.mantissa * num::pow::pow(ten, (other.exponent - e) as usize);
        Decimal::new((a - b).abs(), e)
    }
}

impl From<i64> for Decimal {
    fn from(v: i64) -> Decimal {
        Decimal::new(BigInt::from(v), 0)
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Decimal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Decimal) -> Ordering {
        // Aligning to the smaller exponent reduces this to big-integer
        // comparison, which handles signs on its own.
        let e = self.exponent.min(other.exponent);
        let ten = BigInt::from(10);
        let a = &self.mantissa * num::pow::pow(ten.clone(), (self.exponent - e) as usize);
        let b = &other.mantissa * num::pow::pow(ten, (other.exponent - e) as usize);
        a.cmp(&b)
    }
}

/// Width threshold below which the plain (non-scientific) form is used.
const PLAIN_ZEROS: i64 = 20;

impl fmt::Display for Decimal {
    /// Canonical rendering: always a valid JSON number, and parsing it back
    /// yields an equal `Decimal`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let digits = self.mantissa.magnitude().to_string();
        let sign = if self.mantissa.is_negative() { "-" } else { "" };
        if self.exponent == 0 {
            write!(f, "{sign}{digits}")
        } else if self.exponent > 0 {
            if self.exponent <= PLAIN_ZEROS {
                write!(f, "{sign}{digits}{}", "0".repeat(self.exponent as usize))
            } else {
                write!(f, "{sign}{digits}e{}", self.exponent)
            }
        } else {
            let k = (-self.exponent) as usize;
            let n = digits.len();
            if k < n {
                write!(f, "{sign}{}.{}", &digits[..n - k], &digits[n - k..])
            } else if (k - n) as i64 <= PLAIN_ZEROS {
                write!(f, "{sign}0.{}{}", "0".repeat(k - n), digits)
            } else {
                write!(f, "{sign}{digits}e{}", self.exponent)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(m: i64, e: i64) -> Decimal {
        Decimal::new(BigInt::from(m), e)
    }

    #[test]
    fn equality_ignores_representation() {
        assert_eq!(dec(10, -1), dec(1, 0)); // 1.0 == 1
        assert_eq!(dec(100, -2), dec(1, 0));
        assert_eq!(dec(12, 2), dec(1200, 0));
        assert_eq!(dec(0, 5), dec(0, -3)); // 0e5 == 0e-3
        assert_ne!(dec(1, 0), dec(-1, 0));
    }

    #[test]
    fn ordering() {
        assert!(dec(-1, 0) < dec(0, 0));
        assert!(dec(1, 0) < dec(15, -1)); // 1 < 1.5
        assert!(dec(15, -1) < dec(2, 0));
        assert!(dec(99, 0) < dec(1, 2)); // 99 < 100
        assert!(dec(-2, 0) < dec(-1, 0));
    }

    #[test]
    fn abs_diff_is_exact() {
        assert_eq!(dec(2, 0).abs_diff(&dec(5, 0)), dec(3, 0));
        assert_eq!(dec(5, 0).abs_diff(&dec(2, 0)), dec(3, 0));
        assert_eq!(dec(15, -1).abs_diff(&dec(1, 0)), dec(5, -1)); // |1.5-1| = 0.5
        assert_eq!(dec(1, 0).abs_diff(&dec(1, 0)), Decimal::zero());
        // 0.1 - 0.03 = 0.07 without binary-float noise
        assert_eq!(dec(1, -1).abs_diff(&dec(3, -2)), dec(7, -2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(dec(0, 0).to_string(), "0");
        assert_eq!(dec(42, 0).to_string(), "42");
        assert_eq!(dec(-42, 0).to_string(), "-42");
        assert_eq!(dec(15, -1).to_string(), "1.5");
        assert_eq!(dec(5, -1).to_string(), "0.5");
        assert_eq!(dec(5, -3).to_string(), "0.005");
        assert_eq!(dec(12, 3).to_string(), "12000");
        assert_eq!(dec(3, 40).to_string(), "3e40");
        assert_eq!(dec(-3, -40).to_string(), "-3e-40");
    }

    #[test]
    fn to_rational_matches() {
        let r = dec(15, -1).to_rational();
        assert_eq!(r, BigRational::new(BigInt::from(3), BigInt::from(2)));
    }
}
