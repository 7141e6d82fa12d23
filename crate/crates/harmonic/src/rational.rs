//! Exact rational arithmetic for index values and bound comparisons.
//!
//! Every inequality this crate certifies is strict or an exact equality, so
//! values are kept as arbitrary-precision rationals end to end. Floating
//! point appears only in display strings and in the Randic index.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// An exact rational, stored in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` reduced to lowest terms.
    ///
    /// Panics if `den` is zero; a zero denominator is a programming error,
    /// not a data error.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(k: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Canonical serialization: always `p/q` in lowest terms, `q > 0`,
    /// even for integers (`3/1`).
    pub fn exact(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Decimal rendering to 15 significant digits, rounded half away from
    /// zero, with trailing zeros trimmed so terminating expansions print
    /// exactly (`3/2` -> `1.5`). Values whose integer part already has 15 or
    /// more digits print that integer part in full rather than padding with
    /// fabricated zeros.
    pub fn decimal(&self) -> String {
        const SIG: u32 = 15;
        if self.0.is_zero() {
            return "0".to_owned();
        }
        let neg = self.0.is_negative();
        let num = self.0.numer().abs();
        let den = self.0.denom().clone();

        let int_part = &num / &den;
        let int_digits = if int_part.is_zero() {
            0
        } else {
            int_part.to_string().len() as u32
        };

        let frac_digits = if int_digits >= SIG {
            0
        } else if int_digits > 0 {
            SIG - int_digits
        } else {
            // leading zeros after the point do not count as significant
            let mut zeros = 0u32;
            let mut probe = &num * BigInt::from(10);
            while probe < den {
                zeros += 1;
                probe *= BigInt::from(10);
            }
            zeros + SIG
        };

        let scale = BigInt::from(10).pow(frac_digits);
        let scaled = &num * &scale;
        let mut q = &scaled / &den;
        let r = &scaled % &den;
        if &r * BigInt::from(2) >= den {
            q += 1;
        }

        let digits = q.to_string();
        let f = frac_digits as usize;
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        if digits.len() > f {
            out.push_str(&digits[..digits.len() - f]);
        } else {
            out.push('0');
        }
        if f > 0 {
            let frac = format!("{:0>width$}", &digits[digits.len().saturating_sub(f)..], width = f);
            let trimmed = frac.trim_end_matches('0');
            if !trimmed.is_empty() {
                out.push('.');
                out.push_str(trimmed);
            }
        }
        if out == "-0" {
            out.clear();
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        let mut acc = Rational::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

pub fn cmp_rationals(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}
