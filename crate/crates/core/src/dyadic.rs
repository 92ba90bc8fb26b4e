//! Exact dyadic rationals `m / 2^k`.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// `mantissa / 2^exponent`, normalized so the mantissa is odd unless `exponent == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: u32,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exponent: u32) -> Self {
        let mut d = Dyadic {
            mantissa: mantissa.into(),
            exponent,
        };
        d.normalize();
        d
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn zero() -> Self {
        Dyadic::integer(0)
    }

    /// `2^-k`.
    pub fn pow2_neg(k: u32) -> Self {
        Dyadic::new(1, k)
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0).min(self.exponent as u64) as u32;
        if tz > 0 {
            self.mantissa >>= tz;
            self.exponent -= tz;
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn denominator(&self) -> BigUint {
        BigUint::one() << self.exponent
    }

    /// Binary logarithm of the denominator.
    pub fn denominator_exponent(&self) -> u32 {
        self.exponent
    }

    /// Multiplies by `2^-k`.
    pub fn shr(&self, k: u32) -> Dyadic {
        Dyadic::new(self.mantissa.clone(), self.exponent + k)
    }

    pub fn mul_int(&self, k: i64) -> Dyadic {
        Dyadic::new(&self.mantissa * k, self.exponent)
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// Mantissas of `self` and `other` over the common denominator; only the
    /// one with the smaller exponent is shifted.
    fn aligned<'a>(&'a self, other: &'a Dyadic) -> (Cow<'a, BigInt>, Cow<'a, BigInt>, u32) {
        match self.exponent.cmp(&other.exponent) {
            Ordering::Equal => (Cow::Borrowed(&self.mantissa), Cow::Borrowed(&other.mantissa), self.exponent),
            Ordering::Less => (
                Cow::Owned(&self.mantissa << (other.exponent - self.exponent)),
                Cow::Borrowed(&other.mantissa),
                other.exponent,
            ),
            Ordering::Greater => (
                Cow::Borrowed(&self.mantissa),
                Cow::Owned(&other.mantissa << (self.exponent - other.exponent)),
                self.exponent,
            ),
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.mantissa.sign(), other.mantissa.sign());
        if a != b {
            return a.cmp(&b);
        }
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a.as_ref() + b.as_ref(), e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a.as_ref() - b.as_ref(), e)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}/{}", self.mantissa, self.denominator())
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `n`, `-n`, or `n/d` with `d` a power of two.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::NotDyadic(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigUint = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        let g = BigInt::from(den.clone()).gcd(&num);
        let den = den / g.magnitude();
        let num = num / &g;
        let k = den.trailing_zeros().unwrap_or(0);
        if den != BigUint::one() << k {
            return Err(bad());
        }
        Ok(Dyadic::new(num, k as u32))
    }
}
