//! Exact natural numbers for group orders and indices.

use std::fmt;
use std::ops::{Div, Mul};
use std::str::FromStr;

use num_bigint::BigUint;

/// Arbitrary-precision natural number. Orders such as `80!/2` are far beyond
/// machine words, so every order comparison in the toolkit goes through this.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn one() -> Self {
        BigCount(BigUint::from(1u8))
    }

    pub fn factorial(n: u64) -> Self {
        let mut acc = BigUint::from(1u8);
        for k in 2..=n {
            acc *= k;
        }
        BigCount(acc)
    }

    /// Exact division; `None` when `divisor` does not divide `self` or is zero.
    pub fn checked_div_exact(&self, divisor: &BigCount) -> Option<BigCount> {
        if divisor.0 == BigUint::from(0u8) {
            return None;
        }
        let q = &self.0 / &divisor.0;
        if &q * &divisor.0 == self.0 {
            Some(BigCount(q))
        } else {
            None
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }

    pub fn le_u64(&self, cap: u64) -> bool {
        self.0 <= BigUint::from(cap)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Mul for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigCount> for &'a BigCount {
    type Output = BigCount;
    fn mul(self, rhs: &BigCount) -> BigCount {
        BigCount(&self.0 * &rhs.0)
    }
}

impl Mul<u64> for BigCount {
    type Output = BigCount;
    fn mul(self, rhs: u64) -> BigCount {
        BigCount(self.0 * rhs)
    }
}

/// Floor division. Use [`BigCount::checked_div_exact`] when exactness matters.
impl Div<u64> for BigCount {
    type Output = BigCount;
    fn div(self, rhs: u64) -> BigCount {
        BigCount(self.0 / rhs)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BigCount {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s).map(BigCount)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(BigCount::factorial(0), 1u64);
        assert_eq!(BigCount::factorial(5), 120u64);
        assert_eq!(BigCount::factorial(20), 2_432_902_008_176_640_000u64);
    }

    #[test]
    fn exact_division() {
        let a = BigCount::factorial(80);
        let b = BigCount::factorial(79);
        assert_eq!(a.checked_div_exact(&b), Some(BigCount::from(80u64)));
        assert_eq!(BigCount::from(7u64).checked_div_exact(&BigCount::from(2u64)), None);
        assert_eq!(BigCount::from(7u64).checked_div_exact(&BigCount::from(0u64)), None);
    }

    #[test]
    fn huge_values_compare_exactly() {
        let half = BigCount::factorial(80) / 2;
        assert!(!half.le_u64(u64::MAX));
        assert!(half.to_u64().is_none());
        assert_eq!(half.clone() * 2, BigCount::factorial(80));
    }
}
