//! Exact non-negative rationals for PoC values and thresholds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a fraction p/q")]
    Parse(String),
}

/// Reduced fraction with positive denominator. Ordering is exact
/// (cross-multiplication), never via floating point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(BigRational);

impl Ratio {
    pub fn new(numer: u64, denom: u64) -> Result<Ratio, RatioError> {
        if denom == 0 {
            return Err(RatioError::ZeroDenominator);
        }
        Ok(Ratio(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    pub fn integer(v: u64) -> Ratio {
        Ratio(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one() -> Ratio {
        Self::integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Display-only decimal value.
    pub fn approx(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `2 - 1/t` for a positive integer `t`.
    pub fn two_minus_reciprocal(t: u64) -> Ratio {
        assert!(t > 0);
        Ratio::new(2 * t - 1, t).expect("t > 0")
    }
}

impl std::ops::Mul for &Ratio {
    type Output = Ratio;
    fn mul(self, rhs: &Ratio) -> Ratio {
        Ratio(&self.0 * &rhs.0)
    }
}

impl std::ops::Add for &Ratio {
    type Output = Ratio;
    fn add(self, rhs: &Ratio) -> Ratio {
        Ratio(&self.0 + &rhs.0)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Ratio {
    type Err = RatioError;

    fn from_str(s: &str) -> Result<Ratio, RatioError> {
        let bad = || RatioError::Parse(s.to_string());
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(RatioError::ZeroDenominator);
        }
        if p < BigInt::zero() || q < BigInt::zero() {
            return Err(bad());
        }
        Ok(Ratio(BigRational::new(p, q)))
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_ordered() {
        let a = Ratio::new(6, 4).unwrap();
        assert_eq!(a.to_string(), "3/2");
        assert_eq!(a, "3/2".parse().unwrap());
        let b = Ratio::new(4, 3).unwrap();
        assert!(b < a);
        assert!(Ratio::one() < b);
        assert_eq!(Ratio::two_minus_reciprocal(3), Ratio::new(5, 3).unwrap());
        assert_eq!(Ratio::new(1, 0), Err(RatioError::ZeroDenominator));
        assert!("x/2".parse::<Ratio>().is_err());
        assert_eq!("2".parse::<Ratio>().unwrap(), Ratio::integer(2));
    }

    #[test]
    fn near_ties_are_exact() {
        // 1e15+1 / 1e15 vs 1e15+2 / 1e15+1 differ below f64 resolution.
        let big = 1_000_000_000_000_000u64;
        let x = Ratio::new(big + 1, big).unwrap();
        let y = Ratio::new(big + 2, big + 1).unwrap();
        assert!(y < x);
    }
}
