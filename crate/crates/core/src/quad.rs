//! Exact arithmetic in `Q(sqrt(d))`.
//!
//! A [`QuadExt`] holds `r0 + r1*sqrt(d)` with exact rational coefficients and
//! a fixed nonnegative integer radicand `d`.  Operations on mismatched
//! radicands are rejected rather than coerced.  Signs and comparisons are
//! decided exactly by case analysis on the coefficient signs and comparison
//! of `r0^2` against `r1^2 * d`; no floating point is involved anywhere.
//!
//! The eigenvalues of the singleton matrix `[n] = [[1,n],[1,n+1]]` live here:
//! `lambda(n) = ((n+2) + sqrt(n(n+4)))/2` and `mu(n) = ((n+2) - sqrt(n(n+4)))/2`,
//! with `lambda*mu = 1` and `lambda + mu = n+2`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadError {
    #[error("radicand mismatch: sqrt({left}) vs sqrt({right})")]
    RadicandMismatch { left: BigUint, right: BigUint },
    #[error("division by zero in Q(sqrt(d))")]
    DivisionByZero,
    #[error("eigenvalues are degenerate for n = 0")]
    DegenerateEigenvalue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Exact element `r0 + r1*sqrt(d)` of `Q(sqrt(d))`.
///
/// Construction canonicalizes perfect-square radicands by folding `sqrt(d)`
/// into the rational part, so `r1 != 0` implies `sqrt(d)` is irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    r0: BigRational,
    r1: BigRational,
    d: BigUint,
}

impl QuadExt {
    pub fn new(r0: BigRational, r1: BigRational, d: BigUint) -> Self {
        let mut q = QuadExt { r0, r1, d };
        if !q.r1.is_zero() {
            let root = q.d.sqrt();
            if &root * &root == q.d {
                let root = BigRational::from_integer(root.into());
                q.r0 += &q.r1 * root;
                q.r1 = BigRational::zero();
            }
        }
        q
    }

    pub fn from_rational(r: BigRational, d: BigUint) -> Self {
        QuadExt::new(r, BigRational::zero(), d)
    }

    pub fn from_integer(i: BigInt, d: BigUint) -> Self {
        QuadExt::from_rational(BigRational::from_integer(i), d)
    }

    pub fn zero(d: BigUint) -> Self {
        QuadExt::from_integer(BigInt::zero(), d)
    }

    pub fn one(d: BigUint) -> Self {
        QuadExt::from_integer(BigInt::one(), d)
    }

    /// `sqrt(d)` itself as an element of `Q(sqrt(d))`.
    pub fn sqrt_d(d: BigUint) -> Self {
        QuadExt::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.r0
    }

    pub fn sqrt_coefficient(&self) -> &BigRational {
        &self.r1
    }

    pub fn radicand(&self) -> &BigUint {
        &self.d
    }

    fn check_radicand(&self, other: &QuadExt) -> Result<(), QuadError> {
        if self.d != other.d {
            return Err(QuadError::RadicandMismatch {
                left: self.d.clone(),
                right: other.d.clone(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QuadExt) -> Result<QuadExt, QuadError> {
        self.check_radicand(other)?;
        Ok(QuadExt::new(&self.r0 + &other.r0, &self.r1 + &other.r1, self.d.clone()))
    }

    pub fn try_sub(&self, other: &QuadExt) -> Result<QuadExt, QuadError> {
        self.check_radicand(other)?;
        Ok(QuadExt::new(&self.r0 - &other.r0, &self.r1 - &other.r1, self.d.clone()))
    }

    pub fn try_mul(&self, other: &QuadExt) -> Result<QuadExt, QuadError> {
        self.check_radicand(other)?;
        let d = BigRational::from_integer(BigInt::from(self.d.clone()));
        // (a + b sqrt(d))(c + e sqrt(d)) = ac + be d + (ae + bc) sqrt(d)
        Ok(QuadExt::new(
            &self.r0 * &other.r0 + &self.r1 * &other.r1 * d,
            &self.r0 * &other.r1 + &self.r1 * &other.r0,
            self.d.clone(),
        ))
    }

    pub fn try_div(&self, other: &QuadExt) -> Result<QuadExt, QuadError> {
        self.try_mul(&other.inverse()?)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            r0: -self.r0.clone(),
            r1: -self.r1.clone(),
            d: self.d.clone(),
        }
    }

    /// Multiplicative inverse via the conjugate: `1/(a + b sqrt(d)) =
    /// (a - b sqrt(d)) / (a^2 - b^2 d)`.  The norm is nonzero for any
    /// nonzero element because canonicalization keeps `d` square-free of
    /// perfect squares whenever `r1 != 0`.
    pub fn inverse(&self) -> Result<QuadExt, QuadError> {
        if self.is_zero() {
            return Err(QuadError::DivisionByZero);
        }
        let d = BigRational::from_integer(BigInt::from(self.d.clone()));
        let norm = &self.r0 * &self.r0 - &self.r1 * &self.r1 * d;
        debug_assert!(!norm.is_zero());
        Ok(QuadExt::new(&self.r0 / &norm, -(&self.r1 / &norm), self.d.clone()))
    }

    /// `m`-fold product of `self`.
    pub fn pow(&self, m: u64) -> QuadExt {
        let mut acc = QuadExt::one(self.d.clone());
        for _ in 0..m {
            acc = acc.try_mul(self).expect("radicand is fixed");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r0.is_one() && self.r1.is_zero()
    }

    /// Exact sign of `r0 + r1*sqrt(d)`.
    pub fn sign(&self) -> Sign {
        let s0 = rational_sign(&self.r0);
        let s1 = rational_sign(&self.r1);
        match (s0, s1) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (a, b) if a == b => a,
            _ => {
                // Opposite signs: the larger of r0^2 and r1^2*d decides.
                let lhs = &self.r0 * &self.r0;
                let rhs =
                    &self.r1 * &self.r1 * BigRational::from_integer(BigInt::from(self.d.clone()));
                match lhs.cmp(&rhs) {
                    Ordering::Greater => s0,
                    Ordering::Less => s1,
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    pub fn compare(&self, other: &QuadExt) -> Result<Ordering, QuadError> {
        Ok(match self.try_sub(other)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }
}

fn rational_sign(r: &BigRational) -> Sign {
    if r.is_zero() {
        Sign::Zero
    } else if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Radicand `n(n+4)` of the eigenvalue field for the singleton `[n]`.
pub fn eigen_radicand(n: u64) -> BigUint {
    BigUint::from(n) * BigUint::from(n + 4)
}

/// Larger eigenvalue `lambda(n) = ((n+2) + sqrt(n(n+4)))/2` of `[n]`.
///
/// Rejects `n = 0`, where both eigenvalues collapse to 1.
pub fn lambda(n: u64) -> Result<QuadExt, QuadError> {
    if n == 0 {
        return Err(QuadError::DegenerateEigenvalue);
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(QuadExt::new(
        BigRational::from_integer(BigInt::from(n + 2)) * &half,
        half,
        eigen_radicand(n),
    ))
}

/// Smaller eigenvalue `mu(n) = ((n+2) - sqrt(n(n+4)))/2` of `[n]`.
pub fn mu(n: u64) -> Result<QuadExt, QuadError> {
    if n == 0 {
        return Err(QuadError::DegenerateEigenvalue);
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Ok(QuadExt::new(
        BigRational::from_integer(BigInt::from(n + 2)) * &half,
        -half,
        eigen_radicand(n),
    ))
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.r0, self.r1, self.d)
    }
}
