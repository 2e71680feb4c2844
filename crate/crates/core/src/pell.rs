//! The sequence `s(n,m)` behind powers of the singleton matrix `[n]`.
//!
//! `s(n,0) = 0`, `s(n,1) = 1`, `s(n,m+1) = (n+2)s(n,m) - s(n,m-1)`.  Powers
//! satisfy `[n]^m = s(n,m)[n] - s(n,m-1)id`, consecutive values solve the
//! Pell-style equation `x^2 - (n+2)xy + y^2 = 1`, and conversely every
//! nonnegative solution pair descends along the ladder `(x,y) -> (y,(n+2)y-x)`
//! to `(1,0)`.  Closed form over `Q(sqrt(n(n+4)))`:
//! `s(n,m) = (lambda^m - mu^m) / (lambda - mu)`, with the exact gap
//! `s(n,m) - lambda*s(n,m-1) = mu^(m-1)`, so the ratios `s(n,m)/s(n,m-1)`
//! converge exponentially to `lambda` from above.

use crate::mat2::Mat2;
use crate::quad::{self, QuadExt};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PellError {
    #[error("tally parameter n must be at least 1")]
    ZeroTally,
    #[error("({x}, {y}) does not satisfy x^2 - (n+2)xy + y^2 = 1 for n = {n}")]
    NotPellPair { n: u64, x: BigUint, y: BigUint },
    #[error("descent from ({x}, {y}) left the nonnegative quadrant")]
    NonLadderPair { x: BigUint, y: BigUint },
    #[error("index m must be at least 1")]
    IndexOutOfRange,
}

/// `s(n,m)` by iterating the recursion; exact and linear in `m`.
pub fn s_seq(n: u64, m: u64) -> Result<BigInt, PellError> {
    Ok(s_pair(n, m)?.0)
}

/// `(s(n,m), s(n,m-1))`, with the convention `s(n,-1) = -1` so that the pair
/// is defined at `m = 0`.
pub fn s_pair(n: u64, m: u64) -> Result<(BigInt, BigInt), PellError> {
    if n == 0 {
        return Err(PellError::ZeroTally);
    }
    let coeff = BigInt::from(n + 2);
    let mut prev = BigInt::from(-1); // s(n,-1)
    let mut cur = BigInt::zero(); // s(n,0)
    for _ in 0..m {
        let next = &coeff * &cur - &prev;
        prev = cur;
        cur = next;
    }
    Ok((cur, prev))
}

/// `[n]^m` through the explicit formula
/// `[[s(m)-s(m-1), n*s(m)], [s(m), (n+1)s(m)-s(m-1)]]`.
pub fn power_via_s(n: u64, m: u64) -> Result<Mat2, PellError> {
    let (s, s_prev) = s_pair(n, m)?;
    let n_big = BigInt::from(n);
    Ok(Mat2::new(
        &s - &s_prev,
        &n_big * &s,
        s.clone(),
        (n_big + 1) * &s - &s_prev,
    ))
}

/// Does `x^2 - (n+2)xy + y^2 = 1` hold?
pub fn pell_check(n: u64, x: &BigInt, y: &BigInt) -> bool {
    x * x - BigInt::from(n + 2) * x * y + y * y == BigInt::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    /// Index with `{x, y} = {s(n,m), s(n,m-1)}`; the base pair `(1,0)`
    /// reports `m = 1`.
    pub index: u64,
    /// Visited pairs, largest first, ending at `(1, 0)`.
    pub trace: Vec<(BigUint, BigUint)>,
}

/// Matiyasevich descent: order the pair so `x >= y`, then map
/// `(x, y) -> (y, (n+2)y - x)` until `(1, 0)`.
///
/// Rejects non-Pell inputs.  A Pell pair whose descent left the nonnegative
/// quadrant would contradict the converse direction (every solution pair is a
/// ladder pair), so that rejection is unreachable for valid input; the
/// exhaustive scans in the tests confirm it.
pub fn pell_descend(n: u64, x: &BigUint, y: &BigUint) -> Result<Descent, PellError> {
    if n == 0 {
        return Err(PellError::ZeroTally);
    }
    let (mut hi, mut lo) = if x >= y { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) };
    if !pell_check(n, &BigInt::from(hi.clone()), &BigInt::from(lo.clone())) {
        return Err(PellError::NotPellPair { n, x: x.clone(), y: y.clone() });
    }
    let coeff = BigUint::from(n + 2);
    let mut trace = vec![(hi.clone(), lo.clone())];
    let mut steps = 0u64;
    while !(hi.is_one() && lo.is_zero()) {
        let down = &coeff * &lo;
        if down < hi || lo >= hi {
            // (n+2)y - x < 0, or a non-decreasing step: not on the ladder.
            return Err(PellError::NonLadderPair { x: hi, y: lo });
        }
        let next = down - &hi;
        hi = std::mem::replace(&mut lo, next);
        trace.push((hi.clone(), lo.clone()));
        steps += 1;
    }
    Ok(Descent { index: steps + 1, trace })
}

/// `s(n,m)` from the closed form `(lambda^m - mu^m) / (lambda - mu)`,
/// computed exactly in `Q(sqrt(n(n+4)))`.
pub fn s_closed_form(n: u64, m: u64) -> Result<QuadExt, PellError> {
    let lambda = quad::lambda(n).map_err(|_| PellError::ZeroTally)?;
    let mu = quad::mu(n).map_err(|_| PellError::ZeroTally)?;
    let num = lambda.pow(m).try_sub(&mu.pow(m)).expect("same radicand");
    let den = lambda.try_sub(&mu).expect("same radicand");
    Ok(num.try_div(&den).expect("lambda - mu is nonzero for n >= 1"))
}

/// Exact eigenvalue identities at index `m >= 1`:
///
/// - closed form `s(n,m) = (lambda^m - mu^m)/(lambda - mu)` (also at `m-1`),
/// - gap `s(n,m) - lambda*s(n,m-1) = mu^(m-1)`,
/// - ratio form `s(n,m)/s(n,m-1) - lambda = mu^(m-1)/s(n,m-1)` whenever
///   `s(n,m-1)` is nonzero.
///
/// All checks run in `Q(sqrt(n(n+4)))` and the result is `true` only if every
/// identity holds exactly.
pub fn ratio_gap_identity(n: u64, m: u64) -> Result<bool, PellError> {
    if m == 0 {
        return Err(PellError::IndexOutOfRange);
    }
    let d = quad::eigen_radicand(n);
    let lambda = quad::lambda(n).map_err(|_| PellError::ZeroTally)?;
    let mu = quad::mu(n).map_err(|_| PellError::ZeroTally)?;
    let (s, s_prev) = s_pair(n, m)?;
    let s_q = QuadExt::from_integer(s.clone(), d.clone());
    let s_prev_q = QuadExt::from_integer(s_prev.clone(), d.clone());

    let closed = s_q == s_closed_form(n, m)?
        && s_prev_q == s_closed_form(n, m - 1)?;

    let gap_expected = mu.pow(m - 1);
    let gap = s_q.try_sub(&lambda.try_mul(&s_prev_q).expect("same radicand")).expect("same radicand");
    let gap_ok = gap == gap_expected;

    let ratio_ok = if s_prev.is_zero() {
        true
    } else {
        let ratio = s_q.try_div(&s_prev_q).expect("nonzero divisor");
        let lhs = ratio.try_sub(&lambda).expect("same radicand");
        let rhs = gap_expected.try_div(&s_prev_q).expect("nonzero divisor");
        lhs == rhs
    };

    Ok(closed && gap_ok && ratio_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn base_values() {
        for n in 1..10 {
            assert_eq!(s_seq(n, 0).unwrap(), BigInt::zero());
            assert_eq!(s_seq(n, 1).unwrap(), BigInt::one());
        }
        assert_eq!(s_seq(1, 2).unwrap(), BigInt::from(3));
        assert_eq!(s_seq(1, 3).unwrap(), BigInt::from(8));
        assert_eq!(s_seq(0, 5), Err(PellError::ZeroTally));
    }

    #[test]
    fn power_examples() {
        assert_eq!(power_via_s(4, 0).unwrap(), Mat2::identity());
        assert_eq!(power_via_s(4, 1).unwrap(), Mat2::singleton(&4u32.into()));
        assert_eq!(power_via_s(1, 2).unwrap(), Mat2::from_i64(2, 3, 3, 5));
    }

    #[test]
    fn power_matches_iterated_multiplication() {
        for n in 1..=6 {
            let single = Mat2::singleton(&n.into());
            for m in 0..=25 {
                assert_eq!(power_via_s(n, m).unwrap(), single.pow(m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn pell_identity_along_the_ladder() {
        for n in 1..=10 {
            for m in 1..=60 {
                let (s, s_prev) = s_pair(n, m).unwrap();
                assert!(pell_check(n, &s, &s_prev), "n={n} m={m}");
            }
        }
        assert!(pell_check(7, &BigInt::one(), &BigInt::zero()));
        assert!(!pell_check(1, &BigInt::from(2), &BigInt::one()));
    }

    #[test]
    fn descent_examples() {
        let d = pell_descend(1, &1u32.into(), &0u32.into()).unwrap();
        assert_eq!(d.index, 1);
        assert_eq!(d.trace, vec![(1u32.into(), 0u32.into())]);

        let d = pell_descend(1, &8u32.into(), &3u32.into()).unwrap();
        assert_eq!(d.index, 3);
        assert_eq!(
            d.trace,
            vec![(8u32.into(), 3u32.into()), (3u32.into(), 1u32.into()), (1u32.into(), 0u32.into())]
        );

        let d = pell_descend(3, &5u32.into(), &1u32.into()).unwrap();
        assert_eq!(d.index, 2);
    }

    #[test]
    fn descent_accepts_unordered_input() {
        let d = pell_descend(1, &3u32.into(), &8u32.into()).unwrap();
        assert_eq!(d.index, 3);
    }

    #[test]
    fn descent_rejects_non_pell_pairs() {
        assert!(matches!(
            pell_descend(1, &2u32.into(), &1u32.into()),
            Err(PellError::NotPellPair { .. })
        ));
    }

    #[test]
    fn descent_recovers_every_ladder_index() {
        for n in 1..=5 {
            for m in 1..=40 {
                let (s, s_prev) = s_pair(n, m).unwrap();
                let d = pell_descend(
                    n,
                    &s.to_biguint().unwrap(),
                    &s_prev.to_biguint().unwrap(),
                )
                .unwrap();
                assert_eq!(d.index, m, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn strict_growth() {
        for n in 1..=10u64 {
            let mut prev = s_seq(n, 1).unwrap();
            let base = BigInt::from(n + 1);
            let mut lower = BigInt::one();
            for m in 2..=80u64 {
                let cur = s_seq(n, m).unwrap();
                assert!(cur > prev, "n={n} m={m}");
                lower *= &base;
                assert!(cur >= lower, "growth at least (n+1)^(m-1): n={n} m={m}");
                prev = cur;
            }
        }
    }

    #[test]
    fn closed_form_and_gap() {
        assert!(s_closed_form(3, 0).unwrap().is_zero());
        for n in [1, 2, 5, 12] {
            for m in 1..=30 {
                assert!(ratio_gap_identity(n, m).unwrap(), "n={n} m={m}");
            }
        }
        assert_eq!(ratio_gap_identity(2, 0), Err(PellError::IndexOutOfRange));
    }
}
