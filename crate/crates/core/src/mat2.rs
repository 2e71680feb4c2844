//! Exact 2x2 integer matrices.
//!
//! `Mat2` is the carrier of all coded syntax in this crate.  Entries are
//! arbitrary-precision integers in row-major order (`m01` is top-right).
//! Membership in `SL2(N)` means determinant exactly 1 and all entries
//! nonnegative.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::Mul;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Mat2Error {
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("matrix has a negative entry")]
    NegativeEntry,
}

/// 2x2 integer matrix, row-major: `[[m00, m01], [m10, m11]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub m00: BigInt,
    pub m01: BigInt,
    pub m10: BigInt,
    pub m11: BigInt,
}

impl Mat2 {
    pub fn new(m00: BigInt, m01: BigInt, m10: BigInt, m11: BigInt) -> Self {
        Mat2 { m00, m01, m10, m11 }
    }

    pub fn from_i64(m00: i64, m01: i64, m10: i64, m11: i64) -> Self {
        Mat2::new(m00.into(), m01.into(), m10.into(), m11.into())
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    /// The generator `A = [[1,1],[0,1]]`.
    pub fn gen_a() -> Self {
        Mat2::from_i64(1, 1, 0, 1)
    }

    /// The generator `B = [[1,0],[1,1]]`.
    pub fn gen_b() -> Self {
        Mat2::from_i64(1, 0, 1, 1)
    }

    /// Tally matrix `A^n = [[1,n],[0,1]]`.
    pub fn tally(n: &BigUint) -> Self {
        Mat2::new(BigInt::one(), BigInt::from(n.clone()), BigInt::zero(), BigInt::one())
    }

    /// Singleton ur-string `[n] = B A^n = [[1,n],[1,n+1]]`.
    pub fn singleton(n: &BigUint) -> Self {
        let n = BigInt::from(n.clone());
        Mat2::new(BigInt::one(), n.clone(), BigInt::one(), n + 1)
    }

    pub fn det(&self) -> BigInt {
        &self.m00 * &self.m11 - &self.m01 * &self.m10
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    pub fn is_nonneg(&self) -> bool {
        !self.m00.is_negative()
            && !self.m01.is_negative()
            && !self.m10.is_negative()
            && !self.m11.is_negative()
    }

    /// Membership in `SL2(N)`: determinant 1 and nonnegative entries.
    pub fn is_sl2n(&self) -> bool {
        self.is_nonneg() && self.is_unimodular()
    }

    pub fn is_identity(&self) -> bool {
        self.m00.is_one() && self.m01.is_zero() && self.m10.is_zero() && self.m11.is_one()
    }

    /// Inverse of a determinant-1 matrix: the adjugate `[[m11,-m01],[-m10,m00]]`.
    pub fn inverse(&self) -> Result<Mat2, Mat2Error> {
        let det = self.det();
        if !det.is_one() {
            return Err(Mat2Error::NotUnimodular(det));
        }
        Ok(Mat2::new(
            self.m11.clone(),
            -self.m01.clone(),
            -self.m10.clone(),
            self.m00.clone(),
        ))
    }

    /// `m`-fold product of `self`, by iterated multiplication.
    pub fn pow(&self, m: u64) -> Mat2 {
        let mut acc = Mat2::identity();
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    pub fn entry_sum(&self) -> BigInt {
        &self.m00 + &self.m01 + &self.m10 + &self.m11
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.m00 * &rhs.m00 + &self.m01 * &rhs.m10,
            &self.m00 * &rhs.m01 + &self.m01 * &rhs.m11,
            &self.m10 * &rhs.m00 + &self.m11 * &rhs.m10,
            &self.m10 * &rhs.m01 + &self.m11 * &rhs.m11,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m00, self.m01, self.m10, self.m11)
    }
}

// Entries go over the wire as decimal strings: they routinely exceed any
// native integer width.
impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Mat2", 4)?;
        st.serialize_field("m00", &self.m00.to_string())?;
        st.serialize_field("m01", &self.m01.to_string())?;
        st.serialize_field("m10", &self.m10.to_string())?;
        st.serialize_field("m11", &self.m11.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            m00: String,
            m01: String,
            m10: String,
            m11: String,
        }
        let raw = Raw::deserialize(deserializer)?;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| D::Error::custom(format!("invalid integer entry: {s:?}")))
        };
        Ok(Mat2::new(
            parse(&raw.m00)?,
            parse(&raw.m01)?,
            parse(&raw.m10)?,
            parse(&raw.m11)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_sl2n(rng: &mut StdRng, len: usize) -> Mat2 {
        let mut m = Mat2::identity();
        for _ in 0..len {
            let g = if rng.gen_bool(0.5) { Mat2::gen_a() } else { Mat2::gen_b() };
            m = &m * &g;
        }
        m
    }

    #[test]
    fn product_of_generators() {
        let ab = &Mat2::gen_a() * &Mat2::gen_b();
        assert_eq!(ab, Mat2::from_i64(2, 1, 1, 1));
    }

    #[test]
    fn identity_is_neutral() {
        let m = Mat2::from_i64(3, 8, 4, 11);
        assert_eq!(&m * &Mat2::identity(), m);
        assert_eq!(&Mat2::identity() * &m, m);
    }

    #[test]
    fn singleton_squared() {
        let one = Mat2::singleton(&1u32.into());
        assert_eq!(one, Mat2::from_i64(1, 1, 1, 2));
        assert_eq!(&one * &one, Mat2::from_i64(2, 3, 3, 5));
    }

    #[test]
    fn inverse_of_generators() {
        assert_eq!(Mat2::gen_a().inverse().unwrap(), Mat2::from_i64(1, -1, 0, 1));
        assert_eq!(Mat2::gen_b().inverse().unwrap(), Mat2::from_i64(1, 0, -1, 1));
        assert_eq!(Mat2::identity().inverse().unwrap(), Mat2::identity());
    }

    #[test]
    fn inverse_rejects_other_determinants() {
        let m = Mat2::from_i64(2, 0, 0, 1);
        assert_eq!(m.inverse(), Err(Mat2Error::NotUnimodular(2.into())));
    }

    #[test]
    fn determinant_multiplicative_and_inverse_cancels() {
        let mut rng = StdRng::seed_from_u64(0x5eed_1);
        for _ in 0..1000 {
            let (la, lb) = (rng.gen_range(0..40), rng.gen_range(0..40));
            let a = random_sl2n(&mut rng, la);
            let b = random_sl2n(&mut rng, lb);
            assert!((&a * &b).is_unimodular());
            assert_eq!(&a * &a.inverse().unwrap(), Mat2::identity());
        }
    }

    #[test]
    fn pow_matches_iterated_product() {
        let m = Mat2::singleton(&3u32.into());
        assert_eq!(m.pow(0), Mat2::identity());
        assert_eq!(m.pow(1), m);
        assert_eq!(m.pow(4), &(&(&m * &m) * &m) * &m);
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let m = Mat2::new(
            "123456789012345678901234567890".parse().unwrap(),
            1.into(),
            (-7).into(),
            0.into(),
        );
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"m00\":\"123456789012345678901234567890\""));
        assert_eq!(serde_json::from_str::<Mat2>(&json).unwrap(), m);
    }
}
