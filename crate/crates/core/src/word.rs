//! Words over `{A, B}` and the Nielsen bijection with `SL2(N)`.
//!
//! [`encode`] multiplies generator matrices in word order; the empty word is
//! the identity matrix.  [`decode`] recovers the unique word by peeling
//! letters from the left: if row 0 dominates row 1 entrywise the first letter
//! is `A`, if row 1 dominates row 0 it is `B`, and the two cases are exclusive
//! and exhaustive for non-identity elements of `SL2(N)`.

use crate::mat2::Mat2;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid letter {0:?}: words use the alphabet {{A, B}}")]
    InvalidLetter(char),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("cannot decode: {0}")]
    NotUnimodular(#[from] crate::mat2::Mat2Error),
    #[error("cannot decode a matrix with a negative entry")]
    NegativeEntry,
    #[error("no peel case applies; input was not in SL2(N)")]
    Stuck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn matrix(self) -> Mat2 {
        match self {
            Letter::A => Mat2::gen_a(),
            Letter::B => Mat2::gen_b(),
        }
    }
}

/// Finite word over `{A, B}`; may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `A^n`.
    pub fn tally(n: usize) -> Word {
        Word(vec![Letter::A; n])
    }

    /// Prefix of the first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    /// Suffix starting at letter `k`.
    pub fn suffix_from(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'A' => Ok(Letter::A),
                'B' => Ok(Letter::B),
                other => Err(WordError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.0 {
            match letter {
                Letter::A => f.write_str("A")?,
                Letter::B => f.write_str("B")?,
            }
        }
        Ok(())
    }
}

/// Product of the generator matrices in word order; the empty word maps to
/// the identity.  A monoid homomorphism: `encode(uv) = encode(u) * encode(v)`.
pub fn encode(word: &Word) -> Mat2 {
    let mut m = Mat2::identity();
    for letter in &word.0 {
        m = &m * &letter.matrix();
    }
    m
}

/// The unique word with `encode(decode(m)) = m`, for `m` in `SL2(N)`.
///
/// Peels prefix letters: each step subtracts one row from the other, strictly
/// decreasing the entry sum, so the loop terminates.
pub fn decode(m: &Mat2) -> Result<Word, DecodeError> {
    if !m.is_nonneg() {
        return Err(DecodeError::NegativeEntry);
    }
    let det = m.det();
    if !num_traits::One::is_one(&det) {
        return Err(DecodeError::NotUnimodular(crate::mat2::Mat2Error::NotUnimodular(det)));
    }
    let mut m = m.clone();
    let mut letters = Vec::new();
    while !m.is_identity() {
        if m.m00 >= m.m10 && m.m01 >= m.m11 {
            // row 0 >= row 1: first letter A; A^{-1} * m subtracts row 1 from row 0.
            letters.push(Letter::A);
            m.m00 -= &m.m10;
            m.m01 -= &m.m11;
        } else if m.m10 >= m.m00 && m.m11 >= m.m01 {
            letters.push(Letter::B);
            m.m10 -= &m.m00;
            m.m11 -= &m.m01;
        } else {
            return Err(DecodeError::Stuck);
        }
    }
    Ok(Word(letters))
}

/// All words of length up to `max_len`, shortest first, `A` before `B`.
pub fn words_up_to(max_len: usize) -> Vec<Word> {
    assert!(max_len < 32, "exhaustive word enumeration is meant for small lengths");
    let mut out = Vec::new();
    for len in 0..=max_len {
        for bits in 0u64..(1u64 << len) {
            let letters = (0..len)
                .map(|i| if bits >> (len - 1 - i) & 1 == 0 { Letter::A } else { Letter::B })
                .collect();
            out.push(Word(letters));
        }
    }
    out
}
