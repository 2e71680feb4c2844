//! Quantifier-free predicates on `SL2(N)` and the ur-string structure.
//!
//! An ur-string codes a finite sequence `n0, ..., n_{k-1}` of naturals as the
//! product `B A^{n0} ... B A^{n_{k-1}}`: a multiset with ordered occurrences
//! rather than a positional sequence.  The substring orders, the ur-string
//! recognizer, and the occurrence predicate below are all quantifier-free in
//! the matrix entries; decode-based string semantics serve as an independent
//! oracle in the tests.

use crate::mat2::Mat2;
use crate::word::{decode, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UrError {
    #[error("matrix is not an ur-string")]
    NotUrString,
    #[error("editors split requires a*b = c*d")]
    FactorizationMismatch,
    #[error("matrix is not in SL2(N)")]
    NotSl2n,
}

/// Candidate budget for bounded matrix enumeration.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("candidate budget exhausted")]
pub struct BudgetExhausted;

/// Entrywise `<=` on all four entries.
pub fn leq_entrywise(a: &Mat2, b: &Mat2) -> bool {
    a.m00 <= b.m00 && a.m01 <= b.m01 && a.m10 <= b.m10 && a.m11 <= b.m11
}

/// Strict entrywise order: `<=` and not equal.
pub fn lt_entrywise(a: &Mat2, b: &Mat2) -> bool {
    leq_entrywise(a, b) && a != b
}

/// `a` is an initial substring of `b`: there is `g` with `b = a*g` in
/// `SL2(N)`.  Equivalently `a^{-1} * b` has nonnegative entries, which the
/// four products below express without computing the inverse.
pub fn is_initial(a: &Mat2, b: &Mat2) -> bool {
    &a.m11 * &b.m00 >= &a.m01 * &b.m10
        && &a.m11 * &b.m01 >= &a.m01 * &b.m11
        && &a.m00 * &b.m10 >= &a.m10 * &b.m00
        && &a.m00 * &b.m11 >= &a.m10 * &b.m01
}

/// `a` is an end substring of `b`: there is `g` with `b = g*a`, i.e.
/// `b * a^{-1}` has nonnegative entries.
pub fn is_final(a: &Mat2, b: &Mat2) -> bool {
    &b.m00 * &a.m11 >= &b.m01 * &a.m10
        && &b.m01 * &a.m00 >= &b.m00 * &a.m01
        && &b.m10 * &a.m11 >= &b.m11 * &a.m10
        && &b.m11 * &a.m00 >= &b.m10 * &a.m01
}

/// `a` codes an ur-string: it is the identity or has `B` as initial substring.
pub fn is_ur(a: &Mat2) -> bool {
    a.is_identity() || is_initial(&Mat2::gen_b(), a)
}

/// Initial substring in the ur-string order: `a` is initial in `b`, `a` is an
/// ur-string, and so is the residual `a^{-1} b`.  Implies that `b` is an
/// ur-string.
pub fn ur_initial(a: &Mat2, b: &Mat2) -> bool {
    if !is_initial(a, b) {
        return false;
    }
    if !is_ur(a) {
        return false;
    }
    let residual = match a.inverse() {
        Ok(inv) => &inv * b,
        Err(_) => return false,
    };
    is_ur(&residual)
}

/// End substring in the ur-string order, mirror of [`ur_initial`].
pub fn ur_final(a: &Mat2, b: &Mat2) -> bool {
    if !is_final(a, b) {
        return false;
    }
    if !is_ur(a) {
        return false;
    }
    let residual = match a.inverse() {
        Ok(inv) => b * &inv,
        Err(_) => return false,
    };
    is_ur(&residual)
}

/// `a` is an occurrence of `n` in `b`: `a` is an ur-initial substring of `b`
/// ending in the singleton `[n]`.
pub fn occurs(a: &Mat2, n: &BigUint, b: &Mat2) -> bool {
    ur_initial(a, b) && ur_final(&Mat2::singleton(n), a)
}

/// Element list `n0, ..., n_{k-1}` of the ur-string `b = [n0]...[n_{k-1}]`.
///
/// Peels one `B` and then a whole tally block per round, using integer
/// division for the block length; this agrees letter-for-letter with naive
/// decoding but stays linear in the number of blocks even when the coded
/// numbers are huge.
pub fn elements(b: &Mat2) -> Result<Vec<BigUint>, UrError> {
    if !b.is_sl2n() {
        return Err(UrError::NotSl2n);
    }
    if !is_ur(b) {
        return Err(UrError::NotUrString);
    }
    let mut m = b.clone();
    let mut out = Vec::new();
    while !m.is_identity() {
        // Leading letter is B: subtract row 0 from row 1.
        m.m10 -= &m.m00;
        m.m11 -= &m.m01;
        // Tally block length: the number of times row 1 fits under row 0.
        let mut run: Option<BigInt> = None;
        if m.m10 > BigInt::zero() {
            run = Some(&m.m00 / &m.m10);
        }
        if m.m11 > BigInt::zero() {
            let q = &m.m01 / &m.m11;
            run = Some(match run {
                Some(r) => r.min(q),
                None => q,
            });
        }
        let run = run.ok_or(UrError::NotUrString)?;
        m.m00 -= &run * &m.m10;
        m.m01 -= &run * &m.m11;
        out.push(run.to_biguint().ok_or(UrError::NotUrString)?);
    }
    Ok(out)
}

/// For each occurrence position `i`, the prefix matrix `[n0]...[ni]` paired
/// with the element `ni`.  These are exactly the witnesses that make
/// [`occurs`] true.
pub fn occurrence_prefixes(b: &Mat2) -> Result<Vec<(Mat2, BigUint)>, UrError> {
    let elems = elements(b)?;
    let mut prefix = Mat2::identity();
    let mut out = Vec::with_capacity(elems.len());
    for n in elems {
        prefix = &prefix * &Mat2::singleton(&n);
        out.push((prefix.clone(), n));
    }
    Ok(out)
}

/// Which factor absorbs the mediating string `eta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitSide {
    /// `a = c * eta` and `eta * b = d`.
    Left,
    /// `a * eta = c` and `b = eta * d`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditorsSplit {
    pub eta: Mat2,
    pub side: SplitSide,
}

/// Tarski's Editors property: from `a*b = c*d` produce the mediating `eta`
/// with `a = c*eta, eta*b = d` or `a*eta = c, b = eta*d`.  The longer of the
/// two decoded prefixes determines the side.
pub fn editors_split(a: &Mat2, b: &Mat2, c: &Mat2, d: &Mat2) -> Result<EditorsSplit, UrError> {
    if a * b != c * d {
        return Err(UrError::FactorizationMismatch);
    }
    let wa = decode(a).map_err(|_| UrError::NotSl2n)?;
    let wc = decode(c).map_err(|_| UrError::NotSl2n)?;
    decode(b).map_err(|_| UrError::NotSl2n)?;
    decode(d).map_err(|_| UrError::NotSl2n)?;
    if wa.len() >= wc.len() {
        // c is a prefix of a
        let eta = &c.inverse().map_err(|_| UrError::NotSl2n)? * a;
        debug_assert_eq!(&(c * &eta), a);
        debug_assert_eq!(&eta * b, *d);
        Ok(EditorsSplit { eta, side: SplitSide::Left })
    } else {
        let eta = &a.inverse().map_err(|_| UrError::NotSl2n)? * c;
        debug_assert_eq!(&(a * &eta), c);
        debug_assert_eq!(&(&eta * d), b);
        Ok(EditorsSplit { eta, side: SplitSide::Right })
    }
}

/// Ur-string over its backing matrix and decoded element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrStringView {
    matrix: Mat2,
    elements: Vec<BigUint>,
}

impl UrStringView {
    pub fn from_matrix(matrix: Mat2) -> Result<Self, UrError> {
        let elements = elements(&matrix)?;
        Ok(UrStringView { matrix, elements })
    }

    pub fn from_elements(elems: &[BigUint]) -> Self {
        let mut matrix = Mat2::identity();
        for n in elems {
            matrix = &matrix * &Mat2::singleton(n);
        }
        UrStringView { matrix, elements: elems.to_vec() }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Length of the underlying `{A,B}` word: one `B` per element plus the
    /// tally letters.
    pub fn word_length(&self) -> BigUint {
        let mut total = BigUint::from(self.elements.len());
        for n in &self.elements {
            total += n;
        }
        total
    }
}

/// Word `B A^{n0} ... B A^{n_{k-1}}` for small element lists; the string-level
/// oracle counterpart of [`UrStringView::from_elements`].
pub fn ur_word(elems: &[usize]) -> Word {
    let mut word = Word::empty();
    for &n in elems {
        word.push(crate::word::Letter::B);
        for _ in 0..n {
            word.push(crate::word::Letter::A);
        }
    }
    word
}

/// All `SL2(N)` elements entrywise `<=` the bound, enumerated as encoded
/// words with pruning (prefixes of a word never exceed its encoding).  Each
/// emitted matrix costs one unit of `budget`.
pub fn enumerate_sl2_leq(bound: &Mat2, budget: &mut u64) -> Result<Vec<Mat2>, BudgetExhausted> {
    let mut out = Vec::new();
    let identity = Mat2::identity();
    if !leq_entrywise(&identity, bound) {
        return Ok(out);
    }
    let mut stack = vec![identity];
    while let Some(m) = stack.pop() {
        if *budget == 0 {
            return Err(BudgetExhausted);
        }
        *budget -= 1;
        for next in [&m * &Mat2::gen_b(), &m * &Mat2::gen_a()] {
            if leq_entrywise(&next, bound) {
                stack.push(next);
            }
        }
        out.push(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{encode, words_up_to};

    fn m(w: &str) -> Mat2 {
        encode(&w.parse().unwrap())
    }

    fn singleton(n: u64) -> Mat2 {
        Mat2::singleton(&n.into())
    }

    #[test]
    fn leq_examples() {
        let id = Mat2::identity();
        for n in 0u64..5 {
            assert!(leq_entrywise(&id, &singleton(n)));
        }
        let x = m("AB");
        assert!(leq_entrywise(&x, &x));
        assert!(!lt_entrywise(&x, &x));
        assert!(!leq_entrywise(&Mat2::gen_a(), &Mat2::gen_b()));
    }

    #[test]
    fn initial_examples() {
        assert!(is_initial(&Mat2::gen_a(), &m("AB")));
        assert!(is_initial(&Mat2::identity(), &m("BBA")));
        assert!(!is_initial(&Mat2::gen_b(), &Mat2::gen_a()));
    }

    #[test]
    fn final_examples() {
        assert!(is_final(&Mat2::gen_b(), &m("AB")));
        assert!(is_final(&m("AB"), &m("AB")));
        assert!(!is_final(&Mat2::gen_a(), &m("AB")));
    }

    #[test]
    fn ur_examples() {
        assert!(is_ur(&Mat2::identity()));
        for n in 0u64..6 {
            assert!(is_ur(&singleton(n)));
        }
        assert!(!is_ur(&Mat2::gen_a()));
    }

    #[test]
    fn ur_initial_examples() {
        let n3m5 = &singleton(3) * &singleton(5);
        assert!(ur_initial(&singleton(3), &n3m5));
        assert!(ur_initial(&Mat2::identity(), &singleton(4)));
        // residual A is not an ur-string
        assert!(!ur_initial(&m("BA"), &m("BAA")));
    }

    #[test]
    fn occurs_examples() {
        let b = &singleton(3) * &singleton(5);
        assert!(occurs(&singleton(3), &3u32.into(), &b));
        assert!(occurs(&b, &5u32.into(), &b));
        assert!(!occurs(&singleton(3), &4u32.into(), &b));
    }

    #[test]
    fn elements_examples() {
        assert_eq!(elements(&Mat2::identity()).unwrap(), vec![]);
        assert_eq!(elements(&singleton(2)).unwrap(), vec![BigUint::from(2u32)]);
        assert_eq!(
            elements(&m("BAABAAB")).unwrap(),
            vec![BigUint::from(2u32), BigUint::from(2u32), BigUint::from(0u32)]
        );
        assert_eq!(elements(&Mat2::gen_a()), Err(UrError::NotUrString));
    }

    #[test]
    fn elements_agrees_with_decode_split_exhaustively() {
        for word in words_up_to(12) {
            let mx = encode(&word);
            if !is_ur(&mx) {
                continue;
            }
            // split the word at B letters
            let mut expected: Vec<BigUint> = Vec::new();
            for letter in word.letters() {
                match letter {
                    crate::word::Letter::B => expected.push(BigUint::zero()),
                    crate::word::Letter::A => *expected.last_mut().unwrap() += 1u32,
                }
            }
            assert_eq!(elements(&mx).unwrap(), expected, "word {word}");
        }
    }

    #[test]
    fn elements_handles_huge_entries() {
        let n: BigUint = BigUint::from(10u32).pow(40);
        let b = &Mat2::singleton(&n) * &singleton(7);
        assert_eq!(elements(&b).unwrap(), vec![n, BigUint::from(7u32)]);
    }

    #[test]
    fn occurrence_prefixes_witness_occurs() {
        let b = UrStringView::from_elements(&[2u32.into(), 5u32.into(), 2u32.into()]).matrix().clone();
        let prefixes = occurrence_prefixes(&b).unwrap();
        assert_eq!(prefixes.len(), 3);
        for (prefix, n) in &prefixes {
            assert!(occurs(prefix, n, &b));
        }
    }

    #[test]
    fn editors_split_examples() {
        // a=A, b=B, c=AB, d=empty: eta = B on the right side
        let split = editors_split(&m("A"), &m("B"), &m("AB"), &Mat2::identity()).unwrap();
        assert_eq!(split.eta, Mat2::gen_b());
        assert_eq!(split.side, SplitSide::Right);

        // a=c, b=d: eta = identity
        let split = editors_split(&m("AB"), &m("BA"), &m("AB"), &m("BA")).unwrap();
        assert!(split.eta.is_identity());

        // a=AB, b=A, c=A, d=BA: eta = B on the left side
        let split = editors_split(&m("AB"), &m("A"), &m("A"), &m("BA")).unwrap();
        assert_eq!(split.eta, Mat2::gen_b());
        assert_eq!(split.side, SplitSide::Left);

        assert_eq!(
            editors_split(&m("A"), &m("A"), &m("B"), &m("B")),
            Err(UrError::FactorizationMismatch)
        );
    }

    #[test]
    fn factor_is_entrywise_below_product() {
        for u in words_up_to(5) {
            for v in words_up_to(5) {
                let a = encode(&u);
                let b = encode(&v);
                let c = &a * &b;
                assert!(leq_entrywise(&a, &c));
                assert!(leq_entrywise(&b, &c));
            }
        }
    }

    #[test]
    fn initial_final_match_string_semantics_short() {
        for u in words_up_to(6) {
            for v in words_up_to(6) {
                let mu = encode(&u);
                let mv = encode(&v);
                assert_eq!(is_initial(&mu, &mv), v.starts_with(&u), "u={u} v={v}");
                assert_eq!(is_final(&mu, &mv), v.ends_with(&u), "u={u} v={v}");
            }
        }
    }

    #[test]
    fn initial_agrees_with_inverse_route() {
        for u in words_up_to(6) {
            for v in words_up_to(6) {
                let a = encode(&u);
                let b = encode(&v);
                let via_inverse = (&a.inverse().unwrap() * &b).is_nonneg();
                assert_eq!(is_initial(&a, &b), via_inverse);
            }
        }
    }

    #[test]
    fn ur_initial_implies_ur_target() {
        for u in words_up_to(6) {
            for v in words_up_to(6) {
                let a = encode(&u);
                let b = encode(&v);
                if ur_initial(&a, &b) {
                    assert!(is_ur(&b));
                }
            }
        }
    }

    #[test]
    fn final_and_ur_final_coincide_on_ur_strings() {
        for u in words_up_to(6) {
            for v in words_up_to(6) {
                let a = encode(&u);
                let b = encode(&v);
                if is_ur(&a) && is_ur(&b) {
                    assert_eq!(is_final(&a, &b), ur_final(&a, &b), "u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn last_element_bounded_by_top_right_entry() {
        // the bound used by the proof predicate's element quantifier
        for word in words_up_to(8) {
            let mx = encode(&word);
            if !is_ur(&mx) {
                continue;
            }
            if let Some(last) = elements(&mx).unwrap().last() {
                assert!(BigInt::from(last.clone()) <= mx.m01, "word {word}");
            }
        }
    }

    #[test]
    fn view_round_trip() {
        let elems: Vec<BigUint> = vec![2u32.into(), 0u32.into(), 7u32.into()];
        let view = UrStringView::from_elements(&elems);
        assert_eq!(view.elements(), elems.as_slice());
        assert_eq!(view.word_length(), BigUint::from(12u32));
        let again = UrStringView::from_matrix(view.matrix().clone()).unwrap();
        assert_eq!(again, view);
        assert_eq!(encode(&ur_word(&[2, 0, 7])), *view.matrix());
    }

    #[test]
    fn enumerate_respects_bound_and_budget() {
        let bound = m("BAAB");
        let mut budget = 10_000;
        let all = enumerate_sl2_leq(&bound, &mut budget).unwrap();
        for cand in &all {
            assert!(leq_entrywise(cand, &bound));
            assert!(cand.is_sl2n());
        }
        // every encoded prefix-closed word below the bound shows up
        for word in words_up_to(6) {
            let mx = encode(&word);
            assert_eq!(all.contains(&mx), leq_entrywise(&mx, &bound), "word {word}");
        }
        let mut tiny = 2;
        assert_eq!(enumerate_sl2_leq(&bound, &mut tiny), Err(BudgetExhausted));
    }
}
