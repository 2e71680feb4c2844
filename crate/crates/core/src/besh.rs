//! A minimal proof system with two sentences, and its arithmetization.
//!
//! The language has exactly the sentences `bot` and `bot -> bot`; the only
//! axiom is `bot -> bot`, and the only rule infers `bot` from strictly
//! earlier occurrences of `bot` and `bot -> bot`.  A sequent-calculus variant
//! replaces the axiom by `bot => bot`, the conclusion by `=> bot`, and the
//! rule by cut.
//!
//! Proofs are arithmetized as ur-strings of Goedel numbers.  The proof
//! predicate comes with two independent evaluators: [`proof0_semantic`] works
//! on the decoded element list, while [`proof0_literal`] evaluates the
//! bounded-quantifier definition by brute-force enumeration of all `SL2(N)`
//! matrices below the proof.

use crate::mat2::Mat2;
use crate::urstring::{
    elements, enumerate_sl2_leq, is_final, is_ur, lt_entrywise, occurs, BudgetExhausted,
};
use crate::word::{encode, words_up_to};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoedelError {
    #[error("Goedel numbers must be at least 1")]
    ZeroValue,
    #[error("Goedel numbering must be injective")]
    NotInjective,
}

/// One of the two sentences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sentence {
    Bot,
    BotImpBot,
}

/// One of the two sequents of the cut-rule variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sequent {
    /// `bot => bot`, the axiom.
    BotSeqBot,
    /// `=> bot`, the conclusion of cut.
    SeqBot,
}

/// A Hilbert-style proof is just a finite sequence of sentences; validity is
/// checked, never assumed.
pub type HilbertProof = Vec<Sentence>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// First position whose occurrence is neither an axiom nor justified by
    /// strictly earlier premises.
    InvalidAt(usize),
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Check a Hilbert-style proof: every occurrence is the axiom
/// `bot -> bot`, or is `bot` with strictly earlier occurrences of both `bot`
/// and `bot -> bot`.
pub fn check_hilbert(proof: &[Sentence]) -> Verdict {
    let mut seen_bot = false;
    let mut seen_axiom = false;
    for (i, s) in proof.iter().enumerate() {
        match s {
            Sentence::BotImpBot => seen_axiom = true,
            Sentence::Bot => {
                if !(seen_bot && seen_axiom) {
                    return Verdict::InvalidAt(i);
                }
            }
        }
        if *s == Sentence::Bot {
            seen_bot = true;
        }
    }
    Verdict::Valid
}

/// Check a sequent-calculus proof; mirrors [`check_hilbert`] with cut in
/// place of the inference rule.
pub fn check_sequent(proof: &[Sequent]) -> Verdict {
    check_hilbert(&proof.iter().map(|s| sequent_to_sentence(*s)).collect::<Vec<_>>())
}

fn sequent_to_sentence(s: Sequent) -> Sentence {
    match s {
        Sequent::BotSeqBot => Sentence::BotImpBot,
        Sequent::SeqBot => Sentence::Bot,
    }
}

/// Dictionary between the two systems: `bot => bot` maps to `bot -> bot` and
/// `=> bot` to `bot`.
pub fn sequent_to_hilbert(proof: &[Sequent]) -> HilbertProof {
    proof.iter().map(|s| sequent_to_sentence(*s)).collect()
}

/// Injective assignment of positive naturals to the two sentences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoedelNumbering {
    bot: u64,
    bot_imp_bot: u64,
}

impl GoedelNumbering {
    pub fn new(bot: u64, bot_imp_bot: u64) -> Result<Self, GoedelError> {
        if bot == 0 || bot_imp_bot == 0 {
            return Err(GoedelError::ZeroValue);
        }
        if bot == bot_imp_bot {
            return Err(GoedelError::NotInjective);
        }
        Ok(GoedelNumbering { bot, bot_imp_bot })
    }

    pub fn code(&self, s: Sentence) -> u64 {
        match s {
            Sentence::Bot => self.bot,
            Sentence::BotImpBot => self.bot_imp_bot,
        }
    }

    pub fn bot(&self) -> u64 {
        self.bot
    }

    pub fn bot_imp_bot(&self) -> u64 {
        self.bot_imp_bot
    }

    fn decode_code(&self, n: &BigUint) -> Option<Sentence> {
        if *n == BigUint::from(self.bot) {
            Some(Sentence::Bot)
        } else if *n == BigUint::from(self.bot_imp_bot) {
            Some(Sentence::BotImpBot)
        } else {
            None
        }
    }
}

impl Default for GoedelNumbering {
    /// `bot -> 1`, `bot -> bot -> 2`.
    fn default() -> Self {
        GoedelNumbering { bot: 1, bot_imp_bot: 2 }
    }
}

/// Ur-string `[g(s0)][g(s1)]...` coding the proof; the empty proof codes to
/// the identity matrix.
pub fn encode_proof(proof: &[Sentence], g: &GoedelNumbering) -> Mat2 {
    let mut m = Mat2::identity();
    for s in proof {
        m = &m * &Mat2::singleton(&g.code(*s).into());
    }
    m
}

/// Inverse of [`encode_proof`] on ur-strings whose elements are all Goedel
/// numbers; `None` otherwise.
pub fn decode_proof(pi: &Mat2, g: &GoedelNumbering) -> Option<HilbertProof> {
    let elems = elements(pi).ok()?;
    elems.iter().map(|n| g.decode_code(n)).collect()
}

/// The proof predicate, evaluated over the decoded element list: `pi` is an
/// ur-string, every element is a Goedel number of a sentence, and every
/// occurrence of `g(bot)` has strictly earlier occurrences of both `g(bot)`
/// and `g(bot -> bot)`.
pub fn proof0_semantic(pi: &Mat2, g: &GoedelNumbering) -> bool {
    let Ok(elems) = elements(pi) else {
        return false;
    };
    let Some(sentences) =
        elems.iter().map(|n| g.decode_code(n)).collect::<Option<Vec<Sentence>>>()
    else {
        return false;
    };
    check_hilbert(&sentences).is_valid()
}

/// The proof predicate, evaluated literally as a bounded-quantifier formula:
///
/// ```text
/// ur(pi)
/// and forall a <= pi, forall n <= a01: occ(a,n,pi) -> n in {g(imp), g(bot)}
/// and forall a <= pi: occ(a,g(bot),pi) ->
///       exists b < a, exists c < a: occ(b,g(bot),a) and occ(c,g(imp),a)
/// ```
///
/// Matrix quantifiers range over `SL2(N)` elements entrywise below the bound,
/// enumerated as encoded words; `cap` bounds the total number of matrix and
/// number candidates inspected.
pub fn proof0_literal(pi: &Mat2, g: &GoedelNumbering, cap: u64) -> Result<bool, BudgetExhausted> {
    let mut budget = cap;
    if !is_ur(pi) {
        return Ok(false);
    }
    let g_bot = BigUint::from(g.bot);
    let g_imp = BigUint::from(g.bot_imp_bot);
    let alphas = enumerate_sl2_leq(pi, &mut budget)?;

    for alpha in &alphas {
        let bound = alpha.m01.to_biguint().expect("SL2(N) entries are nonnegative");
        let mut n = BigUint::zero();
        while n <= bound {
            if budget == 0 {
                return Err(BudgetExhausted);
            }
            budget -= 1;
            if occurs(alpha, &n, pi) && n != g_imp && n != g_bot {
                return Ok(false);
            }
            n += 1u32;
        }
    }

    for alpha in &alphas {
        if occurs(alpha, &g_bot, pi) {
            let candidates = enumerate_sl2_leq(alpha, &mut budget)?;
            let earlier_bot =
                candidates.iter().any(|b| lt_entrywise(b, alpha) && occurs(b, &g_bot, alpha));
            let earlier_imp =
                candidates.iter().any(|c| lt_entrywise(c, alpha) && occurs(c, &g_imp, alpha));
            if !(earlier_bot && earlier_imp) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `pi` is a proof of `n`: the proof predicate holds and `[n]` is an end
/// substring of `pi`.  Note that the empty proof is a proof of nothing.
pub fn is_proof_of(pi: &Mat2, n: u64, g: &GoedelNumbering) -> bool {
    proof0_semantic(pi, g) && is_final(&Mat2::singleton(&n.into()), pi)
}

/// Finite stand-in for the consistency statement: scan every encoded word of
/// length at most `max_word_len` and report whether none of them is a proof
/// of `g(bot)`.
pub fn con_scan(g: &GoedelNumbering, max_word_len: usize) -> bool {
    words_up_to(max_word_len)
        .iter()
        .all(|word| !is_proof_of(&encode(word), g.bot, g))
}
