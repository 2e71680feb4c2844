//! Ur-string coding over `SL2(N)`.
//!
//! The nonnegative unimodular 2x2 matrices form a free monoid on the two
//! generators `A = [[1,1],[0,1]]` and `B = [[1,0],[1,1]]`.  This crate makes
//! that coding executable with exact arbitrary-precision arithmetic:
//!
//! - [`mat2`] / [`quad`]: exact matrix and quadratic-field arithmetic,
//! - [`word`]: the bijection between `{A,B}` words and `SL2(N)`,
//! - [`urstring`]: quantifier-free substring and occurrence predicates on
//!   coded sequences ("ur-strings"), plus the Editors property,
//! - [`pell`]: the sequence `s(n,0)=0, s(n,1)=1, s(n,m+1)=(n+2)s(n,m)-s(n,m-1)`,
//!   its closed form over `Q(sqrt(n(n+4)))`, and Pell-pair ladder descent,
//! - [`besh`]: a two-sentence Hilbert-style proof system, its arithmetization
//!   as ur-strings, and two independent evaluators for the proof predicate,
//! - [`formula`]: a bounded-quantifier formula language with an `E_n`/`U_n`
//!   complexity classifier and a budgeted evaluator,
//! - [`poly`] / [`witness`]: Pell-relation rewriting of polynomials in
//!   `x0, x1, y0, y1`, normal forms, and membership experiments around the
//!   witness matrix `[n]^a [m]^b`,
//! - [`coprime`]: Bezout certificates and the divisibility-family argument
//!   that collapses the cut defined by `forall v exists u forall i<=a 1+iv | u`.

pub mod besh;
pub mod coprime;
pub mod formula;
pub mod mat2;
pub mod pell;
pub mod poly;
pub mod quad;
pub mod urstring;
pub mod witness;
pub mod word;

pub use besh::{GoedelNumbering, Sentence, Sequent, Verdict};
pub use mat2::{Mat2, Mat2Error};
pub use pell::PellError;
pub use quad::{QuadError, QuadExt, Sign};
pub use urstring::UrStringView;
pub use word::{Letter, Word};
