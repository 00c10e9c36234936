//! Exact combinatorial machinery for linear-quotient orderings of monomial
//! ideals, centered on edge ideals of anticycle-like graphs.
//!
//! A monomial ideal has *linear quotients* if its minimal generators can be
//! ordered `M_1, ..., M_r` so that every colon ideal
//! `(M_1, ..., M_{i-1}) : M_i` is generated by variables.  This crate
//! provides:
//!
//! * [`monomial`] — exponent-vector arithmetic, the `x_n > ... > x_1`
//!   lexicographic order, and the agreement-order/projection machinery used
//!   to manufacture witnesses;
//! * [`ideal`] — minimal generating sets, products, powers, and prefix colon
//!   ideals;
//! * [`graphs`] — the graph families (cycles, anticycles, stars, and their
//!   modifications) whose edge ideals are studied here;
//! * [`quotients`] — two independent verification criteria producing
//!   machine-checkable certificates, plus an independent replay checker;
//! * [`search`] — backtracking search for a linear-quotient ordering, with
//!   exhaustive refutation for small ideals and an on-disk ordering cache;
//! * [`compose`] — the composite ordering construction: concatenating
//!   linear-quotient orderings of the summands `I_G^i I_F^j` into one for
//!   `(I_G + I_F)^s`.
//!
//! All verdicts are exact (set and boolean equality); nothing here is
//! floating point.

pub mod compose;
mod error;
pub mod graphs;
pub mod ideal;
pub mod monomial;
pub mod quotients;
pub mod search;

pub use error::{Error, Result};
pub use graphs::Graph;
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use quotients::{Criterion, OrderedGenerators, QuotientCertificate};
pub use search::{SearchConfig, SearchOutcome, SearchResult, Strategy};
