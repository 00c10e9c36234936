//! Monomial ideals represented by their unique minimal generating sets.
//!
//! Generators are kept in canonical descending lex order so that equal
//! ideals compare equal and serialize identically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal, stored as its minimal generators in descending lex
/// order.  Two ideals are equal iff their generator sets are equal.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

/// Divisibility-minimal subset of `monomials`, deduplicated.
///
/// Processes by ascending degree: a monomial is kept iff no kept monomial of
/// lower or equal degree divides it.  Every input is divisible by some kept
/// element.
fn minimal_elements(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.lex_cmp(a))
    });
    let mut kept: Vec<Monomial> = Vec::new();
    for m in monomials {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `monomials`: keeps the
    /// divisibility-minimal elements and sorts them in descending lex order.
    ///
    /// Errors on an empty input or mixed ambient variable counts.
    pub fn minimalize(monomials: Vec<Monomial>) -> Result<Self> {
        let n = match monomials.first() {
            Some(m) => m.n(),
            None => return Err(Error::EmptyGenerators),
        };
        for m in &monomials {
            if m.n() != n {
                return Err(Error::ArityMismatch { left: n, right: m.n() });
            }
        }
        let mut generators = minimal_elements(monomials);
        generators.sort_by(|a, b| b.lex_cmp(a));
        Ok(Self { n, generators })
    }

    /// Ambient variable count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators in descending lex order.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Membership test: true iff some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The product ideal: minimalization of all pairwise products.  For
    /// equal-degree generator sets this reduces to deduplication.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ideals live in different ambient rings");
        let mut products = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                products.push(a.mul(b));
            }
        }
        Self::minimalize(products).expect("product of nonempty ideals is nonempty")
    }

    /// The `s`-th power, computed by repeated products with minimalization
    /// after each step.  Errors on `s = 0` (the unit ideal is out of scope).
    pub fn power(&self, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self);
        }
        Ok(acc)
    }

    /// Minimal generators of the colon ideal `(prefix) : m`, i.e. the
    /// minimalization of `{ p : m | p in prefix }`.  Errors on an empty
    /// prefix.
    pub fn colon_generators(prefix: &[Monomial], m: &Monomial) -> Result<Self> {
        if prefix.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        Self::minimalize(prefix.iter().map(|p| p.colon(m)).collect())
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            generators: Vec<Monomial>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let ideal = validate_generators(raw.n, raw.generators).map_err(serde::de::Error::custom)?;
        Ok(ideal)
    }
}

/// Validates externally supplied generators: nonempty, matching arity, no
/// duplicates, no generator dividing another.  Input order is not trusted;
/// generators are re-sorted into canonical order.
fn validate_generators(n: usize, generators: Vec<Monomial>) -> Result<MonomialIdeal> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for g in &generators {
        if g.n() != n {
            return Err(Error::ArityMismatch { left: n, right: g.n() });
        }
    }
    for (i, a) in generators.iter().enumerate() {
        for (k, b) in generators.iter().enumerate() {
            if i != k && a.divides(b) {
                return Err(Error::NotMinimal {
                    culprit: a.to_string(),
                    victim: b.to_string(),
                });
            }
        }
    }
    let mut generators = generators;
    generators.sort_by(|a, b| b.lex_cmp(a));
    Ok(MonomialIdeal { n, generators })
}
