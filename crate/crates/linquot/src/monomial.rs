//! Monomials as exponent vectors, with the `x_n > ... > x_1` lexicographic
//! order and the agreement-order / projection constructions.
//!
//! Variables are 1-based (`x_1, ..., x_n`); the exponent of `x_i` lives at
//! vector position `i - 1`.  All monomials are monic.  The text form lists
//! factors by ascending variable index (`x3^2*x6`), and the all-zero vector
//! renders as `1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monic monomial in `n` variables, stored as its exponent vector.
///
/// Immutable after construction; every operation is a pure function, so
/// values can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Wraps an exponent vector. The ambient variable count is the length.
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self {
            exponents: vec![0; n],
        }
    }

    /// The single variable `x_index` (1-based) in `n` variables.
    pub fn variable(n: usize, index: usize) -> Result<Self> {
        Self::from_indices(n, &[index])
    }

    /// Product of the variables named by `indices` (1-based, repeats allowed).
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut exponents = vec![0u32; n];
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::BadVariable { index: i, n });
            }
            exponents[i - 1] += 1;
        }
        Ok(Self { exponents })
    }

    /// Ambient variable count.
    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_var` (1-based).
    pub fn exponent_of(&self, var: usize) -> u32 {
        self.exponents[var - 1]
    }

    /// Total degree: the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// True when the degree is exactly 1, i.e. the monomial is a variable.
    pub fn is_variable(&self) -> bool {
        self.degree() == 1
    }

    fn assert_same_arity(&self, other: &Self) {
        assert_eq!(
            self.n(),
            other.n(),
            "monomials live in different ambient rings"
        );
    }

    /// True iff `self` divides `other` (entrywise `<=`).
    pub fn divides(&self, other: &Self) -> bool {
        self.assert_same_arity(other);
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// Entrywise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same_arity(other);
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Entrywise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        self.assert_same_arity(other);
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Entrywise sum; panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_arity(other);
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// The monomial quotient `self : other = self / gcd(self, other)`,
    /// i.e. entrywise `max(a - b, 0)`.
    pub fn colon(&self, other: &Self) -> Self {
        self.assert_same_arity(other);
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Lexicographic comparison with `x_n > x_{n-1} > ... > x_1`: the
    /// reversed exponent tuples are compared lexicographically, so the
    /// highest-index variable is the most significant.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.assert_same_arity(other);
        for (a, b) in self.exponents.iter().rev().zip(other.exponents.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// The variable indices of the monomial with multiplicity, ascending:
    /// `x_1^2 x_3` yields `[1, 1, 3]`.  Errors on the degree-0 monomial.
    pub fn sorted_indices(&self) -> Result<Vec<usize>> {
        if self.is_one() {
            return Err(Error::ZeroDegree);
        }
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (pos, &e) in self.exponents.iter().enumerate() {
            for _ in 0..e {
                out.push(pos + 1);
            }
        }
        Ok(out)
    }

    /// The agreement order `t` of two equal-degree monomials with
    /// `self >_lex other`: the number of trailing (largest) positions on
    /// which the sorted index sequences coincide before the first
    /// disagreement.  `t = 0` means the largest indices already differ.
    ///
    /// At the disagreeing position the index of `self` is strictly larger;
    /// this is forced by `self >_lex other`.
    pub fn agreement_order(&self, other: &Self) -> Result<usize> {
        let (i_seq, j_seq) = self.agreement_sequences(other)?;
        let s = i_seq.len();
        let mut t = 0;
        while t < s && i_seq[s - 1 - t] == j_seq[s - 1 - t] {
            t += 1;
        }
        debug_assert!(t < s, "lex-distinct monomials must disagree somewhere");
        debug_assert!(i_seq[s - 1 - t] > j_seq[s - 1 - t]);
        Ok(t)
    }

    fn agreement_sequences(&self, other: &Self) -> Result<(Vec<usize>, Vec<usize>)> {
        self.assert_same_arity(other);
        let (d1, d2) = (self.degree(), other.degree());
        if d1 != d2 {
            return Err(Error::DegreeMismatch { left: d1, right: d2 });
        }
        // Equal monomials (including the degree-0 pair) fall out here too.
        if self.lex_cmp(other) != Ordering::Greater {
            return Err(Error::NotLexGreater);
        }
        Ok((self.sorted_indices()?, other.sorted_indices()?))
    }

    /// The projections of `self` onto `other`: with `t` the agreement order,
    /// `s` the common degree, and `j_1 <= ... <= j_s` the sorted indices of
    /// `other`, these are the monomials `x_{i_{s-t}} * other / x_{j_l}` for
    /// `1 <= l <= s - t`, deduplicated and returned in descending lex order.
    ///
    /// Every projection `M` satisfies `M >_lex other`, `M : other` is a
    /// single variable, and that variable divides `self : other`.
    pub fn projections(&self, other: &Self) -> Result<Vec<Monomial>> {
        let (i_seq, j_seq) = self.agreement_sequences(other)?;
        let s = i_seq.len();
        let mut t = 0;
        while t < s && i_seq[s - 1 - t] == j_seq[s - 1 - t] {
            t += 1;
        }
        let incoming = i_seq[s - 1 - t];
        let mut out: Vec<Monomial> = Vec::with_capacity(s - t);
        for &leaving in &j_seq[..s - t] {
            let mut exponents = other.exponents.clone();
            exponents[leaving - 1] -= 1;
            exponents[incoming - 1] += 1;
            let m = Monomial::new(exponents);
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out.sort_by(|a, b| b.lex_cmp(a));
        Ok(out)
    }

    /// Parses the canonical text form, e.g. `x3^2*x6` or `1`, in `n`
    /// variables.  Factors may appear in any order and repeat.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let fail = |reason: &str| Error::ParseMonomial {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(Self::one(n));
        }
        let mut exponents = vec![0u32; n];
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| fail("factor must start with 'x'"))?;
            let (idx_str, exp_str) = match body.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (body, None),
            };
            let index: usize = idx_str
                .parse()
                .map_err(|_| fail("bad variable index"))?;
            if index == 0 || index > n {
                return Err(fail("variable index out of range"));
            }
            let exp: u32 = match exp_str {
                Some(e) => e.parse().map_err(|_| fail("bad exponent"))?,
                None => 1,
            };
            if exp == 0 {
                return Err(fail("exponent must be positive"));
            }
            exponents[index - 1] = exponents[index - 1]
                .checked_add(exp)
                .ok_or_else(|| fail("exponent overflow"))?;
        }
        Ok(Self { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (pos, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", pos + 1)?;
            } else {
                write!(f, "x{}^{}", pos + 1, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str, n: usize) -> Monomial {
        Monomial::parse(text, n).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(m("x1*x3", 4).degree(), 2);
        assert_eq!(Monomial::one(4).degree(), 0);
        assert_eq!(m("x6^2*x3^2", 6).degree(), 4);
    }

    #[test]
    fn divides_examples() {
        assert!(m("x1*x2", 3).divides(&m("x1*x2*x3", 3)));
        assert!(!m("x1^2", 3).divides(&m("x1*x2", 3)));
        assert!(Monomial::one(3).divides(&m("x2*x3", 3)));
    }

    #[test]
    fn gcd_colon_mul_examples() {
        assert_eq!(m("x1^2*x2", 3).gcd(&m("x1*x2^2", 3)), m("x1*x2", 3));
        // Entrywise max(a-b, 0), checked by hand.
        assert_eq!(
            m("x3^2*x5*x6", 6).colon(&m("x1^2*x3*x6", 6)),
            m("x3*x5", 6)
        );
        assert_eq!(m("x1*x3", 6).mul(&m("x2*x6", 6)), m("x1*x2*x3*x6", 6));
    }

    #[test]
    fn gcd_lcm_colon_identities() {
        let a = m("x1^2*x2*x4", 4);
        let b = m("x2^3*x3", 4);
        assert_eq!(a.gcd(&b).mul(&a.lcm(&b)), a.mul(&b));
        assert_eq!(a.colon(&b).mul(&a.gcd(&b)), a);
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(m("x3", 3).lex_cmp(&m("x2", 3)), Ordering::Greater);
        assert_eq!(m("x1*x3", 3).lex_cmp(&m("x2^2", 3)), Ordering::Greater);
        assert_eq!(
            m("x2*x3*x6^2", 6).lex_cmp(&m("x3^2*x6^2", 6)),
            Ordering::Less
        );
        assert_eq!(m("x1*x2", 3).lex_cmp(&m("x1*x2", 3)), Ordering::Equal);
    }

    #[test]
    fn sorted_indices_examples() {
        assert_eq!(m("x1^2*x3", 3).sorted_indices().unwrap(), vec![1, 1, 3]);
        assert_eq!(m("x6^2", 6).sorted_indices().unwrap(), vec![6, 6]);
        assert_eq!(
            m("x2*x3*x6^2", 6).sorted_indices().unwrap(),
            vec![2, 3, 6, 6]
        );
        assert!(matches!(
            Monomial::one(3).sorted_indices(),
            Err(Error::ZeroDegree)
        ));
    }

    #[test]
    fn agreement_order_examples() {
        assert_eq!(
            m("x1*x2*x5", 5).agreement_order(&m("x1*x3*x4", 5)).unwrap(),
            0
        );
        assert_eq!(
            m("x1*x4*x5", 5).agreement_order(&m("x2*x3*x5", 5)).unwrap(),
            1
        );
        assert_eq!(
            m("x1*x3*x5", 5).agreement_order(&m("x1*x2*x5", 5)).unwrap(),
            1
        );
    }

    #[test]
    fn agreement_order_errors() {
        let a = m("x1*x2", 3);
        assert!(matches!(
            a.agreement_order(&a),
            Err(Error::NotLexGreater)
        ));
        assert!(matches!(
            m("x1*x2", 3).agreement_order(&m("x1*x3", 3)),
            Err(Error::NotLexGreater)
        ));
        assert!(matches!(
            m("x1*x2", 3).agreement_order(&m("x3", 3)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    fn check_projection_postconditions(m1: &Monomial, m2: &Monomial) {
        for p in m1.projections(m2).unwrap() {
            assert_eq!(p.lex_cmp(m2), Ordering::Greater, "{p} vs {m2}");
            let q = p.colon(m2);
            assert!(q.is_variable(), "{p} : {m2} = {q} is not a variable");
            assert!(q.divides(&m1.colon(m2)));
        }
    }

    #[test]
    fn projections_examples() {
        // Verified against the defining formula by hand.
        let ps = m("x1*x4*x5", 5).projections(&m("x2*x3*x5", 5)).unwrap();
        assert_eq!(ps, vec![m("x3*x4*x5", 5), m("x2*x4*x5", 5)]);
        check_projection_postconditions(&m("x1*x4*x5", 5), &m("x2*x3*x5", 5));

        let ps = m("x2^2", 2).projections(&m("x1*x2", 2)).unwrap();
        assert_eq!(ps, vec![m("x2^2", 2)]);
        check_projection_postconditions(&m("x2^2", 2), &m("x1*x2", 2));

        let ps = m("x1*x2*x5", 5).projections(&m("x1*x3*x4", 5)).unwrap();
        assert_eq!(
            ps,
            vec![m("x3*x4*x5", 5), m("x1*x4*x5", 5), m("x1*x3*x5", 5)]
        );
        check_projection_postconditions(&m("x1*x2*x5", 5), &m("x1*x3*x4", 5));
    }

    #[test]
    fn projections_deduplicate() {
        // x2 leaves twice from x1*x2^2 but yields the same monomial.
        let ps = m("x2^2*x3", 3).projections(&m("x1*x2^2", 3)).unwrap();
        assert_eq!(ps, vec![m("x2^2*x3", 3), m("x1*x2*x3", 3)]);
    }

    // For equal-degree monomials whose gcd has degree one less, both
    // quotients are single variables.
    #[test]
    fn near_equal_monomials_have_variable_quotients() {
        let pairs = [
            (m("x1*x2*x4", 4), m("x1*x2*x3", 4)),
            (m("x2^3", 3), m("x2^2*x3", 3)),
            (m("x1*x3^2", 4), m("x3^2*x4", 4)),
        ];
        for (a, b) in pairs {
            assert_eq!(a.degree(), b.degree());
            assert_eq!(a.gcd(&b).degree(), a.degree() - 1);
            assert!(a.colon(&b).is_variable());
            assert!(b.colon(&a).is_variable());
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["x3^2*x6", "1", "x1*x2*x3", "x2^4"] {
            let mono = m(text, 6);
            assert_eq!(mono.to_string(), text);
            assert_eq!(Monomial::parse(&mono.to_string(), 6).unwrap(), mono);
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Monomial::parse("x0", 3).is_err());
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x1^0", 3).is_err());
        assert!(Monomial::parse("x1^", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
    }

    #[test]
    fn json_form_is_bare_exponent_vector() {
        let mono = m("x3^2*x6", 6);
        assert_eq!(serde_json::to_string(&mono).unwrap(), "[0,0,2,0,0,1]");
        let back: Monomial = serde_json::from_str("[0,0,2,0,0,1]").unwrap();
        assert_eq!(back, mono);
    }
}
