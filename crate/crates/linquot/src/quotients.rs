//! Verification of linear-quotient orderings under two independent criteria,
//! with machine-checkable certificates.
//!
//! An ordering `M_1, ..., M_r` of the minimal generators is a linear
//! quotient ordering when every colon ideal `(M_1, ..., M_{i-1}) : M_i` is
//! generated by variables.  Two routes are implemented:
//!
//! * the **colon** criterion computes the minimal generators of each colon
//!   ideal directly and checks that all of them have degree 1;
//! * the **works** criterion checks, for every pair `j < i`, that some
//!   `h < i` (possibly `j` itself) has `M_h : M_i` equal to a variable
//!   dividing `M_j : M_i`.
//!
//! The two verdicts always agree; the test suites exercise that equivalence
//! heavily.  Certificates carry enough evidence for
//! [`replay_certificate`] — an independent checker built only on monomial
//! arithmetic — to re-validate the verdict.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A proposed linear-quotient ordering: a sequence containing each minimal
/// generator of the ideal exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedGenerators {
    ideal: MonomialIdeal,
    order: Vec<Monomial>,
}

impl OrderedGenerators {
    /// Validates that `order` is a permutation of the minimal generators.
    pub fn new(ideal: MonomialIdeal, order: Vec<Monomial>) -> Result<Self> {
        if order.len() != ideal.num_generators() {
            return Err(Error::NotAPermutation {
                reason: format!(
                    "length {} differs from generator count {}",
                    order.len(),
                    ideal.num_generators()
                ),
            });
        }
        let mut seen = vec![false; order.len()];
        for m in &order {
            match ideal.generators().iter().position(|g| g == m) {
                Some(pos) if !seen[pos] => seen[pos] = true,
                Some(_) => {
                    return Err(Error::NotAPermutation {
                        reason: format!("{m} appears more than once"),
                    })
                }
                None => {
                    return Err(Error::NotAPermutation {
                        reason: format!("{m} is not a minimal generator"),
                    })
                }
            }
        }
        Ok(Self { ideal, order })
    }

    /// The descending-lex ordering (the canonical generator order).
    pub fn lex(ideal: MonomialIdeal) -> Self {
        let order = ideal.generators().to_vec();
        Self { ideal, order }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn order(&self) -> &[Monomial] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn position(&self, m: &Monomial) -> Option<usize> {
        self.order.iter().position(|x| x == m)
    }
}

impl<'de> Deserialize<'de> for OrderedGenerators {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            ideal: MonomialIdeal,
            order: Vec<Monomial>,
        }
        let raw = Raw::deserialize(deserializer)?;
        OrderedGenerators::new(raw.ideal, raw.order).map_err(serde::de::Error::custom)
    }
}

/// Which verification route produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Colon,
    Works,
}

/// Minimal generators of the colon ideal at one index (colon criterion).
/// Indices are 1-based, matching `M_1, ..., M_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonStep {
    pub i: usize,
    pub colon_generators: Vec<Monomial>,
}

/// Witness index `h` for the pair `j < i` (works criterion); 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorksWitness {
    pub i: usize,
    pub j: usize,
    pub h: usize,
}

/// Per-index evidence; shape depends on the criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Evidence {
    Colon(Vec<ColonStep>),
    Works(Vec<WorksWitness>),
}

/// First failing position: no `h < i` repairs the pair `(i, j)`; `witness`
/// is the offending non-variable quotient `M_j : M_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureWitness {
    pub i: usize,
    pub j: usize,
    pub witness: Monomial,
}

/// Outcome of verifying one ordering: the verdict plus evidence that an
/// independent checker can replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientCertificate {
    pub criterion: Criterion,
    pub verdict: bool,
    pub evidence: Evidence,
    pub failure: Option<FailureWitness>,
}

impl<'de> Deserialize<'de> for QuotientCertificate {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        // The evidence array is interpreted according to the criterion; an
        // empty array would otherwise be ambiguous between the two shapes.
        #[derive(Deserialize)]
        struct Raw {
            criterion: Criterion,
            verdict: bool,
            evidence: serde_json::Value,
            failure: Option<FailureWitness>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let evidence = match raw.criterion {
            Criterion::Colon => Evidence::Colon(
                serde_json::from_value(raw.evidence).map_err(serde::de::Error::custom)?,
            ),
            Criterion::Works => Evidence::Works(
                serde_json::from_value(raw.evidence).map_err(serde::de::Error::custom)?,
            ),
        };
        Ok(Self {
            criterion: raw.criterion,
            verdict: raw.verdict,
            evidence,
            failure: raw.failure,
        })
    }
}

/// Smallest 0-based `j` such that no variable among `colons` divides
/// `colons[j]`, given the quotients `colons[k] = M_{k+1} : M_i`.
fn first_unrepaired(colons: &[Monomial]) -> Option<usize> {
    let variables: Vec<&Monomial> = colons.iter().filter(|c| c.is_variable()).collect();
    colons
        .iter()
        .position(|c| !c.is_variable() && !variables.iter().any(|v| v.divides(c)))
}

/// Verifies the ordering via minimal generators of each colon ideal
/// `(M_1, ..., M_{i-1}) : M_i`: the verdict is true iff every minimal
/// generator of every colon ideal has degree 1.
///
/// Indices are verified independently (in parallel); the certificate is
/// deterministic: evidence for every passing index below the first failing
/// one, and the failure at the lexicographically first `(i, j)`.
pub fn verify_colon(og: &OrderedGenerators) -> QuotientCertificate {
    enum PerIndex {
        Pass(ColonStep),
        Fail(FailureWitness),
    }

    let order = og.order();
    let per_index: Vec<PerIndex> = (2..=order.len())
        .into_par_iter()
        .map(|i| {
            let target = &order[i - 1];
            let prefix = &order[..i - 1];
            let colon_ideal = MonomialIdeal::colon_generators(prefix, target)
                .expect("prefix is nonempty for i >= 2");
            if colon_ideal.generators().iter().all(Monomial::is_variable) {
                PerIndex::Pass(ColonStep {
                    i,
                    colon_generators: colon_ideal.generators().to_vec(),
                })
            } else {
                let colons: Vec<Monomial> = prefix.iter().map(|p| p.colon(target)).collect();
                let j = first_unrepaired(&colons)
                    .expect("a non-variable minimal generator implies an unrepaired quotient");
                PerIndex::Fail(FailureWitness {
                    i,
                    j: j + 1,
                    witness: colons[j].clone(),
                })
            }
        })
        .collect();

    let mut evidence = Vec::new();
    for entry in per_index {
        match entry {
            PerIndex::Pass(step) => evidence.push(step),
            PerIndex::Fail(failure) => {
                return QuotientCertificate {
                    criterion: Criterion::Colon,
                    verdict: false,
                    evidence: Evidence::Colon(evidence),
                    failure: Some(failure),
                }
            }
        }
    }
    QuotientCertificate {
        criterion: Criterion::Colon,
        verdict: true,
        evidence: Evidence::Colon(evidence),
        failure: None,
    }
}

/// The pairwise witness test: `m3` works with respect to `m1` and `m2`
/// (both in the ordering, `m1` before `m2`) iff `m3` is in the ordering,
/// precedes `m2`, `m3 : m2` is a single variable, and that variable divides
/// `m1 : m2`.
pub fn works(og: &OrderedGenerators, m1: &Monomial, m2: &Monomial, m3: &Monomial) -> Result<bool> {
    let p1 = og.position(m1).ok_or_else(|| Error::NotInOrdering {
        monomial: m1.to_string(),
    })?;
    let p2 = og.position(m2).ok_or_else(|| Error::NotInOrdering {
        monomial: m2.to_string(),
    })?;
    if p1 >= p2 {
        return Err(Error::DoesNotPrecede {
            first: m1.to_string(),
            second: m2.to_string(),
        });
    }
    let Some(p3) = og.position(m3) else {
        return Ok(false);
    };
    if p3 >= p2 {
        return Ok(false);
    }
    let quotient = m3.colon(m2);
    Ok(quotient.is_variable() && quotient.divides(&m1.colon(m2)))
}

/// Verifies the ordering pair by pair: for every `j < i` some `h < i`
/// (tried as `h = j` first, then ascending) must have `M_h : M_i` equal to
/// a variable dividing `M_j : M_i`.
///
/// Worst case `O(r^3 n)`; the colon criterion is the cheaper default.
pub fn verify_works(og: &OrderedGenerators) -> QuotientCertificate {
    enum PerIndex {
        Pass(Vec<WorksWitness>),
        Fail(Vec<WorksWitness>, FailureWitness),
    }

    let order = og.order();
    let per_index: Vec<PerIndex> = (2..=order.len())
        .into_par_iter()
        .map(|i| {
            let target = &order[i - 1];
            let colons: Vec<Monomial> = order[..i - 1].iter().map(|p| p.colon(target)).collect();
            let mut witnesses = Vec::with_capacity(i - 1);
            for j in 1..i {
                let found = std::iter::once(j)
                    .chain((1..i).filter(|&h| h != j))
                    .find(|&h| {
                        colons[h - 1].is_variable() && colons[h - 1].divides(&colons[j - 1])
                    });
                match found {
                    Some(h) => witnesses.push(WorksWitness { i, j, h }),
                    None => {
                        return PerIndex::Fail(
                            witnesses,
                            FailureWitness {
                                i,
                                j,
                                witness: colons[j - 1].clone(),
                            },
                        )
                    }
                }
            }
            PerIndex::Pass(witnesses)
        })
        .collect();

    let mut evidence = Vec::new();
    for entry in per_index {
        match entry {
            PerIndex::Pass(mut witnesses) => evidence.append(&mut witnesses),
            PerIndex::Fail(mut witnesses, failure) => {
                evidence.append(&mut witnesses);
                return QuotientCertificate {
                    criterion: Criterion::Works,
                    verdict: false,
                    evidence: Evidence::Works(evidence),
                    failure: Some(failure),
                };
            }
        }
    }
    QuotientCertificate {
        criterion: Criterion::Works,
        verdict: true,
        evidence: Evidence::Works(evidence),
        failure: None,
    }
}

/// Dispatches to [`verify_colon`] or [`verify_works`].
pub fn verify(og: &OrderedGenerators, criterion: Criterion) -> QuotientCertificate {
    match criterion {
        Criterion::Colon => verify_colon(og),
        Criterion::Works => verify_works(og),
    }
}

/// Why a certificate failed replay.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("evidence shape does not match the declared criterion")]
    EvidenceShapeMismatch,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("expected evidence for index {expected}, found {found}")]
    WrongIndex { expected: usize, found: usize },
    #[error("expected evidence for pair ({i},{j})")]
    MissingPair { i: usize, j: usize },
    #[error("recorded colon generator at i={i} is not a prefix quotient: {generator}")]
    NotAQuotient { i: usize, generator: String },
    #[error("recorded colon generators at i={i} are not minimal")]
    RecordedNotMinimal { i: usize },
    #[error("prefix quotient {quotient} at i={i} is not covered by the recorded generators")]
    UncoveredQuotient { i: usize, quotient: String },
    #[error("recorded generator {generator} at i={i} has degree != 1 on a passing index")]
    NonLinearGenerator { i: usize, generator: String },
    #[error("witness h={h} for pair ({i},{j}) does not satisfy the conditions")]
    BadWitness { i: usize, j: usize, h: usize },
    #[error("failure record at ({i},{j}) is refuted: {reason}")]
    BogusFailure { i: usize, j: usize, reason: String },
    #[error("certificate verdict is inconsistent with its failure field")]
    VerdictShapeMismatch,
    #[error("evidence length mismatch: expected {expected} records, found {found}")]
    Truncated { expected: usize, found: usize },
}

/// Independently re-validates a certificate against the raw ordering using
/// only monomial arithmetic (divisibility and quotients).  Accepts exactly
/// the certificates that [`verify_colon`] / [`verify_works`] emit.
pub fn replay_certificate(
    og: &OrderedGenerators,
    cert: &QuotientCertificate,
) -> std::result::Result<(), ReplayError> {
    if cert.verdict != cert.failure.is_none() {
        return Err(ReplayError::VerdictShapeMismatch);
    }
    let order = og.order();
    let r = order.len();
    if let Some(f) = &cert.failure {
        if f.i < 2 || f.i > r || f.j == 0 || f.j >= f.i {
            return Err(ReplayError::IndexOutOfRange(f.i));
        }
    }
    match (cert.criterion, &cert.evidence) {
        (Criterion::Colon, Evidence::Colon(steps)) => {
            // Indices 2..=r on a pass, 2..failure.i on a failure.
            let covered = match &cert.failure {
                Some(f) => f.i - 1,
                None => r,
            };
            let expected = covered.saturating_sub(1);
            if steps.len() != expected {
                return Err(ReplayError::Truncated {
                    expected,
                    found: steps.len(),
                });
            }
            for (k, step) in steps.iter().enumerate() {
                let i = k + 2;
                if step.i != i {
                    return Err(ReplayError::WrongIndex {
                        expected: i,
                        found: step.i,
                    });
                }
                replay_colon_step(order, step)?;
            }
            if let Some(f) = &cert.failure {
                replay_failure(order, f)?;
            }
            Ok(())
        }
        (Criterion::Works, Evidence::Works(witnesses)) => {
            let mut cursor = witnesses.iter();
            let stop = cert.failure.as_ref().map(|f| (f.i, f.j));
            let mut consumed = 0usize;
            'pairs: for i in 2..=r {
                for j in 1..i {
                    if stop == Some((i, j)) {
                        break 'pairs;
                    }
                    let w = cursor.next().ok_or(ReplayError::MissingPair { i, j })?;
                    consumed += 1;
                    if (w.i, w.j) != (i, j) {
                        return Err(ReplayError::MissingPair { i, j });
                    }
                    if w.h == 0 || w.h >= i {
                        return Err(ReplayError::BadWitness { i, j, h: w.h });
                    }
                    let target = &order[i - 1];
                    let qh = order[w.h - 1].colon(target);
                    let qj = order[j - 1].colon(target);
                    if !(qh.is_variable() && qh.divides(&qj)) {
                        return Err(ReplayError::BadWitness { i, j, h: w.h });
                    }
                }
            }
            if cursor.next().is_some() {
                return Err(ReplayError::Truncated {
                    expected: consumed,
                    found: witnesses.len(),
                });
            }
            if let Some(f) = &cert.failure {
                replay_failure(order, f)?;
            }
            Ok(())
        }
        _ => Err(ReplayError::EvidenceShapeMismatch),
    }
}

/// Re-validates one passing colon step: every recorded generator is an
/// actual prefix quotient of degree 1, the recorded set is
/// divisibility-minimal, and it covers every prefix quotient.
fn replay_colon_step(order: &[Monomial], step: &ColonStep) -> std::result::Result<(), ReplayError> {
    let i = step.i;
    if i < 2 || i > order.len() {
        return Err(ReplayError::IndexOutOfRange(i));
    }
    let target = &order[i - 1];
    let quotients: Vec<Monomial> = order[..i - 1].iter().map(|p| p.colon(target)).collect();
    for g in &step.colon_generators {
        if !quotients.contains(g) {
            return Err(ReplayError::NotAQuotient {
                i,
                generator: g.to_string(),
            });
        }
        if !g.is_variable() {
            return Err(ReplayError::NonLinearGenerator {
                i,
                generator: g.to_string(),
            });
        }
        if step
            .colon_generators
            .iter()
            .any(|other| other != g && other.divides(g))
        {
            return Err(ReplayError::RecordedNotMinimal { i });
        }
    }
    for q in &quotients {
        if !step.colon_generators.iter().any(|g| g.divides(q)) {
            return Err(ReplayError::UncoveredQuotient {
                i,
                quotient: q.to_string(),
            });
        }
    }
    Ok(())
}

/// Confirms a recorded failure is genuine: the witness is the actual
/// quotient `M_j : M_i` of degree >= 2, no variable quotient at the same
/// index divides it, and every earlier `j' < j` is repaired (firstness).
fn replay_failure(order: &[Monomial], f: &FailureWitness) -> std::result::Result<(), ReplayError> {
    let target = &order[f.i - 1];
    let colons: Vec<Monomial> = order[..f.i - 1].iter().map(|p| p.colon(target)).collect();
    let witness = &colons[f.j - 1];
    if witness != &f.witness {
        return Err(ReplayError::BogusFailure {
            i: f.i,
            j: f.j,
            reason: format!("witness should be {witness}"),
        });
    }
    if witness.is_variable() {
        return Err(ReplayError::BogusFailure {
            i: f.i,
            j: f.j,
            reason: "witness is a variable".into(),
        });
    }
    let repaired = |j: usize| {
        colons
            .iter()
            .any(|c| c.is_variable() && c.divides(&colons[j - 1]))
    };
    if repaired(f.j) {
        return Err(ReplayError::BogusFailure {
            i: f.i,
            j: f.j,
            reason: "a variable quotient divides the witness".into(),
        });
    }
    for prior in 1..f.j {
        if !colons[prior - 1].is_variable() && !repaired(prior) {
            return Err(ReplayError::BogusFailure {
                i: f.i,
                j: f.j,
                reason: format!("pair ({}, {prior}) already fails", f.i),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;

    fn m(text: &str, n: usize) -> Monomial {
        Monomial::parse(text, n).unwrap()
    }

    fn ideal(texts: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(texts.iter().map(|t| m(t, n)).collect()).unwrap()
    }

    fn triangle_lex() -> OrderedGenerators {
        OrderedGenerators::lex(ideal(&["x1*x2", "x1*x3", "x2*x3"], 3))
    }

    #[test]
    fn ordered_generators_validation() {
        let i = ideal(&["x1*x2", "x2*x3"], 3);
        assert!(OrderedGenerators::new(i.clone(), vec![m("x1*x2", 3), m("x2*x3", 3)]).is_ok());
        assert!(OrderedGenerators::new(i.clone(), vec![m("x1*x2", 3)]).is_err());
        assert!(OrderedGenerators::new(i.clone(), vec![m("x1*x2", 3), m("x1*x2", 3)]).is_err());
        assert!(OrderedGenerators::new(i, vec![m("x1*x2", 3), m("x1*x3", 3)]).is_err());
    }

    #[test]
    fn lex_ordering_is_descending() {
        let og = triangle_lex();
        assert_eq!(og.order(), &[m("x2*x3", 3), m("x1*x3", 3), m("x1*x2", 3)]);
    }

    #[test]
    fn triangle_lex_passes_colon() {
        let cert = verify_colon(&triangle_lex());
        assert!(cert.verdict);
        assert_eq!(
            cert.evidence,
            Evidence::Colon(vec![
                ColonStep {
                    i: 2,
                    colon_generators: vec![m("x2", 3)],
                },
                ColonStep {
                    i: 3,
                    colon_generators: vec![m("x3", 3)],
                },
            ])
        );
        assert_eq!(cert.failure, None);
    }

    #[test]
    fn disjoint_supports_fail_colon() {
        let og = OrderedGenerators::lex(ideal(&["x1*x2", "x3*x4"], 4));
        let cert = verify_colon(&og);
        assert!(!cert.verdict);
        let failure = cert.failure.unwrap();
        assert_eq!((failure.i, failure.j), (2, 1));
        assert_eq!(failure.witness.degree(), 2);
    }

    #[test]
    fn principal_ideal_is_vacuously_true() {
        let og = OrderedGenerators::lex(ideal(&["x1*x2"], 2));
        assert!(verify_colon(&og).verdict);
        assert!(verify_works(&og).verdict);
    }

    // Descending lex on the square of the clipped anticycle G_5 fails; the
    // first failure was computed by hand from the ten degree-4 generators.
    #[test]
    fn g5_square_lex_fails_at_known_position() {
        let square = Graph::g_n(5)
            .unwrap()
            .edge_ideal()
            .unwrap()
            .power(2)
            .unwrap();
        assert_eq!(square.num_generators(), 10);
        let og = OrderedGenerators::lex(square);
        assert_eq!(og.order()[3], m("x1*x2*x3*x5", 5));

        let cert = verify_colon(&og);
        assert!(!cert.verdict);
        let failure = cert.failure.unwrap();
        assert_eq!((failure.i, failure.j), (4, 1));
        assert_eq!(failure.witness, m("x2*x5", 5));

        let Evidence::Colon(steps) = &cert.evidence else {
            panic!("colon evidence expected")
        };
        assert_eq!(
            steps,
            &[
                ColonStep {
                    i: 2,
                    colon_generators: vec![m("x5", 5)],
                },
                ColonStep {
                    i: 3,
                    colon_generators: vec![m("x2", 5)],
                },
            ]
        );
    }

    #[test]
    fn works_example_on_anticycle_star_product() {
        let g = Graph::anticycle(5).unwrap().edge_ideal_in(6).unwrap();
        let f = Graph::star_f(6).unwrap().edge_ideal().unwrap();
        let og = OrderedGenerators::lex(g.product(&f));

        let m1 = m("x3^2*x5*x6", 6);
        let m2 = m("x1^2*x3*x6", 6);
        let m3 = m("x1*x3*x5*x6", 6);
        assert!(works(&og, &m1, &m2, &m3).unwrap());

        // m3 = m1 has a degree-2 quotient against m2, failing linearity.
        assert!(!works(&og, &m1, &m2, &m1).unwrap());
        // m3 not preceding m2 fails the precedence condition.
        assert!(!works(&og, &m1, &m2, &m2).unwrap());
        // m1 must precede m2.
        assert!(matches!(
            works(&og, &m2, &m1, &m3),
            Err(Error::DoesNotPrecede { .. })
        ));
    }

    #[test]
    fn triangle_lex_passes_works_with_self_witnesses() {
        let cert = verify_works(&triangle_lex());
        assert!(cert.verdict);
        assert_eq!(
            cert.evidence,
            Evidence::Works(vec![
                WorksWitness { i: 2, j: 1, h: 1 },
                WorksWitness { i: 3, j: 1, h: 1 },
                WorksWitness { i: 3, j: 2, h: 2 },
            ])
        );
    }

    #[test]
    fn disjoint_supports_fail_works() {
        let og = OrderedGenerators::lex(ideal(&["x1*x2", "x3*x4"], 4));
        let cert = verify_works(&og);
        assert!(!cert.verdict);
        let failure = cert.failure.unwrap();
        assert_eq!((failure.i, failure.j), (2, 1));
    }

    #[test]
    fn criteria_agree_on_all_small_orderings() {
        let ideals = [
            ideal(&["x1*x2", "x1*x3", "x2*x3"], 3),
            ideal(&["x1*x2", "x3*x4"], 4),
            ideal(&["x1^2", "x1*x2", "x2^3", "x3"], 3),
            ideal(&["x1*x2", "x2*x3", "x3*x4", "x1*x4"], 4),
        ];
        for i in &ideals {
            let r = i.num_generators();
            let mut indices: Vec<usize> = (0..r).collect();
            loop {
                let order: Vec<Monomial> =
                    indices.iter().map(|&k| i.generators()[k].clone()).collect();
                let og = OrderedGenerators::new(i.clone(), order).unwrap();
                let colon = verify_colon(&og);
                let works_cert = verify_works(&og);
                assert_eq!(colon.verdict, works_cert.verdict, "{indices:?}");
                replay_certificate(&og, &colon).unwrap();
                replay_certificate(&og, &works_cert).unwrap();
                if !next_permutation(&mut indices) {
                    break;
                }
            }
        }
    }

    fn next_permutation(arr: &mut [usize]) -> bool {
        let n = arr.len();
        if n <= 1 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && arr[i - 1] >= arr[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while arr[j] <= arr[i - 1] {
            j -= 1;
        }
        arr.swap(i - 1, j);
        arr[i..].reverse();
        true
    }

    #[test]
    fn verdict_depends_only_on_sequence() {
        let a = ideal(&["x1*x2", "x1*x3", "x2*x3"], 3);
        let b = ideal(&["x2*x3", "x1*x2", "x1*x3"], 3);
        let seq = vec![m("x1*x2", 3), m("x1*x3", 3), m("x2*x3", 3)];
        let cert_a = verify_colon(&OrderedGenerators::new(a, seq.clone()).unwrap());
        let cert_b = verify_colon(&OrderedGenerators::new(b, seq).unwrap());
        assert_eq!(cert_a, cert_b);
    }

    #[test]
    fn replay_rejects_tampering() {
        let og = triangle_lex();
        let good = verify_colon(&og);
        replay_certificate(&og, &good).unwrap();

        // Flipped verdict.
        let mut bad = good.clone();
        bad.verdict = false;
        assert!(replay_certificate(&og, &bad).is_err());

        // Dropped evidence.
        let mut bad = good.clone();
        if let Evidence::Colon(steps) = &mut bad.evidence {
            steps.pop();
        }
        assert!(replay_certificate(&og, &bad).is_err());

        // Forged generator set.
        let mut bad = good.clone();
        if let Evidence::Colon(steps) = &mut bad.evidence {
            steps[0].colon_generators = vec![m("x1", 3)];
        }
        assert!(replay_certificate(&og, &bad).is_err());

        let failing = OrderedGenerators::lex(ideal(&["x1*x2", "x3*x4"], 4));
        let cert = verify_works(&failing);
        replay_certificate(&failing, &cert).unwrap();

        // Out-of-range witness index on a works certificate.
        let passing = verify_works(&og);
        let mut bad = passing.clone();
        if let Evidence::Works(ws) = &mut bad.evidence {
            ws[0].h = 2; // h must be < i = 2
        }
        assert!(replay_certificate(&og, &bad).is_err());

        // A failure claimed on a passing ordering.
        let mut bad = passing.clone();
        bad.verdict = false;
        bad.failure = Some(FailureWitness {
            i: 3,
            j: 1,
            witness: m("x3", 3),
        });
        assert!(replay_certificate(&og, &bad).is_err());
    }

    #[test]
    fn certificate_json_shape() {
        let cert = verify_colon(&triangle_lex());
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"criterion":"colon","verdict":true,"evidence":[{"i":2,"colon_generators":[[0,1,0]]},{"i":3,"colon_generators":[[0,0,1]]}],"failure":null}"#
        );
        let back: QuotientCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);

        let failing = OrderedGenerators::lex(ideal(&["x1*x2", "x3*x4"], 4));
        let cert = verify_works(&failing);
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"criterion":"works","verdict":false,"evidence":[],"failure":{"i":2,"j":1,"witness":[0,0,1,1]}}"#
        );
        let back: QuotientCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn certificate_rejects_mismatched_evidence_shape() {
        let mixed = r#"{"criterion":"colon","verdict":true,"evidence":[{"i":2,"j":1,"h":1}],"failure":null}"#;
        assert!(serde_json::from_str::<QuotientCertificate>(mixed).is_err());
    }
}
