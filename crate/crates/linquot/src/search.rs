//! Backtracking search for a linear-quotient ordering of a monomial ideal.
//!
//! The search grows a prefix one generator at a time, keeping the invariant
//! that every colon ideal along the prefix is variable-generated.  Any full
//! linear-quotient ordering restricted to its first `k` elements satisfies
//! the same invariant, so pruning extensions that break it never discards a
//! completable prefix: exhausting the tree genuinely refutes existence.
//!
//! Found orderings are re-verified with the colon criterion before being
//! returned.  Searched orderings can be cached on disk keyed by the ideal;
//! cache hits are re-verified before use so a stale or tampered file can
//! never poison a certificate.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::quotients::{verify_colon, OrderedGenerators, QuotientCertificate};

/// How the search explores the ordering space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Commit to the first valid candidate at every step; never backtrack.
    Greedy,
    /// Depth-first search with backtracking (the default).
    Backtrack,
    /// Backtracking search that must run to completion, certifying
    /// non-existence; only allowed up to [`SearchConfig::exhaustive_cap`]
    /// generators.
    Exhaustive,
}

/// Budgets and knobs for [`find_ordering`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Node limit; one node per attempted prefix extension.
    pub max_nodes: u64,
    /// Optional wall-clock limit.
    pub max_time: Option<Duration>,
    /// Seed for candidate-order randomization; 0 keeps the canonical order.
    pub seed: u64,
    /// Candidate order to explore first; descending lex when absent.
    pub hint: Option<Vec<Monomial>>,
    /// Largest generator count admitted by the exhaustive strategy.
    pub exhaustive_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            strategy: Strategy::Backtrack,
            max_nodes: 10_000_000,
            max_time: None,
            seed: 0,
            hint: None,
            exhaustive_cap: 12,
        }
    }
}

/// Why a search stopped without an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    NodeLimit,
    TimeLimit,
    /// The greedy strategy hit a prefix with no valid extension.
    DeadEnd,
}

/// Search verdict.  `NoneExists` is only produced by a run that exhausted
/// the whole (pruned) tree; budget exhaustion is always reported as such.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Box<OrderedGenerators>),
    NoneExists,
    BudgetExhausted(StopReason),
}

/// Outcome plus accounting; node counts are reported for every run.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Incremental state for extending a prefix: appending `candidate` is valid
/// iff every quotient `p : candidate` over the prefix is dominated by some
/// variable quotient.  One check costs `O(prefix length * n)`.
#[derive(Debug, Clone, Default)]
pub struct PrefixState {
    prefix: Vec<Monomial>,
}

impl PrefixState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn prefix(&self) -> &[Monomial] {
        &self.prefix
    }

    /// True iff appending `candidate` keeps every colon ideal along the
    /// prefix variable-generated.  The empty prefix accepts anything.
    pub fn check(&self, candidate: &Monomial) -> bool {
        let n = candidate.n();
        // Variables x_t with p : candidate = x_t for some prefix member p.
        let mut linear = vec![false; n];
        let mut any_linear = false;
        let mut pending: Vec<&Monomial> = Vec::new();
        for p in &self.prefix {
            let mut deg = 0u32;
            let mut last_var = 0usize;
            for (k, (&pe, &ce)) in p.exponents().iter().zip(candidate.exponents()).enumerate() {
                let d = pe.saturating_sub(ce);
                if d > 0 {
                    deg += d;
                    last_var = k;
                }
            }
            match deg {
                // p divides the candidate: the colon ideal is the unit
                // ideal, not variable-generated.
                0 => return false,
                1 => {
                    linear[last_var] = true;
                    any_linear = true;
                }
                _ => pending.push(p),
            }
        }
        if pending.is_empty() {
            return true;
        }
        if !any_linear {
            return false;
        }
        pending.iter().all(|p| {
            p.exponents()
                .iter()
                .zip(candidate.exponents())
                .zip(&linear)
                .any(|((&pe, &ce), &lin)| lin && pe > ce)
        })
    }

    pub fn push(&mut self, m: Monomial) {
        self.prefix.push(m);
    }

    pub fn pop(&mut self) -> Option<Monomial> {
        self.prefix.pop()
    }
}

/// Searches for a linear-quotient ordering of `ideal`.
///
/// Found orderings are re-verified before being returned.  `NoneExists`
/// certifies that the exhaustive tree walk refuted every ordering (pruning
/// preserves completeness).  Budget exhaustion is a distinct outcome and is
/// never conflated with non-existence.
pub fn find_ordering(ideal: &MonomialIdeal, cfg: &SearchConfig) -> Result<SearchResult> {
    let r = ideal.num_generators();
    if cfg.strategy == Strategy::Exhaustive && r > cfg.exhaustive_cap {
        return Err(Error::ExhaustiveCapExceeded {
            cap: cfg.exhaustive_cap,
            got: r,
        });
    }

    let mut candidates: Vec<Monomial> = match &cfg.hint {
        Some(hint) => {
            // Validate the hint as a genuine reordering of the generators.
            OrderedGenerators::new(ideal.clone(), hint.clone())?;
            hint.clone()
        }
        None => ideal.generators().to_vec(),
    };
    if cfg.seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        candidates.shuffle(&mut rng);
    }

    let start = Instant::now();
    let mut nodes = 0u64;
    let mut state = PrefixState::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    let mut used = vec![false; r];
    // next_try[d] = candidate position to try next at depth d.
    let mut next_try: Vec<usize> = vec![0];

    let finish = |outcome: SearchOutcome, nodes: u64| -> Result<SearchResult> {
        if let SearchOutcome::Found(og) = &outcome {
            if !verify_colon(og).verdict {
                return Err(Error::SearchInvariant);
            }
        }
        Ok(SearchResult {
            outcome,
            nodes,
            elapsed: start.elapsed(),
        })
    };

    loop {
        if chosen.len() == r {
            let order: Vec<Monomial> = chosen.iter().map(|&k| candidates[k].clone()).collect();
            let og = OrderedGenerators::new(ideal.clone(), order)?;
            return finish(SearchOutcome::Found(Box::new(og)), nodes);
        }
        let depth = chosen.len();
        let mut extended = false;
        let mut pos = next_try[depth];
        while pos < r {
            if used[pos] {
                pos += 1;
                continue;
            }
            nodes += 1;
            if nodes > cfg.max_nodes {
                return finish(SearchOutcome::BudgetExhausted(StopReason::NodeLimit), nodes);
            }
            if nodes.is_multiple_of(1024) {
                if let Some(limit) = cfg.max_time {
                    if start.elapsed() > limit {
                        return finish(
                            SearchOutcome::BudgetExhausted(StopReason::TimeLimit),
                            nodes,
                        );
                    }
                }
            }
            if state.check(&candidates[pos]) {
                next_try[depth] = pos + 1;
                chosen.push(pos);
                used[pos] = true;
                state.push(candidates[pos].clone());
                next_try.push(0);
                extended = true;
                break;
            }
            pos += 1;
        }
        if extended {
            continue;
        }
        // No extension at this depth.
        match cfg.strategy {
            Strategy::Greedy => {
                return finish(SearchOutcome::BudgetExhausted(StopReason::DeadEnd), nodes)
            }
            Strategy::Backtrack | Strategy::Exhaustive => {
                next_try.pop();
                match chosen.pop() {
                    Some(prev) => {
                        used[prev] = false;
                        state.pop();
                    }
                    // Tree exhausted: every ordering is refuted.
                    None => return finish(SearchOutcome::NoneExists, nodes),
                }
            }
        }
    }
}

/// Searches with a read-through cache: a verified cache hit is returned
/// with zero nodes, and fresh `Found` results are stored.
pub fn find_ordering_with_cache(
    ideal: &MonomialIdeal,
    cfg: &SearchConfig,
    cache: Option<&OrderingCache>,
) -> Result<SearchResult> {
    if let Some(cache) = cache {
        if let Some(og) = cache.load(ideal) {
            return Ok(SearchResult {
                outcome: SearchOutcome::Found(Box::new(og)),
                nodes: 0,
                elapsed: Duration::ZERO,
            });
        }
    }
    let result = find_ordering(ideal, cfg)?;
    if let (Some(cache), SearchOutcome::Found(og)) = (cache, &result.outcome) {
        let cert = verify_colon(og);
        cache.store(og, &cert)?;
    }
    Ok(result)
}

/// One cache file per ideal: the found ordering plus its certificate.
#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    ideal: MonomialIdeal,
    order: Vec<Monomial>,
    certificate: QuotientCertificate,
}

/// On-disk cache of searched orderings, keyed by a hash of the canonical
/// ideal JSON.  Entries are re-verified on load; anything stale, corrupt,
/// or failing verification is treated as a miss.
#[derive(Debug, Clone)]
pub struct OrderingCache {
    dir: PathBuf,
}

impl OrderingCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Content hash of the canonical ideal serialization.
    pub fn ideal_key(ideal: &MonomialIdeal) -> String {
        let json = serde_json::to_vec(ideal).expect("ideal serialization cannot fail");
        hex::encode(Sha256::digest(&json))
    }

    fn entry_path(&self, ideal: &MonomialIdeal) -> PathBuf {
        self.dir.join(format!("{}.json", Self::ideal_key(ideal)))
    }

    /// Loads and re-verifies a cached ordering for `ideal`, if any.
    pub fn load(&self, ideal: &MonomialIdeal) -> Option<OrderedGenerators> {
        let bytes = std::fs::read(self.entry_path(ideal)).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
        if &entry.ideal != ideal {
            return None;
        }
        let og = OrderedGenerators::new(entry.ideal, entry.order).ok()?;
        verify_colon(&og).verdict.then_some(og)
    }

    /// Writes the ordering and its certificate for later runs.
    pub fn store(&self, og: &OrderedGenerators, cert: &QuotientCertificate) -> Result<PathBuf> {
        let path = self.entry_path(og.ideal());
        let entry = CacheEntry {
            ideal: og.ideal().clone(),
            order: og.order().to_vec(),
            certificate: cert.clone(),
        };
        std::fs::write(&path, serde_json::to_vec_pretty(&entry)?)?;
        Ok(path)
    }
}
