use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by constructors and operations whose preconditions can be
/// violated by caller data (files, CLI arguments, random test inputs).
///
/// Plain arithmetic on values that already passed validation (e.g. `gcd` of
/// two monomials) treats an arity mismatch as a programming error and panics
/// instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient variable counts differ: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("operation requires a monomial of positive degree")]
    ZeroDegree,

    #[error("monomials must have equal degree (got {left} and {right})")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("first monomial must be strictly lex-greater than the second")]
    NotLexGreater,

    #[error("cannot parse monomial {text:?}: {reason}")]
    ParseMonomial { text: String, reason: String },

    #[error("variable index {index} is invalid on {n} variables")]
    BadVariable { index: usize, n: usize },

    #[error("generator set must be nonempty")]
    EmptyGenerators,

    #[error("ideal power must be at least 1")]
    ZeroPower,

    #[error("generators are not minimal: {culprit} divides {victim}")]
    NotMinimal { culprit: String, victim: String },

    #[error("edge {{{u},{v}}} is invalid on {n} vertices")]
    BadEdge { u: usize, v: usize, n: usize },

    #[error("graph family {family} requires n >= {min} (got {n})")]
    OrderTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },

    #[error("|a-b| must be congruent to 2 or -2 mod n (got a={a}, b={b}, n={n})")]
    ResidueCondition { a: usize, b: usize, n: usize },

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("graph is not a star centered at vertex {center}")]
    NotAStar { center: usize },

    #[error("ambient variable count {ambient} is below the graph order {n}")]
    AmbientTooSmall { ambient: usize, n: usize },

    #[error("ordering is not a permutation of the minimal generators: {reason}")]
    NotAPermutation { reason: String },

    #[error("monomial {monomial} does not appear in the ordering")]
    NotInOrdering { monomial: String },

    #[error("{first} does not precede {second} in the ordering")]
    DoesNotPrecede { first: String, second: String },

    #[error("composite hypothesis violated: {0}")]
    CompositeHypothesis(String),

    #[error("exhaustive strategy limited to {cap} generators (ideal has {got})")]
    ExhaustiveCapExceeded { cap: usize, got: usize },

    #[error("search produced an ordering that fails verification; this is a bug")]
    SearchInvariant,

    #[error("no ordering found for the base sub-ideal: {0}")]
    BaseOrderingUnavailable(String),

    #[error("no dihedral relabeling maps the graph onto the target family")]
    NoNormalizingPermutation,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
