//! Symmetric `AND_d ∘ MOD_p ∘ MOD_q` circuits as sums over F_p-labeled
//! hypergraphs.
//!
//! The crate represents the inner `AND∘MOD_p` layer of such a circuit as a
//! multilinear polynomial over F_p, identified with a labeled hypergraph.
//! On top of that it provides:
//!
//! * exact prime-field arithmetic and periodic binomial/multinomial
//!   coefficients ([`ff`]),
//! * hypergraphs with symmetric-group actions, automorphism groups, orbits
//!   and fully-symmetric-set analysis ([`hypergraph`]),
//! * expressions built from elementary atoms `b(G; r)` and their symmetric
//!   closures `s(G; r)`, with brute-force truth-table equivalence as the
//!   universal oracle ([`expr`]),
//! * the degree-decreasing rewrites and the two-stage symmetry-purification
//!   pipeline ([`rewrite`]),
//! * evaluation of purified closures on Hamming weights through the
//!   partition-count machinery, period prediction, and checkers for the
//!   period and size bounds ([`period`]).
//!
//! Everything is exact (no floats) and sized for desk-scale instances:
//! small vertex counts, small primes, exhaustive verification.

pub mod expr;
pub mod ff;
pub mod hypergraph;
pub mod json;
pub mod period;
pub mod perm;
pub mod rewrite;
pub mod selftest;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..=97")]
    NotPrime(u64),
    #[error("operands belong to different fields (mod {0} vs mod {1})")]
    ModulusMismatch(u64, u64),
    #[error("inversion of zero in F_{0}")]
    ZeroInverse(u64),
    #[error("empty sequence has no period")]
    EmptySequence,
    #[error("input vector has length {got}, expected {want}")]
    LengthMismatch { want: usize, got: usize },
    #[error("graphs disagree on vertex set or field: {0}")]
    GraphMismatch(String),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid expression: {0}")]
    InvalidExpression(String),
    #[error("{what} cap exceeded (limit {limit})")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("n = {n} exceeds the {what} limit of {limit}")]
    TooManyVertices {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("expression is not symmetric: transposition ({u} {v}) changes it")]
    NotSymmetric { u: usize, v: usize },
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("epsilon must satisfy 0 < eps < 1/8, got {0}/{1}")]
    BadEpsilon(u64, u64),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code associated with this error:
    /// 1 verification failure, 2 input error, 3 cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) | Error::Internal(_) => 1,
            Error::CapExceeded { .. } | Error::TooManyVertices { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource caps that turn combinatorial blow-up into clean errors.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum number of distinct graphs enumerated per orbit.
    pub orbit: usize,
    /// Maximum number of terms held by an expression or a rewrite worklist.
    pub terms: usize,
    /// Largest n for which 2^n truth-table sweeps are attempted.
    pub truth_table_n: usize,
    /// Maximum number of count vectors enumerated per chi sum.
    pub chi_box: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            orbit: 1_000_000,
            terms: 1_000_000,
            truth_table_n: 20,
            chi_box: 10_000_000,
        }
    }
}
