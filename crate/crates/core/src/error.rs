use thiserror::Error;

/// Errors raised by the reduction pipeline.
///
/// Variants fall into two families: input problems (the data does not
/// describe a unitary representation, an order, a character set, ...)
/// and internal inconsistencies that indicate a bug. [`Error::is_internal`]
/// tells them apart; the CLI maps them to exit codes 2 and 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entry {what} at ({row}, {col}) is not p-integral")]
    NotIntegral { what: String, row: usize, col: usize },

    #[error("representation is not unitary for the lattice basis: generator {generator} conjugates to a matrix with a non-integral entry at ({row}, {col})")]
    NotUnitary { generator: usize, row: usize, col: usize },

    #[error("lattice basis matrix is singular")]
    SingularBasis,

    #[error("span is not closed under multiplication: product of basis elements {left} and {right} lies outside")]
    NotClosed { left: usize, right: usize },

    #[error("span does not contain the identity")]
    NoIdentity,

    #[error("basis is not linearly independent")]
    DependentBasis,

    #[error("brute-force enumeration too large: {size} elements exceeds bound {bound}")]
    TooLarge { size: u128, bound: u128 },

    #[error("algebra is not semisimple (radical dimension {0})")]
    NotSemisimple(usize),

    #[error("starting matrix is not an approximate idempotent: v_p(P^2 - P) = {0} < 1")]
    NotApproxIdempotent(i64),

    #[error("character {index} = {value} is not in 1 + pZ_(p)")]
    NotInDisc { index: usize, value: String },

    #[error("fixpoint not reached within {0} steps")]
    MaxIterationsExceeded(usize),

    #[error("lifted idempotent fails centrality: v_p(eb - be) = {valuation} < {precision} for lattice basis element {basis_index}")]
    CentralityViolation {
        basis_index: usize,
        valuation: i64,
        precision: i64,
    },

    #[error("iterate {step} of the idempotent lift left the lattice")]
    LeftLattice { step: usize },

    #[error("trace {trace} has no unique representative in [0, {n}] modulo p^{precision}")]
    AmbiguousTrace {
        trace: String,
        n: usize,
        precision: u32,
    },

    #[error("component dimensions sum to {sum}, expected {n}")]
    DimMismatch { sum: usize, n: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// True for errors that can only arise from a bug, never from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::MaxIterationsExceeded(_)
                | Error::CentralityViolation { .. }
                | Error::LeftLattice { .. }
                | Error::AmbiguousTrace { .. }
                | Error::DimMismatch { .. }
                | Error::NotSemisimple(_)
                | Error::InternalInconsistency(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
