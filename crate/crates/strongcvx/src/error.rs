use thiserror::Error;

/// Everything that can go wrong when building instances or evaluating checks.
///
/// Inequality *violations* are never errors: they are counted in
/// [`VerificationReport`](crate::harness::VerificationReport). Errors are
/// reserved for malformed inputs, domain mismatches and configuration
/// problems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input must not be empty")]
    EmptyInput,

    #[error("length mismatch: expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {index} is {value}, weights must be non-negative and finite")]
    InvalidWeight { index: usize, value: f64 },

    #[error("weights sum to {sum}, expected 1 within 1e-12")]
    WeightSum { sum: f64 },

    #[error("weight {index} is zero but strict positivity is required")]
    ZeroWeight { index: usize },

    #[error("value {value} lies outside the domain {domain}")]
    OutsideDomain { value: f64, domain: String },

    #[error("function {id:?} has no derivative registered")]
    MissingDerivative { id: String },

    #[error("invalid interval: lo={lo}, hi={hi}")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("domain of {id:?} is unbounded and no sampling box is configured")]
    UnboundedSampleRegion { id: String },

    #[error("invalid parameter: {what}")]
    InvalidParameter { what: String },

    #[error("matrix entry ({row},{col}) breaks symmetry beyond tolerance")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("eigenvalue {eigenvalue} lies outside the required spectrum {domain}")]
    SpectrumOutsideDomain { eigenvalue: f64, domain: String },

    #[error("vector norm is {norm}, expected {expected}")]
    BadNorm { norm: f64, expected: String },

    #[error("function {id:?} must be non-negative here but takes value {value} at {at}")]
    NegativeFunctionValue { id: String, at: f64, value: f64 },

    #[error("hypothesis not satisfied: {what}")]
    HypothesisViolated { what: String },

    #[error("Jacobi eigensolver did not converge for dimension {dim}")]
    NoConvergence { dim: usize },

    #[error("unknown check id {id:?} (see `list-checks`)")]
    UnknownCheck { id: String },

    #[error("unknown report format {name:?}, expected \"json\" or \"csv\"")]
    UnknownFormat { name: String },

    #[error("cannot parse matrix at line {line}: {what}")]
    ParseMatrix { line: usize, what: String },

    #[error("configuration error: {what}")]
    Config { what: String },
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
