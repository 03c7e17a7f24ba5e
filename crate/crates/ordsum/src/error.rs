use thiserror::Error;

/// Errors produced by construction, evaluation, analysis and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("value {0} is outside the unit interval [0, 1]")]
    OutOfUnitRange(f64),

    #[error("unknown {kind} connective `{name}`")]
    UnknownConnective { kind: String, name: String },

    #[error("invalid parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },

    #[error("expected a {expected} expression, found {found}")]
    KindMismatch { expected: String, found: String },

    #[error("expected {expected} argument(s), got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("summand interval ]{a}, {b}[ is empty")]
    EmptyInterval { a: f64, b: f64 },

    #[error("summand intervals ]{a1}, {b1}[ and ]{a2}, {b2}[ overlap")]
    OverlappingIntervals { a1: f64, b1: f64, a2: f64, b2: f64 },

    #[error("rescher ordinal sums require a > 0 for every summand (found a = {0})")]
    RescherRequiresPositiveLower(f64),

    #[error("left ordinal sums require b < 1 for every summand (found b = {0})")]
    LeftRequiresUpperBelowOne(f64),

    #[error("negation is not strict; inverse undefined")]
    NotStrict,

    #[error("zero/one set at x = {x} is not a boundary interval; operand is not monotone")]
    OracleStructure { x: f64 },

    #[error("invalid oracle configuration: {0}")]
    BadOracleConfig(String),

    #[error("invalid analysis budget: {0}")]
    BadBudget(String),

    #[error("sub-negation list has {got} entries for {expected} summands")]
    SubNegationCount { expected: usize, got: usize },

    #[error("theorem {theorem} needs a {expected} family, got {found}")]
    TheoremFamilyMismatch {
        theorem: String,
        expected: String,
        found: String,
    },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("theorem {0} has no falsification direction")]
    NoFalsificationDirection(String),

    #[error("constraints unsatisfiable: {0}")]
    UnsatisfiableConstraints(String),

    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },

    #[error("config parse error: {0}")]
    ConfigSyntax(String),
}

pub type Result<T> = std::result::Result<T, Error>;
