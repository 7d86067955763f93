use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the numeric
/// kernels and the ledger; the CLI maps them onto exit codes.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("non-positive input: {0}")]
    NonPositiveInput(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("singular curve: discriminant g2^3 - 27*g3^2 = 0")]
    SingularCurve,
    #[error("degenerate lattice: omega2/omega1 is certifiably real")]
    DegenerateLattice,
    #[error("non-admissible composition: first part must be >= 2")]
    NonAdmissible,
    #[error("non-admissible word: must start with x and end with y")]
    NonAdmissibleWord,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("census budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("CM status unresolved: run detect_cm before querying the elliptic ledger entry")]
    UnresolvedCM,
    #[error("zero parameter not allowed: {0}")]
    ZeroParameter(String),
    #[error("not catalogued: {0}")]
    NotCatalogued(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short name used in CLI reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPositiveInput(_) => "NonPositiveInput",
            Error::PrecisionExhausted(_) => "PrecisionExhausted",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::DomainError(_) => "DomainError",
            Error::SingularCurve => "SingularCurve",
            Error::DegenerateLattice => "DegenerateLattice",
            Error::NonAdmissible => "NonAdmissible",
            Error::NonAdmissibleWord => "NonAdmissibleWord",
            Error::InsufficientPrecision(_) => "InsufficientPrecision",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::UnresolvedCM => "UnresolvedCM",
            Error::ZeroParameter(_) => "ZeroParameter",
            Error::NotCatalogued(_) => "NotCatalogued",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
