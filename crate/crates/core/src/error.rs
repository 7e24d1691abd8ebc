use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid discriminant {0}: expected a squarefree integer greater than 1")]
    InvalidDiscriminant(i64),
    #[error("a + b*xi = {a} + {b}*xi is not totally positive, so eta is not totally imaginary")]
    NotTotallyImaginary { a: String, b: String },
    #[error(
        "the minimal polynomial of eta is reducible over Q, so K0(eta) is not a quartic field"
    )]
    ReducibleQuartic,
    #[error("elements live in different rings (D = {left} vs D = {right})")]
    DomainMismatch { left: u64, right: u64 },
    #[error("relative norm {0} is not a rational prime")]
    NormNotPrime(String),
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("prime {0} is outside the supported range {1}")]
    PrimeOutOfRange(u64, &'static str),
    #[error("the CM field is biquadratic and therefore not primitive")]
    NotPrimitive,
    #[error("c2 = 0: the Frobenius would lie in a biquadratic field")]
    C2Zero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("extension degree {0} is not supported (expected 1 or 2)")]
    InvalidExtensionDegree(u32),
    #[error("f is not squarefree over F_{0}")]
    NotSquarefree(u64),
    #[error("f has degree {0}; a genus-2 model needs degree 5 or 6")]
    InvalidDegree(usize),
    #[error("divisor is not on the curve (v^2 != f mod u)")]
    DivisorNotOnCurve,
    #[error(
        "Jacobian may have up to {needed} elements, exceeding the enumeration budget {budget}"
    )]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("Cantor arithmetic needs an odd-degree (degree 5) model")]
    EvenDegreeModel,
    #[error("point counts N1 = {n1}, N2 = {n2} are inconsistent for p = {p}")]
    InconsistentCounts { n1: String, n2: String, p: String },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Stable machine-readable identifier, used in CLI error payloads.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidDiscriminant(_) => "invalid-discriminant",
            Error::NotTotallyImaginary { .. } => "not-totally-imaginary",
            Error::ReducibleQuartic => "reducible-quartic",
            Error::DomainMismatch { .. } => "domain-mismatch",
            Error::NormNotPrime(_) => "norm-not-prime",
            Error::NotPrime(_) => "not-prime",
            Error::PrimeOutOfRange(..) => "prime-out-of-range",
            Error::NotPrimitive => "not-primitive",
            Error::C2Zero => "c2-zero",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InvalidExtensionDegree(_) => "invalid-extension-degree",
            Error::NotSquarefree(_) => "not-squarefree",
            Error::InvalidDegree(_) => "invalid-degree",
            Error::DivisorNotOnCurve => "divisor-not-on-curve",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::EvenDegreeModel => "even-degree-model",
            Error::InconsistentCounts { .. } => "inconsistent-counts",
            Error::InvariantViolation(_) => "invariant-violation",
        }
    }

    /// Internal invariant violations indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
