use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no such root: {0}")]
    NoSuchRoot(String),
    #[error("field mismatch: {0}")]
    BadFieldMismatch(String),
    #[error("invalid field configuration: {0}")]
    InvalidConfig(String),
    #[error("both inputs are zero")]
    ZeroInput,
    #[error("operation requires finite-field coefficients")]
    NotFiniteField,
    #[error("inseparable input (derivative vanishes identically)")]
    InseparableInput,
    #[error("polynomial is not monic in {0}")]
    NotMonic(char),
    #[error("not a member of M_h: {0}")]
    NotInMh(String),
    #[error("characteristic {p} divides root index {d}")]
    CharDividesDenominator { p: u64, d: u64 },
    #[error("substituted series must have positive valuation")]
    NonpositiveValuation,
    #[error("element is not an n-th root of unity for the series ramification")]
    BadRootOrder,
    #[error("series is exact and the requested power is an infinite series; truncate first")]
    Unbounded,
    #[error("characteristic polynomial {0} has roots outside the configured field")]
    RootOutsideField(String),
    #[error("characteristic {p} must exceed the y-degree {m}")]
    CharTooSmall { p: u64, m: usize },
    #[error("input has a zero root")]
    ZeroRoot,
    #[error("search budget of {0} candidates exceeded")]
    SearchBudgetExceeded(u64),
    #[error("composed product requires vanishing constant terms")]
    ConstantTermNonzero,
    #[error("degrees {0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("degree {n} is not below the characteristic {p}")]
    DegreeBoundExceeded { n: usize, p: u64 },
    #[error("not a member of M_h,min: {0}")]
    NotMember(String),
    #[error("zero is not a group element")]
    ZeroElement,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
