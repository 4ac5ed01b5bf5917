use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::LaurentPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: LaurentPoly },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("quotient has non-integral coefficients")]
    NonIntegralQuotient,

    #[error("constant term {constant} is not a unit")]
    NotAUnit { constant: LaurentPoly },

    #[error("infinite product has a non-unit factor at q^0")]
    DivergentProduct,

    #[error("expected a monomial, got {0}")]
    NotAMonomial(LaurentPoly),

    #[error("unsupported modulus t={0}; the t-core crank is defined for t in {{5, 7, 11}}")]
    UnsupportedModulus(u32),

    #[error("{what} is outside the supported scope: {why}")]
    OutOfScope { what: String, why: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("partition {0:?} is not a {1}-core")]
    NotATCore(Vec<u32>, u32),

    #[error("vector {0:?} does not sum to zero")]
    NotZeroSum(Vec<i64>),

    #[error("bucket equality and exact division disagree for modulus {modulus}: buckets equal = {buckets_equal}, divisible = {divisible}")]
    InternalInconsistency {
        modulus: u32,
        buckets_equal: bool,
        divisible: bool,
    },

    #[error("symmetric unimodal polynomial divisible by Phi_{modulus} has a negative quotient coefficient")]
    PositivityViolation { modulus: u32 },

    #[error("certificate failed for {family} at n={n}, modulus {modulus}: {detail}")]
    CertificateFailed {
        family: String,
        n: i64,
        modulus: u32,
        detail: String,
    },

    #[error("principal polynomial for {family} at n={n} has zero constant term")]
    ZeroConstantTerm { family: String, n: u32 },

    #[error("unsupported family or option: {0}")]
    UnsupportedFamily(String),

    #[error("polynomial has degree 0; nothing to solve")]
    ConstantPolynomial,

    #[error("root solver did not converge after {iterations} iterations (worst residual {worst_residual:e})")]
    NoConvergence { iterations: u32, worst_residual: f64 },

    #[error("coefficient {0} cannot be represented in the requested precision")]
    Unrepresentable(BigInt),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
