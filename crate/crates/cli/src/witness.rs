use serde::Serialize;
use serde_json::Value;

use partpoly::Error;

/// Printed to stderr as one JSON object when a mathematical check fails.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub command: String,
    pub family: Option<String>,
    pub n: Option<i64>,
    pub expected: Value,
    pub actual: Value,
    pub context: Value,
}

impl Witness {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

/// How a run ended when it did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// A mathematical assertion failed; exit 1.
    Assertion(Witness),
    /// Bad input or an environment problem; exit 2.
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Assertion(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    /// Sorts a library error into assertion failures and everything else.
    pub fn from_error(e: Error, command: &str, family: Option<String>) -> Failure {
        let witness = |n: Option<i64>, expected: Value, actual: Value, context: Value| {
            Failure::Assertion(Witness {
                command: command.to_string(),
                family: family.clone(),
                n,
                expected,
                actual,
                context,
            })
        };
        match e {
            Error::CertificateFailed { family: f, n, modulus, detail } => witness(
                Some(n),
                Value::from(format!("Phi_{modulus} divides the row with a certified quotient")),
                Value::from(detail),
                serde_json::json!({ "modulus": modulus, "row": f }),
            ),
            Error::PositivityViolation { modulus } => witness(
                None,
                Value::from("non-negative quotient"),
                Value::from("negative quotient coefficient"),
                serde_json::json!({ "modulus": modulus }),
            ),
            Error::InternalInconsistency { modulus, buckets_equal, divisible } => witness(
                None,
                Value::from(buckets_equal),
                Value::from(divisible),
                serde_json::json!({
                    "modulus": modulus,
                    "check": "bucket equality against exact division",
                }),
            ),
            Error::NoConvergence { iterations, worst_residual } => witness(
                None,
                Value::from("all roots converged"),
                Value::from(worst_residual),
                serde_json::json!({ "iterations": iterations }),
            ),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}
