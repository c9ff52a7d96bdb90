use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("weight {0} is not allowed; every weight must be at least 2")]
    InvalidWeight(i64),
    #[error("elements belong to different weight triples {0} and {1}")]
    WeightMismatch(String, String),
    #[error("weight triple {0} has nonnegative Euler characteristic")]
    NotNegativelyCurved(String),
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no stable category data for weight triple {0}")]
    UnsupportedWeights(String),
    #[error("{0} is not of shape x_i, x_i+x_j or 2x_i in the S-set")]
    UnsupportedShape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
