use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),

    #[error("algebra mismatch in {0}")]
    AlgebraMismatch(&'static str),

    #[error("invalid quiver: {0}")]
    Quiver(String),

    #[error("relation-free paths are unbounded: the cycle {cycle} can be repeated forever")]
    UnboundedCycle { cycle: String },

    #[error("algebra validation failed: {0}")]
    InvalidAlgebra(String),

    #[error("module validation failed: {0}")]
    InvalidModule(String),

    #[error("{what} is not projective: {detail}")]
    NotProjective { what: String, detail: String },

    #[error("size cap exceeded: {what} needs {needed} entries, cap is {cap}; {hint}")]
    SizeCap {
        what: String,
        needed: u128,
        cap: u128,
        hint: &'static str,
    },

    #[error("{0}")]
    Other(String),
}
