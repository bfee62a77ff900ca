use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor: {0}")]
    Descriptor(String),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("action matrix {index} is not invertible over F2")]
    SingularMatrix { index: usize },

    #[error("{what} exceeds the configured cap ({size} > {cap})")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("subgroup {0} is not contained in subgroup {1}")]
    NotContained(usize, usize),

    #[error("subgroup {0} is not a Sylow subgroup")]
    NotSylow(usize),

    #[error("subgroup {0} is not normal")]
    NotNormal(usize),

    #[error("subgroup {0} is not a maximal subgroup")]
    NotMaximal(usize),

    #[error("map is not an injective homomorphism: {0}")]
    NotInjectiveHom(String),

    #[error("mark vector is not in the image of the mark homomorphism (coordinate {coordinate})")]
    NotIntegral { coordinate: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("element is not stable under the fusion system")]
    StabilityRequired,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
