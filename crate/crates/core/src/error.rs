use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands belong to different algebras")]
    MismatchedAlgebras,

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("no state certified: the normalized trace is not a state")]
    EmptyStateSpace,

    #[error("algebra is not semisimple: Jacobson radical of dimension {radical_dim}")]
    NotSemisimple { radical_dim: usize },

    #[error("involution is not positive: trace form has {negative} negative directions")]
    NotCStar { negative: usize },

    #[error("block is not irreducible: commutant has real dimension {commutant_dim}")]
    NotIrreducible { commutant_dim: usize },

    #[error("division ring mismatch: commutant gives {commutant}, Hermitian count gives {hermitian}")]
    RingMismatch { commutant: String, hermitian: String },

    #[error("decomposition failed after seeds {seeds:?}: {reason}")]
    DecompositionFailed { seeds: Vec<u64>, reason: String },

    #[error("elements {0} and {1} have no unique {2}")]
    NotALattice(usize, usize, &'static str),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
