use serde::Serialize;
use thiserror::Error;

/// How a failure should be read by a caller (and mapped to process exit codes
/// by the command line front end).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    /// The input is malformed or violates a precondition.
    InvalidInput,
    /// An internal consistency check fired. Never expected on valid input.
    Tripwire,
    /// The construction ran but the result failed verification.
    Verification,
}

/// Pipeline stage an error originated from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Linalg,
    LieCore,
    Decompose,
    JordanChevalley,
    Expansion,
    EnvModule,
    Pipeline,
    Io,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("antisymmetry violated at ({i},{j})")]
    Antisymmetry { i: usize, j: usize },

    #[error("Jacobi violated at ({i},{j},{k})")]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("not closed under bracket: [b{i}, b{j}] leaves the subspace")]
    NotClosed { i: usize, j: usize },

    #[error("not an ideal: [e{i}, b{j}] leaves the subspace")]
    NotIdeal { i: usize, j: usize },

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("input is not a derivation: Leibniz fails on basis pair ({i},{j})")]
    NotDerivation { i: usize, j: usize },

    #[error("x lies in I")]
    VectorInIdeal,

    #[error("no p-commuting complement vector exists (complete reducibility hypothesis violated)")]
    NoCommutingComplement,

    #[error("algebra is not reductive: {0}")]
    NotReductive(String),

    #[error("word of length {len} exceeds the ambient degree bound {bound}")]
    WordTooLong { len: usize, bound: usize },

    #[error("ambient dimension {size} exceeds limit {limit}; retry with a smaller truncation")]
    AmbientTooLarge { size: usize, limit: usize },

    #[error("truncation must be at least 2, got {0}")]
    TruncationTooSmall(usize),

    #[error(
        "representation not faithful at truncation {truncation} (kernel dimension {kernel_dim}): \
         the low-degree part of the truncation ideal is not disjoint from n; retry with a larger truncation"
    )]
    NotFaithful { truncation: usize, kernel_dim: usize },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal check failed in {stage:?}: {message}")]
    Tripwire { stage: Stage, message: String },
}

impl Error {
    pub fn tripwire(stage: Stage, message: impl Into<String>) -> Self {
        Error::Tripwire { stage, message: message.into() }
    }

    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Tripwire { .. } => ErrorClass::Tripwire,
            NotFaithful { .. } | VerificationFailed(_) => ErrorClass::Verification,
            _ => ErrorClass::InvalidInput,
        }
    }

    pub fn stage(&self) -> Stage {
        use Error::*;
        match self {
            DimensionMismatch(_) | NotSquare { .. } | NotInvertible(_) => Stage::Linalg,
            Antisymmetry { .. } | Jacobi { .. } | NotClosed { .. } | NotIdeal { .. } | NotNilpotent => Stage::LieCore,
            NotDerivation { .. } => Stage::JordanChevalley,
            VectorInIdeal | NoCommutingComplement => Stage::Expansion,
            NotReductive(_) => Stage::Pipeline,
            WordTooLong { .. } | AmbientTooLarge { .. } | TruncationTooSmall(_) => Stage::EnvModule,
            NotFaithful { .. } | VerificationFailed(_) => Stage::Pipeline,
            Parse(_) => Stage::Io,
            Tripwire { stage, .. } => *stage,
        }
    }

    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        use Error::*;
        match self {
            DimensionMismatch(_) => "dimension_mismatch",
            NotSquare { .. } => "not_square",
            NotInvertible(_) => "not_invertible",
            Antisymmetry { .. } => "antisymmetry",
            Jacobi { .. } => "jacobi",
            NotClosed { .. } => "not_closed",
            NotIdeal { .. } => "not_ideal",
            NotNilpotent => "not_nilpotent",
            NotDerivation { .. } => "not_derivation",
            VectorInIdeal => "vector_in_ideal",
            NoCommutingComplement => "no_commuting_complement",
            NotReductive(_) => "not_reductive",
            WordTooLong { .. } => "word_too_long",
            AmbientTooLarge { .. } => "ambient_too_large",
            TruncationTooSmall(_) => "truncation_too_small",
            NotFaithful { .. } => "not_faithful",
            VerificationFailed(_) => "verification_failed",
            Parse(_) => "parse",
            Tripwire { .. } => "tripwire",
        }
    }

    /// Basis indices that witness the failure, when there are any.
    pub fn witness(&self) -> Option<Vec<usize>> {
        use Error::*;
        match *self {
            Antisymmetry { i, j } | NotClosed { i, j } | NotIdeal { i, j } | NotDerivation { i, j } => Some(vec![i, j]),
            Jacobi { i, j, k } => Some(vec![i, j, k]),
            _ => None,
        }
    }

    /// Structured form written to the error stream by the CLI.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "error": {
                "class": self.class(),
                "stage": self.stage(),
                "kind": self.kind(),
                "message": self.to_string(),
                "witness": self.witness(),
            }
        })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
