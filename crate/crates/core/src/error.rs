use thiserror::Error;

/// Errors raised by the library.
///
/// Variants split into two groups: violated preconditions or gates, which the
/// CLI reports with exit status 2, and internal failures (status 1) that point
/// at a bug or an environment problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),

    #[error("weight has {got} coordinates but the root system has rank {rank}")]
    RankMismatch { rank: usize, got: usize },

    #[error("Weyl group of {cartan_type} has order {order}, above the enumeration bound {bound}")]
    GroupTooLarge {
        cartan_type: String,
        order: u128,
        bound: u128,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("admissibility gate `{context}` failed for modulus {modulus}: {}", failed.join(", "))]
    Gate {
        context: String,
        modulus: i64,
        failed: Vec<String>,
    },

    #[error("unknown admissibility context `{0}`")]
    UnknownContext(String),

    #[error("weight {weight} is not dominant for the Levi subalgebra")]
    NotJDominant { weight: String },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures caused by the caller's input (bad precondition, failed
    /// gate, exhausted budget) as opposed to internal errors.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedType(_)
                | Error::RankMismatch { .. }
                | Error::GroupTooLarge { .. }
                | Error::Precondition(_)
                | Error::Gate { .. }
                | Error::UnknownContext(_)
                | Error::NotJDominant { .. }
                | Error::Budget(_)
                | Error::Parse(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
