//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input failed validation against its stated constraint.
    #[error("{name} must be {constraint} (got {value})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// The full generator has more than one steady direction. Cannot occur
    /// for positive rates; reported instead of silently picking one.
    #[error("degenerate generator: {real_null_dim} real null directions, expected 2 (one complex)")]
    DegenerateGenerator { real_null_dim: usize },

    /// A dense linear system could not be solved.
    #[error("singular linear system in {0}")]
    SingularSystem(&'static str),

    /// An objective returned NaN or infinity during optimization.
    #[error("objective is not finite at {point:?}")]
    NonFiniteObjective { point: Vec<f64> },
}

pub type Result<T> = std::result::Result<T, Error>;
