//! Error type shared by all modules.

use crate::repvar::{AugmentedUnitaryRep, UnitaryRep};

/// Crate-wide error type. The variants map onto the CLI exit codes
/// 2 (domain), 3 (resource), 4 (convergence), 5 (verification).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid input: a precondition named in the operation contract failed.
    #[error("domain error: {0}")]
    Domain(String),

    /// A search exceeded its node budget. Carries the number of complete
    /// results found before the budget ran out.
    #[error("resource budget exceeded after finding {found} results")]
    Budget { found: usize },

    /// An iterative solve stopped at the iteration cap above tolerance.
    /// Carries the best iterate seen.
    #[error(
        "convergence failure: residual {residual:.3e} after {iterations} iterations (tol {tolerance:.1e})"
    )]
    Convergence {
        residual: f64,
        tolerance: f64,
        iterations: usize,
        best: Box<BestIterate>,
    },

    /// A certification check ended above its tolerance.
    #[error("verification failure: residual {residual:.3e} exceeds tolerance {tolerance:.1e}")]
    Verification { residual: f64, tolerance: f64 },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Final iterate of a failed solve, preserved for inspection.
#[derive(Debug, Clone)]
pub enum BestIterate {
    Plain(UnitaryRep),
    Augmented(AugmentedUnitaryRep),
}

pub type Result<T> = std::result::Result<T, Error>;
