//! Self-contained numerical kernel: small complex linear algebra,
//! quadrature, root finding, and special functions.
//!
//! Everything here is a pure function of its inputs; matrices are
//! immutable values after construction. Only 2x2 and 4x4 dimensions are
//! supported, which is all the qubit/two-qubit machinery ever needs.

mod eig;
mod expm;
mod matrix;
mod quad;
mod root;
mod special;

pub use eig::{eig4, EigenResult};
pub use expm::expm4;
pub use matrix::{kron, ComplexMatrix};
pub use quad::integrate;
pub use root::find_root;
pub(crate) use root::golden_min;
pub use special::euler_gamma;

use thiserror::Error;

/// Default absolute tolerance for adaptive quadrature.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;
/// Default bracket width for bisection root finding.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
/// Residual tolerance expected of the eigensolver on well-scaled input.
pub const EIG_RESIDUAL_TOL: f64 = 1e-9;
/// Tolerance for Hermiticity / completeness style structural checks.
pub const STRUCTURE_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("eigenvalue iteration did not converge within {0} steps")]
    EigNonConvergence(usize),
    #[error("matrix exponential overflow (norm {0:.3e})")]
    ExpOverflow(f64),
    #[error("quadrature refinement budget exhausted on [{0:.6e}, {1:.6e}] (possible non-integrable singularity)")]
    QuadratureBudget(f64, f64),
    #[error("non-finite integrand value at t = {0:.6e}")]
    NonFiniteIntegrand(f64),
    #[error("invalid bracket: f({0:.6e}) and f({1:.6e}) do not straddle zero")]
    InvalidBracket(f64, f64),
    #[error("gamma function requires s > 0, got {0}")]
    GammaDomain(f64),
    #[error("singular linear system in Pade solve")]
    SingularSystem,
}
