//! Eigenvalues and eigenfunctions of the angular, Coulomb and generalized
//! spheroidal wave equations.
//!
//! The Coulomb spheroidal wave equation (CSWE) on `(-1, 1)`,
//!
//! ```text
//! d/dx[(1-x^2) w'] + (lambda + beta*x + gamma^2 (1-x^2) - mu^2/(1-x^2)) w = 0,
//! ```
//!
//! has eigenvalues `lambda` exactly at the zeros of an entire function
//! `Theta(t)` of the shifted parameter `t = lambda - mu(mu+1)`. `Theta` is the
//! limit of a scalar three-term style recurrence whose partial sums converge
//! like `O(k^(-Re mu - 2))`, so eigenvalue computation reduces to cheap
//! function evaluation plus one-dimensional root finding. The generalized
//! equation (GSWE, extra parameter `alpha`) is handled by the same recurrence
//! with `mu ± alpha` in place of `mu`, and the recurrence additionally yields
//! the series coefficients of the eigenfunctions.
//!
//! Module map:
//!
//! * [`theta`] — the recurrence kernel: `eval_theta`, `eval_theta_lambda`,
//!   single steps, and the vector form used for cross-validation.
//! * [`gamma_special`] — closed-form and asymptotic reference values in the
//!   Legendre special case `beta = gamma = 0`, plus complex log-gamma.
//! * [`solver`] — root refinement, indexed solving by homotopy from the
//!   Legendre case, real and complex-plane scans, parameter tracking.
//! * [`eigenfunction`] — two-sided eigenfunction series with a matching
//!   constant, evaluation, and an ODE residual check.
//! * [`shoot_oracle`] — an independent two-sided shooting method (Wronskian
//!   matching at `x = 0`) used to verify eigenvalues from the recurrence.
//!
//! All operations are pure functions of their inputs and safe to call
//! concurrently.

use num_complex::Complex64;

mod dd;
pub mod eigenfunction;
pub mod gamma_special;
mod params;
pub mod shoot_oracle;
pub mod solver;
pub mod theta;

pub use params::ProblemParams;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Parameter set outside the supported domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// The stopping rule never fired before `k_max`; the requested tolerance
    /// is too tight for the `O(k^(-Re mu - 2))` rate at this `k_max`.
    #[error("no convergence by k_max={k_max}: error estimate {err_estimate:.3e}")]
    NonConvergence { k_max: usize, err_estimate: f64 },
    /// A recurrence value became non-finite.
    #[error("overflow in recurrence at step k={k}")]
    Overflow { k: usize },
    /// Log-gamma evaluated at a pole.
    #[error("log_gamma pole at z = {0}")]
    PoleAt(Complex64),
    /// Root iteration hit its iteration cap.
    #[error("root iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    /// Secant denominator vanished; caller must reseed.
    #[error("secant stagnation: identical function values at both iterates")]
    Stagnation,
    /// Continuation refined to a root farther than the path-jump bound
    /// (typical near avoided crossings; remedy: more steps or smaller step).
    #[error("continuation lost its root at step {step}: jump {jump:.3e} > bound {bound:.3e}")]
    PathLoss { step: usize, jump: f64, bound: f64 },
    /// Eigenfunction construction re-verification failed.
    #[error("lambda is not an eigenvalue: |Theta| = {0:.3e}")]
    NotAnEigenvalue(f64),
    /// Left/right eigenfunction series could not be matched at any switch
    /// candidate (node at every handover point).
    #[error("eigenfunction match failure: node at every switch candidate")]
    MatchFailure,
    /// The adaptive integrator exceeded its step budget.
    #[error("ODE integrator exceeded {0} steps")]
    IntegratorFailure(usize),
    /// Frobenius start undefined on the alpha = 0 path.
    #[error("singular start: Re(mu + 1) <= 0")]
    StartSingularity,
    /// Argument outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
