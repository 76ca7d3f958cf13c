//! Eigenfunction series for a located eigenvalue.
//!
//! At a zero of `Theta~` the recurrence's running `w_k` are the coefficients
//! of the bounded solution expanded about `x = -1`:
//!
//! ```text
//! w(x) = (1+x)^((mu-alpha)/2) (1-x)^(-(mu+alpha)/2) sum_k w_k ((1+x)/2)^k
//! ```
//!
//! That series converges too slowly near `x = +1`, so a second expansion is
//! built about `x = +1` from the mirror instance (`-alpha, -beta` — the
//! equation with `x` replaced by `-x`), and the two are glued with a matching
//! constant at a handover point. The handover defaults to `x = 0` and moves
//! to `x = +/-0.1` if the eigenfunction has a node there.

use num_complex::Complex64;

use crate::theta::{eval_theta, w_trail, EvalOptions, DEFAULT_K_MAX};
use crate::{Error, ProblemParams, Result};

/// Residual bound for the eigenvalue re-verification in
/// [`series_coefficients`].
pub const EIGENVALUE_RESIDUAL_TOL: f64 = 1e-7;

/// Two-sided eigenfunction expansion for one eigenvalue.
///
/// `w_left` are the coefficients about `x = -1` (normalized `w_left[0] = 1`,
/// the paper's `w ~ (1+x)^((mu-alpha)/2)` normalization), `w_right` the
/// mirror coefficients about `x = +1`, and `c_match` scales the right series
/// so both sides agree at `switch_x`.
#[derive(Debug, Clone)]
pub struct EigenfunctionSeries {
    pub w_left: Vec<Complex64>,
    pub w_right: Vec<Complex64>,
    /// `(mu - alpha)/2`, the exponent at `x = -1`.
    pub exp_left: Complex64,
    /// `(mu + alpha)/2`, the exponent at `x = +1`.
    pub exp_right: Complex64,
    /// Right-to-left scale factor.
    pub c_match: Complex64,
    /// Evaluation handover point.
    pub switch_x: f64,
    lambda: Complex64,
}

fn horner(coeffs: &[Complex64], u: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * u + c;
    }
    acc
}

fn left_value(series: &EigenfunctionSeries, x: f64) -> Complex64 {
    let xp = Complex64::new(1.0 + x, 0.0);
    let xm = Complex64::new(1.0 - x, 0.0);
    xp.powc(series.exp_left) * xm.powc(-series.exp_right) * horner(&series.w_left, xp / 2.0)
}

fn right_value_unscaled(series: &EigenfunctionSeries, x: f64) -> Complex64 {
    let xp = Complex64::new(1.0 + x, 0.0);
    let xm = Complex64::new(1.0 - x, 0.0);
    xm.powc(series.exp_right) * xp.powc(-series.exp_left) * horner(&series.w_right, xm / 2.0)
}

/// Build the two-sided series at eigenvalue `lambda`, collecting `k_max + 1`
/// coefficients per side.
///
/// Re-verifies `|Theta~(lambda)| <= 1e-7` first and reports
/// [`Error::NotAnEigenvalue`] otherwise. For the coefficient count, see
/// [`suggested_k_max`].
pub fn series_coefficients(
    params: &ProblemParams,
    lambda: Complex64,
    k_max: usize,
) -> Result<EigenfunctionSeries> {
    if k_max < 16 {
        return Err(Error::Domain("eigenfunction k_max must be >= 16".into()));
    }
    let t = params.t_from_lambda(lambda);
    let check = eval_theta(params, t, &EvalOptions { extrapolate: true, ..Default::default() })?;
    let residual = check.value.norm();
    if residual > EIGENVALUE_RESIDUAL_TOL {
        return Err(Error::NotAnEigenvalue(residual));
    }
    let w_left = w_trail(params, t, k_max + 1)?;
    let w_right = w_trail(&params.reflected(), t, k_max + 1)?;
    let mut series = EigenfunctionSeries {
        w_left,
        w_right,
        exp_left: params.mu_minus_alpha() / 2.0,
        exp_right: params.mu_plus_alpha() / 2.0,
        c_match: Complex64::new(1.0, 0.0),
        switch_x: 0.0,
        lambda,
    };
    for candidate in [0.0, 0.1, -0.1] {
        series.switch_x = candidate;
        let right = right_value_unscaled(&series, candidate);
        if right.norm() >= 1e-14 {
            series.c_match = left_value(&series, candidate) / right;
            return Ok(series);
        }
    }
    Err(Error::MatchFailure)
}

/// Coefficient count suggestion for [`series_coefficients`]: four times the
/// terms the `Theta` evaluation needed, capped at the recurrence step cap.
/// Eigenfunction tails decay one power slower than the `Theta` differences.
pub fn suggested_k_max(params: &ProblemParams, lambda: Complex64) -> Result<usize> {
    let ev = eval_theta(
        params,
        params.t_from_lambda(lambda),
        &EvalOptions { extrapolate: true, ..Default::default() },
    )?;
    Ok((4 * ev.k_used.max(16)).min(DEFAULT_K_MAX))
}

impl EigenfunctionSeries {
    /// The eigenvalue the series was built at.
    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    /// Evaluate `w(x)` on `[-1, 1]`.
    ///
    /// Left series up to `switch_x`, scaled right series beyond. At the
    /// endpoints the prefactor limit applies: 0 when the local exponent has
    /// positive real part, the leading coefficient when the exponent is 0
    /// (only `mu = alpha = 0` reaches that case).
    pub fn evaluate(&self, x: f64) -> Result<Complex64> {
        if !(-1.0..=1.0).contains(&x) {
            return Err(Error::Domain(format!("x = {x} outside [-1, 1]")));
        }
        let zero = Complex64::new(0.0, 0.0);
        if x == -1.0 {
            return Ok(if self.exp_left == zero { self.w_left[0] } else { zero });
        }
        if x == 1.0 {
            return Ok(if self.exp_right == zero { self.c_match * self.w_right[0] } else { zero });
        }
        Ok(if x <= self.switch_x {
            left_value(self, x)
        } else {
            self.c_match * right_value_unscaled(self, x)
        })
    }

    /// L2 norm over `[-1, 1]` by the trapezoidal rule on 1001 points, for
    /// callers that want a normalized eigenfunction as a post-processing
    /// step. The series itself keeps the `w_left[0] = 1` normalization.
    pub fn l2_norm(&self) -> Result<f64> {
        let n = 1001;
        let h = 2.0 / (n - 1) as f64;
        let mut acc = 0.0;
        for i in 0..n {
            let x = (-1.0 + i as f64 * h).clamp(-1.0, 1.0);
            let v = self.evaluate(x)?.norm_sqr();
            let weight = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            acc += weight * v;
        }
        Ok((acc * h).sqrt())
    }
}

/// Absolute residual of the defining ODE at `x`, using 5-point central
/// differences of step `h` on [`EigenfunctionSeries::evaluate`]:
///
/// ```text
/// | d/dx[(1-x^2) w'] + (lambda + beta x + gamma^2 (1-x^2)
///     - (mu^2 + alpha^2 + 2 alpha mu x)/(1-x^2)) w |
/// ```
pub fn ode_residual(
    params: &ProblemParams,
    series: &EigenfunctionSeries,
    x: f64,
    h: f64,
) -> Result<f64> {
    if !(h > 0.0) {
        return Err(Error::Domain("h must be > 0".into()));
    }
    if !(x > -1.0 + 2.0 * h && x < 1.0 - 2.0 * h) {
        return Err(Error::Domain(format!("x = {x} too close to the endpoints for h = {h}")));
    }
    let w_m2 = series.evaluate(x - 2.0 * h)?;
    let w_m1 = series.evaluate(x - h)?;
    let w_0 = series.evaluate(x)?;
    let w_p1 = series.evaluate(x + h)?;
    let w_p2 = series.evaluate(x + 2.0 * h)?;
    let d1 = (-w_p2 + 8.0 * w_p1 - 8.0 * w_m1 + w_m2) / (12.0 * h);
    let d2 = (-w_p2 + 16.0 * w_p1 - 30.0 * w_0 + 16.0 * w_m1 - w_m2) / (12.0 * h * h);
    let one_m_x2 = 1.0 - x * x;
    let mu = params.mu();
    let alpha = params.alpha();
    let potential = series.lambda + params.beta() * x + params.gamma2() * one_m_x2
        - (mu * mu + alpha * alpha + 2.0 * alpha * mu * x) / one_m_x2;
    Ok((one_m_x2 * d2 - 2.0 * x * d1 + potential * w_0).norm())
}
