//! Independent eigenvalue verification by two-sided ODE shooting.
//!
//! The substitution `w = (1+x)^((mu-alpha)/2) (1-x)^((mu+alpha)/2) psi`
//! removes the singular prefactors and turns the GSWE into
//!
//! ```text
//! (1-x^2) psi'' - 2 (alpha + (mu+1) x) psi' + (t + beta x + gamma^2 (1-x^2)) psi = 0
//! ```
//!
//! (the Chu–Stratton form when `alpha = 0`). The solution regular at
//! `x = -1` is integrated rightward from `-1 + delta`, the mirror solution
//! (built from the `(-alpha, -beta)` instance) leftward from `+1 - delta`,
//! and their Wronskian at `x = 0` vanishes exactly at eigenvalues.
//!
//! This module exists to falsify the recurrence path, so apart from
//! [`ProblemParams`] it shares no code with it: starts come from a Frobenius
//! expansion of this ODE, and the integrator is a plain adaptive
//! Dormand–Prince 5(4) over the complex-valued state.

use num_complex::Complex64;

use crate::solver::Eigenvalue;
use crate::{Error, ProblemParams, Result};

/// Shooting configuration.
#[derive(Debug, Clone)]
pub struct ShootConfig {
    /// Offset from the singular endpoints; integration starts at
    /// `+/-(1 - delta)`.
    pub delta: f64,
    /// Local error tolerance of the embedded 5(4) pair.
    pub step_tol: f64,
    /// Step budget per half-interval integration.
    pub max_steps: usize,
}

impl Default for ShootConfig {
    fn default() -> Self {
        ShootConfig { delta: 1e-3, step_tol: 1e-10, max_steps: 100_000 }
    }
}

impl ShootConfig {
    fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta <= 0.1) {
            return Err(Error::Domain(format!("delta must lie in (0, 0.1], got {}", self.delta)));
        }
        if !(self.step_tol > 0.0) {
            return Err(Error::Domain("step_tol must be > 0".into()));
        }
        Ok(())
    }
}

/// Frobenius/Taylor coefficients `c_0..c_(n-1)` of the regular solution of
/// the `psi` ODE at `x = -1` in powers of `s = 1 + x`, normalized `c_0 = 1`.
///
/// From substituting the power series into the ODE:
///
/// ```text
/// 2 (n+1) (n + mu - alpha + 1) c_{n+1}
///     = [n (n + 2 mu + 1) - (t - beta)] c_n - (beta + 2 gamma^2) c_{n-1}
///       + gamma^2 c_{n-2}
/// ```
///
/// whose first row is the regularity condition
/// `2 (mu - alpha + 1) psi'(-1) = -(t - beta) psi(-1)`.
pub fn frobenius_coeffs(
    params: &ProblemParams,
    t: Complex64,
    n_terms: usize,
) -> Vec<Complex64> {
    let mu = params.mu();
    let alpha = params.alpha();
    let beta = params.beta();
    let g2 = params.gamma2();
    let mut c = Vec::with_capacity(n_terms);
    c.push(Complex64::new(1.0, 0.0));
    for n in 0..n_terms.saturating_sub(1) {
        let nf = n as f64;
        let cm1 = if n >= 1 { c[n - 1] } else { Complex64::new(0.0, 0.0) };
        let cm2 = if n >= 2 { c[n - 2] } else { Complex64::new(0.0, 0.0) };
        let num = (nf * (nf + 1.0) + 2.0 * nf * mu - (t - beta)) * c[n]
            - (beta + 2.0 * g2) * cm1
            + g2 * cm2;
        let den = 2.0 * (nf + 1.0) * (mu - alpha + nf + 1.0);
        c.push(num / den);
    }
    c
}

/// Series value and derivative at `s = 1 + x`.
fn frobenius_start(coeffs: &[Complex64], s: f64) -> (Complex64, Complex64) {
    let mut val = Complex64::new(0.0, 0.0);
    let mut der = Complex64::new(0.0, 0.0);
    for &ck in coeffs.iter().rev() {
        der = der * s + val;
        val = val * s + ck;
    }
    (val, der)
}

/// Right-hand side of the first-order system for `(psi, psi')`.
#[inline]
fn rhs(
    x: f64,
    y: [Complex64; 2],
    mu: Complex64,
    alpha: Complex64,
    beta: Complex64,
    g2: Complex64,
    t: Complex64,
) -> [Complex64; 2] {
    let one_m_x2 = 1.0 - x * x;
    let d2 = (2.0 * (alpha + (mu + 1.0) * x) * y[1] - (t + beta * x + g2 * one_m_x2) * y[0])
        / one_m_x2;
    [y[1], d2]
}

/// Dormand–Prince 5(4) with a standard step controller, integrating the
/// complex 2-state from `x0` to `x1`.
fn integrate(
    params: &ProblemParams,
    t: Complex64,
    x0: f64,
    x1: f64,
    mut y: [Complex64; 2],
    cfg: &ShootConfig,
) -> Result<[Complex64; 2]> {
    const A: [[f64; 6]; 6] = [
        [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
        [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
        [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
    ];
    const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
    // 5th-order weights equal A[5]; the embedded 4th-order weights:
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let mu = params.mu();
    let alpha = params.alpha();
    let beta = params.beta();
    let g2 = params.gamma2();
    let dir = (x1 - x0).signum();
    let mut x = x0;
    let mut h = dir * 1e-4_f64.min((x1 - x0).abs() / 10.0);
    let mut k = [[Complex64::new(0.0, 0.0); 2]; 7];
    k[0] = rhs(x, y, mu, alpha, beta, g2, t);
    for _ in 0..cfg.max_steps {
        if (x - x1) * dir >= 0.0 {
            return Ok(y);
        }
        if (x + h - x1) * dir > 0.0 {
            h = x1 - x;
        }
        for stage in 0..6 {
            let mut yi = y;
            for (j, kj) in k.iter().enumerate().take(stage + 1) {
                let a = A[stage][j] * h;
                yi[0] += a * kj[0];
                yi[1] += a * kj[1];
            }
            k[stage + 1] = rhs(x + C[stage] * h, yi, mu, alpha, beta, g2, t);
        }
        // k[6] is the FSAL evaluation at the 5th-order solution
        let y5 = {
            let mut acc = y;
            for (j, kj) in k.iter().enumerate().take(6) {
                let a = A[5][j] * h;
                acc[0] += a * kj[0];
                acc[1] += a * kj[1];
            }
            acc
        };
        let mut err = 0.0_f64;
        for comp in 0..2 {
            let mut e = Complex64::new(0.0, 0.0);
            for (j, kj) in k.iter().enumerate() {
                let diff = if j < 6 { A[5][j] - B4[j] } else { -B4[6] };
                e += diff * h * kj[comp];
            }
            let scale = cfg.step_tol * (1.0 + y[comp].norm().max(y5[comp].norm()));
            err = err.max(e.norm() / scale);
        }
        if err <= 1.0 {
            x += h;
            y = y5;
            k[0] = k[6]; // FSAL
        }
        let factor = (0.9 * err.powf(-0.2)).clamp(0.2, 5.0);
        h *= factor;
        if h.abs() < 1e-15 {
            return Err(Error::IntegratorFailure(cfg.max_steps));
        }
    }
    Err(Error::IntegratorFailure(cfg.max_steps))
}

/// Integrate the regular solutions from both endpoints and return the
/// normalized Wronskian `(psi_L psi_R' - psi_L' psi_R) / (m_L m_R)` at
/// `x = 0`, where `m_X = max(|psi_X(0)|, |psi_X'(0)|)`.
pub fn wronskian_mismatch(
    params: &ProblemParams,
    lambda: Complex64,
    cfg: &ShootConfig,
) -> Result<Complex64> {
    cfg.validate()?;
    if params.is_cswe() && (params.mu() + 1.0).re <= 0.0 {
        return Err(Error::StartSingularity);
    }
    let t = params.t_from_lambda(lambda);
    let n_taylor = 12;

    // left: regular at -1, integrated to 0
    let c_left = frobenius_coeffs(params, t, n_taylor);
    let (v, d) = frobenius_start(&c_left, cfg.delta);
    let y_left = integrate(params, t, -1.0 + cfg.delta, 0.0, [v, d], cfg)?;

    // right: the mirror instance integrated on the left, then reflected
    let mirrored = params.reflected();
    let c_right = frobenius_coeffs(&mirrored, t, n_taylor);
    let (v, d) = frobenius_start(&c_right, cfg.delta);
    let y_m = integrate(&mirrored, t, -1.0 + cfg.delta, 0.0, [v, d], cfg)?;
    let y_right = [y_m[0], -y_m[1]];

    let m_left = y_left[0].norm().max(y_left[1].norm());
    let m_right = y_right[0].norm().max(y_right[1].norm());
    Ok((y_left[0] * y_right[1] - y_left[1] * y_right[0]) / (m_left * m_right))
}

/// Locate an eigenvalue near `lambda_guess` by secant iteration on the
/// Wronskian mismatch. The guess must lie within the basin of one eigenvalue
/// (roughly `|dlambda| <~ 0.5`).
pub fn oracle_eigenvalue(
    params: &ProblemParams,
    lambda_guess: Complex64,
    cfg: &ShootConfig,
) -> Result<Eigenvalue> {
    let mut l0 = lambda_guess;
    let mut l1 = lambda_guess + Complex64::new(0.05, 0.0);
    let mut f0 = wronskian_mismatch(params, l0, cfg)?;
    let mut f1 = wronskian_mismatch(params, l1, cfg)?;
    let max_iter = 60;
    for it in 1..=max_iter {
        if f1 == f0 {
            if f1 == Complex64::new(0.0, 0.0) {
                break;
            }
            return Err(Error::Stagnation);
        }
        let l2 = l1 - f1 * (l1 - l0) / (f1 - f0);
        if (l2 - l1).norm() <= 1e-10 * l2.norm().max(1.0) {
            let residual = wronskian_mismatch(params, l2, cfg)?.norm();
            return Ok(Eigenvalue {
                lambda: l2,
                t: params.t_from_lambda(l2),
                residual,
                index: None,
                iterations: it,
                k_used: 0,
            });
        }
        l0 = l1;
        f0 = f1;
        l1 = l2;
        f1 = wronskian_mismatch(params, l1, cfg)?;
    }
    if f1.norm() < 1e-8 {
        return Ok(Eigenvalue {
            lambda: l1,
            t: params.t_from_lambda(l1),
            residual: f1.norm(),
            index: None,
            iterations: max_iter,
            k_used: 0,
        });
    }
    Err(Error::NoConvergence(max_iter))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> ShootConfig {
        ShootConfig::default()
    }

    #[test]
    fn legendre_eigenvalue_w_vanishes() {
        // mu=0, lambda=2: eigenfunction -x, W must vanish
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let w = wronskian_mismatch(&p, c(2.0, 0.0), &cfg()).unwrap();
        assert!(w.norm() < 1e-8, "|W| = {}", w.norm());
    }

    #[test]
    fn between_eigenvalues_w_is_large() {
        // lambda=4 sits between the Legendre eigenvalues 2 and 6
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let w = wronskian_mismatch(&p, c(4.0, 0.0), &cfg()).unwrap();
        assert!(w.norm() >= 0.01, "|W| = {}", w.norm());
    }

    #[test]
    fn table1_eigenvalue_confirmed() {
        let p = ProblemParams::cswe(c(2.0, 0.0), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        let w = wronskian_mismatch(&p, c(25.4289571085, 0.0), &cfg()).unwrap();
        assert!(w.norm() < 1e-6, "|W| = {}", w.norm());
    }

    #[test]
    fn oracle_locates_legendre() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let ev = oracle_eigenvalue(&p, c(1.8, 0.0), &cfg()).unwrap();
        assert!((ev.lambda - c(2.0, 0.0)).norm() < 1e-8, "lambda = {}", ev.lambda);
    }

    #[test]
    fn oracle_locates_table1_row0() {
        let p = ProblemParams::cswe(c(2.0, 0.0), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        let ev = oracle_eigenvalue(&p, c(25.4, 0.0), &cfg()).unwrap();
        assert!((ev.lambda - c(25.4289571, 0.0)).norm() < 1e-6, "lambda = {}", ev.lambda);
    }

    #[test]
    fn oracle_locates_gswe_fig7_row0() {
        let p = ProblemParams::gswe(c(2.0, 0.0), c(0.5, 0.0), c(-1.0, 0.0), c(4.0, 0.0)).unwrap();
        let ev = oracle_eigenvalue(&p, c(2.5, 0.0), &cfg()).unwrap();
        assert!((ev.lambda - c(2.472312, 0.0)).norm() < 1e-5, "lambda = {}", ev.lambda);
    }

    #[test]
    fn frobenius_first_coefficient_is_regularity_condition() {
        // 2 (mu+1) psi'(-1) = -(t - beta) psi(-1) on the alpha=0 path
        let p = ProblemParams::cswe(c(2.0, 0.0), c(0.5, 0.0), c(-25.0, 0.0)).unwrap();
        let t = c(19.4, 0.0);
        let coeffs = frobenius_coeffs(&p, t, 4);
        let expect = -(t - p.beta()) / (2.0 * (p.mu() + 1.0));
        assert!((coeffs[1] - expect).norm() < 1e-15);
    }

    #[test]
    fn taylor_start_consistent_with_four_terms() {
        // series-extended start vs direct 4-term evaluation: O(delta^4) apart
        let p = ProblemParams::cswe(c(2.0, 0.0), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        let t = c(19.4289571085, 0.0);
        let full = frobenius_coeffs(&p, t, 12);
        let four = &full[..4];
        let delta = 1e-3;
        let (v_full, _) = frobenius_start(&full, delta);
        let (v_four, _) = frobenius_start(four, delta);
        assert!((v_full - v_four).norm() < 10.0 * delta.powi(4));
    }

    #[test]
    fn config_validation() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let bad = ShootConfig { delta: 0.5, ..Default::default() };
        assert!(wronskian_mismatch(&p, c(2.0, 0.0), &bad).is_err());
    }
}
