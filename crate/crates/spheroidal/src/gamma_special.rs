//! Closed-form and asymptotic reference values for `Theta` in the Legendre
//! special case `beta = gamma = 0`, plus the complex log-gamma they need.
//!
//! With `tau = sqrt(t + (mu + 1/2)^2)` on the principal branch,
//!
//! ```text
//! Theta(t) = Gamma(mu+1)^2 / (Gamma(mu + 1/2 - tau) Gamma(mu + 1/2 + tau))
//! ```
//!
//! whose zeros sit exactly at the associated Legendre eigenvalues
//! `lambda_n = (n + mu)(n + mu + 1)`. These closed forms are this crate's
//! independent oracle for the recurrence path.

use num_complex::Complex64;

use crate::{Error, Result};

/// Lanczos coefficients, g = 7, 9 terms (GSL set). Relative error below
/// ~1e-14 on the half-plane `Re z > 0.5`.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal-branch `log Gamma(z)` (the analytic continuation that is real on
/// the positive real axis).
///
/// Lanczos approximation on `Re z >= 0.5`; elsewhere the argument is shifted
/// up by an integer and the product of the shift factors is subtracted,
/// which avoids the branch bookkeeping of the reflection formula. Relative
/// accuracy ~1e-14 for `|z| <= 1e3`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAt(z));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_log_gamma(z));
    }
    // log Gamma(z) = log Gamma(z + n) - sum_j log(z + j), n = shift to Re >= 0.5
    let n = (0.5 - z.re).ceil() as usize;
    let mut log_prod = Complex64::new(0.0, 0.0);
    for j in 0..n {
        log_prod += (z + j as f64).ln();
    }
    Ok(lanczos_log_gamma(z + n as f64) - log_prod)
}

fn lanczos_log_gamma(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        series += c / (zm1 + i as f64);
    }
    let w = zm1 + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt().ln() + (zm1 + 0.5) * w.ln() - w + series.ln()
}

/// `tau = sqrt(t + (mu + 1/2)^2)` on the branch `-pi/2 < arg tau <= pi/2`,
/// i.e. `Re tau >= 0`, with the negative real axis mapping to `+i |..|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tau(Complex64);

impl Tau {
    pub fn new(mu: Complex64, t: Complex64) -> Self {
        let half = Complex64::new(0.5, 0.0);
        let mut tau = (t + (mu + half) * (mu + half)).sqrt();
        if tau.re < 0.0 || (tau.re == 0.0 && tau.im < 0.0) {
            tau = -tau;
        }
        Tau(tau)
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}

/// `Theta(t)` for `beta = gamma = 0` in closed form:
/// `Gamma(mu+1)^2 / (Gamma(mu+1/2-tau) Gamma(mu+1/2+tau))`.
///
/// Computed in log space to survive the `e^(pi sqrt|t|)` growth. Denominator
/// gamma poles are zeros of `Theta`, detected by proximity of
/// `mu + 1/2 -/+ tau` to a nonpositive integer within 1e-12 and mapped to an
/// exact 0.
pub fn theta_closed_form(mu: Complex64, t: Complex64) -> Result<Complex64> {
    if !(mu.re > 0.0 || mu == Complex64::new(0.0, 0.0)) {
        return Err(Error::InvalidParams(format!(
            "closed form requires Re(mu) > 0 or mu = 0, got {mu}"
        )));
    }
    let tau = Tau::new(mu, t).value();
    let half = Complex64::new(0.5, 0.0);
    let z1 = mu + half - tau;
    let z2 = mu + half + tau;
    for z in [z1, z2] {
        let nearest = z.re.round();
        if nearest <= 0.0 && (z - nearest).norm() < 1e-12 {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    let log_num = 2.0 * log_gamma(mu + 1.0)?;
    Ok((log_num - log_gamma(z1)? - log_gamma(z2)?).exp())
}

/// Leading-order asymptotics of `Theta(t)` for `beta = gamma = 0`, real
/// `mu >= 0` and real `t` of large modulus (documented validity `|t| >= 50`):
///
/// ```text
/// t -> +inf:  (Gamma(mu+1)^2 / pi)   t^(-mu)  cos((sqrt t - mu) pi)
/// t -> -inf:  (Gamma(mu+1)^2 / 2pi) |t|^(-mu) e^(pi sqrt|t|)
/// ```
pub fn theta_asymptotic(mu: f64, t: f64) -> Result<f64> {
    if !(mu >= 0.0) {
        return Err(Error::InvalidParams(format!("asymptotics require real mu >= 0, got {mu}")));
    }
    let pi = std::f64::consts::PI;
    let log_g2 = 2.0 * log_gamma(Complex64::new(mu + 1.0, 0.0))?.re;
    if t >= 0.0 {
        let rt = t.sqrt();
        Ok((log_g2 - mu * t.ln()).exp() / pi * ((rt - mu) * pi).cos())
    } else {
        let at = -t;
        let growth = pi * at.sqrt();
        if growth + log_g2 - mu * at.ln() > 709.0 {
            return Err(Error::Domain(format!(
                "theta_asymptotic overflows binary64 for t = {t} (needs e^{growth:.1})"
            )));
        }
        Ok((log_g2 - mu * at.ln() + growth).exp() / (2.0 * pi))
    }
}

/// The associated Legendre eigenvalue `lambda_n = (n + mu)(n + mu + 1)`.
pub fn legendre_eigenvalue(mu: Complex64, n: usize) -> Complex64 {
    let nmu = mu + n as f64;
    nmu * (nmu + 1.0)
}

/// Flammer-normalization eigenvalues `Lambda` relate to the ones used here by
/// `lambda = Lambda - gamma^2`.
pub fn flammer_to_meixner(lambda_flammer: Complex64, gamma2: Complex64) -> Complex64 {
    lambda_flammer - gamma2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_gamma_known_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - std::f64::consts::PI.sqrt().ln()).abs() < 1e-13);
        assert!(half.im.abs() < 1e-14);
        let five = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((five.re - 24f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_poles_error() {
        for z in [c(0.0, 0.0), c(-1.0, 0.0), c(-7.0, 0.0)] {
            assert!(matches!(log_gamma(z), Err(Error::PoleAt(_))));
        }
    }

    #[test]
    fn log_gamma_functional_equation() {
        // Gamma(z+1) = z Gamma(z), checked in log space across both half-planes
        for z in [c(0.3, 0.7), c(-2.3, 1.5), c(-5.5, -0.2), c(3.0, -4.0), c(-0.5, 0.0)] {
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            let diff = lhs - rhs;
            // allow 2*pi*i wraps, compare as values of exp
            assert!((diff.exp() - 1.0).norm() < 1e-12, "z = {z}: diff {diff}");
        }
    }

    #[test]
    fn log_gamma_large_argument() {
        // Stirling sanity at |z| ~ 1e3: Gamma(1000) via sum of logs
        let lg = log_gamma(c(1000.0, 0.0)).unwrap().re;
        let direct: f64 = (1..1000).map(|k| (k as f64).ln()).sum();
        assert!((lg - direct).abs() / direct < 1e-13);
    }

    #[test]
    fn tau_branch() {
        // negative real argument of the square root goes to +i |..|
        let tau = Tau::new(c(0.0, 0.0), c(-25.0, 0.0)).value();
        assert_eq!(tau.re, 0.0);
        assert!(tau.im > 0.0);
        let tau = Tau::new(c(2.0, 0.0), c(10.0, 0.0)).value();
        assert!(tau.re > 0.0 && tau.im == 0.0);
    }

    #[test]
    fn closed_form_zero_at_legendre_eigenvalues() {
        // mu=0, t=0: tau=1/2 puts Gamma(0) in the denominator
        assert_eq!(theta_closed_form(c(0.0, 0.0), c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        // mu=2, nu=3: t = (nu+mu+1)(nu-mu) = 6
        assert_eq!(theta_closed_form(c(2.0, 0.0), c(6.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn closed_form_reflection_identity_mu0() {
        // at mu=0 the closed form collapses to cos(pi tau)/pi
        let t = c(1.0, 0.0);
        let got = theta_closed_form(c(0.0, 0.0), t).unwrap();
        let tau = Tau::new(c(0.0, 0.0), t).value();
        let expect = (std::f64::consts::PI * tau).cos() / std::f64::consts::PI;
        assert!((got - expect).norm() < 1e-12);
        assert!((got.re - (-0.29667)).abs() < 1e-5);
    }

    #[test]
    fn asymptotic_values() {
        let pi = std::f64::consts::PI;
        // mu=0, t=400: sqrt(t)=20 integral, cos = 1
        assert!((theta_asymptotic(0.0, 400.0).unwrap() - 1.0 / pi).abs() < 1e-13);
        // mu=1, t=400: Gamma(2)=1, cos(19 pi) = -1
        assert!((theta_asymptotic(1.0, 400.0).unwrap() + 1.0 / (400.0 * pi)).abs() < 1e-15);
        // mu=0, t=-100: e^(10 pi)/(2 pi)
        let want = (10.0 * pi).exp() / (2.0 * pi);
        assert!((theta_asymptotic(0.0, -100.0).unwrap() / want - 1.0).abs() < 1e-13);
        // far past the overflow edge
        assert!(theta_asymptotic(0.0, -6.0e4).is_err());
    }

    #[test]
    fn legendre_eigenvalues() {
        assert_eq!(legendre_eigenvalue(c(0.0, 0.0), 1), c(2.0, 0.0));
        assert_eq!(legendre_eigenvalue(c(2.0, 0.0), 0), c(6.0, 0.0));
        let z = legendre_eigenvalue(c(2.0, 0.05), 0);
        assert!((z - c(5.9975, 0.25)).norm() < 1e-12);
    }

    #[test]
    fn flammer_shift() {
        let lam = flammer_to_meixner(c(0.42895710850, 0.0), c(-25.0, 0.0));
        assert!((lam - c(25.42895710850, 0.0)).norm() < 1e-12);
        let lam = flammer_to_meixner(c(30.910172248, 0.0), c(-25.0, 0.0));
        assert!((lam - c(55.910172248, 0.0)).norm() < 1e-12);
        assert_eq!(flammer_to_meixner(c(0.0, 0.0), c(0.0, 0.0)), c(0.0, 0.0));
    }
}
