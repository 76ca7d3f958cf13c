use num_complex::Complex64;

use crate::{Error, Result};

/// Parameters `(mu, alpha, beta, gamma^2)` fixing one CSWE/GSWE instance.
///
/// `alpha = 0` selects the Coulomb spheroidal equation (CSWE); `beta = 0` in
/// addition gives the angular spheroidal equation (ASWE). `gamma2` stores
/// `gamma^2` directly — no square root of `gamma` is ever taken, so oblate
/// problems are simply `gamma2 < 0`.
///
/// Construction validates the hypotheses under which the recurrence provably
/// converges: for CSWE either `Re mu > 0` or `mu = 0` exactly; for GSWE
/// (`alpha != 0`) both `Re(mu - alpha) > 0` and `Re(mu + alpha) > 0`, with
/// neither `mu - alpha` nor `mu + alpha` an integer. Anything else is
/// rejected here rather than producing silently wrong answers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemParams {
    mu: Complex64,
    alpha: Complex64,
    beta: Complex64,
    gamma2: Complex64,
}

fn is_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re.fract() == 0.0
}

impl ProblemParams {
    /// CSWE/ASWE instance (`alpha = 0`).
    pub fn cswe(mu: Complex64, beta: Complex64, gamma2: Complex64) -> Result<Self> {
        let finite = [mu, beta, gamma2].iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite {
            return Err(Error::InvalidParams("non-finite parameter".into()));
        }
        let mu_ok = mu.re > 0.0 || mu == Complex64::new(0.0, 0.0);
        if !mu_ok {
            return Err(Error::InvalidParams(format!(
                "CSWE requires Re(mu) > 0 or mu = 0 exactly, got mu = {mu}"
            )));
        }
        Ok(Self { mu, alpha: Complex64::new(0.0, 0.0), beta, gamma2 })
    }

    /// Generalized instance. `alpha = 0` falls back to the CSWE rules.
    pub fn gswe(
        mu: Complex64,
        alpha: Complex64,
        beta: Complex64,
        gamma2: Complex64,
    ) -> Result<Self> {
        if alpha == Complex64::new(0.0, 0.0) {
            return Self::cswe(mu, beta, gamma2);
        }
        let finite =
            [mu, alpha, beta, gamma2].iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite {
            return Err(Error::InvalidParams("non-finite parameter".into()));
        }
        let (mm, mp) = (mu - alpha, mu + alpha);
        if mm.re <= 0.0 || mp.re <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "GSWE requires Re(mu - alpha) > 0 and Re(mu + alpha) > 0, got {mm} and {mp}"
            )));
        }
        if is_integer(mm) || is_integer(mp) {
            return Err(Error::InvalidParams(format!(
                "GSWE with integer mu - alpha or mu + alpha is not supported ({mm}, {mp})"
            )));
        }
        Ok(Self { mu, alpha, beta, gamma2 })
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn gamma2(&self) -> Complex64 {
        self.gamma2
    }

    /// True for `alpha = 0` (CSWE/ASWE mode).
    pub fn is_cswe(&self) -> bool {
        self.alpha == Complex64::new(0.0, 0.0)
    }

    /// True when all parameters are real, which makes `Theta` real on the
    /// real axis.
    pub fn is_real(&self) -> bool {
        self.mu.im == 0.0 && self.alpha.im == 0.0 && self.beta.im == 0.0 && self.gamma2.im == 0.0
    }

    pub(crate) fn mu_minus_alpha(&self) -> Complex64 {
        self.mu - self.alpha
    }

    pub(crate) fn mu_plus_alpha(&self) -> Complex64 {
        self.mu + self.alpha
    }

    /// The mirror instance with `(alpha, beta)` replaced by `(-alpha, -beta)`,
    /// i.e. the equation obtained by substituting `-x` for `x`. Used for the
    /// right-endpoint eigenfunction series and the right shooting solution.
    pub fn reflected(&self) -> Self {
        Self { mu: self.mu, alpha: -self.alpha, beta: -self.beta, gamma2: self.gamma2 }
    }

    /// Shift from the eigenvalue parameter to the recurrence parameter,
    /// `t = lambda - mu(mu+1)`.
    pub fn t_from_lambda(&self, lambda: Complex64) -> Complex64 {
        lambda - self.mu * (self.mu + 1.0)
    }

    /// Inverse shift, `lambda = t + mu(mu+1)`.
    pub fn lambda_from_t(&self, t: Complex64) -> Complex64 {
        t + self.mu * (self.mu + 1.0)
    }
}
