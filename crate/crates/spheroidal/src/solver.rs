//! Zero location for `Theta~(lambda)`: secant refinement, indexed solving by
//! homotopy from the Legendre endpoint, real-interval and complex-rectangle
//! scans, and parameter tracking.
//!
//! Refinement runs a complex secant iteration on binary64 evaluations and
//! then polishes the root with the double-double evaluation path, which
//! pushes eigenvalue accuracy to ~1e-10 even where the recurrence transient
//! peaks several orders above the final value. Every returned [`Eigenvalue`]
//! carries a residual recomputed at the accepted point, never the one
//! reported by the iteration itself.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::gamma_special::legendre_eigenvalue;
use crate::theta::{eval_theta, eval_theta_polish, EvalOptions, DEFAULT_K_MAX};
use crate::{Error, ProblemParams, Result};

/// Secant step tolerance on `t` (relative to `max(1, |t|)`).
pub const DEFAULT_TOL_T: f64 = 1e-11;
/// Secant iteration cap.
pub const MAX_ITER: usize = 60;
/// Residual bound every returned eigenvalue must satisfy.
pub const RESIDUAL_TOL: f64 = 1e-8;
/// Cluster tolerance below which two refined roots are the same zero.
pub const CLUSTER_TOL: f64 = 1e-7;

/// A located zero of `Theta~`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub lambda: Complex64,
    /// `lambda - mu(mu+1)`.
    pub t: Complex64,
    /// `|Theta(t)|` recomputed at the accepted point.
    pub residual: f64,
    /// Legendre continuation label, when the root came from indexed solving
    /// or tracking.
    pub index: Option<usize>,
    /// Secant iterations spent (refinement plus polish).
    pub iterations: usize,
    /// Recurrence steps of the final evaluation.
    pub k_used: usize,
}

/// One eigenvalue branch continued along a real parameter.
#[derive(Debug, Clone)]
pub struct TrackCurve {
    pub parameter: TrackedParam,
    pub index: usize,
    /// `(parameter value, eigenvalue)` samples, strictly monotone in the
    /// parameter.
    pub samples: Vec<(f64, Eigenvalue)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrackedParam {
    Beta,
    Gamma2,
}

/// Real-axis scan outcome.
#[derive(Debug, Clone)]
pub struct RealScan {
    /// Refined eigenvalues, ascending in `Re lambda`.
    pub eigenvalues: Vec<Eigenvalue>,
    /// Set when two brackets refined into the same root, which usually means
    /// one grid cell held more than one zero.
    pub collision_warning: bool,
}

/// Complex-rectangle scan outcome.
#[derive(Debug, Clone)]
pub struct ComplexScan {
    /// Refined eigenvalues inside the rectangle, sorted by `(Re, Im)`.
    pub eigenvalues: Vec<Eigenvalue>,
    /// Flagged cells whose refinement failed or left the rectangle.
    pub unpolished_cells: Vec<(usize, usize)>,
}

fn solver_eval_opts() -> EvalOptions {
    // tight tol: slow-rate cases simply run to k_max and keep the best value
    EvalOptions { tol: 1e-14, extrapolate: true, ..Default::default() }
}

fn grid_eval_opts() -> EvalOptions {
    // sign/bracket prefilter only; refinement re-evaluates tightly
    EvalOptions { tol: 1e-10, extrapolate: true, ..Default::default() }
}

/// Secant iteration on `Theta(t)` in binary64; returns the last iterate, its
/// predecessor, the function value there, iterations used and `k_used`.
fn secant_f64(
    params: &ProblemParams,
    mut t0: Complex64,
    mut t1: Complex64,
    tol_t: f64,
    max_iter: usize,
) -> Result<(Complex64, Complex64, usize, usize)> {
    let opts = solver_eval_opts();
    let mut k_used = 0;
    let mut f0 = eval_theta(params, t0, &opts)?.value;
    if f0 == Complex64::new(0.0, 0.0) {
        return Ok((t0, t1, 0, k_used));
    }
    let ev = eval_theta(params, t1, &opts)?;
    let mut f1 = ev.value;
    k_used = ev.k_used;
    for it in 1..=max_iter {
        if f1 == f0 {
            if f1 == Complex64::new(0.0, 0.0) {
                return Ok((t1, t0, it, k_used));
            }
            return Err(Error::Stagnation);
        }
        let t2 = t1 - f1 * (t1 - t0) / (f1 - f0);
        if (t2 - t1).norm() <= tol_t * t2.norm().max(1.0) {
            return Ok((t2, t1, it, k_used));
        }
        t0 = t1;
        f0 = f1;
        t1 = t2;
        let ev = eval_theta(params, t1, &opts)?;
        f1 = ev.value;
        k_used = ev.k_used;
    }
    Err(Error::NoConvergence(max_iter))
}

/// Double-double secant polish from two nearby seeds, then an independent
/// residual evaluation at the accepted point.
fn polish(
    params: &ProblemParams,
    t0: Complex64,
    t1: Complex64,
    k_budget: usize,
) -> Result<(Complex64, f64, usize, usize)> {
    let mut a = t0;
    let mut b = t1;
    if a == b {
        b = a + Complex64::new(1e-9 * a.norm().max(1.0), 0.0);
    }
    let (mut fa, _) = eval_theta_polish(params, a, k_budget)?;
    let (mut fb, mut k_used) = eval_theta_polish(params, b, k_budget)?;
    if fa.norm() < fb.norm() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let mut iterations = 0;
    for _ in 0..8 {
        if fb == fa || fb == Complex64::new(0.0, 0.0) {
            break;
        }
        let c = b - fb * (b - a) / (fb - fa);
        iterations += 1;
        let (fc, k) = eval_theta_polish(params, c, k_budget)?;
        k_used = k;
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        if (b - a).norm() <= 1e-13 * b.norm().max(1.0) {
            break;
        }
    }
    // fb is the freshly evaluated |Theta| at b, not an iteration by-product
    Ok((b, fb.norm(), iterations, k_used))
}

fn refine_core(
    params: &ProblemParams,
    t0: Complex64,
    t1: Complex64,
    tol_t: f64,
    with_polish: bool,
) -> Result<Eigenvalue> {
    if t0 == t1 {
        return Err(Error::Domain("secant seeds must differ".into()));
    }
    let (t_best, t_prev, iters, k_f64) = secant_f64(params, t0, t1, tol_t, MAX_ITER)?;
    let (t_final, residual, pol_iters, k_used) = if with_polish {
        let budget = DEFAULT_K_MAX.min((4 * k_f64).max(2_000));
        polish(params, t_prev, t_best, budget)?
    } else {
        let ev = eval_theta(params, t_best, &solver_eval_opts())?;
        (t_best, ev.value.norm(), 0, ev.k_used)
    };
    if residual > RESIDUAL_TOL {
        return Err(Error::NoConvergence(iters + pol_iters));
    }
    Ok(Eigenvalue {
        lambda: params.lambda_from_t(t_final),
        t: t_final,
        residual,
        index: None,
        iterations: iters + pol_iters,
        k_used,
    })
}

/// Refine a zero of `Theta(t)` from two seeds by the complex secant method.
///
/// Converges when the step satisfies `|dt| <= tol_t * max(1, |t|)`, then the
/// double-double polish tightens the root; the residual is recomputed at the
/// final point and must come out below [`RESIDUAL_TOL`].
pub fn refine_root(
    params: &ProblemParams,
    t0: Complex64,
    t1: Complex64,
    tol_t: f64,
) -> Result<Eigenvalue> {
    refine_core(params, t0, t1, tol_t, true)
}

/// Homotopy step count heuristic: 8 per unit of `max(|beta|, |gamma2|)^(1/2)`,
/// at least 4.
pub fn default_homotopy_steps(params: &ProblemParams) -> usize {
    let scale = params.beta().norm().max(params.gamma2().norm()).sqrt();
    ((8.0 * scale).ceil() as usize).max(4)
}

fn params_scaled(params: &ProblemParams, s: f64) -> ProblemParams {
    ProblemParams::gswe(params.mu(), params.alpha(), params.beta() * s, params.gamma2() * s)
        .expect("scaled parameters stay valid")
}

/// Path-jump bound of the continuation: three times the last observed step,
/// with a floor so early and flat stretches still have a finite bound.
fn jump_bound(step_seen: f64, pred: Complex64) -> f64 {
    3.0 * step_seen.max(1e-3 * pred.norm().max(1.0))
}

/// Solve for the eigenvalue with Legendre continuation label `n` by scaling
/// `(beta, gamma2)` linearly from `(0, 0)` to the target in `steps`
/// increments, reseeding the secant from the previous two path points.
///
/// `beta = gamma2 = 0` short-circuits to the exact Legendre value with zero
/// homotopy steps consumed.
pub fn solve_indexed(params: &ProblemParams, n: usize, steps: usize) -> Result<Eigenvalue> {
    if steps == 0 {
        return Err(Error::Domain("steps must be >= 1".into()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let lambda0 = legendre_eigenvalue(params.mu(), n);
    if params.beta() == zero && params.gamma2() == zero {
        let ev = eval_theta(params, params.t_from_lambda(lambda0), &solver_eval_opts())?;
        return Ok(Eigenvalue {
            lambda: lambda0,
            t: params.t_from_lambda(lambda0),
            residual: ev.value.norm(),
            index: Some(n),
            iterations: 0,
            k_used: ev.k_used,
        });
    }
    let mut prev = lambda0;
    let mut prev2: Option<Complex64> = None;
    let mut result = None;
    for j in 1..=steps {
        let stage = params_scaled(params, j as f64 / steps as f64);
        let (pred, step_seen) = match prev2 {
            Some(p2) => (prev + (prev - p2), (prev - p2).norm()),
            None => (prev, 0.0),
        };
        let offset = Complex64::new(0.05f64.max(0.1 * step_seen), 0.0);
        let seed0 = stage.t_from_lambda(pred);
        let polish_now = j == steps;
        let ev = refine_core(&stage, seed0, seed0 + offset, DEFAULT_TOL_T, polish_now)?;
        if prev2.is_some() {
            let jump = (ev.lambda - pred).norm();
            let bound = jump_bound(step_seen, pred);
            if jump > bound {
                return Err(Error::PathLoss { step: j, jump, bound });
            }
        }
        prev2 = Some(prev);
        prev = ev.lambda;
        result = Some(ev);
    }
    let mut ev = result.expect("steps >= 1");
    ev.index = Some(n);
    Ok(ev)
}

/// Evaluate `Theta~` on a real-`lambda` grid, bracket sign changes, and
/// refine each bracket. Requires real `mu`, `beta`, `gamma2` so that
/// `Theta~` is real on the real axis.
pub fn scan_real(
    params: &ProblemParams,
    lambda_lo: f64,
    lambda_hi: f64,
    grid_n: usize,
) -> Result<RealScan> {
    if !params.is_real() {
        return Err(Error::Domain("scan_real requires real mu, beta, gamma2".into()));
    }
    if !(lambda_lo < lambda_hi) {
        return Err(Error::Domain(format!("empty range [{lambda_lo}, {lambda_hi}]")));
    }
    if grid_n < 2 {
        return Err(Error::Domain("grid_n must be >= 2".into()));
    }
    let opts = grid_eval_opts();
    let h = (lambda_hi - lambda_lo) / (grid_n - 1) as f64;
    let values: Vec<Option<f64>> = (0..grid_n)
        .into_par_iter()
        .map(|i| {
            let lam = Complex64::new(lambda_lo + i as f64 * h, 0.0);
            eval_theta(params, params.t_from_lambda(lam), &opts).ok().map(|ev| ev.value.re)
        })
        .collect();

    let mut eigenvalues: Vec<Eigenvalue> = Vec::new();
    let mut collision_warning = false;
    for i in 0..grid_n - 1 {
        let (Some(a), Some(b)) = (values[i], values[i + 1]) else { continue };
        let bracket = if a == 0.0 {
            true
        } else {
            a * b < 0.0
        };
        if !bracket {
            continue;
        }
        let l0 = lambda_lo + i as f64 * h;
        let t0 = params.t_from_lambda(Complex64::new(l0, 0.0));
        let t1 = params.t_from_lambda(Complex64::new(l0 + h, 0.0));
        let Ok(ev) = refine_core(params, t0, t1, DEFAULT_TOL_T, true) else { continue };
        if eigenvalues.iter().any(|e| (e.lambda - ev.lambda).norm() < CLUSTER_TOL) {
            collision_warning = true;
            continue;
        }
        eigenvalues.push(ev);
    }
    eigenvalues.sort_by(|x, y| x.lambda.re.total_cmp(&y.lambda.re));
    Ok(RealScan { eigenvalues, collision_warning })
}

/// Scan a complex-`lambda` rectangle: flag grid cells where both
/// `Re Theta~` and `Im Theta~` change sign across some edge, refine each
/// flagged cell from two of its corners, and deduplicate.
pub fn scan_complex(
    params: &ProblemParams,
    re_range: (f64, f64),
    im_range: (f64, f64),
    grid: (usize, usize),
) -> Result<ComplexScan> {
    let (re_lo, re_hi) = re_range;
    let (im_lo, im_hi) = im_range;
    let (n_re, n_im) = grid;
    if !(re_lo < re_hi) || !(im_lo < im_hi) {
        return Err(Error::Domain("empty scan rectangle".into()));
    }
    if n_re < 2 || n_im < 2 {
        return Err(Error::Domain("grid must be at least 2x2".into()));
    }
    let opts = grid_eval_opts();
    let h_re = (re_hi - re_lo) / (n_re - 1) as f64;
    let h_im = (im_hi - im_lo) / (n_im - 1) as f64;
    let values: Vec<Option<Complex64>> = (0..n_re * n_im)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx % n_re, idx / n_re);
            let lam = Complex64::new(re_lo + i as f64 * h_re, im_lo + j as f64 * h_im);
            eval_theta(params, params.t_from_lambda(lam), &opts).ok().map(|ev| ev.value)
        })
        .collect();
    let at = |i: usize, j: usize| values[j * n_re + i];

    let mut eigenvalues: Vec<Eigenvalue> = Vec::new();
    let mut unpolished = Vec::new();
    for j in 0..n_im - 1 {
        for i in 0..n_re - 1 {
            let corners = [at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)];
            let [Some(v00), Some(v10), Some(v01), Some(v11)] = corners else { continue };
            let edges = [(v00, v10), (v00, v01), (v10, v11), (v01, v11)];
            let re_flips = edges.iter().any(|(a, b)| a.re * b.re < 0.0);
            let im_flips = edges.iter().any(|(a, b)| a.im * b.im < 0.0);
            if !(re_flips && im_flips) {
                continue;
            }
            let lam00 = Complex64::new(re_lo + i as f64 * h_re, im_lo + j as f64 * h_im);
            let lam11 = lam00 + Complex64::new(h_re, h_im);
            let refined = refine_core(
                params,
                params.t_from_lambda(lam00),
                params.t_from_lambda(lam11),
                DEFAULT_TOL_T,
                true,
            );
            let keep = match refined {
                Ok(ev) => {
                    let inside = ev.lambda.re >= re_lo
                        && ev.lambda.re <= re_hi
                        && ev.lambda.im >= im_lo
                        && ev.lambda.im <= im_hi;
                    if inside {
                        Some(ev)
                    } else {
                        None
                    }
                }
                Err(_) => None,
            };
            match keep {
                Some(ev) => {
                    let dup = eigenvalues.iter().any(|e| (e.lambda - ev.lambda).norm() < CLUSTER_TOL);
                    if !dup {
                        eigenvalues.push(ev);
                    }
                }
                None => unpolished.push((i, j)),
            }
        }
    }
    eigenvalues
        .sort_by(|x, y| (x.lambda.re, x.lambda.im).partial_cmp(&(y.lambda.re, y.lambda.im)).unwrap());
    Ok(ComplexScan { eigenvalues, unpolished_cells: unpolished })
}

/// Continue eigenvalue branches along `beta` or `gamma2`.
///
/// Each index is continued independently: the branch starts from
/// [`solve_indexed`] at `from`, then every subsequent sample reseeds the
/// secant from the previous two and is rejected (as [`Error::PathLoss`]) if
/// it lands farther than the path-jump bound. Step sign is taken from the
/// direction of `to - from`.
pub fn track_parameter(
    params: &ProblemParams,
    which: TrackedParam,
    from: f64,
    to: f64,
    step: f64,
    indices: &[usize],
) -> Result<Vec<TrackCurve>> {
    if !(step > 0.0) {
        return Err(Error::Domain("step must be > 0".into()));
    }
    let fixed_real = match which {
        TrackedParam::Beta => params.beta().im == 0.0,
        TrackedParam::Gamma2 => params.gamma2().im == 0.0,
    };
    if !fixed_real {
        return Err(Error::Domain("tracked parameter must be real".into()));
    }
    let mut grid = vec![from];
    if to != from {
        let dir = (to - from).signum();
        let mut v = from;
        loop {
            v += dir * step;
            if (to - v) * dir <= step * 1e-9 {
                grid.push(to);
                break;
            }
            grid.push(v);
        }
    }

    let with_value = |v: f64| -> ProblemParams {
        let (beta, gamma2) = match which {
            TrackedParam::Beta => (Complex64::new(v, 0.0), params.gamma2()),
            TrackedParam::Gamma2 => (params.beta(), Complex64::new(v, 0.0)),
        };
        ProblemParams::gswe(params.mu(), params.alpha(), beta, gamma2)
            .expect("overriding a real parameter keeps params valid")
    };

    indices
        .par_iter()
        .map(|&index| {
            let p0 = with_value(grid[0]);
            let mut ev = solve_indexed(&p0, index, default_homotopy_steps(&p0))?;
            ev.index = Some(index);
            let mut samples = vec![(grid[0], ev)];
            let mut prev = ev.lambda;
            let mut prev2: Option<Complex64> = None;
            for (step_no, &v) in grid.iter().enumerate().skip(1) {
                let stage = with_value(v);
                let (pred, step_seen) = match prev2 {
                    Some(p2) => (prev + (prev - p2), (prev - p2).norm()),
                    None => (prev, 0.0),
                };
                let seed0 = stage.t_from_lambda(pred);
                let offset = Complex64::new(0.05f64.max(0.1 * step_seen), 0.0);
                let mut ev = refine_core(&stage, seed0, seed0 + offset, DEFAULT_TOL_T, false)?;
                if prev2.is_some() {
                    let jump = (ev.lambda - pred).norm();
                    let bound = jump_bound(step_seen, pred);
                    if jump > bound {
                        return Err(Error::PathLoss { step: step_no, jump, bound });
                    }
                }
                ev.index = Some(index);
                prev2 = Some(prev);
                prev = ev.lambda;
                samples.push((v, ev));
            }
            Ok(TrackCurve { parameter: which, index, samples })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn refine_legendre_exact_zero() {
        // mu=0: t=2 is an exact eigenvalue; seeds 1.7, 2.4
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let ev = refine_root(&p, c(1.7, 0.0), c(2.4, 0.0), DEFAULT_TOL_T).unwrap();
        assert!((ev.lambda - c(2.0, 0.0)).norm() < 1e-11, "lambda = {}", ev.lambda);
        assert!(ev.residual < 1e-12);
    }

    #[test]
    fn refine_table1_first() {
        let p = ProblemParams::cswe(c(2.0, 0.0), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        let ev = refine_root(&p, c(19.0, 0.0), c(19.8, 0.0), DEFAULT_TOL_T).unwrap();
        assert!((ev.t - c(19.4289571085, 0.0)).norm() < 1e-9, "t = {}", ev.t);
        assert!((ev.lambda - c(25.4289571085, 0.0)).norm() < 1e-9);
        assert!(ev.residual < 1e-9);
    }

    #[test]
    fn refine_gswe_fig7_first() {
        let p = ProblemParams::gswe(c(2.0, 0.0), c(0.5, 0.0), c(-1.0, 0.0), c(4.0, 0.0)).unwrap();
        let ev = refine_root(&p, c(-4.0, 0.0), c(-3.2, 0.0), DEFAULT_TOL_T).unwrap();
        assert!((ev.lambda - c(2.472312, 0.0)).norm() < 1e-6, "lambda = {}", ev.lambda);
    }

    #[test]
    fn refine_rejects_equal_seeds() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!(refine_root(&p, c(1.0, 0.0), c(1.0, 0.0), DEFAULT_TOL_T).is_err());
    }

    #[test]
    fn exact_zero_seed_short_circuits() {
        // t=0 and t=2 are both exact Legendre zeros; the first seed wins
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let ev = refine_root(&p, c(2.0, 0.0), c(0.0, 0.0), DEFAULT_TOL_T).unwrap();
        assert_eq!(ev.residual, 0.0);
        assert!((ev.t - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn solve_indexed_degenerate_legendre() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let ev = solve_indexed(&p, 3, 8).unwrap();
        assert_eq!(ev.lambda, c(12.0, 0.0));
        assert_eq!(ev.iterations, 0);
        assert_eq!(ev.index, Some(3));
    }

    #[test]
    fn solve_indexed_table1_row0() {
        let p = ProblemParams::cswe(c(2.0, 0.0), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        let ev = solve_indexed(&p, 0, default_homotopy_steps(&p)).unwrap();
        assert!((ev.lambda - c(25.4289571085, 0.0)).norm() < 1e-9, "lambda = {}", ev.lambda);
    }

    #[test]
    fn solve_indexed_complex_mu() {
        let p = ProblemParams::cswe(c(2.0, 0.05), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        let ev = solve_indexed(&p, 0, default_homotopy_steps(&p)).unwrap();
        assert!(
            (ev.lambda - c(25.4290583061, 0.3844748370)).norm() < 1e-8,
            "lambda = {}",
            ev.lambda
        );
    }

    #[test]
    fn scan_real_legendre() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let scan = scan_real(&p, -1.0, 13.0, 200).unwrap();
        let got: Vec<f64> = scan.eigenvalues.iter().map(|e| e.lambda.re).collect();
        assert_eq!(got.len(), 4, "{got:?}");
        for (g, want) in got.iter().zip([0.0, 2.0, 6.0, 12.0]) {
            assert!((g - want).abs() < 1e-9);
        }
    }

    #[test]
    fn scan_real_single_root_window() {
        let p = ProblemParams::cswe(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let scan = scan_real(&p, 1.5, 2.5, 64).unwrap();
        assert_eq!(scan.eigenvalues.len(), 1);
        assert!((scan.eigenvalues[0].lambda.re - 2.0).abs() < 1e-10);
    }

    #[test]
    fn scan_real_rejects_complex_params() {
        let p = ProblemParams::cswe(c(2.0, 0.05), c(0.0, 0.0), c(-25.0, 0.0)).unwrap();
        assert!(scan_real(&p, 0.0, 10.0, 16).is_err());
    }

    #[test]
    fn scan_complex_empty_window() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let scan = scan_complex(&p, (3.0, 5.0), (-1.0, 1.0), (24, 24)).unwrap();
        assert!(scan.eigenvalues.is_empty(), "{:?}", scan.eigenvalues);
    }

    #[test]
    fn track_single_point_curve() {
        let p = ProblemParams::cswe(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let curves = track_parameter(&p, TrackedParam::Gamma2, 0.0, 0.0, 1.0, &[2]).unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].samples.len(), 1);
        assert!((curves[0].samples[0].1.lambda - c(6.0, 0.0)).norm() < 1e-12);
    }
}
