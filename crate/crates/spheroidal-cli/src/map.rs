//! Eigenvalue map grids: `Theta~` sampled over a `(lambda, beta or gamma^2)`
//! window, with real zero curves extracted by marching squares. The zero
//! curves are the eigenvalue branches of the equation over the swept
//! parameter.

use num_complex::Complex64;
use rayon::prelude::*;
use spheroidal::theta::{eval_theta, EvalOptions};
use spheroidal::{Error, ProblemParams, Result};

/// Which second axis the map sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Beta,
    Gamma2,
}

/// One zero-curve segment in `(lambda, second-axis)` coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: (f64, f64),
    pub b: (f64, f64),
}

/// A filled map window.
#[derive(Debug, Clone)]
pub struct MapGrid {
    pub lambda_axis: Vec<f64>,
    pub second_axis: Vec<f64>,
    /// Row-major `[second][lambda]`; non-converged cells are NaN.
    pub values: Vec<Complex64>,
    /// Marching-squares segments of `Re Theta~ = 0`.
    pub zero_segments: Vec<Segment>,
}

impl MapGrid {
    pub fn value_at(&self, i_lambda: usize, i_second: usize) -> Complex64 {
        self.values[i_second * self.lambda_axis.len() + i_lambda]
    }

    /// Interpolated `lambda` positions where zero segments cross a given
    /// second-axis value. Useful for checking intercepts against known
    /// eigenvalues.
    pub fn intercepts_at(&self, second_value: f64) -> Vec<f64> {
        let mut hits: Vec<f64> = self
            .zero_segments
            .iter()
            .filter_map(|seg| {
                let (ya, yb) = (seg.a.1, seg.b.1);
                if (ya - second_value) * (yb - second_value) > 0.0 || ya == yb {
                    return None;
                }
                let f = (second_value - ya) / (yb - ya);
                Some(seg.a.0 + f * (seg.b.0 - seg.a.0))
            })
            .collect();
        hits.sort_by(f64::total_cmp);
        // merge hits from adjacent cells sharing an edge point
        let mut merged: Vec<f64> = Vec::new();
        for h in hits {
            if merged.last().map_or(true, |m| (h - m).abs() > 1e-9) {
                merged.push(h);
            }
        }
        merged
    }
}

/// Fill a map window by concurrent `Theta~` evaluation and extract the real
/// zero curves.
///
/// Requires real `mu` and a real fixed parameter so `Theta~` is real-valued
/// over the window; the grid must be at least 16x16.
pub fn build_map(
    params: &ProblemParams,
    axis: SweepAxis,
    sweep_range: (f64, f64),
    lambda_range: (f64, f64),
    grid: (usize, usize),
) -> Result<MapGrid> {
    let (n_lambda, n_second) = grid;
    if n_lambda < 16 || n_second < 16 {
        return Err(Error::Domain("map grid must be at least 16x16".into()));
    }
    if !(lambda_range.0 < lambda_range.1) || !(sweep_range.0 < sweep_range.1) {
        return Err(Error::Domain("empty map window".into()));
    }
    if !params.is_real() {
        return Err(Error::Domain("map zero-curve extraction requires real parameters".into()));
    }
    let lambda_axis: Vec<f64> = (0..n_lambda)
        .map(|i| lambda_range.0 + i as f64 * (lambda_range.1 - lambda_range.0) / (n_lambda - 1) as f64)
        .collect();
    let second_axis: Vec<f64> = (0..n_second)
        .map(|j| sweep_range.0 + j as f64 * (sweep_range.1 - sweep_range.0) / (n_second - 1) as f64)
        .collect();

    let with_second = |v: f64| -> ProblemParams {
        let (beta, gamma2) = match axis {
            SweepAxis::Beta => (Complex64::new(v, 0.0), params.gamma2()),
            SweepAxis::Gamma2 => (params.beta(), Complex64::new(v, 0.0)),
        };
        ProblemParams::gswe(params.mu(), params.alpha(), beta, gamma2)
            .expect("sweeping a real parameter keeps params valid")
    };

    // accuracy here only supports sign-based curve extraction
    let opts = EvalOptions { tol: 1e-9, extrapolate: true, ..Default::default() };
    let nan = Complex64::new(f64::NAN, f64::NAN);
    let values: Vec<Complex64> = (0..n_lambda * n_second)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx % n_lambda, idx / n_lambda);
            let p = with_second(second_axis[j]);
            let lam = Complex64::new(lambda_axis[i], 0.0);
            match eval_theta(&p, p.t_from_lambda(lam), &opts) {
                Ok(ev) if ev.converged => ev.value,
                _ => nan,
            }
        })
        .collect();

    let zero_segments = marching_squares(&lambda_axis, &second_axis, &values);
    Ok(MapGrid { lambda_axis, second_axis, values, zero_segments })
}

/// Standard 16-case marching squares on the sign of `Re Theta~`, with linear
/// edge interpolation. Cells touching a NaN corner are skipped; the two
/// ambiguous saddle cases are disambiguated by the corner average.
fn marching_squares(xs: &[f64], ys: &[f64], values: &[Complex64]) -> Vec<Segment> {
    let nx = xs.len();
    let ny = ys.len();
    let v = |i: usize, j: usize| values[j * nx + i].re;
    let mut segments = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let corners = [v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)];
            if corners.iter().any(|c| c.is_nan()) {
                continue;
            }
            let mut case = 0u8;
            for (bit, c) in corners.iter().enumerate() {
                if *c > 0.0 {
                    case |= 1 << bit;
                }
            }
            if case == 0 || case == 15 {
                continue;
            }
            // edge midpoints by linear interpolation of the zero crossing
            let lerp = |a: f64, b: f64| a / (a - b);
            let bottom = || {
                let f = lerp(corners[0], corners[1]);
                (xs[i] + f * (xs[i + 1] - xs[i]), ys[j])
            };
            let right = || {
                let f = lerp(corners[1], corners[2]);
                (xs[i + 1], ys[j] + f * (ys[j + 1] - ys[j]))
            };
            let top = || {
                let f = lerp(corners[3], corners[2]);
                (xs[i] + f * (xs[i + 1] - xs[i]), ys[j + 1])
            };
            let left = || {
                let f = lerp(corners[0], corners[3]);
                (xs[i], ys[j] + f * (ys[j + 1] - ys[j]))
            };
            let mut push = |a: (f64, f64), b: (f64, f64)| segments.push(Segment { a, b });
            match case {
                1 | 14 => push(bottom(), left()),
                2 | 13 => push(bottom(), right()),
                3 | 12 => push(left(), right()),
                4 | 11 => push(right(), top()),
                6 | 9 => push(bottom(), top()),
                7 | 8 => push(left(), top()),
                5 | 10 => {
                    // saddle: split by the sign of the center average
                    let center = corners.iter().sum::<f64>() / 4.0;
                    let center_positive = center > 0.0;
                    if (case == 5) == center_positive {
                        push(bottom(), right());
                        push(left(), top());
                    } else {
                        push(bottom(), left());
                        push(right(), top());
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    segments
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_map_intercepts() {
        // small window around the first Legendre eigenvalues at gamma2 = 0
        let p = ProblemParams::cswe(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        )
        .unwrap();
        let map =
            build_map(&p, SweepAxis::Gamma2, (-10.0, 10.0), (-2.0, 14.0), (48, 24)).unwrap();
        let cell = (14.0 - (-2.0)) / 47.0;
        let hits = map.intercepts_at(0.0);
        for want in [0.0, 2.0, 6.0, 12.0] {
            assert!(
                hits.iter().any(|h| (h - want).abs() <= cell),
                "no intercept near {want}: {hits:?}"
            );
        }
    }

    #[test]
    fn map_rejects_small_grid() {
        let p = ProblemParams::cswe(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        )
        .unwrap();
        assert!(build_map(&p, SweepAxis::Gamma2, (-1.0, 1.0), (0.0, 1.0), (8, 8)).is_err());
    }
}
