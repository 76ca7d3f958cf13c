//! Complex literals of the form `a+bi` (single token, so `--mu 2+0.05i`
//! works without paired flags). Accepted shapes: `a`, `bi`, `a+bi`, `a-bi`,
//! with optional exponents in either part and `i`, `-i` for unit imaginary.

use num_complex::Complex64;

/// Parse `a`, `bi`, or `a+bi` into a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // find the split between real and imaginary parts: the last +/- that
        // is neither leading nor part of an exponent
        let bytes = body.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() {
            0.0
        } else {
            re_str.parse::<f64>().map_err(|e| format!("bad real part {re_str:?}: {e}"))?
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => im_str.parse::<f64>().map_err(|e| format!("bad imaginary part {im_str:?}: {e}"))?,
        };
        Ok(Complex64::new(re, im))
    } else {
        let re = s.parse::<f64>().map_err(|e| format!("bad number {s:?}: {e}"))?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// `N` or `NxM` grid sizes.
pub fn parse_grid(s: &str) -> Result<(usize, Option<usize>), String> {
    match s.split_once(['x', 'X']) {
        None => {
            let n = s.parse::<usize>().map_err(|e| format!("bad grid {s:?}: {e}"))?;
            Ok((n, None))
        }
        Some((a, b)) => {
            let n = a.parse::<usize>().map_err(|e| format!("bad grid {s:?}: {e}"))?;
            let m = b.parse::<usize>().map_err(|e| format!("bad grid {s:?}: {e}"))?;
            Ok((n, Some(m)))
        }
    }
}

/// Comma-separated index list, `0,1,2`.
pub fn parse_indices(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|part| part.trim().parse::<usize>().map_err(|e| format!("bad index {part:?}: {e}")))
        .collect()
}
