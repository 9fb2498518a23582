//! One-dimensional minimisation: a coarse scan to locate the basin, golden
//! section search inside it, then a few parabolic steps to get past the
//! `sqrt(eps)` resolution limit of comparison-based search.

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Search bracket used for `α ∈ (0, 1)`.
pub const UNIT_INTERVAL: (f64, f64) = (1e-6, 1.0 - 1e-6);

/// Search bracket used for `α > 0`.
pub const POSITIVE_AXIS: (f64, f64) = (1e-6, 64.0);

const PRESCAN_POINTS: usize = 1000;
const MAX_GOLDEN_STEPS: usize = 500;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Minimum {
    pub argmin: f64,
    pub value: f64,
}

pub fn minimize_univariate<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Minimum>
where
    F: Fn(f64) -> f64,
{
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("empty search interval ({lo}, {hi})")));
    }
    if tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Domain(format!("objective is {y} at {x}")))
        }
    };

    let step = (hi - lo) / (PRESCAN_POINTS - 1) as f64;
    let mut best = (0, f64::INFINITY);
    for i in 0..PRESCAN_POINTS {
        let y = eval(lo + step * i as f64)?;
        if y < best.1 {
            best = (i, y);
        }
    }
    let mut a = lo + step * best.0.saturating_sub(1) as f64;
    let mut b = (lo + step * (best.0 + 1) as f64).min(hi);

    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (eval(c)?, eval(d)?);
    for _ in 0..MAX_GOLDEN_STEPS {
        if b - a <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d)?;
        }
    }
    let mut x = if fc <= fd { c } else { d };
    let mut fx = fc.min(fd);

    // Vertex of the parabola through x - h, x, x + h.
    for h in [1e-4, 1e-5] {
        let h = h * x.abs().max(1e-3);
        if x - h < lo || x + h > hi {
            continue;
        }
        let (fl, fr) = (eval(x - h)?, eval(x + h)?);
        let curvature = fl - 2.0 * fx + fr;
        if curvature <= 0.0 {
            continue;
        }
        let candidate = x - h * (fr - fl) / (2.0 * curvature);
        if (candidate - x).abs() <= h {
            let fy = eval(candidate)?;
            if fy <= fx {
                x = candidate;
                fx = fy;
            }
        }
    }
    Ok(Minimum { argmin: x, value: fx })
}

pub fn maximize_univariate<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Minimum>
where
    F: Fn(f64) -> f64,
{
    let m = minimize_univariate(|x| -f(x), lo, hi, tol)?;
    Ok(Minimum { argmin: m.argmin, value: -m.value })
}
