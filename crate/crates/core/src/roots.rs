//! Real roots of the monic cubics that fix the snub solids.

use crate::error::{Error, Result};
use crate::field::TAU;

/// Largest accepted `|p(x)|` at a returned root.
pub const CUBIC_RESIDUAL: f64 = 1e-14;

/// `x³ + c2·x² + c1·x + c0` evaluated by Horner's rule.
pub fn cubic(c2: f64, c1: f64, c0: f64, x: f64) -> f64 {
    ((x + c2) * x + c1) * x + c0
}

fn cubic_slope(c2: f64, c1: f64, x: f64) -> f64 {
    (3.0 * x + 2.0 * c2) * x + c1
}

/// The root of `x³ + c2·x² + c1·x + c0` in `[1, 2]`.
///
/// Bisection brackets the root to a few ulps, then Newton steps polish it.
/// Fails if the cubic does not change sign on the interval or if the final
/// residual exceeds [`CUBIC_RESIDUAL`].
pub fn cubic_root_in_1_2(c2: f64, c1: f64, c0: f64) -> Result<f64> {
    let p = |x| cubic(c2, c1, c0, x);
    let (mut lo, mut hi) = (1.0_f64, 2.0_f64);
    let (plo, phi) = (p(lo), p(hi));
    if plo == 0.0 {
        return Ok(lo);
    }
    if phi == 0.0 {
        return Ok(hi);
    }
    if plo.signum() == phi.signum() {
        return Err(Error::RootNotConverged(format!(
            "no sign change on [1, 2]: p(1) = {plo}, p(2) = {phi}"
        )));
    }
    let rising = phi > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (p(mid) > 0.0) == rising {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..4 {
        let d = cubic_slope(c2, c1, x);
        if d == 0.0 {
            break;
        }
        let step = p(x) / d;
        if step == 0.0 || !step.is_finite() {
            break;
        }
        x -= step;
    }
    let residual = p(x).abs();
    if residual >= CUBIC_RESIDUAL || !(1.0..=2.0).contains(&x) {
        return Err(Error::RootNotConverged(format!(
            "x = {x}, residual {residual:e}"
        )));
    }
    Ok(x)
}

/// Real root of `x³ − x² − x − 1`, the tribonacci constant.
pub fn snub_cube_root() -> Result<f64> {
    cubic_root_in_1_2(-1.0, -1.0, -1.0)
}

/// Real root of `x³ − x² − x − τ`.
pub fn snub_dodecahedron_root() -> Result<f64> {
    cubic_root_in_1_2(-1.0, -1.0, -TAU)
}
