//! Bisection root finding and a small golden-section minimizer.

use super::NumericsError;

/// Locate a root of `f` inside `bracket` by bisection, to within `tol` in
/// the abscissa. Requires f(lo) and f(hi) to straddle zero.
pub fn find_root<F: Fn(f64) -> f64>(
    f: F,
    bracket: (f64, f64),
    tol: f64,
) -> Result<f64, NumericsError> {
    let (mut lo, mut hi) = bracket;
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.is_nan() || fhi.is_nan() || flo.signum() == fhi.signum() {
        return Err(NumericsError::InvalidBracket(lo, hi));
    }
    let tol = tol.max(f64::MIN_POSITIVE);
    let mut flo = flo;
    for _ in 0..4096 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section minimization of a unimodal function on [a, b].
/// Returns (argmin, min). Used to refine concurrence dips that touch zero
/// without a sign change.
pub(crate) fn golden_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..120 {
        if (b - a).abs() <= f64::EPSILON * (a.abs() + b.abs() + 1.0) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    (mid, f(mid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root() {
        let r = find_root(|t| t - 1.0, (0.0, 2.0), 1e-12).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cosine_root() {
        let r = find_root(f64::cos, (1.0, 2.0), 1e-12).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn invalid_bracket() {
        assert!(matches!(
            find_root(|t| t * t + 1.0, (0.0, 1.0), 1e-12),
            Err(NumericsError::InvalidBracket(_, _))
        ));
    }

    #[test]
    fn golden_finds_vee_minimum() {
        let (x, v) = golden_min(|t: f64| (t - 0.7).abs(), 0.0, 2.0);
        assert!((x - 0.7).abs() < 1e-12);
        assert!(v < 1e-12);
    }
}
