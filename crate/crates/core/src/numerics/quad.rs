//! Adaptive Simpson quadrature with an explicit refinement budget.

use super::NumericsError;

const MAX_DEPTH: usize = 60;
const EVAL_BUDGET: usize = 2_000_000;

/// Integrate `f` over [a, b] to absolute accuracy `tol`.
///
/// Budget exhaustion or non-finite integrand values are reported as
/// errors; they usually indicate a non-integrable singularity inside the
/// interval (the decay-rate catalog has poles exactly where its closed
/// forms must be used instead).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64, NumericsError> {
    if a == b {
        return Ok(0.0);
    }
    let mut ctx = Ctx { f, evals: 0 };
    let fa = ctx.eval(a)?;
    let fb = ctx.eval(b)?;
    let m = 0.5 * (a + b);
    let fm = ctx.eval(m)?;
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&mut ctx, a, b, fa, fm, fb, whole, tol.max(f64::MIN_POSITIVE), 0)
}

struct Ctx<F> {
    f: F,
    evals: usize,
}

impl<F: Fn(f64) -> f64> Ctx<F> {
    fn eval(&mut self, t: f64) -> Result<f64, NumericsError> {
        self.evals += 1;
        if self.evals > EVAL_BUDGET {
            return Err(NumericsError::QuadratureBudget(t, t));
        }
        let v = (self.f)(t);
        if !v.is_finite() {
            return Err(NumericsError::NonFiniteIntegrand(t));
        }
        Ok(v)
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F: Fn(f64) -> f64>(
    ctx: &mut Ctx<F>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64, NumericsError> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = ctx.eval(lm)?;
    let frm = ctx.eval(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth >= MAX_DEPTH {
        return Err(NumericsError::QuadratureBudget(a, b));
    }
    let l = adaptive(ctx, a, m, fa, flm, fm, left, tol * 0.5, depth + 1)?;
    let r = adaptive(ctx, m, b, fm, frm, fb, right, tol * 0.5, depth + 1)?;
    Ok(l + r)
}
