//! Matrix exponential for 4x4 complex matrices by scaling-and-squaring
//! with a diagonal [6/6] Pade approximant.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::NumericsError;

/// Norm beyond which exp(M) is guaranteed to overflow doubles.
const OVERFLOW_NORM: f64 = 700.0;

/// exp(M) for a 4x4 complex matrix.
///
/// Relative accuracy is comfortably below 1e-10 for ||M|| up to 50; inputs
/// whose exponential cannot be represented in f64 fail explicitly.
pub fn expm4(m: &ComplexMatrix) -> Result<ComplexMatrix, NumericsError> {
    if (m.rows(), m.cols()) != (4, 4) {
        return Err(NumericsError::DimensionMismatch(format!(
            "expm4 expects a 4x4 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let norm = m.inf_norm();
    if !norm.is_finite() || norm > OVERFLOW_NORM {
        return Err(NumericsError::ExpOverflow(norm));
    }
    // Scale so that ||M / 2^s|| <= 0.5.
    let s = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let a = m.scale_re(1.0 / (1u64 << s) as f64);

    // [6/6] Pade: N(A) = sum c_k A^k, D(A) = sum (-1)^k c_k A^k.
    let q = 6usize;
    let mut coeff = vec![1.0f64; q + 1];
    for k in 1..=q {
        coeff[k] = coeff[k - 1] * (q - k + 1) as f64 / ((k * (2 * q - k + 1)) as f64);
    }
    let id = ComplexMatrix::identity(4);
    let mut num = id.scale_re(coeff[0]);
    let mut den = id.scale_re(coeff[0]);
    let mut power = id.clone();
    for (k, &ck) in coeff.iter().enumerate().skip(1) {
        power = &power * &a;
        let term = power.scale_re(ck);
        num = &num + &term;
        den = if k % 2 == 0 { &den + &term } else { &den - &term };
    }
    let mut result = den.solve(&num)?;
    for _ in 0..s {
        result = &result * &result;
        if !result.all_finite() {
            return Err(NumericsError::ExpOverflow(norm));
        }
    }
    if !result.all_finite() {
        return Err(NumericsError::ExpOverflow(norm));
    }
    Ok(result)
}
