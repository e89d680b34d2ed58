//! Euler gamma function on the positive real axis (Lanczos approximation).

use std::f64::consts::PI;

use super::NumericsError;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's table); relative error
// below 1e-13 on the positive axis.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma(s) for s > 0, relative error <= 1e-12.
pub fn euler_gamma(s: f64) -> Result<f64, NumericsError> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(NumericsError::GammaDomain(s));
    }
    Ok(gamma_unchecked(s))
}

fn gamma_unchecked(s: f64) -> f64 {
    if s < 0.5 {
        // Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return PI / ((PI * s).sin() * gamma_unchecked(1.0 - s));
    }
    let x = s - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_values() {
        assert!((euler_gamma(1.0).unwrap() - 1.0).abs() < 1e-13);
        assert!((euler_gamma(2.0).unwrap() - 1.0).abs() < 1e-13);
        assert!((euler_gamma(5.0).unwrap() - 24.0).abs() / 24.0 < 1e-13);
    }

    #[test]
    fn half_integer() {
        let sqrt_pi = PI.sqrt();
        assert!((euler_gamma(0.5).unwrap() - sqrt_pi).abs() / sqrt_pi < 1e-12);
        // Gamma(2.5) = 3 sqrt(pi) / 4
        let expect = 3.0 * sqrt_pi / 4.0;
        assert!((euler_gamma(2.5).unwrap() - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn small_argument_reflection() {
        // Gamma(0.1) = 9.513507698668732...
        let expect = 9.513_507_698_668_732;
        assert!((euler_gamma(0.1).unwrap() - expect).abs() / expect < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(euler_gamma(0.0).is_err());
        assert!(euler_gamma(-1.5).is_err());
        assert!(euler_gamma(f64::NAN).is_err());
    }
}
