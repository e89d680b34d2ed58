//! Dense complex matrices restricted to the 2x2 / 4x4 sizes used by the
//! qubit machinery. Row-major storage, value semantics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::NumericsError;

/// A dense complex matrix with dimensions in {2, 4} x {2, 4}.
///
/// Arithmetic operators panic on dimension mismatch (a programming error);
/// the fallible spec-level operations such as [`kron`] return errors
/// instead.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    fn check_dim(n: usize) {
        assert!(n == 2 || n == 4, "only 2x2 and 4x4 matrices are supported, got {n}");
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::check_dim(rows);
        Self::check_dim(cols);
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        Self::check_dim(r);
        let c = rows[0].len();
        Self::check_dim(c);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flatten().copied().collect();
        Self { rows: r, cols: c, data }
    }

    /// 2x2 matrix from real entries.
    pub fn mat2_real(entries: [[f64; 2]; 2]) -> Self {
        let rows: Vec<Vec<Complex64>> = entries
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn mat2(entries: [[Complex64; 2]; 2]) -> Self {
        let rows: Vec<Vec<Complex64>> = entries.iter().map(|row| row.to_vec()).collect();
        Self::from_rows(&rows)
    }

    pub fn mat4(entries: [[Complex64; 4]; 4]) -> Self {
        let rows: Vec<Vec<Complex64>> = entries.iter().map(|row| row.to_vec()).collect();
        Self::from_rows(&rows)
    }

    pub fn diag(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.conj().transpose()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute row sum (the induced infinity norm).
    pub fn inf_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if (self.get(i, j) - self.get(j, i).conj()).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_unit_trace(&self, tol: f64) -> bool {
        let tr = self.trace();
        (tr.re - 1.0).abs() <= tol && tr.im.abs() <= tol
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Partial trace over the first (A) factor of a 4x4 two-qubit matrix.
    pub fn partial_trace_a(&self) -> Self {
        assert_eq!((self.rows, self.cols), (4, 4), "partial trace needs a 4x4 matrix");
        let mut out = Self::zeros(2, 2);
        for b in 0..2 {
            for bp in 0..2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for a in 0..2 {
                    acc += self.get(2 * a + b, 2 * a + bp);
                }
                out.set(b, bp, acc);
            }
        }
        out
    }

    /// Partial trace over the second (B) factor of a 4x4 two-qubit matrix.
    pub fn partial_trace_b(&self) -> Self {
        assert_eq!((self.rows, self.cols), (4, 4), "partial trace needs a 4x4 matrix");
        let mut out = Self::zeros(2, 2);
        for a in 0..2 {
            for ap in 0..2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for b in 0..2 {
                    acc += self.get(2 * a + b, 2 * ap + b);
                }
                out.set(a, ap, acc);
            }
        }
        out
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> Complex64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Complex64::new(1.0, 0.0);
        for k in 0..n {
            let mut piv = k;
            let mut best = a.get(k, k).norm();
            for i in k + 1..n {
                let v = a.get(i, k).norm();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if piv != k {
                for j in 0..n {
                    let tmp = a.get(k, j);
                    a.set(k, j, a.get(piv, j));
                    a.set(piv, j, tmp);
                }
                det = -det;
            }
            det *= a.get(k, k);
            for i in k + 1..n {
                let f = a.get(i, k) / a.get(k, k);
                for j in k..n {
                    let v = a.get(i, j) - f * a.get(k, j);
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    /// Solve `self * X = B` by LU with partial pivoting.
    pub(crate) fn solve(&self, b: &Self) -> Result<Self, NumericsError> {
        assert!(self.is_square());
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve");
        let n = self.rows;
        let m = b.cols;
        let mut a = self.clone();
        let mut x = b.clone();
        for k in 0..n {
            let mut piv = k;
            let mut best = a.get(k, k).norm();
            for i in k + 1..n {
                let v = a.get(i, k).norm();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best == 0.0 {
                return Err(NumericsError::SingularSystem);
            }
            if piv != k {
                for j in 0..n {
                    let tmp = a.get(k, j);
                    a.set(k, j, a.get(piv, j));
                    a.set(piv, j, tmp);
                }
                for j in 0..m {
                    let tmp = x.get(k, j);
                    x.set(k, j, x.get(piv, j));
                    x.set(piv, j, tmp);
                }
            }
            for i in k + 1..n {
                let f = a.get(i, k) / a.get(k, k);
                for j in k..n {
                    let v = a.get(i, j) - f * a.get(k, j);
                    a.set(i, j, v);
                }
                for j in 0..m {
                    let v = x.get(i, j) - f * x.get(k, j);
                    x.set(i, j, v);
                }
            }
        }
        for k in (0..n).rev() {
            for j in 0..m {
                let mut acc = x.get(k, j);
                for i in k + 1..n {
                    acc -= a.get(k, i) * x.get(i, j);
                }
                x.set(k, j, acc / a.get(k, k));
            }
        }
        Ok(x)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, "{:+.4e}{:+.4e}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_re(-1.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + aik * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Tensor product of two 2x2 matrices, first factor major.
///
/// With single-qubit basis order (excited, ground) the resulting two-qubit
/// basis order is (ee, eg, ge, gg).
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, NumericsError> {
    if (a.rows(), a.cols()) != (2, 2) || (b.rows(), b.cols()) != (2, 2) {
        return Err(NumericsError::DimensionMismatch(format!(
            "kron expects 2x2 factors, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            let aij = a.get(i, j);
            for k in 0..2 {
                for l in 0..2 {
                    out.set(2 * i + k, 2 * j + l, aij * b.get(k, l));
                }
            }
        }
    }
    Ok(out)
}
