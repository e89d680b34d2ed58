//! Eigenvalues of a general complex 4x4 matrix via Hessenberg reduction
//! followed by shifted QR iteration with Givens rotations.
//!
//! A companion-matrix quartic solver would be shorter but conditions badly
//! when the input is defective, which the Wootters chi matrices routinely
//! are; the iterative dense path is the reference one.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::NumericsError;

/// Eigenvalues of a 4x4 matrix, sorted by descending real part
/// (ties broken by descending imaginary part).
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub values: [Complex64; 4],
}

impl EigenResult {
    /// Real parts, in the stored (descending) order.
    pub fn real_parts(&self) -> [f64; 4] {
        [self.values[0].re, self.values[1].re, self.values[2].re, self.values[3].re]
    }

    pub fn max_imag_abs(&self) -> f64 {
        self.values.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }
}

const MAX_SWEEPS: usize = 160;

/// All eigenvalues of a 4x4 complex matrix.
///
/// Tiny negative or complex parts of nominally real spectra are returned
/// as computed; clamping is left to the caller (the concurrence call site
/// is the one place that does it).
pub fn eig4(m: &ComplexMatrix) -> Result<EigenResult, NumericsError> {
    if (m.rows(), m.cols()) != (4, 4) {
        return Err(NumericsError::DimensionMismatch(format!(
            "eig4 expects a 4x4 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let mut h = to_array(m);
    hessenberg(&mut h);
    let values = qr_eigenvalues(&mut h)?;
    let mut values = values;
    values.sort_by(|a, b| {
        b.re.partial_cmp(&a.re)
            .unwrap()
            .then(b.im.partial_cmp(&a.im).unwrap())
    });
    Ok(EigenResult { values: [values[0], values[1], values[2], values[3]] })
}

type Mat = [[Complex64; 4]; 4];

fn to_array(m: &ComplexMatrix) -> Mat {
    let mut a = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = m.get(i, j);
        }
    }
    a
}

/// In-place reduction to upper Hessenberg form by Householder reflections.
fn hessenberg(h: &mut Mat) {
    let n = 4;
    for k in 0..n - 2 {
        // Reflect column k below the subdiagonal to zero.
        let mut norm_x = 0.0;
        for i in k + 1..n {
            norm_x += h[i][k].norm_sqr();
        }
        norm_x = norm_x.sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = h[k + 1][k];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm_x;
        // v = x - alpha*e1, beta = 2/|v|^2
        let mut v = [Complex64::new(0.0, 0.0); 4];
        for i in k + 1..n {
            v[i] = h[i][k];
        }
        v[k + 1] -= alpha;
        let vnorm2: f64 = (k + 1..n).map(|i| v[i].norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // H := P H with P = I - beta v v^H  (rows k+1.., all columns)
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for i in k + 1..n {
                s += v[i].conj() * h[i][j];
            }
            s *= beta;
            for i in k + 1..n {
                h[i][j] -= v[i] * s;
            }
        }
        // H := H P (all rows, columns k+1..)
        for i in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in k + 1..n {
                s += h[i][j] * v[j];
            }
            s *= beta;
            for j in k + 1..n {
                h[i][j] -= s * v[j].conj();
            }
        }
        // Entries below the subdiagonal are now zero up to rounding.
        h[k + 1][k] = alpha;
        for i in k + 2..n {
            h[i][k] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Eigenvalues of a 2x2 complex block, product-stable pairing.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let m = (a + d) * 0.5;
    let det = a * d - b * c;
    let s = (m * m - det).sqrt();
    let l1 = if (m + s).norm() >= (m - s).norm() { m + s } else { m - s };
    let l2 = if l1.norm() > 0.0 { det / l1 } else { m - s };
    (l1, l2)
}

/// Wilkinson shift: eigenvalue of the trailing 2x2 closest to the corner.
fn wilkinson_shift(h: &Mat, hi: usize) -> Complex64 {
    let (a, b, c, d) = (h[hi - 2][hi - 2], h[hi - 2][hi - 1], h[hi - 1][hi - 2], h[hi - 1][hi - 1]);
    let (l1, l2) = eig2(a, b, c, d);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Givens rotation G = [[c, s*],[-s, c]] with c real >= 0 such that
/// G [a, b]^T = [r, 0]^T.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let na = a.norm();
    let nb = b.norm();
    if nb == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if na == 0.0 {
        return (0.0, Complex64::new(1.0, 0.0));
    }
    let n = (na * na + nb * nb).sqrt();
    let c = na / n;
    let s = (b * (a.conj() / na)) / n;
    (c, s)
}

/// One explicit shifted QR step on the active window [lo, hi).
fn qr_step(h: &mut Mat, lo: usize, hi: usize, sigma: Complex64) {
    for d in lo..hi {
        h[d][d] -= sigma;
    }
    let mut rot = [(1.0f64, Complex64::new(0.0, 0.0)); 3];
    // Q^H (H - sigma I): zero the subdiagonal with row rotations.
    for i in lo..hi - 1 {
        let (c, s) = givens(h[i][i], h[i + 1][i]);
        rot[i - lo] = (c, s);
        for j in i..hi {
            let a = h[i][j];
            let b = h[i + 1][j];
            h[i][j] = c * a + s.conj() * b;
            h[i + 1][j] = -s * a + c * b;
        }
    }
    // R Q: apply the conjugated rotations on the right, in order.
    for i in lo..hi - 1 {
        let (c, s) = rot[i - lo];
        let rmax = (i + 2).min(hi);
        for r in lo..rmax {
            let a = h[r][i];
            let b = h[r][i + 1];
            h[r][i] = a * c + b * s;
            h[r][i + 1] = -a * s.conj() + b * c;
        }
    }
    for d in lo..hi {
        h[d][d] += sigma;
    }
}

/// QR iteration with deflation; consumes the Hessenberg matrix.
fn qr_eigenvalues(h: &mut Mat) -> Result<Vec<Complex64>, NumericsError> {
    let n = 4;
    let scale = frob(h).max(f64::MIN_POSITIVE);
    let eps = f64::EPSILON;
    let mut vals: Vec<Complex64> = Vec::with_capacity(4);
    let mut hi = n;
    let mut sweeps = 0usize;
    let mut stuck = 0usize;
    while hi > 0 {
        // Deflate negligible subdiagonals.
        for i in 1..hi {
            let thresh = eps * (h[i - 1][i - 1].norm() + h[i][i].norm());
            let thresh = if thresh == 0.0 { eps * scale } else { thresh };
            if h[i][i - 1].norm() <= thresh {
                h[i][i - 1] = Complex64::new(0.0, 0.0);
            }
        }
        // Find the active block [lo, hi): walk up from hi-1 until a zero
        // subdiagonal or the top.
        let mut lo = hi - 1;
        while lo > 0 && h[lo][lo - 1].norm() != 0.0 {
            lo -= 1;
        }
        if hi - lo == 1 {
            vals.push(h[hi - 1][hi - 1]);
            hi -= 1;
            stuck = 0;
            continue;
        }
        if hi - lo == 2 {
            let (l1, l2) = eig2(h[lo][lo], h[lo][lo + 1], h[lo + 1][lo], h[lo + 1][lo + 1]);
            vals.push(l1);
            vals.push(l2);
            hi -= 2;
            stuck = 0;
            continue;
        }
        sweeps += 1;
        stuck += 1;
        if sweeps > MAX_SWEEPS {
            return Err(NumericsError::EigNonConvergence(MAX_SWEEPS));
        }
        let sigma = if stuck % 12 == 0 {
            // Exceptional shift to break symmetry-induced stalls.
            h[hi - 1][hi - 1] + Complex64::new(0.75 * h[hi - 1][hi - 2].norm(), 0.0)
        } else {
            wilkinson_shift(h, hi)
        };
        qr_step(h, lo, hi, sigma);
    }
    Ok(vals)
}

fn frob(h: &Mat) -> f64 {
    h.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
