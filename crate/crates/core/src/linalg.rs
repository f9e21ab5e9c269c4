//! Small dense complex-matrix kernels: Householder-QR least squares and
//! Hermitian Cholesky with log-determinant.
//!
//! The problems in this crate are tiny (tens of rows, single-digit column
//! counts), so the kernels are written out directly. They count the complex
//! multiplications they perform; the estimator complexity checks assert the
//! scaling of those counters.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative pivot threshold below which a column is reported as singular.
const RANK_TOL: f64 = 1e-12;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Identity scaled by `v`.
    pub fn scaled_identity(n: usize, v: f64) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Complex64::new(v, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Conjugate transpose.
    pub fn hermitian(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)] + other[(r, c)])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self[(r, c)] * s)
    }

    /// Sum of squared magnitudes of all entries.
    pub fn frob_norm2(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Largest Hermitian-asymmetry |A - A^H| entry, for validation.
    pub fn hermitian_defect(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut d = 0.0f64;
        for r in 0..self.rows {
            for c in 0..self.cols {
                d = d.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        d
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

/// `a * b`, accumulating complex multiplications into `flops`.
pub fn mat_mul(a: &CMat, b: &CMat, flops: &mut u64) -> CMat {
    assert_eq!(a.cols, b.rows);
    let mut out = CMat::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let av = a[(r, k)];
            if av == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in 0..b.cols {
                out[(r, c)] += av * b[(k, c)];
            }
            *flops += b.cols as u64;
        }
    }
    out
}

/// `a * x`, accumulating complex multiplications into `flops`.
pub fn mat_vec(a: &CMat, x: &[Complex64], flops: &mut u64) -> Vec<Complex64> {
    assert_eq!(a.cols, x.len());
    let mut out = vec![Complex64::new(0.0, 0.0); a.rows];
    for r in 0..a.rows {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in 0..a.cols {
            acc += a[(r, c)] * x[c];
        }
        out[r] = acc;
    }
    *flops += (a.rows * a.cols) as u64;
    out
}

/// Least-squares solution of an overdetermined complex system.
#[derive(Debug, Clone)]
pub struct LsSolution {
    pub x: Vec<Complex64>,
    /// Squared norm of the residual `a x - b`.
    pub residual_norm2: f64,
    /// max|R_jj| / min|R_jj| from the QR factor; a cheap condition estimate.
    pub diag_ratio: f64,
    /// Complex multiplications performed.
    pub flops: u64,
}

/// Solve `min_x ||a x - b||_2` by Householder QR on the tall matrix.
///
/// Requires `a.rows() >= a.cols()` and full column rank; a vanishing pivot
/// reports the offending column via [`Error::Singular`].
pub fn lstsq(a: &CMat, rhs: &[Complex64], context: &'static str) -> Result<LsSolution> {
    let (m, n) = (a.rows, a.cols);
    if rhs.len() != m {
        return Err(Error::DimensionMismatch {
            context,
            expected: m,
            got: rhs.len(),
        });
    }
    if m < n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            got: m,
        });
    }

    // Work on the augmented matrix [a | rhs].
    let mut w = CMat::zeros(m, n + 1);
    for r in 0..m {
        for c in 0..n {
            w[(r, c)] = a[(r, c)];
        }
        w[(r, n)] = rhs[r];
    }

    let mut flops: u64 = 0;
    for j in 0..n {
        let mut norm2 = 0.0;
        for r in j..m {
            norm2 += w[(r, j)].norm_sqr();
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            return Err(Error::Singular { context, index: j });
        }
        let x0 = w[(j, j)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * norm;

        // v = x - alpha e1, reflector H = I - 2 v v^H / |v|^2
        let mut v = vec![Complex64::new(0.0, 0.0); m - j];
        for r in j..m {
            v[r - j] = w[(r, j)];
        }
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 > 0.0 {
            for c in j..=n {
                let mut s = Complex64::new(0.0, 0.0);
                for r in j..m {
                    s += v[r - j].conj() * w[(r, c)];
                }
                let coef = s * (2.0 / vnorm2);
                for r in j..m {
                    let upd = coef * v[r - j];
                    w[(r, c)] -= upd;
                }
                flops += 2 * (m - j) as u64;
            }
        }
        w[(j, j)] = alpha;
        for r in j + 1..m {
            w[(r, j)] = Complex64::new(0.0, 0.0);
        }
    }

    let mut dmax = 0.0f64;
    let mut dmin = f64::INFINITY;
    for j in 0..n {
        let d = w[(j, j)].norm();
        dmax = dmax.max(d);
        dmin = dmin.min(d);
        if !d.is_finite() {
            return Err(Error::Singular { context, index: j });
        }
    }
    for j in 0..n {
        if w[(j, j)].norm() < RANK_TOL * dmax || dmax == 0.0 {
            return Err(Error::Singular { context, index: j });
        }
    }

    // Back substitution on the top n rows.
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for j in (0..n).rev() {
        let mut acc = w[(j, n)];
        for k in j + 1..n {
            acc -= w[(j, k)] * x[k];
        }
        x[j] = acc / w[(j, j)];
        flops += (n - j) as u64;
    }

    let mut residual_norm2 = 0.0;
    for r in n..m {
        residual_norm2 += w[(r, n)].norm_sqr();
    }

    Ok(LsSolution {
        x,
        residual_norm2,
        diag_ratio: if dmin > 0.0 { dmax / dmin } else { f64::INFINITY },
        flops,
    })
}

/// Cholesky factorization of a Hermitian positive-definite matrix.
#[derive(Debug, Clone)]
pub struct Cholesky {
    l: CMat,
    /// ln(det) of the factored matrix, computed in the log domain.
    pub log_det: f64,
    /// Complex multiplications performed during factorization.
    pub flops: u64,
}

pub fn cholesky(a: &CMat, context: &'static str) -> Result<Cholesky> {
    let n = a.rows;
    if a.cols != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            got: a.cols,
        });
    }
    let mut l = CMat::zeros(n, n);
    let mut flops: u64 = 0;
    let mut log_det = 0.0;
    for j in 0..n {
        let mut diag = a[(j, j)].re;
        for k in 0..j {
            diag -= l[(j, k)].norm_sqr();
        }
        flops += j as u64;
        if !(diag > 0.0) || !diag.is_finite() {
            return Err(Error::Singular { context, index: j });
        }
        let ljj = diag.sqrt();
        l[(j, j)] = Complex64::new(ljj, 0.0);
        log_det += 2.0 * ljj.ln();
        for i in j + 1..n {
            let mut acc = a[(i, j)];
            for k in 0..j {
                acc -= l[(i, k)] * l[(j, k)].conj();
            }
            flops += j as u64;
            l[(i, j)] = acc / ljj;
        }
    }
    Ok(Cholesky { l, log_det, flops })
}

impl Cholesky {
    /// Solve `A x = b` given `A = L L^H`.
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.l.rows;
        assert_eq!(b.len(), n);
        let mut z = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                let upd = self.l[(i, k)] * z[k];
                z[i] -= upd;
            }
            z[i] /= self.l[(i, i)];
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let upd = self.l[(k, i)].conj() * z[k];
                z[i] -= upd;
            }
            z[i] /= self.l[(i, i)];
        }
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{Complex, DMatrix, DVector};
    use rand::Rng;

    fn random_cmat(rows: usize, cols: usize, rng: &mut impl Rng) -> CMat {
        CMat::from_fn(rows, cols, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        })
    }

    fn to_na(m: &CMat) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(m.rows(), m.cols(), |r, c| {
            Complex::new(m[(r, c)].re, m[(r, c)].im)
        })
    }

    #[test]
    fn lstsq_matches_nalgebra_svd() {
        let mut rng = crate::seeding::derive_rng(11, &[0]);
        for trial in 0..20 {
            let (m, n) = (15 + trial % 10, 3 + trial % 4);
            let a = random_cmat(m, n, &mut rng);
            let b: Vec<Complex64> = (0..m)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let sol = lstsq(&a, &b, "test").unwrap();

            let na = to_na(&a);
            let nb = DVector::from_fn(m, |r, _| Complex::new(b[r].re, b[r].im));
            let svd = na.svd(true, true);
            let nx = svd.solve(&nb, 1e-14).unwrap();
            for j in 0..n {
                assert!(
                    (sol.x[j].re - nx[j].re).abs() < 1e-9
                        && (sol.x[j].im - nx[j].im).abs() < 1e-9,
                    "trial {trial} col {j}"
                );
            }
        }
    }

    #[test]
    fn lstsq_detects_rank_deficiency() {
        let mut rng = crate::seeding::derive_rng(12, &[0]);
        let mut a = random_cmat(10, 4, &mut rng);
        for r in 0..10 {
            a[(r, 3)] = a[(r, 1)] * Complex64::new(2.0, 0.0);
        }
        let b = vec![Complex64::new(1.0, 0.0); 10];
        match lstsq(&a, &b, "rank-test") {
            Err(Error::Singular { index, .. }) => assert_eq!(index, 3),
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn cholesky_matches_nalgebra() {
        let mut rng = crate::seeding::derive_rng(13, &[0]);
        for _ in 0..10 {
            let g = random_cmat(12, 8, &mut rng);
            let mut fl = 0;
            let phi = mat_mul(&g, &g.hermitian(), &mut fl).add(&CMat::scaled_identity(12, 0.5));
            let chol = cholesky(&phi, "test").unwrap();

            let na = to_na(&phi);
            let nchol = na.clone().cholesky().unwrap();
            let det: Complex<f64> = nchol.determinant();
            assert!((chol.log_det - det.re.ln()).abs() < 1e-8);

            let b: Vec<Complex64> = (0..12)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let x = chol.solve(&b);
            let nb = DVector::from_fn(12, |r, _| Complex::new(b[r].re, b[r].im));
            let nx = nchol.solve(&nb);
            for j in 0..12 {
                assert!((x[j].re - nx[j].re).abs() < 1e-9 && (x[j].im - nx[j].im).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let mut a = CMat::scaled_identity(3, 1.0);
        a[(2, 2)] = Complex64::new(-1.0, 0.0);
        assert!(matches!(
            cholesky(&a, "indef"),
            Err(Error::Singular { index: 2, .. })
        ));
    }
}
