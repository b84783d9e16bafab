//! Dense numerical kernels: symmetric eigendecomposition, minimum-norm least
//! squares, log-magnitude determinants and SPD solves. Backed by nalgebra.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen, LU, SVD};

use crate::error::{Error, Result};

/// Relative tolerance used to accept a matrix as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// An LU pivot below this fraction of the largest matrix entry counts as zero.
pub const SINGULAR_TOL: f64 = 1e-12;

/// Relative threshold under which an eigenvalue is treated as zero.
pub const ZERO_EIGEN_TOL: f64 = 1e-8;

/// Eigenvalues at or below this are "zero" for a spectrum whose largest
/// eigenvalue is `lambda_max`.
pub fn zero_eigen_threshold(lambda_max: f64) -> f64 {
    ZERO_EIGEN_TOL * lambda_max.abs().max(1.0)
}

pub fn max_asymmetry(s: &DMatrix<f64>) -> f64 {
    let n = s.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max((s[(i, j)] - s[(j, i)]).abs());
        }
    }
    worst
}

fn check_symmetric(s: &DMatrix<f64>) -> Result<()> {
    if !s.is_square() {
        return Err(Error::InvalidData(format!(
            "expected a square matrix, got {}x{}",
            s.nrows(),
            s.ncols()
        )));
    }
    let scale = s.amax().max(1.0);
    let asym = max_asymmetry(s);
    if asym > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }
    Ok(())
}

/// Eigenpairs in ascending eigenvalue order.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub values: Vec<f64>,
    /// Orthonormal columns aligned with `values`.
    pub vectors: DMatrix<f64>,
}

/// The `count` algebraically smallest eigenpairs of a symmetric matrix.
///
/// Each eigenvector is signed so its largest-magnitude entry is positive
/// (first such entry on ties), which makes results reproducible.
pub fn symmetric_eigen(s: &DMatrix<f64>, count: usize) -> Result<EigenResult> {
    check_symmetric(s)?;
    let n = s.nrows();
    if count == 0 || count > n {
        return Err(Error::InvalidParameter(format!(
            "eigenpair count {count} not in 1..={n}"
        )));
    }
    // symmetrize exactly so the solver sees one triangle's worth of rounding
    let sym = (s + s.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]).then(a.cmp(&b)));
    order.truncate(count);

    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::zeros(n, count);
    for (c, &i) in order.iter().enumerate() {
        let mut v = eig.eigenvectors.column(i).into_owned();
        let mut pivot = 0;
        for r in 1..n {
            if v[r].abs() > v[pivot].abs() {
                pivot = r;
            }
        }
        if v[pivot] < 0.0 {
            v.neg_mut();
        }
        vectors.set_column(c, &v);
    }
    Ok(EigenResult { values, vectors })
}

/// Minimum-norm minimizer of ‖b − a·c‖₂ (pseudo-inverse solution via SVD).
pub fn min_norm_least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
    if a.nrows() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.nrows(),
            right: b.len(),
        });
    }
    if a.ncols() == 0 {
        return Ok(DVector::zeros(0));
    }
    let svd = SVD::new(a.clone(), true, true);
    let smax = svd.singular_values.max();
    let eps = smax * a.nrows().max(a.ncols()) as f64 * f64::EPSILON;
    let u = svd.u.as_ref().expect("u requested");
    let v_t = svd.v_t.as_ref().expect("v_t requested");
    let mut coeffs = DVector::zeros(svd.singular_values.len());
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s > eps {
            coeffs[i] = u.column(i).dot(b) / s;
        }
    }
    Ok(v_t.transpose() * coeffs)
}

/// sign(det) and log|det|. A matrix with an LU pivot below [`SINGULAR_TOL`]
/// times its largest absolute entry is reported as singular:
/// `sign == 0`, `log_abs == -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogDet {
    pub sign: i8,
    pub log_abs: f64,
}

impl LogDet {
    pub const SINGULAR: LogDet = LogDet {
        sign: 0,
        log_abs: f64::NEG_INFINITY,
    };

    pub fn is_singular(&self) -> bool {
        self.sign == 0
    }

    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.log_abs.exp()
    }
}

pub fn log_abs_det(m: &DMatrix<f64>) -> Result<LogDet> {
    if !m.is_square() {
        return Err(Error::InvalidData(format!(
            "determinant of non-square {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidData("non-finite matrix entry".into()));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(LogDet {
            sign: 1,
            log_abs: 0.0,
        });
    }
    let cutoff = SINGULAR_TOL * m.amax();
    let lu = LU::new(m.clone());
    let u = lu.u();
    let mut sign = lu.p().determinant::<f64>().signum() as i8;
    let mut log_abs = 0.0;
    for i in 0..n {
        let piv = u[(i, i)];
        if piv.abs() <= cutoff {
            return Ok(LogDet::SINGULAR);
        }
        if piv < 0.0 {
            sign = -sign;
        }
        log_abs += piv.abs().ln();
    }
    Ok(LogDet { sign, log_abs })
}

/// Solves `a·x = b` for symmetric positive-definite `a` by Cholesky.
pub fn solve_spd(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    check_symmetric(a)?;
    if a.nrows() != b.nrows() {
        return Err(Error::LengthMismatch {
            left: a.nrows(),
            right: b.nrows(),
        });
    }
    let sym = (a + a.transpose()) * 0.5;
    let chol = Cholesky::new(sym).ok_or(Error::NotPositiveDefinite)?;
    Ok(chol.solve(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eigen_diagonal() {
        let r = symmetric_eigen(&DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 1.0])), 2).unwrap();
        assert_eq!(r.values, vec![1.0, 2.0]);
        assert_relative_eq!(r.vectors, DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]));
    }

    #[test]
    fn eigen_identity_is_orthonormal() {
        let r = symmetric_eigen(&DMatrix::identity(5, 5), 3).unwrap();
        assert_eq!(r.values, vec![1.0; 3]);
        assert_relative_eq!(r.vectors.transpose() * &r.vectors, DMatrix::identity(3, 3), epsilon = 1e-12);
    }

    #[test]
    fn eigen_triangle_laplacian() {
        let l = DMatrix::identity(3, 3) - DMatrix::from_element(3, 3, 1.0 / 3.0);
        let r = symmetric_eigen(&l, 3).unwrap();
        assert_relative_eq!(r.values[0], 0.0, epsilon = 1e-12);
        assert_relative_eq!(r.values[1], 1.0, epsilon = 1e-12);
        assert_relative_eq!(r.values[2], 1.0, epsilon = 1e-12);
        let ones = DVector::from_element(3, 1.0 / 3f64.sqrt());
        assert_relative_eq!(r.vectors.column(0).into_owned(), ones, epsilon = 1e-12);
    }

    #[test]
    fn eigen_rejects_asymmetric() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(symmetric_eigen(&m, 1), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn least_squares_examples() {
        let a = DMatrix::from_row_slice(2, 1, &[1.0, 0.0]);
        let c = min_norm_least_squares(&a, &DVector::from_vec(vec![2.0, 0.0])).unwrap();
        assert_relative_eq!(c[0], 2.0, epsilon = 1e-15);
        let b = DVector::from_vec(vec![0.0, 3.0]);
        let c = min_norm_least_squares(&a, &b).unwrap();
        assert_eq!(c[0], 0.0);
        assert_relative_eq!((b - &a * c).norm(), 3.0);
    }

    #[test]
    fn least_squares_min_norm_on_duplicate_columns() {
        let a = DMatrix::from_row_slice(3, 2, &[1.0, 1.0, 2.0, 2.0, 0.0, 0.0]);
        let b = DVector::from_vec(vec![2.0, 4.0, 0.0]);
        let c = min_norm_least_squares(&a, &b).unwrap();
        assert_relative_eq!(c[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(c[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn log_det_examples() {
        let id = log_abs_det(&DMatrix::identity(2, 2)).unwrap();
        assert_eq!(id, LogDet { sign: 1, log_abs: 0.0 });
        let d = log_abs_det(&DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, -3.0]))).unwrap();
        assert_eq!(d.sign, -1);
        assert_relative_eq!(d.log_abs, 6f64.ln(), epsilon = 1e-15);
        let s = log_abs_det(&DMatrix::from_element(2, 2, 1.0)).unwrap();
        assert!(s.is_singular());
        assert_eq!(s.log_abs, f64::NEG_INFINITY);
    }

    #[test]
    fn log_det_tiny_scale_is_not_singular() {
        // the threshold is relative, so a well-conditioned matrix of tiny entries survives
        let m = DMatrix::from_row_slice(2, 2, &[1e-9, 2e-10, 0.0, 3e-9]);
        let d = log_abs_det(&m).unwrap();
        assert_eq!(d.sign, 1);
        assert_relative_eq!(d.value(), 3e-18, max_relative = 1e-12);
    }

    #[test]
    fn spd_examples() {
        let b = DMatrix::from_row_slice(3, 2, &[1.0, -2.0, 0.5, 3.0, 7.0, 0.0]);
        assert_relative_eq!(solve_spd(&DMatrix::identity(3, 3), &b).unwrap(), b);
        let x = solve_spd(&DMatrix::from_element(1, 1, 2.0), &DMatrix::from_element(1, 1, 4.0)).unwrap();
        assert_relative_eq!(x[(0, 0)], 2.0);
        let not_pd = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            solve_spd(&not_pd, &DMatrix::identity(2, 2)),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn spd_triangle_plus_identity() {
        // (2I - J/3)^{-1} = I/2 + J/6 by Sherman-Morrison
        let a = DMatrix::identity(3, 3) * 2.0 - DMatrix::from_element(3, 3, 1.0 / 3.0);
        let inv = DMatrix::identity(3, 3) * 0.5 + DMatrix::from_element(3, 3, 1.0 / 6.0);
        let e1 = DMatrix::from_column_slice(3, 1, &[1.0, 0.0, 0.0]);
        let x = solve_spd(&a, &e1).unwrap();
        assert_relative_eq!(x.column(0).into_owned(), inv.column(0).into_owned(), epsilon = 1e-14);
    }
}
