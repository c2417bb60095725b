use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{max_abs, max_abs_diff, symmetric_eigen};

/// Reduction of a family `x_ij` with `x_ij x_kl = a_jk x_il` to matrix units.
///
/// With `A = Z diag(λ) Z^T`, `y_sr = Σ z_is x_ij z_jr` satisfies
/// `y_sr y_tu = λ_r δ_rt y_su`; rows and columns on null directions vanish,
/// and `f_sr = y_sr / √(λ_s λ_r)` over the surviving indices are matrix
/// units `f_sr f_tu = δ_rt f_su`.
#[derive(Clone, Debug)]
pub struct ReducedBasis {
    /// Orthogonal; surviving directions first.
    pub z: DMatrix<f64>,
    /// Eigenvalue of each column of `z`.
    pub lambdas: Vec<f64>,
    /// Number of nonzero eigenvalues, the size of the matrix algebra.
    pub rank: usize,
}

impl ReducedBasis {
    /// Index pairs `(s, r)` with nonzero `f_sr`.
    pub fn surviving(&self) -> Vec<(usize, usize)> {
        (0..self.rank)
            .flat_map(|s| (0..self.rank).map(move |r| (s, r)))
            .collect()
    }

    /// `c` with `y_sr = Σ_ij c_ij x_ij`.
    pub fn y_coefficients(&self, s: usize, r: usize) -> DMatrix<f64> {
        self.z.column(s) * self.z.column(r).transpose()
    }

    /// `c` with `f_sr = Σ_ij c_ij x_ij`; `s, r < rank`.
    pub fn f_coefficients(&self, s: usize, r: usize) -> DMatrix<f64> {
        self.y_coefficients(s, r) / (self.lambdas[s] * self.lambdas[r]).sqrt()
    }

    /// `c` with `Σ_s f_ss = Σ_ij c_ij x_ij`, the unit of the reduced algebra.
    pub fn unit_coefficients(&self) -> DMatrix<f64> {
        let n = self.z.nrows();
        (0..self.rank).fold(DMatrix::zeros(n, n), |acc, s| acc + self.f_coefficients(s, s))
    }
}

/// Diagonalizes the structure matrix `a` of a family `x_ij x_kl = a_jk x_il`.
/// `a` must be symmetric positive semidefinite.
pub fn xa_reduce(a: &DMatrix<f64>) -> Result<ReducedBasis> {
    if !a.is_square() || max_abs_diff(a, &a.transpose()) > 1e-10 * (1.0 + max_abs(a)) {
        return Err(Error::InvalidArgument("structure matrix must be symmetric".into()));
    }
    let (values, vectors) = symmetric_eigen(a);
    let threshold = 1e-7 * (1.0 + max_abs(a));
    if let Some(v) = values.iter().find(|&&v| v < -threshold) {
        return Err(Error::Numerical(format!("structure matrix has a negative eigenvalue {v}")));
    }
    let n = a.nrows();
    // descending, so nonzero eigenvalues come first
    let order: Vec<usize> = (0..n).rev().collect();
    let lambdas: Vec<f64> = order
        .iter()
        .map(|&k| if values[k].abs() < threshold { 0.0 } else { values[k] })
        .collect();
    let rank = lambdas.iter().filter(|&&v| v > 0.0).count();
    let z = DMatrix::from_fn(n, n, |i, j| vectors[(i, order[j])]);
    Ok(ReducedBasis { z, lambdas, rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    // x_ij = E_ij A obeys the rule, so Σ c_ij x_ij = C A.
    fn realize(a: &DMatrix<f64>, c: &DMatrix<f64>) -> DMatrix<f64> {
        c * a
    }

    fn check(a: DMatrix<f64>, rank: usize) {
        let r = xa_reduce(&a).unwrap();
        assert_eq!(r.rank, rank);
        let units: Vec<Vec<DMatrix<f64>>> = (0..rank)
            .map(|s| (0..rank).map(|t| realize(&a, &r.f_coefficients(s, t))).collect())
            .collect();
        for s in 0..rank {
            for t in 0..rank {
                for u in 0..rank {
                    for v in 0..rank {
                        let lhs = &units[s][t] * &units[u][v];
                        let rhs = if t == u { units[s][v].clone() } else { DMatrix::zeros(a.nrows(), a.nrows()) };
                        assert!(max_abs_diff(&lhs, &rhs) < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_is_already_reduced() {
        let r = xa_reduce(&DMatrix::identity(3, 3)).unwrap();
        assert_eq!(r.rank, 3);
        assert_eq!(r.lambdas, vec![1.0; 3]);
        check(DMatrix::identity(3, 3), 3);
    }

    #[test]
    fn two_by_two() {
        let a = DMatrix::from_row_slice(2, 2, &[2., 1., 1., 2.]);
        let r = xa_reduce(&a).unwrap();
        assert!((r.lambdas[0] - 3.0).abs() < 1e-12 && (r.lambdas[1] - 1.0).abs() < 1e-12);
        check(a, 2);
    }

    #[test]
    fn singular_structure_matrix() {
        let a = DMatrix::from_row_slice(3, 3, &[2., -1., 1., -1., 2., 1., 1., 1., 2.]);
        let r = xa_reduce(&a).unwrap();
        assert_eq!(r.rank, 2);
        assert!((r.lambdas[0] - 3.0).abs() < 1e-12 && (r.lambdas[1] - 3.0).abs() < 1e-12);
        assert_eq!(r.lambdas[2], 0.0);
        check(a, 2);
    }

    #[test]
    fn rejects_indefinite_input() {
        let a = DMatrix::from_row_slice(2, 2, &[0., 1., 1., 0.]);
        assert!(matches!(xa_reduce(&a), Err(Error::Numerical(_))));
    }
}
