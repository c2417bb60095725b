use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{max_abs_diff, symmetric_eigen};
use crate::report::CheckReport;
use crate::symgroup::{Partition, Permutation};

use super::rep::InducedRep;
use super::q::{eigenvalues_closed_form, q_matrix, zero_condition, Eigenpair};
use super::z::{z_matrix, ZMatrix};

/// `|λ| < NULL_THRESHOLD · (1 + d)` counts as a zero eigenvalue.
pub const NULL_THRESHOLD: f64 = 1e-7;

/// Tolerance of the closed-form against numerical eigenvalue comparison.
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;

/// `Q(α)` at a fixed `d` with its closed-form spectrum, the reducing matrix
/// and the vanishing block, all cross-checked numerically on construction.
#[derive(Clone, Debug)]
pub struct SpectralQ {
    pub alpha: Partition,
    pub d: u32,
    pub matrix: DMatrix<f64>,
    pub eigenpairs: Vec<Eigenpair>,
    pub z: ZMatrix,
    pub theta: Option<Partition>,
    pub rank: usize,
    /// Numerical eigenvalues, ascending.
    pub numerical: Vec<f64>,
}

impl SpectralQ {
    pub fn new(alpha: &Partition, d: u32) -> Result<Self> {
        let df = f64::from(d);
        let matrix = q_matrix(alpha, df)?;
        let eigenpairs = eigenvalues_closed_form(alpha, df);
        let z = z_matrix(alpha)?;
        let theta = zero_condition(alpha, d);
        let size = matrix.nrows();
        let rank = size - theta.as_ref().map_or(0, Partition::dimension);

        let (numerical, _) = symmetric_eigen(&matrix);
        let mut closed: Vec<f64> = eigenpairs
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.lambda, e.multiplicity))
            .collect();
        closed.sort_by(f64::total_cmp);
        for (x, y) in numerical.iter().zip(&closed) {
            if (x - y).abs() > SPECTRUM_TOLERANCE * (1.0 + y.abs()) {
                return Err(Error::Numerical(format!(
                    "Q({alpha}) at d = {d}: numerical eigenvalue {x} against closed form {y}"
                )));
            }
        }
        let numeric_null = numerical
            .iter()
            .filter(|v| v.abs() < NULL_THRESHOLD * (1.0 + df))
            .count();
        if numeric_null != size - rank {
            return Err(Error::Numerical(format!(
                "Q({alpha}) at d = {d}: {numeric_null} numerically null eigenvalues, expected {}",
                size - rank
            )));
        }
        Ok(SpectralQ {
            alpha: alpha.clone(),
            d,
            matrix,
            eigenpairs,
            z,
            theta,
            rank,
            numerical,
        })
    }

    /// `λ_ν` for each column of `Z`.
    pub fn column_eigenvalues(&self) -> Vec<f64> {
        self.z
            .columns
            .iter()
            .map(|(nu, _)| self.lambda(nu).expect("column labels come from add_box"))
            .collect()
    }

    pub fn lambda(&self, nu: &Partition) -> Option<f64> {
        self.eigenpairs.iter().find(|e| &e.nu == nu).map(|e| e.lambda)
    }

    /// Columns of `Z` outside the `θ` block.
    pub fn surviving_columns(&self) -> Vec<usize> {
        (0..self.z.columns.len())
            .filter(|&k| Some(&self.z.columns[k].0) != self.theta.as_ref())
            .collect()
    }

    pub fn report(&self) -> SpectralReport {
        SpectralReport {
            alpha: self.alpha.clone(),
            d: self.d,
            matrix: self.matrix.row_iter().map(|r| r.iter().copied().collect()).collect(),
            eigenpairs: self.eigenpairs.clone(),
            rank: self.rank,
            theta: self.theta.clone(),
        }
    }
}

/// Serializable summary of a [`SpectralQ`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub alpha: Partition,
    pub d: u32,
    /// Row-major.
    pub matrix: Vec<Vec<f64>>,
    pub eigenpairs: Vec<Eigenpair>,
    pub rank: usize,
    pub theta: Option<Partition>,
}

/// Tolerance of [`verify_reduction`].
pub const REDUCTION_TOLERANCE: f64 = 1e-8;

/// Checks that `Z(α)` is orthogonal, block-diagonalizes the induced
/// representation on all of `S(n-1)` and diagonalizes `Q(α)` at `d` with the
/// closed-form eigenvalues.
pub fn verify_reduction(alpha: &Partition, d: u32) -> Result<CheckReport> {
    let spectral = SpectralQ::new(alpha, d)?;
    let rep = InducedRep::new(alpha)?;
    let z = &spectral.z;
    let size = z.matrix.nrows();
    let zt = z.matrix.transpose();
    let mut report = CheckReport::new("reduction").param("alpha", alpha).param("d", d);
    report.residual(
        max_abs_diff(&(&zt * &z.matrix), &DMatrix::identity(size, size)),
        REDUCTION_TOLERANCE,
        || "Z is not orthogonal".into(),
    );
    for sigma in Permutation::all(rep.n() - 1) {
        let reduced = &zt * rep.matrix(&sigma)? * &z.matrix;
        report.residual(max_abs_diff(&reduced, &z.block_image(&sigma)), REDUCTION_TOLERANCE, || {
            format!("Z^T Phi({sigma}) Z is not block diagonal")
        });
    }
    let diag = DMatrix::from_diagonal(&DVector::from_vec(spectral.column_eigenvalues()));
    report.residual(
        max_abs_diff(&(&zt * &spectral.matrix * &z.matrix), &diag),
        REDUCTION_TOLERANCE,
        || "Z^T Q Z is not the closed-form diagonal".into(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rank_deficient_case() {
        let s = SpectralQ::new(&part("1,1"), 2).unwrap();
        assert_eq!(s.theta, Some(part("1,1,1")));
        assert_eq!(s.rank, 2);
        assert_eq!(s.surviving_columns(), vec![0, 1]);
        let lambdas: Vec<(f64, usize)> = s.eigenpairs.iter().map(|e| (e.lambda, e.multiplicity)).collect();
        assert_eq!(lambdas, vec![(3.0, 2), (0.0, 1)]);
    }

    #[test]
    fn invariants_over_small_cases() {
        for k in 1..=3 {
            for alpha in Partition::all(k) {
                for d in 1..=5u32 {
                    let s = SpectralQ::new(&alpha, d).unwrap();
                    let zeros = s.eigenpairs.iter().filter(|e| e.lambda == 0.0).count();
                    assert!(zeros <= 1);
                    if d as usize > k {
                        assert!(s.eigenpairs.iter().all(|e| e.lambda > 0.0));
                        assert_eq!(s.rank, s.matrix.nrows());
                    }
                }
            }
        }
    }

    #[test]
    fn report_round_trips() {
        let r = SpectralQ::new(&part("2"), 3).unwrap().report();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SpectralReport>(&json).unwrap(), r);
    }

    #[test]
    fn reduction_residuals_up_to_weight_three() {
        for k in 1..=3 {
            for alpha in Partition::all(k) {
                let r = verify_reduction(&alpha, 3).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }
}
