use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::Poly;
use crate::error::Result;
use crate::symgroup::{transposition_character_frobenius, Partition, Permutation};

use super::rep::InducedRep;

/// `Q(α)` split as `constant + d · linear`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicQ {
    pub constant: DMatrix<f64>,
    pub linear: DMatrix<f64>,
}

impl SymbolicQ {
    pub fn evaluate(&self, d: f64) -> DMatrix<f64> {
        &self.constant + &self.linear * d
    }

    /// Entries as integer polynomials in `d`, when every coefficient is an
    /// integer.
    pub fn to_poly(&self) -> Option<Vec<Vec<Poly>>> {
        let int = |x: f64| {
            let r = x.round();
            ((x - r).abs() < 1e-12).then_some(r as i64)
        };
        (0..self.constant.nrows())
            .map(|i| {
                (0..self.constant.ncols())
                    .map(|j| Some(Poly::new(vec![int(self.constant[(i, j)])?, int(self.linear[(i, j)])?])))
                    .collect()
            })
            .collect()
    }
}

/// `Q(α)` with entries `d^{δ_ab} φ^α_ij[(a n-1)(a b)(b n-1)]`, symbolic in `d`.
pub fn q_matrix_symbolic(alpha: &Partition) -> Result<SymbolicQ> {
    let rep = InducedRep::new(alpha)?;
    let m = rep.n() - 1;
    let w = rep.irrep_dimension();
    let size = m * w;
    let mut constant = DMatrix::zeros(size, size);
    for a in 1..=m {
        for b in 1..=m {
            if a == b {
                continue;
            }
            let p = &(&Permutation::transposition(m, a, m) * &Permutation::transposition(m, a, b))
                * &Permutation::transposition(m, b, m);
            constant
                .view_mut(((a - 1) * w, (b - 1) * w), (w, w))
                .copy_from(&rep.phi_restricted(&p));
        }
    }
    Ok(SymbolicQ {
        constant,
        linear: DMatrix::identity(size, size),
    })
}

/// `Q(α)` at a numeric `d`.
pub fn q_matrix(alpha: &Partition, d: f64) -> Result<DMatrix<f64>> {
    Ok(q_matrix_symbolic(alpha)?.evaluate(d))
}

/// `Q(α)` rebuilt as the transposition class sum of the induced
/// representation, shifted by `d` minus the class-sum scalar of `φ^α`.
pub fn q_via_induced(alpha: &Partition, d: f64) -> Result<DMatrix<f64>> {
    let rep = InducedRep::new(alpha)?;
    let m = rep.n() - 1;
    let k = alpha.weight();
    let shift = if k < 2 {
        0.0
    } else {
        (k * (k - 1) / 2) as f64 * transposition_character_frobenius(alpha)? / rep.irrep_dimension() as f64
    };
    let size = rep.block_dimension();
    let mut out = DMatrix::identity(size, size) * (d - shift);
    for a in 1..=m {
        for b in a + 1..=m {
            out += rep.matrix(&Permutation::transposition(m, a, b))?;
        }
    }
    Ok(out)
}

/// One eigenvalue of `Q(α)`: `ν` is `α` plus a box in `row`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub nu: Partition,
    pub lambda: f64,
    pub multiplicity: usize,
}

/// `λ_ν = d + α_i + 1 - i` for the box added in row `i`, i.e. `d` plus the
/// content of the new box; multiplicity `dim ψ^ν`. Ordered as
/// [`Partition::add_box`].
pub fn eigenvalues_closed_form(alpha: &Partition, d: f64) -> Vec<Eigenpair> {
    alpha
        .add_box()
        .into_iter()
        .map(|b| Eigenpair {
            lambda: d + b.content() as f64,
            multiplicity: b.partition.dimension(),
            nu: b.partition,
        })
        .collect()
}

/// The `ν` whose eigenvalue vanishes: the addable box with content `-d`.
pub fn zero_condition(alpha: &Partition, d: u32) -> Option<Partition> {
    alpha
        .add_box()
        .into_iter()
        .find(|b| b.content() == -(d as i64))
        .map(|b| b.partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs_diff, symmetric_eigen};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly_matrix(rows: &[&[&str]]) -> Vec<Vec<Poly>> {
        rows.iter()
            .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
            .collect()
    }

    #[test]
    fn small_q_matrices() {
        assert_eq!(
            q_matrix_symbolic(&part("1")).unwrap().to_poly().unwrap(),
            poly_matrix(&[&["d", "1"], &["1", "d"]])
        );
        assert_eq!(
            q_matrix_symbolic(&part("2")).unwrap().to_poly().unwrap(),
            poly_matrix(&[&["d", "1", "1"], &["1", "d", "1"], &["1", "1", "d"]])
        );
        assert_eq!(
            q_matrix_symbolic(&part("1,1")).unwrap().to_poly().unwrap(),
            poly_matrix(&[&["d", "-1", "1"], &["-1", "d", "1"], &["1", "1", "d"]])
        );
    }

    #[test]
    fn two_constructions_agree() {
        for k in 1..=4 {
            for alpha in Partition::all(k) {
                for d in 1..=5 {
                    let a = q_matrix(&alpha, d as f64).unwrap();
                    let b = q_via_induced(&alpha, d as f64).unwrap();
                    assert!(max_abs_diff(&a, &b) < 1e-10, "alpha = {alpha}, d = {d}");
                    assert!(max_abs_diff(&a, &a.transpose()) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let lam = |a: &str, d: f64| -> Vec<(f64, usize)> {
            eigenvalues_closed_form(&part(a), d)
                .into_iter()
                .map(|e| (e.lambda, e.multiplicity))
                .collect()
        };
        // trivial of S(n-2): d + n - 2 once, d - 1 with multiplicity n - 2
        assert_eq!(lam("3", 2.0), vec![(5.0, 1), (1.0, 3)]);
        // sign of S(n-2)
        assert_eq!(lam("1,1,1", 2.0), vec![(3.0, 3), (-1.0, 1)]);
        assert_eq!(lam("2,1", 0.0), vec![(2.0, 3), (0.0, 2), (-2.0, 3)]);
    }

    #[test]
    fn zero_condition_examples() {
        assert_eq!(zero_condition(&part("1,1"), 2), Some(part("1,1,1")));
        assert_eq!(zero_condition(&part("1,1,1"), 3), Some(part("1,1,1,1")));
        for k in 1..=5 {
            for alpha in Partition::all(k) {
                assert_eq!(zero_condition(&alpha, k as u32 + 1), None);
            }
        }
    }

    #[test]
    fn spectra_match_closed_form() {
        for k in 1..=3 {
            for alpha in Partition::all(k) {
                for d in 1..=5 {
                    let (numeric, _) = symmetric_eigen(&q_matrix(&alpha, d as f64).unwrap());
                    let mut closed: Vec<f64> = eigenvalues_closed_form(&alpha, d as f64)
                        .iter()
                        .flat_map(|e| std::iter::repeat_n(e.lambda, e.multiplicity))
                        .collect();
                    closed.sort_by(f64::total_cmp);
                    for (x, y) in numeric.iter().zip(&closed) {
                        assert!((x - y).abs() < 1e-8, "alpha = {alpha}, d = {d}");
                    }
                    let total: f64 = closed.iter().sum();
                    assert!((total - ((k + 1) * alpha.dimension() * d) as f64).abs() < 1e-9);
                }
            }
        }
    }
}
