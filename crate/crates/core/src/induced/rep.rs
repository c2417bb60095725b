use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::symgroup::{AddedBox, IrrepTable, Partition, Permutation};

/// `ind_{S(n-2)}^{S(n-1)} φ^α` in the basis `(a, i)`, `a = 1..n-1` labelling
/// the cosets of `(a, n-1)` and `i = 1..w^α`. Index of `(a, i)` is
/// `(a-1) w^α + (i-1)`.
#[derive(Clone, Debug)]
pub struct InducedRep {
    n: usize,
    table: IrrepTable,
}

impl InducedRep {
    /// `alpha ⊢ n-2` with `n >= 3`.
    pub fn new(alpha: &Partition) -> Result<Self> {
        let n = alpha.weight() + 2;
        if n < 3 {
            return Err(Error::InvalidArgument(
                "the induced representation needs n >= 3".into(),
            ));
        }
        Ok(InducedRep {
            n,
            table: IrrepTable::new(alpha),
        })
    }

    pub fn alpha(&self) -> &Partition {
        self.table.label()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `w^α`.
    pub fn irrep_dimension(&self) -> usize {
        self.table.dimension()
    }

    pub fn table(&self) -> &IrrepTable {
        &self.table
    }

    /// `(n-1) w^α`.
    pub fn block_dimension(&self) -> usize {
        (self.n - 1) * self.table.dimension()
    }

    /// The transpositions `(a, n-1)`, `a = 1..n-1`; the last is the identity.
    pub fn coset_reps(&self) -> Vec<Permutation> {
        let m = self.n - 1;
        (1..=m).map(|a| Permutation::transposition(m, a, m)).collect()
    }

    /// Irreducible constituents `ν ⊢ n-1`, one per addable box of `α`.
    pub fn decomposition(&self) -> Vec<AddedBox> {
        self.alpha().add_box()
    }

    /// `φ^α` of a permutation of degree `n-1` fixing `n-1`.
    pub(crate) fn phi_restricted(&self, p: &Permutation) -> DMatrix<f64> {
        self.table.image(&p.restrict().expect("permutation fixes n-1"))
    }

    /// Block `(a, b)` of `Φ(σ)` is `φ^α[(σ(b) n-1) σ (b n-1)]` when `a = σ(b)`.
    pub fn matrix(&self, sigma: &Permutation) -> Result<DMatrix<f64>> {
        let m = self.n - 1;
        if sigma.degree() != m {
            return Err(Error::DegreeMismatch(sigma.degree(), m));
        }
        let w = self.irrep_dimension();
        let mut out = DMatrix::zeros(m * w, m * w);
        for b in 1..=m {
            let a = sigma.apply(b);
            let inner = &(&Permutation::transposition(m, a, m) * sigma) * &Permutation::transposition(m, b, m);
            out.view_mut(((a - 1) * w, (b - 1) * w), (w, w))
                .copy_from(&self.phi_restricted(&inner));
        }
        Ok(out)
    }

    /// Character of the induced representation.
    pub fn character(&self, sigma: &Permutation) -> Result<f64> {
        Ok(self.matrix(sigma)?.trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs_diff;
    use crate::symgroup::character;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_swap() {
        let rep = InducedRep::new(&part("1")).unwrap();
        assert_eq!(rep.matrix(&Permutation::identity(2)).unwrap(), DMatrix::identity(2, 2));
        let swap = Permutation::transposition(2, 1, 2);
        assert_eq!(
            rep.matrix(&swap).unwrap(),
            DMatrix::from_row_slice(2, 2, &[0., 1., 1., 0.])
        );
        assert_eq!(rep.coset_reps().last().unwrap(), &Permutation::identity(2));
    }

    #[test]
    fn orthogonal_and_multiplicative() {
        for m in 1..=4 {
            for alpha in Partition::all(m) {
                let rep = InducedRep::new(&alpha).unwrap();
                let all = Permutation::all(m + 1);
                let dim = rep.block_dimension();
                let decomposition: usize = rep.decomposition().iter().map(|b| b.partition.dimension()).sum();
                assert_eq!(decomposition, dim);
                for p in &all {
                    let mp = rep.matrix(p).unwrap();
                    assert!(max_abs_diff(&(mp.transpose() * &mp), &DMatrix::identity(dim, dim)) < 1e-9);
                    for q in all.iter().step_by(5) {
                        let lhs = &mp * rep.matrix(q).unwrap();
                        assert!(max_abs_diff(&lhs, &rep.matrix(&(p * q)).unwrap()) < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn character_is_sum_over_added_boxes() {
        for m in 1..=4 {
            for alpha in Partition::all(m) {
                let rep = InducedRep::new(&alpha).unwrap();
                for p in Permutation::all(m + 1) {
                    let expected: f64 = rep
                        .decomposition()
                        .iter()
                        .map(|b| character(&b.partition, &p).unwrap())
                        .sum();
                    assert!((rep.character(&p).unwrap() - expected).abs() < 1e-9);
                }
            }
        }
    }
}
