use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{direct_sum, factorial};
use crate::symgroup::{IrrepTable, Partition, Permutation};

use super::rep::InducedRep;

/// Orthogonal matrix reducing the induced representation into irreducible
/// blocks. Columns are grouped by `ν` in [`Partition::add_box`] order, then by
/// `j = 1..dim ψ^ν`.
#[derive(Clone, Debug)]
pub struct ZMatrix {
    pub matrix: DMatrix<f64>,
    /// `(ν, j)` for every column, `j` 1-based.
    pub columns: Vec<(Partition, usize)>,
    /// `ψ^ν` for each block, in column order.
    pub blocks: Vec<IrrepTable>,
}

impl ZMatrix {
    /// Column range of the block labelled `nu`.
    pub fn block_range(&self, nu: &Partition) -> Option<std::ops::Range<usize>> {
        let start = self.columns.iter().position(|(p, _)| p == nu)?;
        let len = self.columns.iter().filter(|(p, _)| p == nu).count();
        Some(start..start + len)
    }

    /// `⊕_ν ψ^ν(σ)` in column order.
    pub fn block_image(&self, sigma: &Permutation) -> DMatrix<f64> {
        let blocks: Vec<DMatrix<f64>> = self.blocks.iter().map(|t| t.image(sigma)).collect();
        direct_sum(&blocks)
    }
}

const DIAGONAL_THRESHOLD: f64 = 1e-9;

/// Builds `Z(α)` from columns of the matrix operators
/// `E^ν_{j1} = (dim ψ^ν/(n-1)!) Σ_σ ψ^ν_{1j}(σ^{-1}) Φ(σ)`: the first
/// column `X` on which `E^ν_{11}` has a positive diagonal entry `N` gives
/// `z_j = E^ν_{j1} e_X / √N`. Only `z_1` has a chosen sign (positive at
/// `X`); the others follow from it so that `Z^T Φ(σ) Z = ⊕ ψ^ν(σ)` exactly.
pub fn z_matrix(alpha: &Partition) -> Result<ZMatrix> {
    let rep = InducedRep::new(alpha)?;
    let m = rep.n() - 1;
    let size = rep.block_dimension();
    let group = Permutation::all(m);
    let images: Vec<DMatrix<f64>> = group.iter().map(|s| rep.matrix(s)).collect::<Result<_>>()?;
    let order = factorial(m) as f64;

    let mut matrix = DMatrix::zeros(size, size);
    let mut columns = Vec::with_capacity(size);
    let mut blocks = Vec::new();
    for added in rep.decomposition() {
        let nu = added.partition;
        let psi = IrrepTable::new(&nu);
        let w = psi.dimension();
        let psi_inv: Vec<DMatrix<f64>> = group.iter().map(|s| psi.image(&s.inverse())).collect();
        let e_j1 = |j: usize| -> DMatrix<f64> {
            let mut acc = DMatrix::zeros(size, size);
            for (k, img) in images.iter().enumerate() {
                let c = psi_inv[k][(0, j)];
                if c != 0.0 {
                    acc += img * c;
                }
            }
            acc * (w as f64 / order)
        };
        let e11 = e_j1(0);
        let x = (0..size)
            .find(|&k| e11[(k, k)] > DIAGONAL_THRESHOLD)
            .ok_or_else(|| Error::Numerical(format!("projector for {nu} has no positive diagonal entry")))?;
        let norm = e11[(x, x)].sqrt();
        for j in 0..w {
            let col = columns.len();
            let e = if j == 0 { e11.clone() } else { e_j1(j) };
            matrix.set_column(col, &(e.column(x) / norm));
            columns.push((nu.clone(), j + 1));
        }
        blocks.push(psi);
    }
    if columns.len() != size {
        return Err(Error::Numerical(format!(
            "reduction produced {} columns for a block of size {size}",
            columns.len()
        )));
    }
    Ok(ZMatrix {
        matrix,
        columns,
        blocks,
    })
}
