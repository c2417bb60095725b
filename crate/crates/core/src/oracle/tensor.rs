use std::collections::HashMap;

use nalgebra::DMatrix;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::symgroup::Permutation;

/// Default ceiling on `d^n`, the side length of operators the oracle builds.
pub const DEFAULT_CAP: usize = 4096;

/// A real operator on `(C^d)^{⊗n}`. Basis index `I = Σ (i_k - 1) d^{n-k}`,
/// so factor 1 is the most significant digit.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp {
    n: usize,
    d: u32,
    matrix: DMatrix<f64>,
}

/// `d^n`, refused when above `cap`.
pub fn checked_size(n: usize, d: u32, cap: usize) -> Result<usize> {
    let size = (d as usize)
        .checked_pow(n as u32)
        .ok_or(Error::SizeCap { size: usize::MAX, cap })?;
    if size > cap {
        return Err(Error::SizeCap { size, cap });
    }
    Ok(size)
}

impl TensorOp {
    pub fn new(n: usize, d: u32, matrix: DMatrix<f64>) -> Result<Self> {
        let size = (d as usize).pow(n as u32);
        if matrix.shape() != (size, size) {
            return Err(Error::InvalidArgument(format!(
                "operator of shape {:?} on {n} factors of dimension {d}",
                matrix.shape()
            )));
        }
        Ok(TensorOp { n, d, matrix })
    }

    pub fn identity(n: usize, d: u32) -> Self {
        let size = (d as usize).pow(n as u32);
        TensorOp {
            n,
            d,
            matrix: DMatrix::identity(size, size),
        }
    }

    pub fn zero(n: usize, d: u32) -> Self {
        let size = (d as usize).pow(n as u32);
        TensorOp {
            n,
            d,
            matrix: DMatrix::zeros(size, size),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn size(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.matrix
    }

    fn same_space(&self, other: &TensorOp) -> Result<()> {
        if (self.n, self.d) != (other.n, other.d) {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &TensorOp) -> Result<TensorOp> {
        self.same_space(other)?;
        Ok(TensorOp {
            matrix: &self.matrix * &other.matrix,
            ..*self
        })
    }

    pub fn add(&self, other: &TensorOp) -> Result<TensorOp> {
        self.same_space(other)?;
        Ok(TensorOp {
            matrix: &self.matrix + &other.matrix,
            ..*self
        })
    }

    pub fn scale(&self, c: f64) -> TensorOp {
        TensorOp {
            matrix: &self.matrix * c,
            ..*self
        }
    }

    pub fn transpose(&self) -> TensorOp {
        TensorOp {
            matrix: self.matrix.transpose(),
            ..*self
        }
    }

    /// Largest entry-wise difference.
    pub fn distance(&self, other: &TensorOp) -> f64 {
        linalg::max_abs_diff(&self.matrix, &other.matrix)
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    /// Hilbert-Schmidt inner product `tr(A^T B)`.
    pub fn inner(&self, other: &TensorOp) -> f64 {
        self.matrix.dot(&other.matrix)
    }
}

/// Entry positions `(row, col)` of the 0/1 matrix `V(σ)`: column `I` has its
/// one in the row whose `σ(p)`-th digit is the `p`-th digit of `I`.
fn permutation_positions(sigma: &Permutation, d: u32) -> Vec<(usize, usize)> {
    let n = sigma.degree();
    let d = d as usize;
    let size = d.pow(n as u32);
    let weight: Vec<usize> = (0..n).map(|k| d.pow((n - 1 - k) as u32)).collect();
    let mut digits = vec![0usize; n];
    (0..size)
        .map(|col| {
            let mut rest = col;
            for k in (0..n).rev() {
                digits[k] = rest % d;
                rest /= d;
            }
            let row = (0..n).map(|p| digits[p] * weight[sigma.apply(p + 1) - 1]).sum();
            (row, col)
        })
        .collect()
}

/// Swaps the least significant digits of a row and column index.
fn transpose_last_position(row: usize, col: usize, d: usize) -> (usize, usize) {
    let (r_hi, r_lo) = (row / d, row % d);
    let (c_hi, c_lo) = (col / d, col % d);
    (r_hi * d + c_lo, c_hi * d + r_lo)
}

/// The permutation operator `V(σ)` on `d^n` dimensions, `n = deg σ`.
pub fn perm_operator(sigma: &Permutation, d: u32, cap: usize) -> Result<TensorOp> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let n = sigma.degree();
    let size = checked_size(n, d, cap)?;
    let mut matrix = DMatrix::zeros(size, size);
    for (r, c) in permutation_positions(sigma, d) {
        matrix[(r, c)] = 1.0;
    }
    Ok(TensorOp { n, d, matrix })
}

/// Transposes the last tensor factor only.
pub fn partial_transpose_last(op: &TensorOp) -> TensorOp {
    let d = op.d as usize;
    let size = op.size();
    let mut matrix = DMatrix::zeros(size, size);
    for c in 0..size {
        for r in 0..size {
            let v = op.matrix[(r, c)];
            if v != 0.0 {
                let (r2, c2) = transpose_last_position(r, c, d);
                matrix[(r2, c2)] = v;
            }
        }
    }
    TensorOp { matrix, ..*op }
}

/// Every `V(σ)^t`, `σ ∈ S(n)`, stored as sparse 0/1 position lists, with
/// helpers to map abstract elements to operators.
#[derive(Clone, Debug)]
pub struct GeneratorBank {
    n: usize,
    d: u32,
    size: usize,
    transposed: bool,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    positions: Vec<Vec<(u32, u32)>>,
}

impl GeneratorBank {
    pub fn new(n: usize, d: u32, cap: usize) -> Result<Self> {
        Self::build(n, d, cap, true)
    }

    /// The plain permutation operators `V(σ)` instead.
    pub fn untransposed(n: usize, d: u32, cap: usize) -> Result<Self> {
        Self::build(n, d, cap, false)
    }

    fn build(n: usize, d: u32, cap: usize, transposed: bool) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        let size = checked_size(n, d, cap)?;
        let perms = Permutation::all(n);
        let du = d as usize;
        let positions = perms
            .iter()
            .map(|s| {
                permutation_positions(s, d)
                    .into_iter()
                    .map(|(r, c)| {
                        let (r, c) = if transposed { transpose_last_position(r, c, du) } else { (r, c) };
                        (r as u32, c as u32)
                    })
                    .collect()
            })
            .collect();
        let index = perms.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        Ok(GeneratorBank {
            n,
            d,
            size,
            transposed,
            perms,
            index,
            positions,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_transposed(&self) -> bool {
        self.transposed
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    fn slot(&self, sigma: &Permutation) -> Result<usize> {
        self.index
            .get(sigma)
            .copied()
            .ok_or(Error::DegreeMismatch(sigma.degree(), self.n))
    }

    /// `V(σ)^t` (or `V(σ)` for an untransposed bank) as a dense operator.
    pub fn generator(&self, sigma: &Permutation) -> Result<TensorOp> {
        let mut op = TensorOp::zero(self.n, self.d);
        self.scatter(&mut op.matrix, self.slot(sigma)?, 1.0);
        Ok(op)
    }

    fn scatter(&self, m: &mut DMatrix<f64>, k: usize, c: f64) {
        for &(r, col) in &self.positions[k] {
            m[(r as usize, col as usize)] += c;
        }
    }

    /// The operator `Σ c_σ V(σ)^t`.
    pub fn realize(&self, x: &AlgebraElement<f64>) -> Result<TensorOp> {
        let ctx = x.context();
        if ctx.n() != self.n || ctx.d().fixed() != Some(self.d) {
            return Err(Error::ContextMismatch);
        }
        let mut op = TensorOp::zero(self.n, self.d);
        for (p, c) in x.terms() {
            self.scatter(&mut op.matrix, self.slot(p)?, *c);
        }
        Ok(op)
    }

    /// Gram matrix `tr(A_σ^† A_ρ)` of the stored operators over all of `S(n)` in
    /// [`Permutation::all`] order, from overlaps of the sparse supports.
    pub fn gram(&self) -> DMatrix<f64> {
        let k = self.perms.len();
        let mut entries: Vec<(u64, u32)> = Vec::with_capacity(k * self.size);
        for (g, pos) in self.positions.iter().enumerate() {
            for &(r, c) in pos {
                entries.push(((r as u64) * self.size as u64 + c as u64, g as u32));
            }
        }
        entries.sort_unstable();
        let mut gram = DMatrix::zeros(k, k);
        let mut start = 0;
        while start < entries.len() {
            let key = entries[start].0;
            let mut end = start;
            while end < entries.len() && entries[end].0 == key {
                end += 1;
            }
            for a in start..end {
                for b in start..end {
                    gram[(entries[a].1 as usize, entries[b].1 as usize)] += 1.0;
                }
            }
            start = end;
        }
        gram
    }

    /// `max |A_σ A_ρ - c A_τ|`, computed on the sparse supports.
    pub fn product_residual(&self, sigma: &Permutation, rho: &Permutation, c: f64, tau: &Permutation) -> Result<f64> {
        let (a, b, t) = (self.slot(sigma)?, self.slot(rho)?, self.slot(tau)?);
        let mut by_row: Vec<Vec<u32>> = vec![Vec::new(); self.size];
        for &(r, col) in &self.positions[b] {
            by_row[r as usize].push(col);
        }
        let mut product: HashMap<(u32, u32), f64> = HashMap::new();
        for &(r, k) in &self.positions[a] {
            for &col in &by_row[k as usize] {
                *product.entry((r, col)).or_insert(0.0) += 1.0;
            }
        }
        for &(r, col) in &self.positions[t] {
            *product.entry((r, col)).or_insert(0.0) -= c;
        }
        Ok(product.values().fold(0.0, |m, v| m.max(v.abs())))
    }

    /// Dimension of the span of the stored operators.
    pub fn span_dimension(&self) -> usize {
        linalg::psd_rank(&self.gram(), RANK_TOLERANCE)
    }
}

/// Relative threshold for numerical ranks.
pub const RANK_TOLERANCE: f64 = 1e-8;

/// Numerical rank of the Gram matrix `tr(A^T B)` of a family of operators.
pub fn span_dimension(ops: &[TensorOp]) -> usize {
    if ops.is_empty() {
        return 0;
    }
    let k = ops.len();
    let gram = DMatrix::from_fn(k, k, |i, j| ops[i].inner(&ops[j]));
    linalg::psd_rank(&gram, RANK_TOLERANCE)
}
