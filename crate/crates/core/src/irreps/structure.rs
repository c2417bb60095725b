use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::induced::zero_condition;
use crate::oracle::GeneratorBank;
use crate::symgroup::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MBlock {
    pub alpha: Partition,
    /// `rank Q(α)`, the size of the matrix block.
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SBlock {
    pub nu: Partition,
    pub dimension: usize,
}

/// Block inventory of the algebra: `M ≅ ⊕_α M(rank Q(α))` over `h(α) ≤ d`
/// and `S ≅ ⊕_ν M(dim ψ^ν)` over `h(ν) < d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub d: u32,
    pub m_blocks: Vec<MBlock>,
    pub s_blocks: Vec<SBlock>,
    pub dim_m: usize,
    pub dim_s: usize,
    pub dim_total: usize,
    /// `Σ (dim φ^μ)^2` over `μ ⊢ n` with `h(μ) ≤ d`.
    pub expected_total: usize,
    /// Span dimension measured by the tensor oracle.
    pub oracle_dim: Option<usize>,
}

impl StructureReport {
    /// All dimension identities hold, including the oracle one when measured.
    pub fn consistent(&self) -> bool {
        self.dim_total == self.expected_total && self.oracle_dim.is_none_or(|o| o == self.dim_total)
    }
}

/// `Σ (dim φ^μ)^2` over `μ ⊢ n` with at most `d` rows.
pub fn partition_sum(n: usize, d: u32) -> usize {
    Partition::all(n)
        .iter()
        .filter(|mu| mu.height() <= d as usize)
        .map(|mu| mu.dimension().pow(2))
        .sum()
}

/// Builds the report; with `oracle_cap` set, also measures the span of the
/// generators on `(C^d)^{⊗n}` under that size cap.
pub fn structure_report(n: usize, d: u32, oracle_cap: Option<usize>) -> Result<StructureReport> {
    if n < 2 || d == 0 {
        return Err(Error::InvalidArgument(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}")));
    }
    let m_blocks: Vec<MBlock> = Partition::all(n - 2)
        .into_iter()
        .filter(|a| a.height() <= d as usize)
        .map(|alpha| {
            let full = (n - 1) * alpha.dimension();
            let rank = full - zero_condition(&alpha, d).map_or(0, |t| t.dimension());
            MBlock { alpha, rank }
        })
        .collect();
    let s_blocks: Vec<SBlock> = Partition::all(n - 1)
        .into_iter()
        .filter(|nu| nu.height() < d as usize)
        .map(|nu| SBlock {
            dimension: nu.dimension(),
            nu,
        })
        .collect();
    let dim_m = m_blocks.iter().map(|b| b.rank.pow(2)).sum();
    let dim_s = s_blocks.iter().map(|b| b.dimension.pow(2)).sum();
    let oracle_dim = match oracle_cap {
        Some(cap) => Some(GeneratorBank::new(n, d, cap)?.span_dimension()),
        None => None,
    };
    Ok(StructureReport {
        n,
        d,
        m_blocks,
        s_blocks,
        dim_m,
        dim_s,
        dim_total: dim_m + dim_s,
        expected_total: partition_sum(n, d),
        oracle_dim,
    })
}
