//! Irreducible representations of the algebra: kind `M` in the reduced
//! (f) and u-dual (e) bases, the semi-trivial kind `S`, the block structure
//! and the unit of the ideal `M`.

mod irrep;
mod n2;
mod structure;
mod unit;

pub use irrep::{irrep_m, irrep_m_e, irrep_m_f, irrep_s, Basis, IrrepKind, IrrepOfAlgebra, IrrepRecord};
pub use n2::n2_special_case;
pub use structure::{partition_sum, structure_report, MBlock, SBlock, StructureReport};
pub use unit::{unit_of_m, verify_unit, UNIT_TOLERANCE};

use crate::error::Result;

/// Every irrep at `(n, d)`: kind `M` in basis `basis` for each `α` with
/// `h(α) ≤ d`, then kind `S` for each `ν` with `h(ν) < d`. The e-basis falls
/// back to f where `Q(α)` is singular.
pub fn all_irreps(n: usize, d: u32, basis: Basis) -> Result<Vec<IrrepOfAlgebra>> {
    if n == 2 {
        return Ok(n2_special_case(d)?.1);
    }
    let report = structure_report(n, d, None)?;
    let mut out = Vec::new();
    for b in &report.m_blocks {
        let irrep = match basis {
            Basis::E => irrep_m_e(&b.alpha, d, n).or_else(|_| irrep_m_f(&b.alpha, d, n))?,
            Basis::F => irrep_m_f(&b.alpha, d, n)?,
        };
        out.push(irrep);
    }
    for b in &report.s_blocks {
        out.push(irrep_s(&b.nu, d, n)?);
    }
    Ok(out)
}
