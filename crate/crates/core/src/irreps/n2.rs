use std::collections::BTreeMap;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::symgroup::{Partition, Permutation};

use super::irrep::{Basis, IrrepKind, IrrepOfAlgebra};
use super::structure::{structure_report, StructureReport};

fn one_by_one(kind: IrrepKind, label: Partition, d: u32, swap: f64, basis: Option<Basis>) -> IrrepOfAlgebra {
    let images: BTreeMap<Permutation, DMatrix<f64>> = [
        (Permutation::identity(2), DMatrix::from_element(1, 1, 1.0)),
        (Permutation::transposition(2, 1, 2), DMatrix::from_element(1, 1, swap)),
    ]
    .into_iter()
    .collect();
    IrrepOfAlgebra {
        kind,
        label,
        n: 2,
        d,
        dimension: 1,
        basis,
        images,
    }
}

fn check(d: u32) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("n = 2 needs d >= 2, got {d}")));
    }
    Ok(())
}

/// The `M` block of two tensor factors: `V(12)^t ↦ d`.
pub(crate) fn irrep_m(alpha: &Partition, d: u32) -> Result<IrrepOfAlgebra> {
    check(d)?;
    if alpha.weight() != 0 {
        return Err(Error::InvalidArgument(format!("{alpha} is not a partition of 0")));
    }
    Ok(one_by_one(IrrepKind::M, Partition::empty(), d, f64::from(d), Some(Basis::F)))
}

/// Two factors: `M = C V(12)^t` and `S = C (1 - V(12)^t / d)`, each one
/// dimensional.
pub fn n2_special_case(d: u32) -> Result<(StructureReport, Vec<IrrepOfAlgebra>)> {
    check(d)?;
    let report = structure_report(2, d, None)?;
    let irreps = vec![
        irrep_m(&Partition::empty(), d)?,
        one_by_one(IrrepKind::S, Partition::trivial(1), d, 0.0, None),
    ];
    Ok((report, irreps))
}
