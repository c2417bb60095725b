use nalgebra::DMatrix;

use crate::algebra::{AlgebraContext, AlgebraElement, UFamily};
use crate::error::{Error, Result};
use crate::induced::SpectralQ;
use crate::oracle::{GeneratorBank, TensorOp};
use crate::report::CheckReport;
use crate::symgroup::{Partition, Permutation};

/// Tolerance of [`verify_unit`].
pub const UNIT_TOLERANCE: f64 = 1e-8;

/// The unit of the ideal `M`, `Σ_α Σ_{ν≠θ, j} f^{νν}_{jj}(α)`, expanded into
/// generators. In u-element coordinates `e_α = Σ_{s≠θ} z_s z_s^T / λ_s`.
pub fn unit_of_m(n: usize, d: u32) -> Result<AlgebraElement<f64>> {
    if n < 3 {
        return Err(Error::InvalidArgument("the unit of M is built for n >= 3".into()));
    }
    let ctx = AlgebraContext::fixed(n, d)?;
    let mut e = AlgebraElement::zero(ctx);
    for alpha in Partition::all(n - 2).into_iter().filter(|a| a.height() <= d as usize) {
        let spec = SpectralQ::new(&alpha, d)?;
        let lambdas = spec.column_eigenvalues();
        let size = spec.matrix.nrows();
        let mut c = DMatrix::zeros(size, size);
        for s in spec.surviving_columns() {
            let z = spec.z.matrix.column(s);
            c += z * z.transpose() / lambdas[s];
        }
        e = e.add(&UFamily::new(&alpha, ctx)?.combine(&c)?)?;
    }
    Ok(e)
}

/// Checks through the oracle that `e = unit_of_m(n, d)` satisfies `e^2 = e`,
/// `em = me = m` for every generator `m` of `M`, `(1-e)^2 = 1-e`, and that
/// `M` annihilates `S = span{V(σ)(1-e) : σ(n) = n}` on both sides.
pub fn verify_unit(n: usize, d: u32, cap: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("unit-of-M").param("n", n).param("d", d);
    let bank = GeneratorBank::new(n, d, cap)?;
    let e = bank.realize(&unit_of_m(n, d)?)?;
    let one = TensorOp::identity(n, d);
    let comp = one.add(&e.scale(-1.0))?;
    report.residual(e.mul(&e)?.distance(&e), UNIT_TOLERANCE, || "e^2 = e".into());
    report.residual(comp.mul(&comp)?.distance(&comp), UNIT_TOLERANCE, || "(1-e)^2 = 1-e".into());
    let all = Permutation::all(n);
    let s_gens: Vec<TensorOp> = all
        .iter()
        .filter(|p| p.fixes_last())
        .map(|p| bank.generator(p)?.mul(&comp))
        .collect::<Result<_>>()?;
    for m in all.iter().filter(|p| !p.fixes_last()) {
        let g = bank.generator(m)?;
        report.residual(e.mul(&g)?.distance(&g), UNIT_TOLERANCE, || format!("e {m} = {m}"));
        report.residual(g.mul(&e)?.distance(&g), UNIT_TOLERANCE, || format!("{m} e = {m}"));
        for (k, s) in s_gens.iter().enumerate() {
            let zero = TensorOp::zero(n, d);
            report.residual(g.mul(s)?.distance(&zero), UNIT_TOLERANCE, || format!("{m} S[{k}] = 0"));
            report.residual(s.mul(&g)?.distance(&zero), UNIT_TOLERANCE, || format!("S[{k}] {m} = 0"));
        }
    }
    Ok(report)
}
