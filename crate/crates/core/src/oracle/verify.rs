use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{mul_generators, verify_u_structure, AlgebraContext, AlgebraElement};
use crate::error::{Error, Result};
use crate::induced::{
    eigenvalues_closed_form, q_matrix, q_via_induced, verify_reduction, SpectralQ, SPECTRUM_TOLERANCE,
};
use crate::irreps::{all_irreps, partition_sum, structure_report, verify_unit, Basis, IrrepKind, IrrepOfAlgebra};
use crate::linalg::{max_abs, max_abs_diff, symmetric_eigen};
use crate::report::CheckReport;
use crate::symgroup::{multiplicity_in_tensor_space, Partition, Permutation};

use super::operators::{matrix_operators_e, verify_restricted_operators, verify_matrix_units};
use super::tensor::{checked_size, span_dimension, GeneratorBank, TensorOp, RANK_TOLERANCE};

/// Default tolerance of the oracle comparisons.
pub const ORACLE_TOLERANCE: f64 = 1e-8;

/// Largest `d^n` at which the matrix-operator independence check builds
/// dense operators.
pub const DENSE_LIMIT: usize = 256;

/// Checks every product of two generators against the oracle, and that the
/// oracle image of an adjoint is the transpose.
pub fn verify_generator_law(n: usize, d: u32, cap: usize) -> Result<CheckReport> {
    let bank = GeneratorBank::new(n, d, cap)?;
    let ctx = AlgebraContext::fixed(n, d)?;
    let mut report = CheckReport::new("generator-law").param("n", n).param("d", d);
    for s in bank.permutations() {
        for r in bank.permutations() {
            let (k, t) = mul_generators(s, r)?;
            let res = bank.product_residual(s, r, f64::from(d).powi(k as i32), &t)?;
            report.residual(res, 1e-10, || format!("{s} * {r}"));
        }
        let g = AlgebraElement::generator(ctx, s.clone())?;
        let adj = bank.realize(&g.adjoint())?;
        report.residual(adj.distance(&bank.generator(s)?.transpose()), 1e-10, || {
            format!("adjoint of {s}")
        });
    }
    Ok(report)
}

/// Checks an irrep against the algebra it claims to represent: the generator
/// law holds on its images, every linear relation among the oracle
/// operators is respected, kind `M` has dimension `rank Q(α)` and kind `S`
/// sends every generator moving `n` to zero.
pub fn verify_irrep_against_oracle(irrep: &IrrepOfAlgebra, cap: usize, tol: f64) -> Result<CheckReport> {
    let (n, d) = (irrep.n, irrep.d);
    let mut report = CheckReport::new("irrep")
        .param("n", n)
        .param("d", d)
        .param("kind", format!("{:?}", irrep.kind))
        .param("label", &irrep.label);
    if let Some(b) = irrep.basis {
        report = report.param("basis", format!("{b:?}").to_lowercase());
    }
    let bank = GeneratorBank::new(n, d, cap)?;
    for p in bank.permutations() {
        let shape = irrep.image(p)?.shape();
        report.require(shape == (irrep.dimension, irrep.dimension), || {
            format!("image of {p} has shape {shape:?}")
        });
    }
    let (res, pair) = irrep.homomorphism_residual()?;
    report.residual(res, tol, || match pair {
        Some((s, r)) => format!("homomorphism fails on {s} * {r}"),
        None => "homomorphism".into(),
    });

    let gram = bank.gram();
    let (values, vectors) = symmetric_eigen(&gram);
    let top = values.last().copied().unwrap_or(0.0);
    for (k, v) in values.iter().enumerate() {
        if *v > RANK_TOLERANCE * top {
            continue;
        }
        let mut acc = DMatrix::zeros(irrep.dimension, irrep.dimension);
        for (i, p) in bank.permutations().iter().enumerate() {
            acc += irrep.image(p)? * vectors[(i, k)];
        }
        report.residual(max_abs(&acc), tol, || {
            format!("a linear relation of the oracle operators is not respected (null vector {k})")
        });
    }

    match irrep.kind {
        IrrepKind::M => {
            let expected = if n == 2 { 1 } else { SpectralQ::new(&irrep.label, d)?.rank };
            report.require(irrep.dimension == expected, || {
                format!("dimension {} against rank Q = {expected}", irrep.dimension)
            });
        }
        IrrepKind::S => {
            for p in bank.permutations().iter().filter(|p| !p.fixes_last()) {
                let largest = max_abs(irrep.image(p)?);
                report.require(largest == 0.0, || format!("image of {p} is not zero"));
            }
        }
    }
    Ok(report)
}

/// Compares the span dimensions of `{V(σ)}` and `{V(σ)^t}` with the
/// partition sum, the structure report and the irreps present in `V`. At
/// `d^n ≤` [`DENSE_LIMIT`] the matrix operators of `V` are also built and
/// their span and independence compared with those of `{V(σ)}`.
pub fn verify_dimension_identities(n: usize, d: u32, cap: usize) -> Result<CheckReport> {
    let plain = GeneratorBank::untransposed(n, d, cap)?;
    let transposed = GeneratorBank::new(n, d, cap)?;
    let dim_v = plain.span_dimension();
    let dim_vt = transposed.span_dimension();
    let sum = partition_sum(n, d);
    let structure = structure_report(n, d, None)?.dim_total;
    let present: usize = Partition::all(n)
        .iter()
        .filter(|mu| multiplicity_in_tensor_space(mu, d) > 0)
        .map(|mu| mu.dimension().pow(2))
        .sum();
    let mut report = CheckReport::new("dimension").param("n", n).param("d", d);
    report.note(format!(
        "span V = {dim_v}, span V^t = {dim_vt}, partition sum = {sum}, structure = {structure}, irreps of V = {present}"
    ));
    for (what, value) in [("span V^t", dim_vt), ("partition sum", sum), ("structure", structure), ("irreps of V", present)] {
        report.require(value == dim_v, || format!("{what} = {value} against span V = {dim_v}"));
    }

    if checked_size(n, d, DENSE_LIMIT).is_ok() {
        let images: Vec<(Permutation, DMatrix<f64>)> = plain
            .permutations()
            .iter()
            .map(|p| Ok((p.clone(), plain.generator(p)?.into_matrix())))
            .collect::<Result<_>>()?;
        let mut family = Vec::new();
        for alpha in Partition::all(n) {
            for row in matrix_operators_e(&images, &alpha)? {
                for e in row {
                    family.push(TensorOp::new(n, d, e)?);
                }
            }
        }
        let dim_e = span_dimension(&family);
        let order = images.len();
        report.require(dim_e == dim_v, || format!("span of matrix operators {dim_e} against {dim_v}"));
        report.require((dim_e == family.len()) == (dim_v == order), || {
            "matrix operators and group operators disagree on independence".into()
        });
    }
    Ok(report)
}

/// Closed-form eigenvalues against the numerical spectrum, and `Q(α)`
/// against its class-sum construction.
pub fn verify_spectrum(alpha: &Partition, d: u32) -> Result<CheckReport> {
    let df = f64::from(d);
    let q = q_matrix(alpha, df)?;
    let mut report = CheckReport::new("spectrum").param("alpha", alpha).param("d", d);
    report.residual(max_abs_diff(&q, &q_via_induced(alpha, df)?), SPECTRUM_TOLERANCE, || {
        "Q against the induced class sum".into()
    });
    let (numerical, _) = symmetric_eigen(&q);
    let mut closed: Vec<f64> = eigenvalues_closed_form(alpha, df)
        .iter()
        .flat_map(|e| std::iter::repeat_n(e.lambda, e.multiplicity))
        .collect();
    closed.sort_by(f64::total_cmp);
    report.require(closed.len() == numerical.len(), || "eigenvalue count".into());
    for (x, y) in numerical.iter().zip(&closed) {
        report.residual((x - y).abs() / (1.0 + y.abs()), SPECTRUM_TOLERANCE, || {
            format!("numerical {x} against closed form {y}")
        });
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Mul,
    Spectra,
    Irreps,
    Dims,
    Appc,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::All, Suite::Mul, Suite::Spectra, Suite::Irreps, Suite::Dims, Suite::Appc];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Mul => "mul",
            Suite::Spectra => "spectra",
            Suite::Irreps => "irreps",
            Suite::Dims => "dims",
            Suite::Appc => "appc",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs a check, turning a size-cap refusal into a skipped report and any
/// other error into a failed one.
fn guarded(check: &str, n: usize, d: u32, run: impl FnOnce() -> Result<CheckReport>) -> CheckReport {
    match run() {
        Ok(r) => r,
        Err(Error::SizeCap { size, cap }) => {
            CheckReport::skip(check, format!("d^n = {size} exceeds the cap {cap}")).param("n", n).param("d", d)
        }
        Err(e) => {
            let mut r = CheckReport::new(check).param("n", n).param("d", d);
            r.require(false, || e.to_string());
            r
        }
    }
}

/// Runs a verification suite at `(n, d)`.
pub fn run_suite(suite: Suite, n: usize, d: u32, cap: usize, tol: f64) -> Result<Vec<CheckReport>> {
    if n < 2 || d == 0 {
        return Err(Error::InvalidArgument(format!("need n >= 2 and d >= 1, got n = {n}, d = {d}")));
    }
    let mut out = Vec::new();
    let run = |s: Suite| suite == Suite::All || suite == s;
    if run(Suite::Mul) {
        out.push(guarded("generator-law", n, d, || verify_generator_law(n, d, cap)));
    }
    if run(Suite::Spectra) && n >= 3 {
        for alpha in Partition::all(n - 2) {
            out.push(guarded("spectrum", n, d, || verify_spectrum(&alpha, d)));
            out.push(guarded("reduction", n, d, || verify_reduction(&alpha, d)));
        }
    }
    if run(Suite::Irreps) {
        let bases: &[Basis] = if n == 2 { &[Basis::F] } else { &[Basis::F, Basis::E] };
        for &basis in bases {
            match all_irreps(n, d, basis) {
                Ok(irreps) => {
                    for irrep in irreps {
                        if basis == Basis::E && irrep.kind == IrrepKind::S {
                            continue;
                        }
                        out.push(guarded("irrep", n, d, || verify_irrep_against_oracle(&irrep, cap, tol)));
                    }
                }
                Err(e) => out.push(guarded("irrep", n, d, || Err(e))),
            }
        }
    }
    if run(Suite::Dims) {
        out.push(guarded("structure", n, d, || {
            let s = structure_report(n, d, Some(cap))?;
            let mut r = CheckReport::new("structure").param("n", n).param("d", d);
            let oracle = s.oracle_dim.map_or_else(|| "skipped".to_string(), |o| o.to_string());
            r.note(format!(
                "M = {}, S = {}, total = {}, expected = {}, oracle = {oracle}",
                s.dim_m, s.dim_s, s.dim_total, s.expected_total
            ));
            r.require(s.consistent(), || "dimension identities fail".into());
            Ok(r)
        }));
        out.push(guarded("dimension", n, d, || verify_dimension_identities(n, d, cap)));
    }
    if run(Suite::Appc) && n >= 3 {
        out.push(guarded("restricted-operators", n, d, || verify_restricted_operators(n, d, cap)));
        let ctx = AlgebraContext::fixed(n, d)?;
        let labels = Partition::all(n - 2);
        for alpha in &labels {
            if alpha.height() <= d as usize {
                out.push(guarded("matrix-units", n, d, || verify_matrix_units(alpha, n, d, cap)));
            }
            for beta in &labels {
                out.push(guarded("u-structure", n, d, || {
                    checked_size(n, d, cap)?;
                    verify_u_structure(alpha, beta, ctx, cap)
                }));
            }
        }
        out.push(guarded("unit-of-M", n, d, || verify_unit(n, d, cap)));
    }
    Ok(out)
}
