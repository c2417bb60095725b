use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{mul_generators, AlgebraElement};
use crate::error::{Error, Result};
use crate::induced::{zero_condition, InducedRep, SpectralQ};
use crate::linalg::{direct_sum, max_abs_diff};
use crate::symgroup::{IrrepTable, Partition, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IrrepKind {
    /// Nonzero on the ideal `M`; labelled by `α ⊢ n-2`.
    M,
    /// Semi-trivial: zero on `M`; labelled by `ν ⊢ n-1`.
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "f")]
    F,
    #[serde(rename = "e")]
    E,
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" | "F" => Ok(Basis::F),
            "e" | "E" => Ok(Basis::E),
            _ => Err(Error::Parse(format!("basis must be f or e, got {s:?}"))),
        }
    }
}

/// An irreducible representation of the algebra, given by the image of every
/// generator `V(σ)^t`.
#[derive(Clone, Debug, PartialEq)]
pub struct IrrepOfAlgebra {
    pub kind: IrrepKind,
    pub label: Partition,
    pub n: usize,
    pub d: u32,
    pub dimension: usize,
    /// Set for kind `M`.
    pub basis: Option<Basis>,
    pub images: BTreeMap<Permutation, DMatrix<f64>>,
}

impl IrrepOfAlgebra {
    pub fn image(&self, sigma: &Permutation) -> Result<&DMatrix<f64>> {
        self.images
            .get(sigma)
            .ok_or(Error::DegreeMismatch(sigma.degree(), self.n))
    }

    /// Linear extension to an element.
    pub fn represent(&self, x: &AlgebraElement<f64>) -> Result<DMatrix<f64>> {
        let mut acc = DMatrix::zeros(self.dimension, self.dimension);
        for (p, c) in x.terms() {
            acc += self.image(p)? * *c;
        }
        Ok(acc)
    }

    /// Largest residual of `ρ(σ)ρ(τ) = d^k ρ(υ)` over all generator pairs.
    pub fn homomorphism_residual(&self) -> Result<(f64, Option<(Permutation, Permutation)>)> {
        let mut worst = (0.0, None);
        let d = f64::from(self.d);
        for (s, ms) in &self.images {
            for (r, mr) in &self.images {
                let (k, t) = mul_generators(s, r)?;
                let lhs = ms * mr;
                let rhs = self.image(&t)? * d.powi(k as i32);
                let res = max_abs_diff(&lhs, &rhs);
                if res > worst.0 {
                    worst = (res, Some((s.clone(), r.clone())));
                }
            }
        }
        Ok(worst)
    }

    pub fn record(&self) -> IrrepRecord {
        IrrepRecord {
            kind: self.kind,
            label: self.label.clone(),
            n: self.n,
            d: self.d,
            dimension: self.dimension,
            basis_tag: self.basis,
            images: self
                .images
                .iter()
                .map(|(p, m)| (p.cycle_string(), m.transpose().iter().copied().collect()))
                .collect(),
        }
    }

    pub fn from_record(r: &IrrepRecord) -> Result<Self> {
        let images = r
            .images
            .iter()
            .map(|(k, v)| {
                if v.len() != r.dimension * r.dimension {
                    return Err(Error::Parse(format!("image of {k} has {} entries", v.len())));
                }
                let p = if k == "id" {
                    Permutation::identity(r.n)
                } else {
                    Permutation::parse_cycles(k, r.n)?
                };
                Ok((p, DMatrix::from_row_slice(r.dimension, r.dimension, v)))
            })
            .collect::<Result<_>>()?;
        Ok(IrrepOfAlgebra {
            kind: r.kind,
            label: r.label.clone(),
            n: r.n,
            d: r.d,
            dimension: r.dimension,
            basis: r.basis_tag,
            images,
        })
    }
}

/// Serialized form: images keyed by cycle notation, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrepRecord {
    pub kind: IrrepKind,
    pub label: Partition,
    pub n: usize,
    pub d: u32,
    pub dimension: usize,
    pub basis_tag: Option<Basis>,
    pub images: BTreeMap<String, Vec<f64>>,
}

fn check_alpha(alpha: &Partition, d: u32, n: usize) -> Result<()> {
    if alpha.weight() + 2 != n {
        return Err(Error::InvalidArgument(format!("{alpha} is not a partition of n-2 = {}", n as i64 - 2)));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    if alpha.height() > d as usize {
        return Err(Error::BlockAbsent(format!(
            "kind M block {alpha} needs d >= {}, got d = {d}",
            alpha.height()
        )));
    }
    Ok(())
}

/// `σ̂ = σ (a n) ∈ S(n-1)` for `σ` with `σ(a) = n`, `a ≠ n`.
fn hat(sigma: &Permutation) -> Permutation {
    let n = sigma.degree();
    let (a, _) = sigma.classify();
    sigma * &Permutation::transposition(n, a, n)
}

/// Kind `M` in the reduced matrix basis: `S(n-1)` acts as `⊕_{ν≠θ} ψ^ν` and
/// `V(an)^t` as `√λ_ρ Σ_k Z_{(a,k)ρ} Z_{(a,k)ν} √λ_ν`.
pub fn irrep_m_f(alpha: &Partition, d: u32, n: usize) -> Result<IrrepOfAlgebra> {
    if n == 2 {
        return super::n2::irrep_m(alpha, d);
    }
    check_alpha(alpha, d, n)?;
    let spec = SpectralQ::new(alpha, d)?;
    let keep = spec.surviving_columns();
    let lambdas = spec.column_eigenvalues();
    let dim = keep.len();
    let w = alpha.dimension();
    let z = &spec.z.matrix;
    let survivors: Vec<&IrrepTable> = spec
        .z
        .blocks
        .iter()
        .filter(|t| Some(t.label()) != spec.theta.as_ref())
        .collect();

    let transposed: Vec<DMatrix<f64>> = (1..n)
        .map(|a| {
            DMatrix::from_fn(dim, dim, |r, c| {
                let (kr, kc) = (keep[r], keep[c]);
                let s: f64 = (0..w)
                    .map(|k| z[((a - 1) * w + k, kr)] * z[((a - 1) * w + k, kc)])
                    .sum();
                (lambdas[kr] * lambdas[kc]).sqrt() * s
            })
        })
        .collect();
    let restricted = |p: &Permutation| -> DMatrix<f64> {
        let q = p.restrict().expect("fixes n");
        direct_sum(&survivors.iter().map(|t| t.image(&q)).collect::<Vec<_>>())
    };
    let images = Permutation::all(n)
        .into_iter()
        .map(|s| {
            let img = if s.fixes_last() {
                restricted(&s)
            } else {
                let (a, _) = s.classify();
                restricted(&hat(&s)) * &transposed[a - 1]
            };
            (s, img)
        })
        .collect();
    Ok(IrrepOfAlgebra {
        kind: IrrepKind::M,
        label: alpha.clone(),
        n,
        d,
        dimension: dim,
        basis: Some(Basis::F),
        images,
    })
}

/// Kind `M` in the basis dual to the u-elements; needs `det Q(α) ≠ 0`.
pub fn irrep_m_e(alpha: &Partition, d: u32, n: usize) -> Result<IrrepOfAlgebra> {
    if n == 2 {
        let mut irrep = super::n2::irrep_m(alpha, d)?;
        irrep.basis = Some(Basis::E);
        return Ok(irrep);
    }
    check_alpha(alpha, d, n)?;
    if zero_condition(alpha, d).is_some() {
        return Err(Error::SingularQ(alpha.to_string(), d));
    }
    let rep = InducedRep::new(alpha)?;
    let w = rep.irrep_dimension();
    let m = n - 1;
    let size = rep.block_dimension();
    let df = f64::from(d);
    let images = Permutation::all(n)
        .into_iter()
        .map(|s| {
            if s.fixes_last() {
                let img = rep.matrix(&s.restrict().expect("fixes n"))?;
                return Ok((s, img));
            }
            let (a, b) = s.classify();
            let sh = hat(&s).restrict().expect("fixes n");
            let mut img = DMatrix::zeros(size, size);
            for q in 1..=m {
                let p = &(&(&Permutation::transposition(m, b, m) * &sh) * &Permutation::transposition(m, a, q))
                    * &Permutation::transposition(m, q, m);
                let block = rep.phi_restricted(&p) * if a == q { df } else { 1.0 };
                img.view_mut(((b - 1) * w, (q - 1) * w), (w, w)).copy_from(&block);
            }
            Ok((s, img))
        })
        .collect::<Result<_>>()?;
    Ok(IrrepOfAlgebra {
        kind: IrrepKind::M,
        label: alpha.clone(),
        n,
        d,
        dimension: size,
        basis: Some(Basis::E),
        images,
    })
}

/// Kind `M` in the requested basis.
pub fn irrep_m(alpha: &Partition, d: u32, n: usize, basis: Basis) -> Result<IrrepOfAlgebra> {
    match basis {
        Basis::F => irrep_m_f(alpha, d, n),
        Basis::E => irrep_m_e(alpha, d, n),
    }
}

/// Semi-trivial irrep: `ψ^ν` on `S(n-1)`, zero on `M`; needs `h(ν) < d`.
pub fn irrep_s(nu: &Partition, d: u32, n: usize) -> Result<IrrepOfAlgebra> {
    if nu.weight() + 1 != n || n < 2 {
        return Err(Error::InvalidArgument(format!("{nu} is not a partition of n-1 = {}", n as i64 - 1)));
    }
    if nu.height() >= d as usize {
        return Err(Error::BlockAbsent(format!(
            "kind S block {nu} needs d > {}, got d = {d}",
            nu.height()
        )));
    }
    let table = IrrepTable::new(nu);
    let w = table.dimension();
    let images = Permutation::all(n)
        .into_iter()
        .map(|s| {
            let img = match s.restrict() {
                Some(q) => table.image(&q),
                None => DMatrix::zeros(w, w),
            };
            (s, img)
        })
        .collect();
    Ok(IrrepOfAlgebra {
        kind: IrrepKind::S,
        label: nu.clone(),
        n,
        d,
        dimension: w,
        basis: None,
        images,
    })
}
