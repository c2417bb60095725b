use nalgebra::DMatrix;

use crate::algebra::{AlgebraContext, UFamily};
use crate::error::{Error, Result};
use crate::induced::{q_matrix, xa_reduce, SpectralQ};
use crate::linalg::{factorial, max_abs, max_abs_diff};
use crate::report::CheckReport;
use crate::symgroup::{IrrepTable, Partition, Permutation};

use super::tensor::{perm_operator, GeneratorBank, TensorOp};

/// Tolerance of [`verify_matrix_operators`].
pub const MATRIX_OPERATOR_TOLERANCE: f64 = 1e-9;

/// Tolerance of [`verify_matrix_units`].
pub const MATRIX_UNIT_TOLERANCE: f64 = 1e-8;

/// Images of a representation of `S(m)`, one per element.
pub type GroupImages = [(Permutation, DMatrix<f64>)];

fn group_degree(images: &GroupImages) -> Result<usize> {
    let m = images
        .first()
        .map(|(p, _)| p.degree())
        .ok_or_else(|| Error::InvalidArgument("no group images".into()))?;
    if images.len() != factorial(m) || images.iter().any(|(p, _)| p.degree() != m) {
        return Err(Error::InvalidArgument(format!("images must cover all of S({m}) once")));
    }
    Ok(m)
}

/// `E^α_ij = (w^α/|G|) Σ_g φ^α_ji(g^{-1}) D(g)`, returned as `e[i][j]` with
/// 0-based indices.
pub fn matrix_operators_e(images: &GroupImages, alpha: &Partition) -> Result<Vec<Vec<DMatrix<f64>>>> {
    let m = group_degree(images)?;
    if alpha.weight() != m {
        return Err(Error::DegreeMismatch(alpha.weight(), m));
    }
    let table = IrrepTable::new(alpha);
    let w = table.dimension();
    let size = images[0].1.nrows();
    let scale = w as f64 / images.len() as f64;
    let inverse: Vec<DMatrix<f64>> = images.iter().map(|(g, _)| table.image(&g.inverse())).collect();
    Ok((0..w)
        .map(|i| {
            (0..w)
                .map(|j| {
                    let mut acc = DMatrix::zeros(size, size);
                    for ((_, dg), phi) in images.iter().zip(&inverse) {
                        let c = phi[(j, i)];
                        if c != 0.0 {
                            acc += dg * c;
                        }
                    }
                    acc * scale
                })
                .collect()
        })
        .collect())
}

/// `k_α = (1/|G|) Σ_g χ^α(g^{-1}) tr D(g)`, from the traces of the images.
pub fn multiplicity(images: &GroupImages, alpha: &Partition) -> Result<f64> {
    group_degree(images)?;
    let table = IrrepTable::new(alpha);
    let total: f64 = images.iter().map(|(g, dg)| table.character(&g.inverse()) * dg.trace()).sum();
    Ok(total / images.len() as f64)
}

/// Checks, for every `α ⊢ m`, that the matrix operators of `D` reconstruct
/// `D(g) = Σ φ_ij(g) E_ij`, are Hilbert-Schmidt orthogonal with norms `k_α`,
/// compose as matrix units and transform as `D(h) E_ij = Σ_k φ_ki(h) E_kj`.
pub fn verify_matrix_operators(images: &GroupImages, tol: f64) -> Result<CheckReport> {
    let m = group_degree(images)?;
    let size = images[0].1.nrows();
    let mut report = CheckReport::new("matrix-operators").param("m", m).param("size", size);
    let labels = Partition::all(m);
    let tables: Vec<IrrepTable> = labels.iter().map(IrrepTable::new).collect();
    let families: Vec<Vec<Vec<DMatrix<f64>>>> = labels
        .iter()
        .map(|a| matrix_operators_e(images, a))
        .collect::<Result<_>>()?;
    let zero = DMatrix::zeros(size, size);

    for (g, dg) in images {
        let mut sum = DMatrix::zeros(size, size);
        for (table, family) in tables.iter().zip(&families) {
            let phi = table.image(g);
            for (i, row) in family.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    sum += e * phi[(i, j)];
                }
            }
        }
        report.residual(max_abs_diff(&sum, dg), tol, || format!("I: expansion of D({g})"));
    }

    for (a, fa) in families.iter().enumerate() {
        let k = multiplicity(images, &labels[a])?;
        report.residual((k - k.round()).abs(), tol, || {
            format!("multiplicity of {} is not an integer: {k}", labels[a])
        });
        if k.round() == 0.0 {
            let largest = fa.iter().flatten().map(max_abs).fold(0.0, f64::max);
            report.residual(largest, tol, || format!("E({}) should vanish", labels[a]));
        }
        for (b, fb) in families.iter().enumerate() {
            let w_a = fa.len();
            let w_b = fb.len();
            for (i, j, k2, l) in quadruples(w_a, w_b) {
                let (x, y) = (&fa[i][j], &fb[k2][l]);
                let expected = if a == b && i == k2 && j == l { k } else { 0.0 };
                report.residual((x.dot(y) - expected).abs(), tol, || {
                    format!("II: (E{i}{j}({}), E{k2}{l}({}))", labels[a], labels[b])
                });
                let product = x * y;
                let expected = if a == b && j == k2 { &fa[i][l] } else { &zero };
                report.residual(max_abs_diff(&product, expected), tol, || {
                    format!("III: E{i}{j}({}) E{k2}{l}({})", labels[a], labels[b])
                });
            }
        }
        for (h, dh) in images {
            let phi = tables[a].image(h);
            for i in 0..fa.len() {
                for j in 0..fa.len() {
                    let lhs = dh * &fa[i][j];
                    let mut rhs = DMatrix::zeros(size, size);
                    for (k2, row) in fa.iter().enumerate() {
                        rhs += &row[j] * phi[(k2, i)];
                    }
                    report.residual(max_abs_diff(&lhs, &rhs), tol, || {
                        format!("IV: D({h}) E{i}{j}({})", labels[a])
                    });
                }
            }
        }
    }
    Ok(report)
}

fn quadruples(wa: usize, wb: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..wa).flat_map(move |i| {
        (0..wa).flat_map(move |j| (0..wb).flat_map(move |k| (0..wb).map(move |l| (i, j, k, l))))
    })
}

/// `V_d(σ)` on `(C^d)^{⊗n}` for every `σ ∈ S(n-2)`, embedded to fix `n-1, n`.
pub fn restricted_tensor_images(n: usize, d: u32, cap: usize) -> Result<Vec<(Permutation, DMatrix<f64>)>> {
    if n < 3 {
        return Err(Error::InvalidArgument("restriction to S(n-2) needs n >= 3".into()));
    }
    Permutation::all(n - 2)
        .into_iter()
        .map(|s| Ok((s.clone(), perm_operator(&s.extend(n), d, cap)?.into_matrix())))
        .collect()
}

/// [`verify_matrix_operators`] for `V_d` restricted to `S(n-2)`.
pub fn verify_restricted_operators(n: usize, d: u32, cap: usize) -> Result<CheckReport> {
    let images = restricted_tensor_images(n, d, cap)?;
    let mut report = verify_matrix_operators(&images, MATRIX_OPERATOR_TOLERANCE)?;
    report.check = "restricted-operators".into();
    Ok(report.param("n", n).param("d", d))
}

/// Reduces the u-family of `α` with [`xa_reduce`] on `Q(α)` and checks under
/// the oracle that the resulting `f_sr` are matrix units of size `rank Q(α)`,
/// and that every `y_sr` touching a null direction vanishes.
pub fn verify_matrix_units(alpha: &Partition, n: usize, d: u32, cap: usize) -> Result<CheckReport> {
    if alpha.height() > d as usize {
        return Err(Error::BlockAbsent(format!("h({alpha}) > d = {d}: the u-family of {alpha} vanishes")));
    }
    let ctx = AlgebraContext::fixed(n, d)?;
    let family = UFamily::new(alpha, ctx)?;
    let bank = GeneratorBank::new(n, d, cap)?;
    let reduced = xa_reduce(&q_matrix(alpha, f64::from(d))?)?;
    let mut report = CheckReport::new("matrix-units")
        .param("n", n)
        .param("d", d)
        .param("alpha", alpha);
    let expected_rank = SpectralQ::new(alpha, d)?.rank;
    report.require(reduced.rank == expected_rank, || {
        format!("reduced rank {} against rank Q = {expected_rank}", reduced.rank)
    });

    let rank = reduced.rank;
    let mut units: Vec<Vec<TensorOp>> = Vec::with_capacity(rank);
    for s in 0..rank {
        let row = (0..rank)
            .map(|r| bank.realize(&family.combine(&reduced.f_coefficients(s, r))?))
            .collect::<Result<Vec<_>>>()?;
        units.push(row);
    }
    let zero = TensorOp::zero(n, d);
    for s in 0..rank {
        for r in 0..rank {
            for t in 0..rank {
                for u in 0..rank {
                    let lhs = units[s][r].mul(&units[t][u])?;
                    let rhs = if r == t { &units[s][u] } else { &zero };
                    report.residual(lhs.distance(rhs), MATRIX_UNIT_TOLERANCE, || {
                        format!("f{s}{r} f{t}{u}")
                    });
                }
            }
        }
    }
    let size = family.size();
    for s in 0..size {
        for r in rank..size {
            for (x, y) in [(s, r), (r, s)] {
                let y_op = bank.realize(&family.combine(&reduced.y_coefficients(x, y))?)?;
                report.residual(max_abs(y_op.matrix()), MATRIX_UNIT_TOLERANCE, || {
                    format!("y{x}{y} on a null direction")
                });
            }
        }
    }
    Ok(report)
}
