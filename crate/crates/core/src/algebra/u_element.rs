use crate::error::{Error, Result};
use crate::induced::q_matrix;
use crate::oracle::{GeneratorBank, TensorOp};
use crate::report::CheckReport;
use crate::symgroup::{IrrepTable, Partition, Permutation};

use super::element::{AlgebraContext, AlgebraElement};

/// Tolerance used by [`verify_u_structure`].
pub const U_TOLERANCE: f64 = 1e-8;

/// Restricts a permutation of degree `n` fixing `n-1` and `n` to `S(n-2)`.
pub(crate) fn restrict_twice(p: &Permutation) -> Permutation {
    p.restrict()
        .and_then(|q| q.restrict())
        .expect("permutation fixes the last two points")
}

fn check_indices(ctx: &AlgebraContext, alpha: &Partition) -> Result<()> {
    let n = ctx.n();
    if n < 3 {
        return Err(Error::InvalidArgument("u-elements need n >= 3".into()));
    }
    if alpha.weight() != n - 2 {
        return Err(Error::InvalidArgument(format!("{alpha} is not a partition of n-2 = {}", n - 2)));
    }
    if ctx.d().fixed().is_none() {
        return Err(Error::SymbolicUnsupported("u-elements use a fixed d"));
    }
    Ok(())
}

fn u_with_table(
    table: &IrrepTable,
    ctx: AlgebraContext,
    a: usize,
    b: usize,
    i: usize,
    j: usize,
) -> Result<AlgebraElement<f64>> {
    let n = ctx.n();
    let w = table.dimension();
    if !(1..n).contains(&a) || !(1..n).contains(&b) || !(1..=w).contains(&i) || !(1..=w).contains(&j) {
        return Err(Error::InvalidArgument(format!(
            "index out of range: a={a}, b={b}, i={i}, j={j} with n={n}, w={w}"
        )));
    }
    let left = Permutation::transposition(n, a, n - 1);
    let right = Permutation::transposition(n, b, n - 1);
    let scale = w as f64 / Permutation::all(n - 2).len() as f64;
    let mut terms = Vec::new();
    for s in Permutation::all(n - 2) {
        let c = table.entry(&s.inverse(), j, i);
        if c != 0.0 {
            terms.push((&(&left * &s.extend(n)) * &right, c * scale));
        }
    }
    let sum = AlgebraElement::from_terms(ctx, terms)?;
    AlgebraElement::generator(ctx, Permutation::transposition(n, a, n))?.mul(&sum)
}

/// `u^{ab}_{ij}(α) = (w^α/(n-2)!) V(an)^t Σ_σ φ^α_{ji}(σ^{-1}) V[(a n-1) σ (b n-1)]`.
pub fn u_element(
    alpha: &Partition,
    a: usize,
    b: usize,
    i: usize,
    j: usize,
    ctx: AlgebraContext,
) -> Result<AlgebraElement<f64>> {
    check_indices(&ctx, alpha)?;
    u_with_table(&IrrepTable::new(alpha), ctx, a, b, i, j)
}

/// All `u^{ab}_{ij}(α)`, addressed by composite indices `X = (a, i)`,
/// `Y = (b, j)` with `X = (a-1) w + (i-1)`.
#[derive(Clone, Debug)]
pub struct UFamily {
    alpha: Partition,
    ctx: AlgebraContext,
    w: usize,
    elements: Vec<AlgebraElement<f64>>,
}

impl UFamily {
    pub fn new(alpha: &Partition, ctx: AlgebraContext) -> Result<Self> {
        check_indices(&ctx, alpha)?;
        let table = IrrepTable::new(alpha);
        let w = table.dimension();
        let size = (ctx.n() - 1) * w;
        let mut elements = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                elements.push(u_with_table(&table, ctx, x / w + 1, y / w + 1, x % w + 1, y % w + 1)?);
            }
        }
        Ok(UFamily {
            alpha: alpha.clone(),
            ctx,
            w,
            elements,
        })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    /// `(n-1) w^α`.
    pub fn size(&self) -> usize {
        (self.ctx.n() - 1) * self.w
    }

    /// `u^{ab}_{ij}` for composite indices `x = (a, i)`, `y = (b, j)`.
    pub fn get(&self, x: usize, y: usize) -> &AlgebraElement<f64> {
        &self.elements[x * self.size() + y]
    }

    /// `Σ_{xy} c_xy u_xy`.
    pub fn combine(&self, c: &nalgebra::DMatrix<f64>) -> Result<AlgebraElement<f64>> {
        let mut acc = AlgebraElement::zero(self.ctx);
        for x in 0..self.size() {
            for y in 0..self.size() {
                let v = c[(x, y)];
                if v.abs() > 1e-14 {
                    acc = acc.add(&self.get(x, y).scale(&v))?;
                }
            }
        }
        Ok(acc)
    }
}

/// Checks the product rule `u^{ab}_{ij}(α) u^{pq}_{kl}(β) = δ_{αβ} Q(α)_{(b,j),(p,k)} u^{aq}_{il}(α)`
/// and the left actions of all generators on `u(α)`, by mapping abstract
/// products through the tensor oracle.
pub fn verify_u_structure(
    alpha: &Partition,
    beta: &Partition,
    ctx: AlgebraContext,
    cap: usize,
) -> Result<CheckReport> {
    let n = ctx.n();
    let d = ctx
        .d()
        .fixed()
        .ok_or(Error::SymbolicUnsupported("u-structure check uses a fixed d"))?;
    let mut report = CheckReport::new("u-structure")
        .param("n", n)
        .param("d", d)
        .param("alpha", alpha)
        .param("beta", beta);
    let bank = GeneratorBank::new(n, d, cap)?;
    let ua = UFamily::new(alpha, ctx)?;
    let ub = if alpha == beta { ua.clone() } else { UFamily::new(beta, ctx)? };
    let realize = |f: &UFamily| -> Result<Vec<TensorOp>> {
        f.elements.iter().map(|e| bank.realize(e)).collect()
    };
    let opa = realize(&ua)?;
    let opb = if alpha == beta { opa.clone() } else { realize(&ub)? };
    let size_a = ua.size();
    let size_b = ub.size();
    let q = q_matrix(alpha, f64::from(d))?;

    for x in 0..size_a {
        for y in 0..size_a {
            for xp in 0..size_b {
                for yp in 0..size_b {
                    let prod = ua.get(x, y).mul(ub.get(xp, yp))?;
                    let lhs = bank.realize(&prod)?;
                    let direct = opa[x * size_a + y].mul(&opb[xp * size_b + yp])?;
                    let rhs = if alpha == beta {
                        opa[x * size_a + yp].scale(q[(y, xp)])
                    } else {
                        TensorOp::zero(n, d)
                    };
                    let r = lhs.distance(&rhs).max(lhs.distance(&direct));
                    report.residual(r, U_TOLERANCE, || {
                        format!("product u[{x},{y}]({alpha}) u[{xp},{yp}]({beta})")
                    });
                }
            }
        }
    }

    let w = ua.w;
    let table = IrrepTable::new(alpha);
    let phi = |p: &Permutation, k: usize, i: usize| table.entry(&restrict_twice(p), k + 1, i + 1);
    let cyc = |a: usize| Permutation::transposition(n, a, n - 1);
    for sigma in Permutation::all(n) {
        let (a, b) = sigma.classify();
        let g = AlgebraElement::generator(ctx, sigma.clone())?;
        for x in 0..size_a {
            let (p, i) = (x / w + 1, x % w);
            for y in 0..size_a {
                let lhs = bank.realize(&g.mul(ua.get(x, y))?)?;
                let mut rhs = TensorOp::zero(n, d);
                if a == n && b == n {
                    let sp = sigma.apply(p);
                    let inner = &(&cyc(sp) * &sigma) * &cyc(p);
                    for k in 0..w {
                        let c = phi(&inner, k, i);
                        rhs = rhs.add(&opa[((sp - 1) * w + k) * size_a + y].scale(c))?;
                    }
                } else if a != n && b != n {
                    let hat = &sigma * &Permutation::transposition(n, a, n);
                    let inner = &(&(&cyc(b) * &hat) * &Permutation::transposition(n, a, p)) * &cyc(p);
                    let power = if a == p { f64::from(d) } else { 1.0 };
                    for k in 0..w {
                        let c = power * phi(&inner, k, i);
                        rhs = rhs.add(&opa[((b - 1) * w + k) * size_a + y].scale(c))?;
                    }
                } else {
                    continue;
                }
                report.residual(lhs.distance(&rhs), U_TOLERANCE, || {
                    format!("left action of {sigma} on u[{x},{y}]({alpha})")
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DEFAULT_CAP;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn smallest_u_element_is_one_generator() {
        let ctx = AlgebraContext::fixed(3, 2).unwrap();
        let u = u_element(&part("1"), 1, 1, 1, 1, ctx).unwrap();
        // V(13)^t V[(12)(12)] = V(13)^t
        assert_eq!(u.terms().len(), 1);
        assert_eq!(u.coefficient(&Permutation::transposition(3, 1, 3)), 1.0);
        let u12 = u_element(&part("1"), 1, 2, 1, 1, ctx).unwrap();
        assert_eq!(
            u12.coefficient(&(&Permutation::transposition(3, 1, 3) * &Permutation::transposition(3, 1, 2))),
            1.0
        );
    }

    #[test]
    fn diagonal_u_elements_are_essential_projectors() {
        for (n, d) in [(3, 2), (4, 2), (4, 3)] {
            let ctx = AlgebraContext::fixed(n, d).unwrap();
            for alpha in Partition::all(n - 2) {
                let u = u_element(&alpha, 1, 1, 1, 1, ctx).unwrap();
                let sq = u.mul(&u).unwrap();
                assert!(sq.sub(&u.scale(&f64::from(d))).unwrap().max_abs() < 1e-12);
            }
        }
    }

    #[test]
    fn u_vanishes_when_height_exceeds_d() {
        let ctx = AlgebraContext::fixed(5, 2).unwrap();
        let bank = GeneratorBank::new(5, 2, DEFAULT_CAP).unwrap();
        let u = u_element(&part("1,1,1"), 1, 2, 1, 1, ctx).unwrap();
        assert!(!u.is_zero());
        assert!(crate::linalg::max_abs(bank.realize(&u).unwrap().matrix()) < 1e-12);
        let v = u_element(&part("2,1"), 1, 2, 1, 1, ctx).unwrap();
        assert!(crate::linalg::max_abs(bank.realize(&v).unwrap().matrix()) > 0.1);
    }

    #[test]
    fn structure_constants_small_cases() {
        let ctx = AlgebraContext::fixed(3, 2).unwrap();
        let r = verify_u_structure(&part("1"), &part("1"), ctx, DEFAULT_CAP).unwrap();
        assert!(r.pass, "{r:?}");
        let ctx = AlgebraContext::fixed(4, 3).unwrap();
        for a in Partition::all(2) {
            for b in Partition::all(2) {
                let r = verify_u_structure(&a, &b, ctx, DEFAULT_CAP).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn bad_indices_are_rejected() {
        let ctx = AlgebraContext::fixed(3, 2).unwrap();
        assert!(u_element(&part("1"), 3, 1, 1, 1, ctx).is_err());
        assert!(u_element(&part("2"), 1, 1, 1, 1, ctx).is_err());
        assert!(u_element(&part("1"), 1, 1, 1, 1, AlgebraContext::symbolic(3).unwrap()).is_err());
        assert!(u_element(&Partition::empty(), 1, 1, 1, 1, AlgebraContext::fixed(2, 2).unwrap()).is_err());
    }
}
