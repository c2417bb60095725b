use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::symgroup::Permutation;

use super::scalar::{Dimension, Scalar};

/// The algebra spanned by partially transposed permutation operators on `n`
/// tensor factors of dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    n: usize,
    d: Dimension,
}

impl AlgebraContext {
    pub fn new(n: usize, d: Dimension) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
        }
        if d == Dimension::Fixed(0) {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        Ok(AlgebraContext { n, d })
    }

    pub fn fixed(n: usize, d: u32) -> Result<Self> {
        Self::new(n, Dimension::Fixed(d))
    }

    pub fn symbolic(n: usize) -> Result<Self> {
        Self::new(n, Dimension::Symbolic)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> Dimension {
        self.d
    }
}

/// `V(σ)^t V(ρ)^t = d^k V(τ)^t`; returns `(k, τ)` with `k ∈ {0, 1}`.
pub fn mul_generators(sigma: &Permutation, rho: &Permutation) -> Result<(u32, Permutation)> {
    let n = sigma.degree();
    if rho.degree() != n {
        return Err(Error::DegreeMismatch(n, rho.degree()));
    }
    if sigma.fixes_last() || rho.fixes_last() {
        return Ok((0, sigma.compose(rho)?));
    }
    let (a, _) = sigma.classify();
    let (p, q) = rho.classify();
    let left = Permutation::transposition(n, sigma.apply(q), n);
    let right = Permutation::transposition(n, p, n);
    let tau = &(&(&left * sigma) * rho) * &right;
    Ok((u32::from(a == q), tau))
}

/// A formal combination `Σ c_σ V(σ)^t`.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<S: Scalar> {
    ctx: AlgebraContext,
    terms: BTreeMap<Permutation, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(ctx: AlgebraContext) -> Self {
        AlgebraElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `V(id)^t`.
    pub fn one(ctx: AlgebraContext) -> Self {
        Self::generator(ctx, Permutation::identity(ctx.n)).expect("identity has degree n")
    }

    pub fn generator(ctx: AlgebraContext, sigma: Permutation) -> Result<Self> {
        Self::from_terms(ctx, [(sigma, S::one())])
    }

    pub fn from_terms(
        ctx: AlgebraContext,
        terms: impl IntoIterator<Item = (Permutation, S)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for (p, c) in terms {
            if p.degree() != ctx.n {
                return Err(Error::DegreeMismatch(p.degree(), ctx.n));
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Permutation, c: &S) {
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn context(&self) -> AlgebraContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, S> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> S {
        self.terms.get(p).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&S::one().neg()))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.ctx);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), &v.mul(c));
        }
        out
    }

    /// Bilinear extension of [`mul_generators`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = S::dimension(self.ctx.d)?;
        let mut out = Self::zero(self.ctx);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let (k, r) = mul_generators(p, q)?;
                let mut c = a.mul(b);
                if k == 1 {
                    c = c.mul(&d);
                }
                out.add_term(r, &c);
            }
        }
        Ok(out)
    }

    /// `V(σ)^t ↦ V(σ^{-1})^t`; coefficients are real so they are kept.
    pub fn adjoint(&self) -> Self {
        AlgebraElement {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.inverse(), c.clone()))
                .collect(),
        }
    }

    /// Parses `c1*perm1 + c2*perm2`. A term is `[coef*]perm[^t]`, or
    /// `coefperm` when the coefficient is a bare monomial such as `d(23)^t`.
    /// Permutations use cycle notation, `1`/`id` for the identity, or
    /// bracketed one-line notation `[2,3,1]`.
    pub fn parse(s: &str, ctx: AlgebraContext) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for raw in split_terms(s) {
            let (neg, term) = match raw.strip_prefix('-') {
                Some(t) => (true, t.trim()),
                None => (false, raw),
            };
            let (coef, perm) = split_coefficient(term)?;
            let mut c = match coef {
                Some(c) => S::parse_coefficient(c)?,
                None => S::one(),
            };
            if neg {
                c = c.neg();
            }
            out.add_term(parse_generator(perm, ctx.n)?, &c);
        }
        Ok(out)
    }
}

impl AlgebraElement<f64> {
    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl AlgebraElement<super::Poly> {
    /// Substitutes a numeric `d`.
    pub fn evaluate(&self, d: u32) -> Result<AlgebraElement<f64>> {
        let ctx = AlgebraContext::fixed(self.ctx.n, d)?;
        AlgebraElement::from_terms(
            ctx,
            self.terms.iter().map(|(p, c)| (p.clone(), c.eval(f64::from(d)))),
        )
    }
}

fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            b'-' if depth == 0 && i > 0 && bytes[i - 1] == b' ' => {
                out.push(s[start..i].trim());
                start = i;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.into_iter().filter(|t| !t.is_empty()).collect()
}

fn split_coefficient(term: &str) -> Result<(Option<&str>, &str)> {
    if let Some(pos) = term.rfind('*') {
        return Ok((Some(term[..pos].trim()), term[pos + 1..].trim()));
    }
    match term.find(['(', '[']) {
        Some(0) | None => Ok((None, term)),
        Some(pos) => Ok((Some(&term[..pos]), &term[pos..])),
    }
}

fn parse_generator(s: &str, n: usize) -> Result<Permutation> {
    let s = s.trim();
    let s = s.strip_suffix("^t").unwrap_or(s);
    if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
        let p: Permutation = body.parse()?;
        if p.degree() != n {
            return Err(Error::DegreeMismatch(p.degree(), n));
        }
        return Ok(p);
    }
    Permutation::parse_cycles(s, n)
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    /// `c1*perm1 + c2*perm2` in cycle notation; a unit coefficient is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| match c.render_coefficient() {
                None => p.cycle_string(),
                Some(c) => format!("{c}*{}", p.cycle_string()),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[n={}, d={}]({self})", self.ctx.n, self.ctx.d)
    }
}
