//! Coefficient rings: fixed-d reals and integer polynomials in `d`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The local dimension `d`: a positive integer or an indeterminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dimension {
    Fixed(u32),
    Symbolic,
}

impl Dimension {
    pub fn fixed(self) -> Option<u32> {
        match self {
            Dimension::Fixed(d) => Some(d),
            Dimension::Symbolic => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Fixed(d) => write!(f, "{d}"),
            Dimension::Symbolic => f.write_str("d"),
        }
    }
}

/// Coefficient ring of [`AlgebraElement`](super::AlgebraElement).
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Treats values within the pruning threshold as zero.
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// The value of `d` in this ring.
    fn dimension(d: Dimension) -> Result<Self>;
    fn parse_coefficient(s: &str) -> Result<Self>;
    /// Text for a coefficient in front of a generator; `None` for the unit.
    fn render_coefficient(&self) -> Option<String>;
}

/// Coefficients with absolute value below this are dropped in fixed-d mode.
pub const PRUNE_THRESHOLD: f64 = 1e-12;

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_zero(&self) -> bool {
        self.abs() < PRUNE_THRESHOLD
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn dimension(d: Dimension) -> Result<Self> {
        d.fixed()
            .map(f64::from)
            .ok_or(Error::SymbolicUnsupported("real coefficients need a fixed d"))
    }
    fn parse_coefficient(s: &str) -> Result<Self> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
    }
    fn render_coefficient(&self) -> Option<String> {
        if (self - 1.0).abs() < PRUNE_THRESHOLD {
            None
        } else {
            Some(format!("{self}"))
        }
    }
}

/// An integer polynomial in `d`, coefficients stored lowest degree first with
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `d`.
    pub fn d() -> Self {
        Poly::new(vec![0, 1])
    }

    /// `c d^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, d: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * d + c as f64)
    }

    pub fn eval_int(&self, d: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * d + c)
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(1)
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(v)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).copied().unwrap_or(0) + other.coeffs.get(k).copied().unwrap_or(0)
                })
                .collect(),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
    fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
    fn dimension(d: Dimension) -> Result<Self> {
        Ok(match d {
            Dimension::Fixed(v) => Poly::constant(v as i64),
            Dimension::Symbolic => Poly::d(),
        })
    }
    fn parse_coefficient(s: &str) -> Result<Self> {
        s.parse()
    }
    fn render_coefficient(&self) -> Option<String> {
        if *self == Poly::one() {
            None
        } else if self.term_count() > 1 {
            Some(format!("({self})"))
        } else {
            Some(self.to_string())
        }
    }
}

impl fmt::Display for Poly {
    /// Descending powers, integer coefficients, no spaces: `d^2-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.unsigned_abs();
            match k {
                0 => out.push_str(&a.to_string()),
                _ => {
                    if a != 1 {
                        out.push_str(&a.to_string());
                    }
                    out.push('d');
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Accepts the printed form, e.g. `d^2-1`, `2d`, `-d+3`, `0`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("bad polynomial {s:?}"));
        let mut acc = Poly::zero();
        let mut start = 0;
        let mut terms = Vec::new();
        for (i, c) in t.char_indices() {
            if (c == '+' || c == '-') && i > 0 && !t[..i].ends_with('^') {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let (coef, power) = match body.find('d') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 {
                        1
                    } else {
                        body[..pos].trim_end_matches('*').parse::<i64>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<usize>()
                            .map_err(|_| bad())?
                    };
                    (c, k)
                }
            };
            acc = acc.add(&Poly::monomial(sign * coef, power));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn printing() {
        assert_eq!(Poly::new(vec![-1, 0, 1]).to_string(), "d^2-1");
        assert_eq!(Poly::d().to_string(), "d");
        assert_eq!(Poly::new(vec![3, -1]).to_string(), "-d+3");
        assert_eq!(Poly::new(vec![0, 2]).to_string(), "2d");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn parsing() {
        assert_eq!("d^2-1".parse::<Poly>().unwrap(), Poly::new(vec![-1, 0, 1]));
        assert_eq!("2d".parse::<Poly>().unwrap(), Poly::new(vec![0, 2]));
        assert_eq!("-d+3".parse::<Poly>().unwrap(), Poly::new(vec![3, -1]));
        assert!("x".parse::<Poly>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-5i64..=5, 0..5).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), d in 1i64..6) {
            prop_assert_eq!(a.add(&b).eval_int(d), a.eval_int(d) + b.eval_int(d));
            prop_assert_eq!(a.mul(&b).eval_int(d), a.eval_int(d) * b.eval_int(d));
        }

        #[test]
        fn display_round_trips(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a);
        }
    }
}
