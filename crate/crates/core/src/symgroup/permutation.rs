//! Permutations of `{1..m}` in one-line notation.
//!
//! Composition is function composition: `p.compose(&q)` maps `x` to
//! `p(q(x))`, so the right factor acts first. Cycle strings such as `(132)`
//! mean `1 -> 3 -> 2 -> 1`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1..m}`. Stored 0-based; every public accessor is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation (1-based images).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        if m > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {m} too large")));
        }
        let mut seen = vec![false; m];
        for &v in &images {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..{m}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| (v - 1) as u8).collect(),
        })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m as u8).collect(),
        }
    }

    /// The transposition `(a b)` in `S(m)`; `a == b` gives the identity.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        assert!(
            (1..=m).contains(&a) && (1..=m).contains(&b),
            "transposition ({a} {b}) outside 1..{m}"
        );
        let mut p = Self::identity(m);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// A single cycle `(c_1 c_2 ... c_k)` in `S(m)`.
    pub fn cycle(m: usize, cycle: &[usize]) -> Result<Self> {
        Self::from_cycles(m, &[cycle.to_vec()])
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Self::identity(m);
        for c in cycles.iter().rev() {
            let mut step: Vec<usize> = (1..=m).collect();
            let mut seen = vec![false; m];
            for (k, &x) in c.iter().enumerate() {
                if x == 0 || x > m {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle entry {x} outside 1..{m}"
                    )));
                }
                if seen[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "repeated entry {x} in cycle {c:?}"
                    )));
                }
                seen[x - 1] = true;
                step[x - 1] = c[(k + 1) % c.len()];
            }
            p = &Permutation::new(step)? * &p;
        }
        Ok(p)
    }

    /// Parses cycle notation such as `(132)`, `(1 3 2)(4 5)`, `(1,3)` or `id`.
    /// Without separators every digit is its own entry, which covers `m <= 9`.
    pub fn parse_cycles(s: &str, m: usize) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "id" || t == "1" || t == "e" || t == "()" {
            return Ok(Self::identity(m));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("unexpected text in {s:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &rest[open + 1..close];
            let entries: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        x.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad cycle entry {x:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|v| v as usize)
                            .ok_or_else(|| Error::Parse(format!("bad cycle entry {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            if !entries.is_empty() {
                cycles.push(entries);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(m, &cycles)
    }

    /// Parses either one-line notation (`2,3,1`) or cycle notation with an
    /// explicit degree.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let t = s.trim();
        if t.contains('(') || t == "id" || t == "e" {
            return Self::parse_cycles(t, m);
        }
        let p: Permutation = t.parse()?;
        if p.degree() != m {
            return Err(Error::DegreeMismatch(p.degree(), m));
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` for 1-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `p ∘ q`: apply `q` first, then `p`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&x| self.images[x as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// The pair `(a, b)` with `p(a) = m` and `b = p(m)`.
    pub fn classify(&self) -> (usize, usize) {
        let m = self.degree();
        let a = self
            .images
            .iter()
            .position(|&v| v as usize == m - 1)
            .expect("bijection")
            + 1;
        (a, self.apply(m))
    }

    /// True when `p(m) = m`, i.e. `p` lies in the embedded `S(m-1)`.
    pub fn fixes_last(&self) -> bool {
        let m = self.degree();
        m == 0 || self.images[m - 1] as usize == m - 1
    }

    /// Cycles in increasing order of their smallest entry, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths in weakly decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Drops the last point; `None` unless `p` fixes it.
    pub fn restrict(&self) -> Option<Permutation> {
        if self.degree() == 0 || !self.fixes_last() {
            return None;
        }
        Some(Permutation {
            images: self.images[..self.degree() - 1].to_vec(),
        })
    }

    /// Embeds into `S(m)` by fixing the new points.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..m as u8);
        Permutation { images }
    }

    /// A reduced word `[i_1, .., i_k]` with `p = s_{i_1} ∘ .. ∘ s_{i_k}` where
    /// `s_i = (i, i+1)`. Its length is the number of inversions.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        // p = p' ∘ s_i whenever p has a descent at i; peel those off the right.
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// All of `S(m)` in lexicographic order of one-line notation.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..m as u8).collect();
        let mut out = vec![Permutation {
            images: cur.clone(),
        }];
        // next_permutation
        while let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) {
            let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Permutation {
                images: cur.clone(),
            });
        }
        out
    }

    /// Every permutation with the same cycle type.
    pub fn conjugacy_class(&self) -> Vec<Permutation> {
        let t = self.cycle_type();
        Permutation::all(self.degree())
            .into_iter()
            .filter(|q| q.cycle_type() == t)
            .collect()
    }

    /// Comma-separated one-line notation, e.g. `2,3,1`.
    pub fn one_line(&self) -> String {
        self.images()
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Cycle notation without fixed points; the identity prints as `id`.
    /// Entries are run together for `m <= 9` and space separated otherwise.
    pub fn cycle_string(&self) -> String {
        let sep = if self.degree() > 9 { " " } else { "" };
        let s: String = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let body: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", body.join(sep))
            })
            .collect();
        if s.is_empty() {
            "id".to_string()
        } else {
            s
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Function composition; panics on a degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation degrees differ")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.cycle_string(), self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation: `2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, m: usize) -> Permutation {
        Permutation::parse_cycles(s, m).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        assert_eq!(&p("(12)", 3) * &p("(13)", 3), p("(132)", 3));
        let q = p("(123)", 3);
        assert_eq!(&q * &Permutation::identity(3), q);
        assert!((&q * &p("(132)", 3)).is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3).compose(&Permutation::identity(4));
        assert_eq!(err, Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn classify_examples() {
        let c: Permutation = "2,3,1".parse().unwrap();
        assert_eq!(c.classify(), (2, 1));
        let q: Permutation = "2,1,4,3".parse().unwrap();
        assert_eq!(q.classify(), (3, 3));
        assert_eq!(Permutation::identity(5).classify(), (5, 5));
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
        assert_eq!(p("(12)", 3).cycle_count(), 2);
        assert_eq!(p("(123)", 3).cycle_count(), 1);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("(1 3 2)", 3), p("(132)", 3));
        assert_eq!(p("(32)", 3), p("(23)", 3));
        assert_eq!(p("(132)", 3).to_string(), "(132)");
        assert_eq!(p("(132)", 3).one_line(), "3,1,2");
        assert_eq!(Permutation::identity(3).to_string(), "id");
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!("2,3".parse::<Permutation>().is_err());
    }

    #[test]
    fn all_has_factorial_size_and_is_sorted() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn class_of_transpositions() {
        assert_eq!(p("(12)", 4).conjugacy_class().len(), 6);
        assert_eq!(p("(123)", 3).conjugacy_class().len(), 2);
    }

    fn arb_perm(m: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=m).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_associativity(a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)) {
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn reduced_word_reconstructs(a in arb_perm(6)) {
            let mut acc = Permutation::identity(6);
            for &i in &a.reduced_word() {
                acc = &acc * &Permutation::transposition(6, i, i + 1);
            }
            prop_assert_eq!(acc, a.clone());
        }

        #[test]
        fn classify_pins_last_point(a in arb_perm(5)) {
            let (x, y) = a.classify();
            prop_assert_eq!(a.apply(x), 5);
            prop_assert_eq!(a.apply(5), y);
            prop_assert_eq!(x == 5, y == 5);
            prop_assert_eq!(a.fixes_last(), (x, y) == (5, 5));
        }

        #[test]
        fn cycle_string_round_trips(a in arb_perm(7)) {
            prop_assert_eq!(Permutation::parse_cycles(&a.cycle_string(), 7).unwrap(), a.clone());
            prop_assert_eq!(a.one_line().parse::<Permutation>().unwrap(), a);
        }
    }
}
