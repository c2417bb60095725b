//! Integer partitions and Young diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
///
/// Ordering is lexicographic on the parts, so `(3) > (2,1) > (1,1,1)`.
/// Enumerations in this crate list partitions in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Frobenius characteristic: for the `i`-th diagonal box, `legs[i]` boxes
/// below it and `arms[i]` boxes to its right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characteristic {
    pub legs: Vec<usize>,
    pub arms: Vec<usize>,
}

/// A partition obtained by adding one box to a smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddedBox {
    pub partition: Partition,
    /// 1-based row of the new box.
    pub row: usize,
    /// 1-based column of the new box.
    pub column: usize,
    /// The new box lies on the main diagonal, so the rank grows by one.
    pub extends_diagonal: bool,
}

impl AddedBox {
    /// Column minus row of the added box.
    pub fn content(&self) -> i64 {
        self.column as i64 - self.row as i64
    }
}

impl Partition {
    /// Trailing zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing and positive"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(m)`, labelling the trivial representation.
    pub fn trivial(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// The one-column partition `(1^m)`, labelling the sign representation.
    pub fn sign(m: usize) -> Self {
        Partition { parts: vec![1; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `parts[i-1]` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `h(α)`.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Length of the main diagonal of the Young diagram.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    pub fn characteristic(&self) -> Characteristic {
        let conj = self.conjugate();
        let r = self.rank();
        Characteristic {
            legs: (0..r).map(|i| conj.parts[i] - i - 1).collect(),
            arms: (0..r).map(|i| self.parts[i] - i - 1).collect(),
        }
    }

    /// Hook-length formula.
    pub fn dimension(&self) -> usize {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j + conj.parts[j] - i - 1) as u128;
            }
        }
        let n_fact: u128 = (1..=self.weight() as u128).product();
        (n_fact / hooks) as usize
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition whose diagram is this one plus a single box, by row.
    pub fn add_box(&self) -> Vec<AddedBox> {
        let r = self.rank();
        (1..=self.height() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| {
                let mut parts = self.parts.clone();
                if i > parts.len() {
                    parts.push(0);
                }
                parts[i - 1] += 1;
                let column = parts[i - 1];
                AddedBox {
                    partition: Partition { parts },
                    row: i,
                    column,
                    extends_diagonal: i == r + 1 && column == i,
                }
            })
            .collect()
    }

    /// Corners that can be removed, as 1-based row indices, top to bottom.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.height())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    /// Removes the last box of row `i` (1-based); caller guarantees a corner.
    pub(crate) fn remove_box(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        if parts[i - 1] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    /// Diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && (1..=other.height()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts such as `3,1`; `()`, `0` or an empty string is
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}
