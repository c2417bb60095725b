//! Young's orthogonal form of the irreducible representations of `S(m)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use nalgebra::DMatrix;

use super::{Partition, Permutation};
use crate::error::{Error, Result};

/// Full image tables are cached for groups up to this degree.
const CACHE_DEGREE: usize = 6;

/// A standard Young tableau stored as `row[k]`, the 0-based row of letter `k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<usize>,
}

impl Tableau {
    /// 0-based (row, column) of every letter.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut filled = Vec::new();
        self.rows
            .iter()
            .map(|&r| {
                if filled.len() <= r {
                    filled.resize(r + 1, 0);
                }
                let c = filled[r];
                filled[r] += 1;
                (r, c)
            })
            .collect()
    }

    /// Row of each letter, 1-based letters mapped to 0-based rows.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }
}

/// Standard tableaux of shape `shape` in last-letter order: grouped by the row
/// holding the largest letter, top row first, recursively.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    if shape.weight() == 0 {
        return vec![Tableau { rows: Vec::new() }];
    }
    let mut out = Vec::new();
    for i in shape.removable_rows() {
        for mut t in standard_tableaux(&shape.remove_box(i)) {
            t.rows.push(i - 1);
            out.push(t);
        }
    }
    out
}

/// An irreducible real orthogonal representation of `S(m)`.
#[derive(Clone, Debug)]
pub struct IrrepTable {
    label: Partition,
    tableaux: Vec<Tableau>,
    /// Images of `(i, i+1)` for `i = 1..m-1`.
    generators: Vec<DMatrix<f64>>,
    cache: Arc<OnceLock<HashMap<Permutation, DMatrix<f64>>>>,
}

impl IrrepTable {
    pub fn new(label: &Partition) -> Self {
        let tableaux = standard_tableaux(label);
        let index: HashMap<&Tableau, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let dim = tableaux.len();
        let m = label.weight();
        let positions: Vec<Vec<(usize, usize)>> = tableaux.iter().map(Tableau::positions).collect();

        let generators = (1..m)
            .map(|i| {
                let mut g = DMatrix::zeros(dim, dim);
                for (k, t) in tableaux.iter().enumerate() {
                    let (r1, c1) = positions[k][i - 1];
                    let (r2, c2) = positions[k][i];
                    let axial = (c2 as f64 - r2 as f64) - (c1 as f64 - r1 as f64);
                    let diag = 1.0 / axial;
                    g[(k, k)] = diag;
                    if r1 != r2 && c1 != c2 {
                        let mut swapped = t.clone();
                        swapped.rows.swap(i - 1, i);
                        let k2 = index[&swapped];
                        g[(k2, k)] = (1.0 - diag * diag).sqrt();
                    }
                }
                g
            })
            .collect();

        IrrepTable {
            label: label.clone(),
            tableaux,
            generators,
            cache: Arc::new(OnceLock::new()),
        }
    }

    pub fn label(&self) -> &Partition {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.label.weight()
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Image of the adjacent transposition `(i, i+1)`.
    pub fn generator(&self, i: usize) -> &DMatrix<f64> {
        &self.generators[i - 1]
    }

    fn image_uncached(&self, p: &Permutation) -> DMatrix<f64> {
        let dim = self.dimension();
        let mut acc = DMatrix::identity(dim, dim);
        for i in p.reduced_word() {
            acc *= &self.generators[i - 1];
        }
        acc
    }

    fn table(&self) -> &HashMap<Permutation, DMatrix<f64>> {
        self.cache.get_or_init(|| {
            Permutation::all(self.degree())
                .into_iter()
                .map(|p| {
                    let img = self.image_uncached(&p);
                    (p, img)
                })
                .collect()
        })
    }

    /// Image of an arbitrary permutation of degree `m`.
    pub fn image(&self, p: &Permutation) -> DMatrix<f64> {
        assert_eq!(p.degree(), self.degree(), "permutation degree");
        if self.degree() <= CACHE_DEGREE {
            self.table()[p].clone()
        } else {
            self.image_uncached(p)
        }
    }

    /// Matrix entry `φ_{ij}(p)` with 1-based indices.
    pub fn entry(&self, p: &Permutation, i: usize, j: usize) -> f64 {
        self.image(p)[(i - 1, j - 1)]
    }

    pub fn character(&self, p: &Permutation) -> f64 {
        self.image(p).trace()
    }
}

/// `χ^α(p)`, the trace of the orthogonal-form image.
pub fn character(alpha: &Partition, p: &Permutation) -> Result<f64> {
    if alpha.weight() != p.degree() {
        return Err(Error::DegreeMismatch(alpha.weight(), p.degree()));
    }
    Ok(IrrepTable::new(alpha).character(p))
}

/// Frobenius' closed form for the character on the transposition class:
/// `χ(12) = dim/(m(m-1)) Σ (b_i(b_i+1) - a_i(a_i+1))` with `a` the legs and
/// `b` the arms of the diagonal hooks.
pub fn transposition_character_frobenius(alpha: &Partition) -> Result<f64> {
    let m = alpha.weight();
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "transposition character needs weight >= 2, got {m}"
        )));
    }
    let c = alpha.characteristic();
    let s: i64 = c
        .legs
        .iter()
        .zip(&c.arms)
        .map(|(&a, &b)| (b * (b + 1)) as i64 - (a * (a + 1)) as i64)
        .sum();
    Ok(alpha.dimension() as f64 * s as f64 / (m * (m - 1)) as f64)
}

/// The scalar `n_K χ(rep) / dim` by which a class sum acts (Schur's lemma).
pub fn class_sum_scalar(alpha: &Partition, class_rep: &Permutation, class_size: usize) -> Result<f64> {
    let chi = character(alpha, class_rep)?;
    Ok(class_size as f64 * chi / alpha.dimension() as f64)
}

/// `Σ_{σ ∈ K} φ(σ)` summed explicitly over the conjugacy class of `class_rep`.
pub fn class_sum_matrix(table: &IrrepTable, class_rep: &Permutation) -> DMatrix<f64> {
    let dim = table.dimension();
    class_rep
        .conjugacy_class()
        .iter()
        .fold(DMatrix::zeros(dim, dim), |acc, s| acc + table.image(s))
}

/// Multiplicity of `φ^α` in the tensor representation of `S(m)` on
/// `(C^d)^{⊗m}`: `(1/m!) Σ χ(σ^{-1}) d^{l(σ)}`.
pub fn multiplicity_in_tensor_space(alpha: &Partition, d: u32) -> u64 {
    let table = IrrepTable::new(alpha);
    let m = alpha.weight();
    let all = Permutation::all(m);
    let total: f64 = all
        .iter()
        .map(|s| table.character(&s.inverse()) * (d as f64).powi(s.cycle_count() as i32))
        .sum();
    let value = total / all.len() as f64;
    value.round().max(0.0) as u64
}
