use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::factorial;
use crate::symgroup::Permutation;

use super::element::{mul_generators, AlgebraContext};
use super::scalar::Dimension;

/// Largest number of rows [`mul_table`] builds.
pub const MAX_TABLE_ROWS: usize = 720;

/// One product `d^power V(perm)^t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub power: u32,
    /// Cycle notation.
    pub perm: String,
    pub text: String,
}

/// Products of all pairs of generators, row times column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulTable {
    pub n: usize,
    pub d: Dimension,
    /// Row and column labels, cycle notation.
    pub order: Vec<String>,
    pub cells: Vec<Vec<TableCell>>,
}

/// Generator order of the table: the identity, then by decreasing `n - l(σ)`,
/// then by the cycle string of `σ^{-1}`. At `n = 3` this is
/// `1, (132), (123), (12), (13), (23)`.
pub fn table_order(n: usize) -> Vec<Permutation> {
    let mut all = Permutation::all(n);
    all.sort_by_key(|p| {
        (
            !p.is_identity(),
            std::cmp::Reverse(n - p.cycle_count()),
            p.inverse().cycle_string(),
        )
    });
    all
}

/// `"1"`, `"(12)^t"`, `"d(23)^t"`; a fixed `d` is printed as its value.
pub fn render_cell(power: u32, perm: &Permutation, d: Dimension) -> String {
    let coefficient = match (power, d) {
        (0, _) => String::new(),
        (1, Dimension::Symbolic) => "d".to_string(),
        (k, Dimension::Symbolic) => format!("d^{k}"),
        (k, Dimension::Fixed(v)) => {
            let c = u64::from(v).pow(k);
            if c == 1 { String::new() } else { c.to_string() }
        }
    };
    match (perm.is_identity(), coefficient.is_empty()) {
        (true, true) => "1".to_string(),
        (true, false) => coefficient,
        (false, _) => format!("{coefficient}{perm}^t"),
    }
}

/// The `n! × n!` multiplication table of the generators.
pub fn mul_table(ctx: AlgebraContext) -> Result<MulTable> {
    let n = ctx.n();
    let rows = factorial(n);
    if rows > MAX_TABLE_ROWS {
        return Err(Error::TableTooLarge(rows));
    }
    let order = table_order(n);
    let cells = order
        .iter()
        .map(|s| {
            order
                .iter()
                .map(|r| {
                    let (power, t) = mul_generators(s, r)?;
                    Ok(TableCell {
                        power,
                        perm: t.cycle_string(),
                        text: render_cell(power, &t, ctx.d()),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MulTable {
        n,
        d: ctx.d(),
        order: order.iter().map(Permutation::cycle_string).collect(),
        cells,
    })
}
