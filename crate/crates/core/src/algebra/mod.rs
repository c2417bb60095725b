//! Formal linear combinations of partially transposed permutation
//! operators, their composition law, and the u-element generators of the
//! ideal `M`.

mod element;
mod scalar;
mod table;
mod u_element;

pub use element::{mul_generators, AlgebraContext, AlgebraElement};
pub use scalar::{Dimension, Poly, Scalar, PRUNE_THRESHOLD};
pub use table::{mul_table, render_cell, table_order, MulTable, TableCell, MAX_TABLE_ROWS};
pub use u_element::{u_element, verify_u_structure, UFamily, U_TOLERANCE};
