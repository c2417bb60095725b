//! Permutations, partitions and the orthogonal irreducible representations
//! of the symmetric groups.

mod irrep;
mod partition;
mod permutation;

pub use irrep::{
    character, class_sum_matrix, class_sum_scalar, multiplicity_in_tensor_space,
    standard_tableaux, transposition_character_frobenius, IrrepTable, Tableau,
};
pub use partition::{AddedBox, Characteristic, Partition};
pub use permutation::Permutation;

/// All partitions of `m`, decreasing lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    Partition::all(m)
}
