//! Dense operators on `(C^d)^{⊗n}`: the ground truth every abstract
//! construction is checked against.

mod operators;
mod tensor;
mod verify;

pub use operators::{
    matrix_operators_e, multiplicity, restricted_tensor_images, verify_restricted_operators, verify_matrix_operators,
    verify_matrix_units, GroupImages, MATRIX_OPERATOR_TOLERANCE, MATRIX_UNIT_TOLERANCE,
};
pub use tensor::{
    checked_size, partial_transpose_last, perm_operator, span_dimension, GeneratorBank, TensorOp,
    DEFAULT_CAP, RANK_TOLERANCE,
};
pub use verify::{
    run_suite, verify_dimension_identities, verify_generator_law, verify_irrep_against_oracle, verify_spectrum,
    Suite, DENSE_LIMIT, ORACLE_TOLERANCE,
};
