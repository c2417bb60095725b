//! The induced representations `ind_{S(n-2)}^{S(n-1)} φ^α`, the structure
//! matrices `Q(α)`, their spectra and the reducing matrices `Z(α)`.

mod q;
mod reduce;
mod rep;
mod spectral;
mod z;

pub use q::{
    eigenvalues_closed_form, q_matrix, q_matrix_symbolic, q_via_induced, zero_condition, Eigenpair,
    SymbolicQ,
};
pub use reduce::{xa_reduce, ReducedBasis};
pub use rep::InducedRep;
pub use spectral::{
    verify_reduction, SpectralQ, SpectralReport, NULL_THRESHOLD, REDUCTION_TOLERANCE, SPECTRUM_TOLERANCE,
};
pub use z::{z_matrix, ZMatrix};
