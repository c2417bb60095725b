//! The algebra spanned by permutation operators on `(ℂ^d)^{⊗n}` that are
//! partially transposed on the last factor: products, semisimple structure,
//! explicit irreducible representations, and a brute-force tensor-space
//! oracle to check them against.
//!
//! See the guide in `book/` for a tour.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod induced;
pub mod irreps;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod symgroup;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/irreps.md")]
    mod irreps {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
