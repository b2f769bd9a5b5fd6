//! Polynomial factorization over F_p, Z and Q, and the Salem-specific
//! polynomial data.

pub mod fp;
mod salem;
mod zfactor;

pub use fp::{factor_mod_p, is_irreducible_fp, FpPoly};
pub use salem::{
    bracket_width, classify_salem, salem_context, star, symmetric_decompose, symmetry_check,
    trace_expand, trace_substitute, NotSalemReason, SalemCertificate, SalemContext, SalemVerdict,
    SymmetryReport, TypeDecomposition,
};
pub use zfactor::{factor_over_q, factor_over_z, is_irreducible_over_q, total_degree, ZFactorization};
pub(crate) use zfactor::hensel_factor as zfactor_hensel;
