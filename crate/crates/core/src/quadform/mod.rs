//! Rational quadratic forms: local and global invariants, Witt indices and
//! commensurability of the associated arithmetic groups.

mod form;
mod local;

pub use form::{
    form_invariants, forms_equivalent, hyperbolic_reference_hasse, is_admissible,
    maclachlan_commensurable, split_witt_key, witt_invariant, FormInvariants, QuadForm,
};
pub use local::{
    anisotropic_dimension, is_locally_isotropic, local_witt_index, represents_globally,
    represents_locally,
};
