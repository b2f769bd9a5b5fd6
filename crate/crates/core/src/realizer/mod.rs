//! Certified quadratic forms realizing a Salem number as the spectral
//! radius of an isometry, and families of them in distinct commensurability
//! classes.

mod conditions;
mod family;

pub use conditions::{
    bf_existence_check, decide_local_hyperbolicity, hyperbolicity_condition, hyperbolicity_for_hasse, root_pattern,
    signature_condition, witt_critical_places, Check, ExistenceReport, HyperbolicityReport,
    SignatureReport,
};
pub use family::{
    build_candidate_form, case_tag, certify, check_a_set, class_key, enumerate_a_sets,
    incommensurable_family, requires_two, revalidate, validate, CaseTag,
    RealizationCertificate,
};
