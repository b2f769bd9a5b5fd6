//! Exact arithmetic toolkit for Salem numbers and the commensurability
//! classes of arithmetic hyperbolic lattices that realize them.
//!
//! The pipeline runs bottom-up: [`exact`] kernels, polynomial algebra in
//! [`polyalg`], local data at the places of Q in [`places`], quaternion
//! classes in [`brauer`], form invariants in [`quadform`], the certification
//! engine in [`realizer`] and explicit integral isometries in [`exhibitor`].

pub mod arith;
pub mod brauer;
pub mod error;
pub mod exhibitor;
pub mod exact;
pub mod places;
pub mod polyalg;
pub mod quadform;
pub mod realizer;

pub use error::{Error, Result};
