//! Places of Q, Hilbert symbols, finite fields and prime splitting.

mod fq;
mod hilbert;
mod splitting;

pub use fq::{fq_is_square, FqElem};
pub use hilbert::{hilbert_symbol, ramification_set, relevant_places};
pub use splitting::{
    admits, candidate_primes_after, enumerate_candidate_primes, is_critical, is_excluded,
    local_hyperbolicity, search_ceiling, sigma_ns_density, splits_in_h, splitting_profile,
    Behavior, Constraint, PrimeOfE, SplittingProfile, DEFAULT_SEARCH_CEILING,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A place of Q: the real embedding or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        crate::arith::require_prime(p)?;
        Ok(Place::Finite(p))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Place::Finite(_))
    }

    pub fn as_prime(&self) -> Option<u64> {
        match self {
            Place::Finite(p) => Some(*p),
            Place::Real => None,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    /// Accepts `inf`, `real` or a prime.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "real" | "oo" => Ok(Place::Real),
            t => {
                let p: u64 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("not a place: {t:?}")))?;
                Place::prime(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_order() {
        assert_eq!("inf".parse::<Place>().unwrap(), Place::Real);
        assert_eq!("7".parse::<Place>().unwrap(), Place::Finite(7));
        assert_eq!("9".parse::<Place>(), Err(Error::NotPrime(9)));
        assert!(Place::Real < Place::Finite(2));
        assert_eq!(Place::Finite(13).to_string(), "13");
    }
}
