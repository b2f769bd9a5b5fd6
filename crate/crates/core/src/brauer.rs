//! Quaternion classes in Br(Q) as finite even sets of ramified places.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{is_global_square, is_local_square, is_prime};
use crate::error::{Error, Result};
use crate::exact::{Int, Rat};
use crate::places::{ramification_set, Place};

/// Default bound on `|a|` and `|b|` in Hilbert pair searches.
pub const DEFAULT_PAIR_BOUND: u64 = 100_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerClass {
    ram: BTreeSet<Place>,
}

impl BrauerClass {
    pub fn new(ram: BTreeSet<Place>) -> Result<Self> {
        if ram.len() % 2 == 1 {
            return Err(Error::DegenerateInput(format!(
                "ramification set of odd size {}",
                ram.len()
            )));
        }
        Ok(Self { ram })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// Class of the quaternion algebra `(a, b / Q)`.
    pub fn of_pair(a: &Rat, b: &Rat) -> Result<Self> {
        Ok(Self {
            ram: ramification_set(a, b)?,
        })
    }

    pub fn ram(&self) -> &BTreeSet<Place> {
        &self.ram
    }

    pub fn is_trivial(&self) -> bool {
        self.ram.is_empty()
    }

    pub fn finite_primes(&self) -> Vec<u64> {
        self.ram.iter().filter_map(Place::as_prime).collect()
    }

    /// Product in Br(Q): symmetric difference of ramification sets.
    pub fn product(&self, other: &Self) -> Self {
        Self {
            ram: self.ram.symmetric_difference(&other.ram).copied().collect(),
        }
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ram.iter().map(Place::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn brauer_product(x: &BrauerClass, y: &BrauerClass) -> BrauerClass {
    x.product(y)
}

/// Integers `a, b` with `(a, b / Q)` in the class `class`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPair {
    pub a: Int,
    pub b: Int,
    pub class: BrauerClass,
}

/// Squarefree integers ordered by absolute value, positive first:
/// `1, -1, 2, -2, 3, -3, 5, ...`.
fn signed_squarefree(bound: u64) -> impl Iterator<Item = Int> {
    (1..=bound)
        .filter(|&k| is_squarefree(k))
        .flat_map(|k| [Int::from(k), -Int::from(k)])
}

fn is_squarefree(k: u64) -> bool {
    let mut d = 2u64;
    while d * d <= k {
        if k.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_target(target: &BTreeSet<Place>) -> Result<()> {
    if target.len() % 2 == 1 {
        return Err(Error::DegenerateInput(format!(
            "target set of odd size {}",
            target.len()
        )));
    }
    for v in target {
        if let Place::Finite(p) = v {
            if !is_prime(*p) {
                return Err(Error::NotPrime(*p));
            }
        }
    }
    Ok(())
}

/// Hilbert pair ramified exactly at `target`.
///
/// `a` is fixed to the signed product of the finite primes of `target`
/// (negative when the real place is in `target`); `b` runs over squarefree
/// integers in the order `1, -1, 2, -2, ...` until the full ramification set
/// matches.
pub fn realize_even_set(target: &BTreeSet<Place>, bound: u64) -> Result<HilbertPair> {
    check_target(target)?;
    if target.is_empty() {
        return Ok(HilbertPair {
            a: Int::one(),
            b: Int::one(),
            class: BrauerClass::trivial(),
        });
    }
    let mut a: Int = target.iter().filter_map(Place::as_prime).map(Int::from).product();
    if target.contains(&Place::Real) {
        a = -a;
    }
    let ar = Rat::from_integer(a.clone());
    for b in signed_squarefree(bound) {
        let ram = ramification_set(&ar, &Rat::from_integer(b.clone()))?;
        if ram == *target {
            return Ok(HilbertPair {
                a,
                b,
                class: BrauerClass { ram },
            });
        }
    }
    Err(Error::SearchExhausted { ceiling: bound })
}

/// Some `a` with `(a, fixed_b / Q)` ramified exactly at `target`.
pub fn realize_with_second_slot_fixed(
    target: &BTreeSet<Place>,
    fixed_b: &Rat,
    bound: u64,
) -> Result<Int> {
    check_target(target)?;
    if fixed_b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    for v in target {
        if is_local_square(fixed_b, *v) {
            return Err(Error::UnsatisfiableLocalCondition(
                crate::exact::fmt_rat(fixed_b),
                *v,
            ));
        }
    }
    for a in signed_squarefree(bound) {
        if ramification_set(&Rat::from_integer(a.clone()), fixed_b)? == *target {
            return Ok(a);
        }
    }
    Err(Error::SearchExhausted { ceiling: bound })
}

/// Finite places of the class at which `delta` is a local square, i.e. that
/// split in `Q(√δ)`. The flag is set when `delta` is a global square, in
/// which case all finite places are returned.
pub fn restrict_to_h(x: &BrauerClass, delta: &Rat) -> Result<(BTreeSet<Place>, bool)> {
    if delta.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let square = is_global_square(delta);
    let set = x
        .ram
        .iter()
        .copied()
        .filter(|v| v.is_finite() && (square || is_local_square(delta, *v)))
        .collect();
    Ok((set, square))
}

/// The class of `(-1, -1 / Q)`, ramified at the real place and 2.
pub fn minus_one_minus_one() -> BrauerClass {
    BrauerClass {
        ram: BTreeSet::from([Place::Real, Place::Finite(2)]),
    }
}
