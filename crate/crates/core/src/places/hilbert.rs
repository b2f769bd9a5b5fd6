use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::Place;
use crate::arith::{legendre_u64, rat_prime_support, split_valuation, unit_residue, unit_residue_mod8};
use crate::error::{Error, Result};
use crate::exact::Rat;

/// Local Hilbert symbol `(a, b)_v`: `1` when `a x² + b y² = z²` has a
/// nontrivial solution over the completion at `v`, else `-1`.
pub fn hilbert_symbol(a: &Rat, b: &Rat, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(match v {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = split_valuation(a, 2);
            let (beta, w) = split_valuation(b, 2);
            let (u, w) = (unit_residue_mod8(&u), unit_residue_mod8(&w));
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w)
                + (alpha.rem_euclid(2) as u64) * omega(w)
                + (beta.rem_euclid(2) as u64) * omega(u);
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            let (alpha, u) = split_valuation(a, p);
            let (beta, w) = split_valuation(b, p);
            let (alpha, beta) = (alpha.rem_euclid(2), beta.rem_euclid(2));
            let mut s: i8 = 1;
            if alpha * beta == 1 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if beta == 1 {
                s *= legendre_u64(unit_residue(&u, p), p);
            }
            if alpha == 1 {
                s *= legendre_u64(unit_residue(&w, p), p);
            }
            s
        }
    })
}

/// Places at which `(a, b)_v` can be nontrivial: the real place, 2, and the
/// primes dividing numerators or denominators of `a` and `b`.
pub fn relevant_places(a: &Rat, b: &Rat) -> Result<BTreeSet<Place>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut out = BTreeSet::from([Place::Real, Place::Finite(2)]);
    for r in [a, b] {
        out.extend(rat_prime_support(r)?.into_iter().map(Place::Finite));
    }
    Ok(out)
}

/// Places where the quaternion algebra `(a, b / Q)` ramifies.
pub fn ramification_set(a: &Rat, b: &Rat) -> Result<BTreeSet<Place>> {
    let mut out = BTreeSet::new();
    for v in relevant_places(a, b)? {
        if hilbert_symbol(a, b, v)? == -1 {
            out.insert(v);
        }
    }
    assert!(out.len() % 2 == 0, "Hilbert reciprocity violated for ({a}, {b})");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn h(a: i64, b: i64, v: Place) -> i8 {
        hilbert_symbol(&rat(a), &rat(b), v).unwrap()
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(h(-1, -1, Place::Real), -1);
        assert_eq!(h(6, 5, Place::Finite(2)), -1);
        assert_eq!(h(6, 5, Place::Finite(3)), -1);
        assert_eq!(h(6, 5, Place::Finite(5)), 1);
        for v in [Place::Real, Place::Finite(2), Place::Finite(7)] {
            assert_eq!(h(1, -35, v), 1);
        }
        assert_eq!(hilbert_symbol(&rat(0), &rat(3), Place::Real), Err(Error::ZeroArgument));
    }

    #[test]
    fn ramification_examples() {
        let set = |a: i64, b: i64| ramification_set(&rat(a), &rat(b)).unwrap();
        assert_eq!(set(6, 5), BTreeSet::from([Place::Finite(2), Place::Finite(3)]));
        assert_eq!(set(21, -1), BTreeSet::from([Place::Finite(3), Place::Finite(7)]));
        assert!(set(1, 1).is_empty());
        assert_eq!(set(-1, -1), BTreeSet::from([Place::Real, Place::Finite(2)]));
    }

    #[test]
    fn rational_arguments_use_square_classes() {
        for v in [Place::Real, Place::Finite(2), Place::Finite(3), Place::Finite(5)] {
            assert_eq!(
                hilbert_symbol(&ratio(6, 25), &ratio(5, 4), v).unwrap(),
                h(6, 5, v)
            );
        }
    }
}
