//! Integer arithmetic: factoring, valuations, Legendre symbols and square
//! classes of rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};
use crate::places::Place;

pub fn is_prime(p: u64) -> bool {
    num_prime::nt_funcs::is_prime64(p)
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Smallest prime strictly greater than `p`.
pub fn next_prime(p: u64) -> u64 {
    let mut q = p + 1;
    while !is_prime(q) {
        q += 1;
    }
    q
}

/// Prime factorization of `|n|`, primes ascending. `n` must be nonzero.
/// Values beyond 128 bits are reduced by trial division below 2^16 and by
/// exact square roots; what remains must fit in 128 bits.
pub fn factor_int(n: &Int) -> Result<Vec<(Int, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut acc = BTreeMap::new();
    factor_into(&n.abs(), 1, &mut acc).map_err(|_| Error::TooLarge(n.to_string()))?;
    Ok(acc.into_iter().collect())
}

fn factor_into(n: &Int, mult: u32, acc: &mut BTreeMap<Int, u32>) -> std::result::Result<(), ()> {
    if let Some(m) = n.to_u128() {
        for (p, e) in num_prime::nt_funcs::factorize128(m) {
            *acc.entry(BigInt::from(p)).or_insert(0) += e as u32 * mult;
        }
        return Ok(());
    }
    let mut rest = n.clone();
    let mut d = 2u32;
    while d < 1 << 16 && rest.to_u128().is_none() {
        let dd = BigInt::from(d);
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            *acc.entry(dd.clone()).or_insert(0) += mult;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest.to_u128().is_some() {
        return factor_into(&rest, mult, acc);
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        return factor_into(&r, 2 * mult, acc);
    }
    Err(())
}

/// Primes dividing a nonzero integer, as `u64`.
pub fn prime_divisors(n: &Int) -> Result<Vec<u64>> {
    factor_int(n)?
        .into_iter()
        .map(|(p, _)| p.to_u64().ok_or_else(|| Error::TooLarge(p.to_string())))
        .collect()
}

/// Primes dividing the numerator or denominator of a nonzero rational.
pub fn rat_prime_support(r: &Rat) -> Result<Vec<u64>> {
    let mut ps = prime_divisors(r.numer())?;
    ps.extend(prime_divisors(r.denom())?);
    ps.sort_unstable();
    ps.dedup();
    Ok(ps)
}

/// Exponent of `p` in a nonzero integer.
pub fn valuation(n: &Int, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `p`-adic valuation of a nonzero rational.
pub fn rat_valuation(r: &Rat, p: u64) -> i64 {
    valuation(r.numer(), p) as i64 - valuation(r.denom(), p) as i64
}

/// Writes a nonzero rational as `p^v * u` and returns `(v, u)` with `u` a
/// `p`-adic unit.
pub fn split_valuation(r: &Rat, p: u64) -> (i64, Rat) {
    let v = rat_valuation(r, p);
    let pp = Rat::from_integer(BigInt::from(p));
    let u = if v >= 0 {
        r / pp.pow(v as i32)
    } else {
        r * pp.pow((-v) as i32)
    };
    (v, u)
}

/// `a mod p` for a rational `p`-adic unit.
pub fn unit_residue(u: &Rat, p: u64) -> u64 {
    let pm = BigInt::from(p);
    let inv = mod_inverse(&u.denom().mod_floor(&pm), &pm).expect("p-adic unit");
    (u.numer().mod_floor(&pm) * inv)
        .mod_floor(&pm)
        .to_u64()
        .unwrap()
}

/// Residue of a rational 2-adic unit modulo 8.
pub fn unit_residue_mod8(u: &Rat) -> u64 {
    let m = BigInt::from(8);
    let inv = mod_inverse(&u.denom().mod_floor(&m), &m).expect("2-adic unit");
    (u.numer().mod_floor(&m) * inv)
        .mod_floor(&m)
        .to_u64()
        .unwrap()
}

pub fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

pub fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a | p)` for an odd prime `p`: 0, 1 or -1.
pub fn legendre(a: &Int, p: u64) -> i8 {
    let r = a.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    legendre_u64(r, p)
}

pub fn legendre_u64(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Squarefree integer in the square class of a nonzero rational.
pub fn squarefree_class(r: &Rat) -> Result<Int> {
    if r.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut out = Int::one();
    for part in [r.numer(), r.denom()] {
        for (p, e) in factor_int(part)? {
            if e % 2 == 1 {
                out *= p;
            }
        }
    }
    if r.is_negative() {
        out = -out;
    }
    Ok(out)
}

pub fn is_square_int(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Whether a nonzero rational is a square in Q.
pub fn is_global_square(r: &Rat) -> bool {
    !r.is_negative() && is_square_int(r.numer()) && is_square_int(r.denom())
}

/// Whether a nonzero rational is a square in the completion at `v`.
pub fn is_local_square(r: &Rat, v: Place) -> bool {
    debug_assert!(!r.is_zero());
    match v {
        Place::Real => r.is_positive(),
        Place::Finite(2) => {
            let (e, u) = split_valuation(r, 2);
            e % 2 == 0 && unit_residue_mod8(&u) == 1
        }
        Place::Finite(p) => {
            let (e, u) = split_valuation(r, p);
            e % 2 == 0 && legendre_u64(unit_residue(&u, p), p) == 1
        }
    }
}
