//! Polynomials over the prime field F_p and their factorization.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::require_prime;
use crate::error::{Error, Result};
use crate::exact::{Int, UniPoly};

/// Polynomial over F_p, ascending coefficients in `[0, p)`, no leading zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    crate::arith::pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for v in c.iter_mut() {
            *v %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { p, c }
    }

    /// Reduction of an integer polynomial.
    pub fn from_ints(p: u64, coeffs: &[Int]) -> Self {
        let pm = Int::from(p);
        Self::new(
            p,
            coeffs
                .iter()
                .map(|v| v.mod_floor(&pm).to_u64().unwrap())
                .collect(),
        )
    }

    /// Reduction of a polynomial with `p`-integral rational coefficients.
    pub fn from_unipoly(p: u64, f: &UniPoly) -> Result<Self> {
        let pm = Int::from(p);
        let mut c = Vec::with_capacity(f.coeffs().len());
        for r in f.coeffs() {
            let d = r.denom().mod_floor(&pm);
            if d.is_zero() {
                return Err(Error::DegenerateInput(format!(
                    "coefficient {r} is not {p}-integral"
                )));
            }
            let n = r.numer().mod_floor(&pm).to_u64().unwrap();
            c.push(mulmod(n, inv_mod(d.to_u64().unwrap(), p), p));
        }
        Ok(Self::new(p, c))
    }

    pub fn zero(p: u64) -> Self {
        Self { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lead(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&v| mulmod(v, k, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            self.p,
            (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.p).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(
            self.p,
            (0..n)
                .map(|i| (self.coeff(i) + self.p - o.coeff(i)) % self.p)
                .collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, out.into_iter().map(|v| v as u64).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.c.len() < d.c.len() {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.lead(), p);
        let mut r = self.c.clone();
        let dd = d.degree();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = mulmod(r[k + dd], inv, p);
            q[k] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &dj) in d.c.iter().enumerate() {
                let s = mulmod(coef, dj, p);
                r[k + j] = (r[k + j] + p - s) % p;
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lead(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &v)| mulmod(v, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &v| (mulmod(acc, x, self.p) + v) % self.p)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Lift to a polynomial over Z with coefficients in `[0, p)`.
    pub fn to_ints(&self) -> Vec<Int> {
        self.c.iter().map(|&v| Int::from(v)).collect()
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_bigints(&self.to_ints())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_unipoly(), self.p)
    }
}

/// Squarefree factorization of a monic polynomial over F_p, handling
/// `p`-th powers.
fn squarefree_fp(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut i = 1;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c);
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if fac.degree() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if c.degree() > 0 {
        // c is a p-th power: take the p-th root coefficientwise.
        let root = FpPoly::new(p, c.c.iter().step_by(p as usize).copied().collect());
        for (g, e) in squarefree_fp(&root) {
            out.push((g, e * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let pe = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree() >= 2 * d {
        h = h.pow_mod(&pe, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() > 0 {
        let d = rest.degree();
        out.push((rest, d));
    }
    out
}

/// Deterministic sequence of nonconstant test polynomials of degree `< n`:
/// the base-`p` digits of `1, 2, 3, ...` shifted past the constants.
fn test_poly(p: u64, mut t: u128, n: usize) -> Option<FpPoly> {
    t += p as u128;
    let mut c = Vec::new();
    while t > 0 {
        c.push((t % p as u128) as u64);
        t /= p as u128;
    }
    (c.len() <= n).then(|| FpPoly::new(p, c))
}

/// Equal-degree splitting of a monic squarefree product of irreducibles of
/// degree `d`.
fn equal_degree(f: &FpPoly, d: usize, out: &mut Vec<FpPoly>) {
    let n = f.degree();
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.p;
    let q = BigUint::from(p).pow(d as u32);
    let mut t: u128 = 0;
    loop {
        let a = test_poly(p, t, n).expect("a splitting polynomial exists below degree n");
        t += 1;
        let b = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(d-1))
            let mut acc = a.rem(f);
            let mut cur = acc.clone();
            for _ in 1..d {
                cur = cur.mul(&cur).rem(f);
                acc = acc.add(&cur);
            }
            acc
        } else {
            let e = (&q - 1u32) / 2u32;
            a.pow_mod(&e, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&b);
        if g.degree() > 0 && g.degree() < n {
            equal_degree(&g, d, out);
            equal_degree(&f.exact_div(&g), d, out);
            return;
        }
    }
}

/// Monic irreducible factors of `f` over F_p with multiplicities, sorted by
/// degree then coefficients. The product of the factors is `f / lead(f)`.
pub fn factor_fp(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    if f.degree() == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (s, e) in squarefree_fp(&f.monic()) {
        for (g, d) in distinct_degree(&s) {
            let mut parts = Vec::new();
            equal_degree(&g, d, &mut parts);
            out.extend(parts.into_iter().map(|h| (h, e)));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.c.cmp(&b.c)));
    out
}

/// Factorization of an integer polynomial modulo a prime `p`.
pub fn factor_mod_p(f: &UniPoly, p: u64) -> Result<Vec<(FpPoly, usize)>> {
    require_prime(p)?;
    let fp = FpPoly::from_unipoly(p, f)?;
    if fp.degree() != f.degree() || fp.is_zero() {
        return Err(Error::DegenerateInput(format!(
            "leading coefficient divisible by {p}"
        )));
    }
    Ok(factor_fp(&fp))
}

/// Whether `f` is irreducible over F_p (Rabin's test).
pub fn is_irreducible_fp(f: &FpPoly) -> bool {
    let n = f.degree();
    if n == 0 {
        return false;
    }
    let f = f.monic();
    let p = f.p;
    let x = FpPoly::x(p);
    let pow = |k: usize| x.pow_mod(&BigUint::from(p).pow(k as u32), &f);
    if pow(n).sub(&x).rem(&f).is_zero() {
        let primes: Vec<usize> = (2..=n)
            .filter(|&q| n.is_multiple_of(q) && (2..q).all(|r| q % r != 0))
            .collect();
        primes
            .into_iter()
            .all(|q| f.gcd(&pow(n / q).sub(&x)).is_one())
    } else {
        false
    }
}
