use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyalg::{is_irreducible_fp, FpPoly};

/// Element of `F_p[x] / (modulus)` with an irreducible modulus, i.e. of the
/// field with `p^d` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqElem {
    modulus: FpPoly,
    value: FpPoly,
}

impl FqElem {
    pub fn new(modulus: &FpPoly, value: &FpPoly) -> Result<Self> {
        if modulus.modulus() != value.modulus() {
            return Err(Error::Shape("elements over different prime fields".into()));
        }
        if !is_irreducible_fp(modulus) {
            return Err(Error::DegenerateInput(format!("{modulus:?} is not irreducible")));
        }
        Ok(Self::new_unchecked(modulus.monic(), value))
    }

    /// Skips the irreducibility check; callers pass factors from a
    /// factorization.
    pub(crate) fn new_unchecked(modulus: FpPoly, value: &FpPoly) -> Self {
        let value = value.rem(&modulus);
        Self { modulus, value }
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator(modulus: &FpPoly) -> Self {
        Self::new_unchecked(modulus.monic(), &FpPoly::x(modulus.modulus()))
    }

    pub fn from_u64(modulus: &FpPoly, c: u64) -> Self {
        Self::new_unchecked(modulus.monic(), &FpPoly::new(modulus.modulus(), vec![c]))
    }

    pub fn p(&self) -> u64 {
        self.modulus.modulus()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn value(&self) -> &FpPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    fn with(&self, value: FpPoly) -> Self {
        Self::new_unchecked(self.modulus.clone(), &value)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.with(self.value.add(&o.value))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.with(self.value.sub(&o.value))
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.with(self.value.mul(&o.value))
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        self.with(self.value.pow_mod(e, &self.modulus))
    }

    /// Number of elements of the field.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.p()).pow(self.degree() as u32)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let e = self.order() - 2u32;
        Ok(self.pow(&e))
    }

    /// Absolute trace to F_p.
    pub fn trace(&self) -> u64 {
        let p = BigUint::from(self.p());
        let mut acc = self.clone();
        let mut cur = self.clone();
        for _ in 1..self.degree() {
            cur = cur.pow(&p);
            acc = acc.add(&cur);
        }
        debug_assert!(acc.value.degree() == 0);
        acc.value.coeff(0)
    }
}

/// Whether a nonzero element of `F_{p^d}` is a square.
pub fn fq_is_square(x: &FqElem) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if x.p() == 2 {
        return Ok(true);
    }
    let e = (x.order() - BigUint::one()) / 2u32;
    Ok(x.pow(&e).is_one())
}
