use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{rat_prime_support, squarefree_class};
use crate::brauer::BrauerClass;
use crate::error::{Error, Result};
use crate::exact::{congruence_diagonalize, fmt_rat, parse_rat_list, rat, Int, Rat, RatMatrix};
use crate::places::{hilbert_symbol, Place};

/// Nondegenerate quadratic form over Q given by its Gram matrix, with a
/// cached diagonalization.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadForm {
    gram: RatMatrix,
    diag: Vec<Rat>,
}

impl QuadForm {
    pub fn new(gram: RatMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::Shape("Gram matrix must be square and symmetric".into()));
        }
        let (diag, _) = congruence_diagonalize(&gram)?;
        Ok(Self { gram, diag })
    }

    pub fn diagonal(entries: &[Rat]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Shape("form of rank 0".into()));
        }
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::SingularForm);
        }
        Ok(Self {
            gram: RatMatrix::diagonal(entries),
            diag: entries.to_vec(),
        })
    }

    pub fn diagonal_ints(entries: &[i64]) -> Result<Self> {
        Self::diagonal(&entries.iter().map(|&v| rat(v)).collect::<Vec<_>>())
    }

    /// Parses `"d1,d2,...,dr"`.
    pub fn parse_diagonal(s: &str) -> Result<Self> {
        Self::diagonal(&parse_rat_list(s)?)
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn diag(&self) -> &[Rat] {
        &self.diag
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn det(&self) -> Rat {
        self.gram.det().expect("square Gram matrix")
    }

    pub fn det_class(&self) -> Int {
        squarefree_class(&self.diag.iter().product()).expect("nonzero determinant")
    }

    /// Square class of `(-1)^(r(r-1)/2) det`.
    pub fn disc_class(&self) -> Int {
        let r = self.rank();
        let d = self.det_class();
        if (r * (r - 1) / 2) % 2 == 1 {
            -d
        } else {
            d
        }
    }

    /// `(n₊, n₋)` over R.
    pub fn signature(&self) -> (usize, usize) {
        let neg = self.diag.iter().filter(|v| v.is_negative()).count();
        (self.rank() - neg, neg)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut diag = self.diag.clone();
        diag.extend_from_slice(&other.diag);
        Self {
            gram: self.gram.direct_sum(&other.gram),
            diag,
        }
    }

    /// `gᵀ S g` for an invertible `g`.
    pub fn transform(&self, g: &RatMatrix) -> Result<Self> {
        if g.rows() != self.rank() || !g.is_square() {
            return Err(Error::Shape("change of basis has the wrong size".into()));
        }
        if g.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Self::new(self.gram.congruent(g))
    }

    pub fn scale(&self, c: &Rat) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::SingularForm);
        }
        Ok(Self {
            gram: self.gram.scale(c),
            diag: self.diag.iter().map(|v| v * c).collect(),
        })
    }

    /// Places where the local invariants can be nontrivial: the real place,
    /// 2, and the primes dividing a diagonal entry.
    pub fn relevant_places(&self) -> Result<BTreeSet<Place>> {
        let mut out = BTreeSet::from([Place::Real, Place::Finite(2)]);
        for d in &self.diag {
            out.extend(rat_prime_support(d)?.into_iter().map(Place::Finite));
        }
        Ok(out)
    }

    /// Local Hasse symbol `∏_{i<j} (a_i, a_j)_v`.
    pub fn hasse_at(&self, v: Place) -> i8 {
        hasse_of(&self.diag, v)
    }

    /// Hasse invariant `s(q)`.
    pub fn hasse(&self) -> Result<BrauerClass> {
        let ram = self
            .relevant_places()?
            .into_iter()
            .filter(|&v| self.hasse_at(v) == -1)
            .collect();
        BrauerClass::new(ram)
    }

    /// Witt invariant `c(q)`: the Hasse invariant corrected by rank mod 8.
    pub fn witt(&self) -> Result<BrauerClass> {
        let s = self.hasse()?;
        let det = Rat::from_integer(self.det_class());
        let m1 = rat(-1);
        let corr = match self.rank() % 8 {
            1 | 2 => BrauerClass::trivial(),
            3 | 4 => BrauerClass::of_pair(&m1, &-&det)?,
            5 | 6 => BrauerClass::of_pair(&m1, &m1)?,
            _ => BrauerClass::of_pair(&m1, &det)?,
        };
        Ok(s.product(&corr))
    }

    pub fn diag_strings(&self) -> Vec<String> {
        self.diag.iter().map(fmt_rat).collect()
    }
}

pub(crate) fn hasse_of(diag: &[Rat], v: Place) -> i8 {
    let mut s = 1;
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            s *= hilbert_symbol(&diag[i], &diag[j], v).expect("nonzero entries");
        }
    }
    s
}

impl fmt::Debug for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gram.is_diagonal() {
            write!(f, "<{}>", self.diag_strings().join(", "))
        } else {
            write!(f, "QuadForm({:?})", self.gram)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormInvariants {
    pub rank: usize,
    pub det_class: Int,
    pub disc_class: Int,
    pub signature: (usize, usize),
    pub hasse: BrauerClass,
    pub witt: BrauerClass,
}

pub fn form_invariants(q: &QuadForm) -> Result<FormInvariants> {
    Ok(FormInvariants {
        rank: q.rank(),
        det_class: q.det_class(),
        disc_class: q.disc_class(),
        signature: q.signature(),
        hasse: q.hasse()?,
        witt: q.witt()?,
    })
}

pub fn witt_invariant(q: &QuadForm) -> Result<BrauerClass> {
    q.witt()
}

/// Hasse invariant of `⟨1, -1⟩^m`.
pub fn hyperbolic_reference_hasse(m: usize) -> BrauerClass {
    if m % 4 == 2 || m % 4 == 3 {
        crate::brauer::minus_one_minus_one()
    } else {
        BrauerClass::trivial()
    }
}

/// `⟨1, -1⟩^m` as a diagonal list.
pub(crate) fn hyperbolic_diag(m: usize) -> Vec<Rat> {
    (0..m).flat_map(|_| [Rat::one(), -Rat::one()]).collect()
}

/// Signature `(n, 1)` at the real place.
pub fn is_admissible(q: &QuadForm, n: usize) -> Result<bool> {
    if q.rank() != n + 1 {
        return Err(Error::Shape(format!(
            "rank {} form in dimension {n} (expected rank {})",
            q.rank(),
            n + 1
        )));
    }
    Ok(q.signature() == (n, 1))
}

/// Rational equivalence by the local-global principle: same rank,
/// determinant class, signature and Hasse invariant.
pub fn forms_equivalent(q: &QuadForm, r: &QuadForm) -> Result<bool> {
    Ok(q.rank() == r.rank()
        && q.det_class() == r.det_class()
        && q.signature() == r.signature()
        && q.hasse()? == r.hasse()?)
}

/// The part of `c(q)` that survives base change to `H = Q(√δ)`: finite
/// places split in `H`, plus the real place when `δ > 0`.
pub fn split_witt_key(q: &QuadForm) -> Result<BTreeSet<Place>> {
    let delta = Rat::from_integer(q.disc_class());
    let c = q.witt()?;
    let (mut set, square) = crate::brauer::restrict_to_h(&c, &delta)?;
    if (square || delta.is_positive()) && c.ram().contains(&Place::Real) {
        set.insert(Place::Real);
    }
    Ok(set)
}

/// Commensurability of the lattices `SO(q)_Z` and `SO(q')_Z` for admissible
/// forms in dimension `n`: Witt classes for `n` even; for `n` odd equal
/// discriminants and equal Witt classes after base change to `Q(√δ)`.
pub fn maclachlan_commensurable(q: &QuadForm, r: &QuadForm, n: usize) -> Result<bool> {
    for (name, f) in [("first", q), ("second", r)] {
        if !is_admissible(f, n)? {
            return Err(Error::Admissibility(format!(
                "{name} form has signature {:?}, expected ({n}, 1)",
                f.signature()
            )));
        }
    }
    if n.is_multiple_of(2) {
        return Ok(q.witt()? == r.witt()?);
    }
    if q.disc_class() != r.disc_class() {
        return Ok(false);
    }
    Ok(split_witt_key(q)? == split_witt_key(r)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(d: &[i64]) -> QuadForm {
        QuadForm::diagonal_ints(d).unwrap()
    }

    fn set(ps: &[u64]) -> BTreeSet<Place> {
        ps.iter().map(|&p| Place::Finite(p)).collect()
    }

    #[test]
    fn invariant_examples() {
        let q = form(&[-30, 6, 1]);
        let inv = form_invariants(&q).unwrap();
        assert_eq!(inv.det_class, Int::from(-5));
        assert_eq!(inv.signature, (2, 1));
        assert_eq!(inv.hasse.ram(), &set(&[2, 3]));
        assert_eq!(inv.witt.ram(), &set(&[2, 3]));

        assert!(form(&[1, 1, 1, -1]).hasse().unwrap().is_trivial());

        let q = form(&[105, -5, 105, 1]);
        let inv = form_invariants(&q).unwrap();
        assert_eq!(inv.det_class, Int::from(-5));
        assert_eq!(inv.signature, (3, 1));
        assert_eq!(inv.hasse.ram(), &set(&[3, 7]));
    }

    #[test]
    fn witt_examples() {
        assert!(form(&[1, 1, -1]).witt().unwrap().is_trivial());
        let c = form(&[1, 1, 1, 1, 1]).witt().unwrap();
        assert_eq!(c.ram(), &BTreeSet::from([Place::Real, Place::Finite(2)]));
    }

    #[test]
    fn reference_hasse() {
        for m in 1..=8 {
            let direct = QuadForm::diagonal(&hyperbolic_diag(m)).unwrap().hasse().unwrap();
            assert_eq!(hyperbolic_reference_hasse(m), direct, "m = {m}");
        }
        assert!(hyperbolic_reference_hasse(1).is_trivial());
        assert!(!hyperbolic_reference_hasse(2).is_trivial());
        assert!(hyperbolic_reference_hasse(4).is_trivial());
    }

    #[test]
    fn admissibility_and_equivalence() {
        assert!(is_admissible(&form(&[-30, 6, 1]), 2).unwrap());
        assert!(!is_admissible(&form(&[1, 1, 1]), 2).unwrap());
        assert!(is_admissible(&form(&[105, -5, 105, 1]), 3).unwrap());
        assert!(is_admissible(&form(&[1, 1]), 2).is_err());
        assert!(forms_equivalent(&form(&[1, -1]), &form(&[2, -2])).unwrap());
        assert!(!forms_equivalent(&form(&[1, 1]), &form(&[1, -1])).unwrap());
        let q = form(&[-30, 6, 1]);
        assert!(forms_equivalent(&q, &q).unwrap());
    }

    #[test]
    fn commensurability_examples() {
        let q = form(&[-30, 6, 1]);
        let r = form(&[-70, 14, 1]);
        assert_eq!(r.witt().unwrap().ram(), &set(&[2, 7]));
        assert!(!maclachlan_commensurable(&q, &r, 2).unwrap());
        let s = form(&[105, -5, 105, 1]);
        assert!(maclachlan_commensurable(&s, &s, 3).unwrap());
        assert!(matches!(
            maclachlan_commensurable(&form(&[1, 1, 1]), &q, 2),
            Err(Error::Admissibility(_))
        ));
    }

    #[test]
    fn gram_input_diagonalizes() {
        let g = RatMatrix::from_int_rows(&[vec![2, 3], vec![3, 2]]).unwrap();
        let q = QuadForm::new(g).unwrap();
        assert_eq!(q.det(), rat(-5));
        assert_eq!(q.det_class(), Int::from(-5));
        assert_eq!(q.signature(), (1, 1));
    }
}
