use num_traits::Zero;

use crate::arith::is_local_square;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::places::Place;

use super::form::{hasse_of, hyperbolic_diag, QuadForm};

/// Dimension of the anisotropic kernel of `q` over `Q_v`.
pub fn anisotropic_dimension(q: &QuadForm, v: Place) -> Result<usize> {
    let r = q.rank();
    if let Place::Real = v {
        let (pos, neg) = q.signature();
        return Ok(pos.abs_diff(neg));
    }
    if let Place::Finite(p) = v {
        crate::arith::require_prime(p)?;
    }
    let diag = q.diag();
    let det: Rat = diag.iter().product();
    let s = hasse_of(diag, v);
    if r.is_multiple_of(2) {
        let m = r / 2;
        let signed_det = if m % 2 == 1 { -det } else { det };
        if !is_local_square(&signed_det, v) {
            return Ok(2);
        }
        let reference = hasse_of(&hyperbolic_diag(m), v);
        Ok(if s == reference { 0 } else { 4 })
    } else {
        let m = (r - 1) / 2;
        let e = if m % 2 == 1 { -det } else { det };
        let mut reference = hyperbolic_diag(m);
        reference.push(e);
        Ok(if s == hasse_of(&reference, v) { 1 } else { 3 })
    }
}

/// Witt index of `q` over `Q_v`: the dimension of a maximal totally
/// isotropic subspace.
pub fn local_witt_index(q: &QuadForm, v: Place) -> Result<usize> {
    Ok((q.rank() - anisotropic_dimension(q, v)?) / 2)
}

pub fn is_locally_isotropic(q: &QuadForm, v: Place) -> Result<bool> {
    Ok(local_witt_index(q, v)? >= 1)
}

/// Whether `q` represents `c` over `Q_v`.
pub fn represents_locally(q: &QuadForm, c: &Rat, v: Place) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let neg = QuadForm::diagonal(&[-c.clone()])?;
    is_locally_isotropic(&q.direct_sum(&neg), v)
}

/// Whether `q` represents `c` over Q, by the local-global principle.
pub fn represents_globally(q: &QuadForm, c: &Rat) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let ext = q.direct_sum(&QuadForm::diagonal(&[-c.clone()])?);
    for v in ext.relevant_places()? {
        if !is_locally_isotropic(&ext, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn form(d: &[i64]) -> QuadForm {
        QuadForm::diagonal_ints(d).unwrap()
    }

    #[test]
    fn index_examples() {
        let p5 = Place::Finite(5);
        assert_eq!(local_witt_index(&form(&[1, 1, 1, 1]), p5).unwrap(), 2);
        assert_eq!(local_witt_index(&form(&[1, 1, 1, 1]), Place::Finite(2)).unwrap(), 0);
        assert_eq!(local_witt_index(&form(&[1, 1, 1, 1]), Place::Real).unwrap(), 0);
        assert_eq!(local_witt_index(&form(&[1, 1, -1]), Place::Real).unwrap(), 1);
        assert_eq!(local_witt_index(&form(&[1, -1, 1, -1]), Place::Finite(3)).unwrap(), 2);
        // ⟨1, 1, 1⟩ is anisotropic exactly at 2 and the real place
        assert_eq!(local_witt_index(&form(&[1, 1, 1]), Place::Finite(2)).unwrap(), 0);
        assert_eq!(local_witt_index(&form(&[1, 1, 1]), Place::Finite(3)).unwrap(), 1);
        assert_eq!(local_witt_index(&form(&[1, 2]), Place::Finite(3)).unwrap(), 1);
        assert_eq!(local_witt_index(&form(&[1, 1]), Place::Finite(3)).unwrap(), 0);
    }

    #[test]
    fn representation() {
        assert!(represents_globally(&form(&[1, 1]), &rat(5)).unwrap());
        assert!(!represents_globally(&form(&[1, 1]), &rat(3)).unwrap());
        assert!(!represents_globally(&form(&[1, 1, 1]), &rat(7)).unwrap());
        assert!(represents_globally(&form(&[1, 1, 1]), &rat(6)).unwrap());
        assert!(represents_locally(&form(&[1, 1]), &rat(3), Place::Finite(5)).unwrap());
        assert!(represents_globally(&form(&[1, 1]), &rat(0)).is_err());
    }
}
