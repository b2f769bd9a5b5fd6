//! Explicit integral isometries realizing a Salem number: transfer forms,
//! binary rotations, padding by `-1` blocks, integral conjugation and the
//! translation length.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{hnf_basis, rat, rat_to_f64, Bound, Int, Rat, RatMatrix, SturmChain, UniPoly};
use crate::exact::bisect_root;
use crate::places::Place;
use crate::polyalg::{factor_over_q, SalemContext};
use crate::quadform::{is_admissible, QuadForm};
use crate::realizer::{class_key, root_pattern};

/// Gram matrix of `(u, v) ↦ Tr_{K/Q}(b · u · σ(v))` on the power basis of
/// `K = Q[x]/(f)`, where `b` is a polynomial in `y = x + 1/x`, and the matrix
/// of multiplication by `x` (the companion matrix of `f`).
pub fn transfer_form(ctx: &SalemContext, b: &UniPoly) -> Result<(RatMatrix, RatMatrix)> {
    if b.is_zero() || b.rem(&ctx.g).is_zero() {
        return Err(Error::SingularElement);
    }
    let c = RatMatrix::companion(&ctx.f)?;
    let c_inv = c.inverse()?;
    let y = &c + &c_inv;
    let bm = b.eval_matrix(&y);
    let r = ctx.degree();
    // traces of b·x^k for k = 0..r-1; negative powers mirror them
    let mut tr = Vec::with_capacity(r);
    let mut acc = bm;
    for _ in 0..r {
        tr.push(acc.trace());
        acc = &acc * &c;
    }
    let mut data = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            data.push(tr[i.abs_diff(j)].clone());
        }
    }
    Ok((RatMatrix::new(r, r, data)?, c))
}

/// A rotation of `⟨c1, c2⟩` with trace `mu` and determinant 1, when one
/// exists: `c1 c2` must lie in the square class of `4 - mu²`.
pub fn binary_isometry(mu: &Rat, c1: &Rat, c2: &Rat) -> Option<RatMatrix> {
    if c1.is_zero() || c2.is_zero() {
        return None;
    }
    let four_minus = rat(4) - mu * mu;
    if four_minus.is_zero() {
        return None;
    }
    let s2 = c1 * c2 / &four_minus;
    let s = rational_sqrt(&s2)?;
    let half = mu / rat(2);
    let beta = (-&four_minus) * &s / (rat(2) * c1);
    let gamma = -(c1 / c2) * &beta;
    RatMatrix::from_rows(vec![vec![half.clone(), beta], vec![gamma, half]]).ok()
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rat::new(rn, rd))
}

/// `t ⊕ (-I_j)`: appends `j` eigenvalues `-1`.
pub fn extend_with_type0(t: &RatMatrix, j: usize) -> RatMatrix {
    if j == 0 {
        return t.clone();
    }
    t.direct_sum(&RatMatrix::identity(j).scale(&rat(-1)))
}

/// `tᵀ s t = s`.
pub fn preserves(t: &RatMatrix, s: &RatMatrix) -> bool {
    t.is_square() && t.rows() == s.rows() && congruent(s, t) == *s
}

fn congruent(s: &RatMatrix, t: &RatMatrix) -> RatMatrix {
    s.congruent(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integralized {
    /// Basis change: columns are a basis of the stable lattice.
    pub g: RatMatrix,
    /// Integral form `c² gᵀ S g`.
    pub q: QuadForm,
    /// `g⁻¹ T g`, integral.
    pub t: RatMatrix,
}

/// Conjugates an isometry `t` of `q` with integral characteristic
/// polynomial into an integral matrix preserving an integral form
/// equivalent to `q`.
///
/// The lattice spanned by `t^a e_i` (`0 ≤ a < r`) is `t`-stable by
/// Cayley–Hamilton; its Hermite basis gives the conjugation.
pub fn integralize(t: &RatMatrix, q: &QuadForm) -> Result<Integralized> {
    let s = q.gram();
    let r = q.rank();
    if t.rows() != r || !t.is_square() {
        return Err(Error::Shape("isometry and form sizes differ".into()));
    }
    if congruent(s, t) != *s {
        return Err(Error::NotIsometry);
    }
    if !t.char_poly()?.is_integral() {
        return Err(Error::NotIntegralCharPoly);
    }
    let mut vecs = Vec::with_capacity(r * r);
    let mut power = RatMatrix::identity(r);
    for _ in 0..r {
        for j in 0..r {
            vecs.push(power.column(j));
        }
        power = &power * t;
    }
    let den = crate::exact::denominator_lcm(vecs.iter().flatten());
    let dr = Rat::from_integer(den.clone());
    let ints: Vec<Vec<Int>> = vecs
        .iter()
        .map(|v| v.iter().map(|x| (x * &dr).to_integer()).collect())
        .collect();
    let hnf = hnf_basis(&ints)?;
    let mut data = vec![Rat::zero(); r * r];
    for (j, row) in hnf.basis.iter().enumerate() {
        for (i, x) in row.iter().enumerate() {
            data[i * r + j] = Rat::new(x.clone(), den.clone());
        }
    }
    let g = RatMatrix::new(r, r, data)?;
    let t2 = &(&g.inverse()? * t) * &g;
    debug_assert!(t2.is_integral());
    let s2 = s.congruent(&g);
    let c = Rat::from_integer(s2.denominator_lcm());
    let q2 = QuadForm::new(s2.scale(&(&c * &c)))?;
    Ok(Integralized { g, q: q2, t: t2 })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TranslationLength {
    pub ell: f64,
    /// The irreducible factor of the characteristic polynomial with a root
    /// `λ > 1`.
    pub factor: UniPoly,
    pub lambda_lo: Rat,
    pub lambda_hi: Rat,
}

impl TranslationLength {
    /// `ell` with 12 digits after the decimal point.
    pub fn ell_string(&self) -> String {
        format!("{:.12}", self.ell)
    }
}

/// `log λ` for the unique eigenvalue `λ > 1` of a hyperbolic isometry.
pub fn translation_length(gamma: &RatMatrix, q: &QuadForm) -> Result<TranslationLength> {
    if gamma.rows() != q.rank() || congruent(q.gram(), gamma) != *q.gram() {
        return Err(Error::NotIsometry);
    }
    let chi = gamma.char_poly()?;
    let (sigma, _, _) = root_pattern(&chi)?;
    match sigma {
        0 => return Err(Error::NoHyperbolicEigenvalue),
        1 => {}
        _ => return Err(Error::MultipleOffCircleFactors),
    }
    let one = Bound::Finite(Rat::one());
    let mut hits = Vec::new();
    for (h, _) in factor_over_q(&chi)? {
        if SturmChain::new(&h)?.count(&one, &Bound::PosInf) > 0 {
            hits.push(h);
        }
    }
    let factor = match hits.len() {
        0 => return Err(Error::NoHyperbolicEigenvalue),
        1 => hits.pop().expect("one factor"),
        _ => return Err(Error::MultipleOffCircleFactors),
    };
    let bound: Rat = factor.coeffs().iter().map(|c| c.abs()).sum::<Rat>() + rat(1);
    let width = Rat::new(Int::one(), Int::from(10u64).pow(18));
    let (lo, hi) = bisect_root(&factor, &Rat::one(), &bound, &width)?;
    let ell = rat_to_f64(&((&lo + &hi) / rat(2))).ln();
    Ok(TranslationLength {
        ell,
        factor,
        lambda_lo: lo,
        lambda_hi: hi,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsometryWitness {
    /// The trace-field element used for the transfer form, if any.
    pub b: Option<UniPoly>,
    pub q: QuadForm,
    pub gamma: RatMatrix,
    pub char_poly: UniPoly,
    pub det_gamma: i8,
    pub length: TranslationLength,
    pub class_key: (Option<Int>, BTreeSet<Place>),
}

/// Integralizes `t` on `q`, checks it, and packages the witness.
pub fn finish_witness(ctx: &SalemContext, b: Option<UniPoly>, t: &RatMatrix, q: &QuadForm) -> Result<IsometryWitness> {
    let out = integralize(t, q)?;
    let gram = out.q.gram();
    if congruent(gram, &out.t) != *gram || !out.t.is_integral() || !gram.is_integral() {
        return Err(Error::NotIsometry);
    }
    if !is_admissible(&out.q, ctx.n)? {
        return Err(Error::Admissibility(format!(
            "signature {:?}, expected ({}, 1)",
            out.q.signature(),
            ctx.n
        )));
    }
    let char_poly = out.t.char_poly()?;
    let det = out.t.det()?;
    let length = translation_length(&out.t, &out.q)?;
    let class_key = class_key(&out.q, ctx.n)?;
    Ok(IsometryWitness {
        b,
        q: out.q,
        gamma: out.t,
        char_poly,
        det_gamma: if det.is_positive() { 1 } else { -1 },
        length,
        class_key,
    })
}

/// A witness from the transfer form of `b`, padded by `⟨1⟩` blocks on which
/// the isometry acts as `-1`.
pub fn exhibit_one(ctx: &SalemContext, b: &UniPoly) -> Result<IsometryWitness> {
    let (gram, c) = transfer_form(ctx, b)?;
    let j = ctx.deficiency;
    let s = if j == 0 {
        gram
    } else {
        gram.direct_sum(&RatMatrix::identity(j))
    };
    let q = QuadForm::new(s)?;
    finish_witness(ctx, Some(b.clone()), &extend_with_type0(&c, j), &q)
}

/// One witness per element of `bs`, in order.
pub fn exhibit(ctx: &SalemContext, bs: &[UniPoly]) -> Vec<(UniPoly, Result<IsometryWitness>)> {
    bs.iter().map(|b| (b.clone(), exhibit_one(ctx, b))).collect()
}

/// For a quadratic Salem polynomial, the witness on a form
/// `⟨c1, c2⟩ ⊕ ⟨1⟩^j` built from the binary rotation of `⟨c1, c2⟩`.
pub fn exhibit_on_form(ctx: &SalemContext, q: &QuadForm) -> Result<IsometryWitness> {
    if ctx.degree() != 2 {
        return Err(Error::Shape("binary rotations need a quadratic Salem polynomial".into()));
    }
    let diag = q.diag();
    if !q.gram().is_diagonal() || diag.len() != ctx.n + 1 || diag[2..].iter().any(|d| *d != Rat::one()) {
        return Err(Error::Shape("expected a diagonal form ⟨c1, c2, 1, ..., 1⟩".into()));
    }
    let mu = -ctx.g.coeff(0);
    let t = binary_isometry(&mu, &diag[0], &diag[1]).ok_or(Error::DetSign(
        "c1·c2 is not in the square class of 4 - μ²".into(),
    ))?;
    finish_witness(ctx, None, &extend_with_type0(&t, ctx.deficiency), q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::polyalg::salem_context;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn m(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn transfer_form_examples() {
        let ctx = salem_context(&p(&[1, -3, 1]), 2).unwrap();
        let (g, c) = transfer_form(&ctx, &UniPoly::one()).unwrap();
        assert_eq!(g, m(&[vec![2, 3], vec![3, 2]]));
        assert_eq!(c, m(&[vec![0, -1], vec![1, 3]]));
        assert_eq!(g.congruent(&c), g);
        let (g, _) = transfer_form(&ctx, &p(&[-1])).unwrap();
        assert_eq!(g, m(&[vec![-2, -3], vec![-3, -2]]));
        assert_eq!(transfer_form(&ctx, &p(&[-3, 1])), Err(Error::SingularElement));

        let ctx = salem_context(&p(&[1, -1, -1, -1, 1]), 3).unwrap();
        let (g, c) = transfer_form(&ctx, &UniPoly::one()).unwrap();
        assert_eq!(g.congruent(&c), g);
        assert_eq!(c.char_poly().unwrap(), ctx.f);
        assert!(g.is_symmetric() && !g.det().unwrap().is_zero());
    }

    #[test]
    fn binary_isometry_examples() {
        let s = |a: i64, b: i64| RatMatrix::diagonal(&[rat(a), rat(b)]);
        let t = binary_isometry(&rat(3), &rat(-30), &rat(6)).unwrap();
        assert_eq!(t.get(0, 1), &ratio(-1, 2));
        assert_eq!(t.get(1, 0), &ratio(-5, 2));
        assert_eq!(s(-30, 6).congruent(&t), s(-30, 6));
        assert_eq!(t.det().unwrap(), rat(1));
        assert_eq!(t.trace(), rat(3));
        assert!(binary_isometry(&rat(3), &rat(1), &rat(1)).is_none());
        let t = binary_isometry(&rat(3), &rat(-5), &rat(1)).unwrap();
        assert_eq!(t.to_rows()[1], vec![ratio(-5, 2), ratio(3, 2)]);
        assert_eq!(s(-5, 1).congruent(&t), s(-5, 1));
    }

    #[test]
    fn padding_and_integralization() {
        let t = binary_isometry(&rat(3), &rat(-30), &rat(6)).unwrap();
        let g = extend_with_type0(&t, 1);
        assert_eq!(g.char_poly().unwrap(), &p(&[1, -3, 1]) * &p(&[1, 1]));
        assert_eq!(g.det().unwrap(), rat(-1));
        assert_eq!(extend_with_type0(&t, 0), t);

        let q = QuadForm::diagonal_ints(&[-30, 6, 1]).unwrap();
        let out = integralize(&g, &q).unwrap();
        assert!(out.t.is_integral() && out.q.gram().is_integral());
        assert_eq!(out.q.gram().congruent(&out.t), *out.q.gram());
        let again = integralize(&out.t, &out.q).unwrap();
        assert_eq!((again.t, again.q), (out.t.clone(), out.q.clone()));

        let c = m(&[vec![0, -1], vec![1, 3]]);
        let gram = QuadForm::new(m(&[vec![2, 3], vec![3, 2]])).unwrap();
        let out = integralize(&c, &gram).unwrap();
        assert_eq!(out.g, RatMatrix::identity(2));
        let half = RatMatrix::diagonal(&[rat(1), ratio(1, 2)]);
        let conj = &(&half.inverse().unwrap() * &c) * &half;
        let out = integralize(&conj, &gram.transform(&half).unwrap()).unwrap();
        assert!(out.t.is_integral());
        assert!(crate::quadform::forms_equivalent(&out.q, &gram).unwrap());
        assert_eq!(integralize(&m(&[vec![2, 0], vec![0, 1]]), &gram), Err(Error::NotIsometry));
    }

    #[test]
    fn witnesses() {
        let ctx = salem_context(&p(&[1, -3, 1]), 2).unwrap();
        let q = QuadForm::diagonal_ints(&[-30, 6, 1]).unwrap();
        let w = exhibit_on_form(&ctx, &q).unwrap();
        assert_eq!(w.char_poly, &p(&[1, -3, 1]) * &p(&[1, 1]));
        assert_eq!(w.length.ell_string(), "0.962423650119");
        assert_eq!(w.det_gamma, -1);

        let ws = exhibit(&ctx, &[p(&[1]), p(&[3]), p(&[7])]);
        let keys: BTreeSet<_> = ws.iter().map(|(_, w)| w.as_ref().unwrap().class_key.clone()).collect();
        assert!(keys.len() >= 2);
        assert!(exhibit(&ctx, &[]).is_empty());

        let ctx = salem_context(&p(&[1, -1, -1, -1, 1]), 3).unwrap();
        let w = exhibit_one(&ctx, &UniPoly::one()).unwrap();
        assert_eq!(w.char_poly, ctx.f);
        assert_eq!(w.length.ell_string(), "0.543535072498");

        let id = RatMatrix::identity(3);
        assert_eq!(translation_length(&id, &q), Err(Error::NoHyperbolicEigenvalue));
    }
}
