use std::collections::BTreeSet;

use num_traits::Zero;

use crate::arith::prime_divisors;
use crate::brauer::BrauerClass;
use crate::error::{Error, Result};
use crate::exact::{Bound, Int, Rat, SturmChain, UniPoly};
use crate::places::{local_hyperbolicity, Place};
use crate::polyalg::{trace_substitute, SalemContext};
use crate::quadform::{hyperbolic_reference_hasse, local_witt_index, represents_globally, QuadForm};

/// A named boolean check, reported in certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &'static str, pass: bool) -> Self {
        Self { name, pass }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureReport {
    pub r: usize,
    pub s: usize,
    /// Number of pairs `{z, 1/z}` of roots of `F` off the unit circle.
    pub sigma: usize,
    /// Number of pairs of roots on the unit circle other than `±1`.
    pub circle_pairs: usize,
    /// Number of roots equal to `±1`.
    pub type0_degree: usize,
    pub pass: bool,
}

/// Root counts of a self-reciprocal polynomial: `(σ, circle pairs, number
/// of roots ±1)`, all with multiplicity.
pub fn root_pattern(f: &UniPoly) -> Result<(usize, usize, usize)> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let mut rest = f.monic();
    let mut type0 = 0;
    for lin in [UniPoly::from_ints(&[-1, 1]), UniPoly::from_ints(&[1, 1])] {
        while let Some(q) = rest.exact_div(&lin) {
            if rest.degree() == 0 {
                break;
            }
            rest = q;
            type0 += 1;
        }
    }
    if rest.degree() == 0 {
        return Ok((0, 0, type0));
    }
    let g = trace_substitute(&rest)?;
    let (lo, hi) = (Bound::Finite(Rat::from_integer((-2).into())), Bound::Finite(Rat::from_integer(2.into())));
    let mut sigma = 0;
    let mut circle = 0;
    for (h, e) in g.squarefree_decomposition() {
        let inside = SturmChain::new(&h)?.count(&lo, &hi);
        circle += e * inside;
        sigma += e * (h.degree() - inside);
    }
    Ok((sigma, circle, type0))
}

fn signature_from_counts(r: usize, s: usize, pattern: (usize, usize, usize)) -> SignatureReport {
    let (sigma, circle, type0) = pattern;
    // The non-±1 part carries σ hyperbolic planes plus `circle` definite
    // planes of either sign; the ±1 part takes any signature.
    let pass = r + s == 2 * (sigma + circle) + type0
        && (0..=circle).any(|a| sigma + 2 * a <= r && sigma + 2 * (circle - a) <= s);
    SignatureReport {
        r,
        s,
        sigma,
        circle_pairs: circle,
        type0_degree: type0,
        pass,
    }
}

/// Whether a form of the signature of `q` can carry an isometry with
/// characteristic polynomial `F` over R.
pub fn signature_condition(f: &UniPoly, q: &QuadForm) -> Result<SignatureReport> {
    if f.degree() != q.rank() {
        return Err(Error::Shape(format!(
            "polynomial of degree {} against a form of rank {}",
            f.degree(),
            q.rank()
        )));
    }
    let (r, s) = q.signature();
    Ok(signature_from_counts(r, s, root_pattern(f)?))
}

/// Local hyperbolicity of `f` at `v`, with a fallback where the splitting
/// data is inconclusive: every form carrying an isometry with characteristic
/// polynomial `f` is hyperbolic at a place where `f` is, so a transfer form
/// `Tr(b u σ(v))` that is not hyperbolic over `Q_v` proves `f` is not.
/// The fallback searches `b = c0 + c1 y` with `|c0|, |c1| ≤ 3` and their
/// multiples by `p`.
pub fn decide_local_hyperbolicity(ctx: &SalemContext, v: Place) -> Result<Option<bool>> {
    if let Some(h) = local_hyperbolicity(ctx, v)? {
        return Ok(Some(h));
    }
    let p = v.as_prime().expect("the real place is always decided");
    let m = ctx.m();
    for scale in [1, p as i64] {
        for c1 in -3i64..=3 {
            for c0 in -3i64..=3 {
                let b = UniPoly::from_ints(&[c0 * scale, c1 * scale]);
                let gram = match crate::exhibitor::transfer_form(ctx, &b) {
                    Ok((g, _)) => g,
                    Err(Error::SingularElement) => continue,
                    Err(e) => return Err(e),
                };
                if local_witt_index(&QuadForm::new(gram)?, v)? < m {
                    return Ok(Some(false));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityReport {
    /// Places where the Hasse invariant differs from the hyperbolic one.
    pub places: BTreeSet<Place>,
    /// Places of `places` where `f` is locally hyperbolic.
    pub failing: Vec<Place>,
    /// Places of `places` where local hyperbolicity is undecided; they count
    /// as failures.
    pub undecided: Vec<Place>,
    pub pass: bool,
}

/// The hyperbolicity condition for a form of rank `deg f` with Hasse
/// invariant `hasse`.
pub fn hyperbolicity_for_hasse(ctx: &SalemContext, hasse: &BrauerClass) -> Result<HyperbolicityReport> {
    let places = hasse.product(&hyperbolic_reference_hasse(ctx.m())).ram().clone();
    let mut failing = Vec::new();
    let mut undecided = Vec::new();
    for &v in &places {
        match decide_local_hyperbolicity(ctx, v)? {
            Some(false) => {}
            Some(true) => failing.push(v),
            None => undecided.push(v),
        }
    }
    let pass = failing.is_empty() && undecided.is_empty();
    Ok(HyperbolicityReport {
        places,
        failing,
        undecided,
        pass,
    })
}

pub fn hyperbolicity_condition(ctx: &SalemContext, q: &QuadForm) -> Result<HyperbolicityReport> {
    if q.rank() % 2 == 1 || q.rank() != ctx.degree() {
        return Err(Error::Shape(format!(
            "hyperbolicity condition needs a form of rank {}, got {}",
            ctx.degree(),
            q.rank()
        )));
    }
    hyperbolicity_for_hasse(ctx, &q.hasse()?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceReport {
    pub deficiency: usize,
    pub checks: Vec<Check>,
    pub signature: SignatureReport,
    pub hyperbolicity: Option<HyperbolicityReport>,
    /// `(place, Witt index)` at each place where the index was required.
    pub witt_indices: Vec<(Place, usize)>,
    pub pass: bool,
}


/// Finite places where a Witt index bound must be checked explicitly.
///
/// At an odd prime not dividing any diagonal entry nor `disc f · disc g`,
/// `q` is unimodular, so its anisotropic kernel has dimension at most 2 and
/// the index is at least `(rank - 2) / 2 ≥ deg f / 2`.
pub fn witt_critical_places(ctx: &SalemContext, q: &QuadForm) -> Result<BTreeSet<Place>> {
    let mut out: BTreeSet<Place> = q.relevant_places()?.into_iter().filter(Place::is_finite).collect();
    out.extend(q.hasse()?.ram().iter().copied().filter(Place::is_finite));
    for n in [&ctx.disc_f, &ctx.disc_g] {
        out.extend(prime_divisors(n)?.into_iter().map(Place::Finite));
    }
    Ok(out)
}

/// Existence of an isometry of `q` with characteristic polynomial
/// `F = f (x+1)^deficiency`, dispatched on the deficiency.
pub fn bf_existence_check(ctx: &SalemContext, q: &QuadForm) -> Result<ExistenceReport> {
    let big_f = ctx.full_char_poly();
    if q.rank() != big_f.degree() {
        return Err(Error::Shape(format!(
            "form of rank {} for dimension {}",
            q.rank(),
            ctx.n
        )));
    }
    let d_class = crate::arith::squarefree_class(&ctx.d_rat())?;
    let mut checks = Vec::new();
    let mut hyperbolicity = None;
    let mut witt_indices = Vec::new();
    let signature;
    match ctx.deficiency {
        0 => {
            checks.push(Check::new("det_condition", q.det_class() == d_class));
            signature = signature_condition(&big_f, q)?;
            checks.push(Check::new("signature_condition", signature.pass));
            let h = hyperbolicity_condition(ctx, q)?;
            checks.push(Check::new("hyperbolicity_condition", h.pass));
            hyperbolicity = Some(h);
        }
        1 => {
            // Split off ⟨d0⟩ and test the complement q' of rank deg f.
            let d0 = crate::arith::squarefree_class(&(Rat::from_integer(q.det_class()) * ctx.d_rat()))?;
            let d0r = Rat::from_integer(d0.clone());
            checks.push(Check::new("represents_d0", represents_globally(q, &d0r)?));
            let det_c = crate::arith::squarefree_class(&(Rat::from_integer(q.det_class()) * &d0r))?;
            checks.push(Check::new("det_condition", det_c == d_class));
            let (r, s) = q.signature();
            let (r, s) = if d0 > Int::zero() {
                (r.saturating_sub(1), s)
            } else {
                (r, s.saturating_sub(1))
            };
            signature = signature_from_counts(r, s, root_pattern(&ctx.f)?);
            checks.push(Check::new("signature_condition", signature.pass));
            let hasse_c = q
                .hasse()?
                .product(&BrauerClass::of_pair(&d0r, &Rat::from_integer(det_c))?);
            let h = hyperbolicity_for_hasse(ctx, &hasse_c)?;
            checks.push(Check::new("hyperbolicity_condition", h.pass));
            hyperbolicity = Some(h);
        }
        2 => {
            signature = signature_condition(&big_f, q)?;
            checks.push(Check::new("signature_condition", signature.pass));
            let need = ctx.degree() / 2;
            let mut ok = true;
            for v in witt_critical_places(ctx, q)? {
                if decide_local_hyperbolicity(ctx, v)? == Some(false) {
                    continue;
                }
                let idx = local_witt_index(q, v)?;
                witt_indices.push((v, idx));
                ok &= idx >= need;
            }
            checks.push(Check::new("witt_index_condition", ok));
        }
        _ => {
            signature = signature_condition(&big_f, q)?;
            checks.push(Check::new("signature_condition", signature.pass));
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(ExistenceReport {
        deficiency: ctx.deficiency,
        checks,
        signature,
        hyperbolicity,
        witt_indices,
        pass,
    })
}
