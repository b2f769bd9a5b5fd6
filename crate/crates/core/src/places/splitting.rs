//! Behaviour of primes in the tower `Q ⊆ E = Q(λ + 1/λ) ⊆ K = Q(λ)` and in
//! `H = Q(√δ)`.

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use super::fq::{fq_is_square, FqElem};
use super::Place;
use crate::arith::{is_local_square, legendre, next_prime, require_prime, valuation};
use crate::error::{Error, Result};
use crate::exact::{rat, Int, UniPoly};
use crate::polyalg::fp::factor_fp;
use crate::polyalg::{FpPoly, SalemContext};

/// Default bound on prime searches; `SALEM_SEARCH_CEILING` overrides it.
pub const DEFAULT_SEARCH_CEILING: u64 = 1_000_000;

pub fn search_ceiling() -> u64 {
    std::env::var("SALEM_SEARCH_CEILING")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEARCH_CEILING)
}

/// How a prime of E behaves in the quadratic extension K/E.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Behavior {
    Split,
    Inert,
    Ramified,
}

impl Behavior {
    pub fn as_str(&self) -> &'static str {
        match self {
            Behavior::Split => "split",
            Behavior::Inert => "inert",
            Behavior::Ramified => "ramified",
        }
    }
}

/// A prime of E above `p`: its residue degree and its behaviour in K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeOfE {
    pub degree: usize,
    pub behavior: Behavior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingProfile {
    pub p: u64,
    /// One entry per prime of E over `p`; empty when `p` divides
    /// `disc(f) disc(g)`.
    pub entries: Vec<PrimeOfE>,
    /// Some prime of E over `p` is inert in K.
    pub in_sigma_ns: bool,
    /// `p` splits in `Q(√δ)`.
    pub in_spl_h: bool,
    pub ramified_in_k_or_e: bool,
}

fn divides(p: u64, n: &Int) -> bool {
    (n % Int::from(p)).is_zero()
}

/// `p` divides `disc(f) disc(g)`.
pub fn is_critical(ctx: &SalemContext, p: u64) -> bool {
    divides(p, &ctx.disc_f) || divides(p, &ctx.disc_g)
}

/// `p` splits in `Q(√δ)`: `p` odd, prime to `δ`, and `δ` a square mod `p`.
pub fn splits_in_h(ctx: &SalemContext, p: u64) -> bool {
    p != 2 && !divides(p, &ctx.delta) && legendre(&ctx.delta, p) == 1
}

/// Behaviour in K of the prime of E attached to an irreducible factor `phi`
/// of `g mod p`, with `p ∤ disc(f) disc(g)`.
fn residue_behavior(phi: &FpPoly) -> Behavior {
    let p = phi.modulus();
    let mu = FqElem::generator(phi);
    if p == 2 {
        // x^2 - μx + 1 has a root iff z^2 + z + 1/μ^2 does, iff Tr(1/μ^2) = 0.
        let inv = match mu.inv() {
            Ok(v) => v,
            Err(_) => return Behavior::Ramified,
        };
        if inv.mul(&inv).trace() == 0 {
            Behavior::Split
        } else {
            Behavior::Inert
        }
    } else {
        let t = mu.mul(&mu).sub(&FqElem::from_u64(phi, 4));
        match fq_is_square(&t) {
            Err(_) => Behavior::Ramified,
            Ok(true) => Behavior::Split,
            Ok(false) => Behavior::Inert,
        }
    }
}

pub fn splitting_profile(ctx: &SalemContext, p: u64) -> Result<SplittingProfile> {
    require_prime(p)?;
    let in_spl_h = splits_in_h(ctx, p);
    if is_critical(ctx, p) {
        return Ok(SplittingProfile {
            p,
            entries: Vec::new(),
            in_sigma_ns: false,
            in_spl_h,
            ramified_in_k_or_e: true,
        });
    }
    let gp = FpPoly::from_unipoly(p, &ctx.g)?;
    let entries: Vec<PrimeOfE> = factor_fp(&gp)
        .into_iter()
        .map(|(phi, _)| PrimeOfE {
            degree: phi.degree(),
            behavior: residue_behavior(&phi),
        })
        .collect();
    let in_sigma_ns = entries.iter().any(|e| e.behavior == Behavior::Inert);
    Ok(SplittingProfile {
        p,
        entries,
        in_sigma_ns,
        in_spl_h,
        ramified_in_k_or_e: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// Any prime that is not excluded.
    Any,
    /// `p ∈ Spl(H/Q)`.
    SplH,
    /// `p ∈ Σⁿˢ(K)`.
    SigmaNs,
    /// `p ∈ Σⁿˢ(K) ∩ Spl(H/Q)`.
    SigmaNsAndSplH,
}

/// Primes never used as candidates: 2 and the primes dividing
/// `disc(f) disc(g) δ`.
pub fn is_excluded(ctx: &SalemContext, p: u64) -> bool {
    p == 2 || is_critical(ctx, p) || divides(p, &ctx.delta)
}

pub fn admits(ctx: &SalemContext, p: u64, constraint: Constraint) -> Result<bool> {
    if is_excluded(ctx, p) {
        return Ok(false);
    }
    let prof = splitting_profile(ctx, p)?;
    Ok(match constraint {
        Constraint::Any => true,
        Constraint::SplH => prof.in_spl_h,
        Constraint::SigmaNs => prof.in_sigma_ns,
        Constraint::SigmaNsAndSplH => prof.in_sigma_ns && prof.in_spl_h,
    })
}

/// The candidate primes in increasing order, starting after `after`.
///
/// Batches are tested in parallel and merged in order, so the result does
/// not depend on the thread count.
pub fn candidate_primes_after(
    ctx: &SalemContext,
    constraint: Constraint,
    after: u64,
    count: usize,
    ceiling: u64,
) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    let mut p = after;
    while out.len() < count {
        let mut batch = Vec::with_capacity(64);
        while batch.len() < 64 {
            p = next_prime(p);
            if p > ceiling {
                break;
            }
            batch.push(p);
        }
        if batch.is_empty() {
            return Err(Error::SearchExhausted { ceiling });
        }
        let flags: Vec<Result<bool>> = batch
            .par_iter()
            .map(|&q| admits(ctx, q, constraint))
            .collect();
        for (q, ok) in batch.into_iter().zip(flags) {
            if ok? && out.len() < count {
                out.push(q);
            }
        }
        if p > ceiling && out.len() < count {
            return Err(Error::SearchExhausted { ceiling });
        }
    }
    Ok(out)
}

/// The `count` smallest candidate primes satisfying `constraint`.
pub fn enumerate_candidate_primes(
    ctx: &SalemContext,
    constraint: Constraint,
    count: usize,
    ceiling: u64,
) -> Result<Vec<u64>> {
    candidate_primes_after(ctx, constraint, 1, count, ceiling)
}

/// Whether `f` is hyperbolic over the completion at `v`, i.e. every prime of
/// E above `v` splits in K. `None` when undecided (`p` dividing `disc(g)`,
/// or `p = 2` dividing `disc(f)` with `deg g > 1`).
pub fn local_hyperbolicity(ctx: &SalemContext, v: Place) -> Result<Option<bool>> {
    let p = match v {
        Place::Real => return Ok(Some(ctx.m() == 1)),
        Place::Finite(p) => p,
    };
    if !is_critical(ctx, p) {
        let prof = splitting_profile(ctx, p)?;
        return Ok(Some(
            prof.entries.iter().all(|e| e.behavior == Behavior::Split),
        ));
    }
    if ctx.m() == 1 {
        let mu = -ctx.g.coeff(0);
        let t = &mu * &mu - rat(4);
        return Ok(Some(is_local_square(&t, v)));
    }
    if p == 2 || divides(p, &ctx.disc_g) {
        return Ok(None);
    }
    // E is unramified at p: lift each residue factor of g and read off the
    // valuation and residue class of μ^2 - 4 in the unramified completion.
    let gi = ctx.g.int_coeffs().expect("integral trace polynomial");
    let gp = FpPoly::from_ints(p, &gi);
    let mut undecided = false;
    for (phi, _) in factor_fp(&gp) {
        match unramified_behavior(&gi, &phi, p) {
            Some(Behavior::Split) => {}
            Some(_) => return Ok(Some(false)),
            None => undecided = true,
        }
    }
    Ok((!undecided).then_some(true))
}

fn unramified_behavior(g: &[Int], phi: &FpPoly, p: u64) -> Option<Behavior> {
    let pz = Int::from(p);
    let mut k = 8u32;
    while k <= 256 {
        let m = pz.pow(k);
        let lifted = crate::polyalg::zfactor_hensel(g, phi, p, k);
        let modulus = UniPoly::from_bigints(&lifted);
        let t = UniPoly::from_ints(&[-4, 0, 1]).rem(&modulus);
        let coeffs: Vec<Int> = t
            .int_coeffs()?
            .iter()
            .map(|c| c.mod_floor(&m))
            .collect();
        let v = coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| valuation(c, p))
            .min();
        match v {
            Some(v) if v < k => {
                if v % 2 == 1 {
                    return Some(Behavior::Ramified);
                }
                let unit: Vec<Int> = coeffs.iter().map(|c| c / pz.pow(v)).collect();
                let u = FqElem::new_unchecked(phi.monic(), &FpPoly::from_ints(p, &unit));
                return Some(if fq_is_square(&u).ok()? {
                    Behavior::Split
                } else {
                    Behavior::Inert
                });
            }
            _ => k *= 2,
        }
    }
    None
}

/// Fraction of primes in `[3, bound)`, other than the excluded ones, that
/// lie in `Σⁿˢ(K)`.
pub fn sigma_ns_density(ctx: &SalemContext, bound: u64) -> Result<f64> {
    let primes: Vec<u64> = num_prime::nt_funcs::primes(bound)
        .into_iter()
        .filter(|&p| !is_excluded(ctx, p))
        .collect();
    let hits: Vec<bool> = primes
        .par_iter()
        .map(|&p| splitting_profile(ctx, p).map(|s| s.in_sigma_ns))
        .collect::<Result<_>>()?;
    let n = hits.iter().filter(|&&b| b).count();
    Ok(n as f64 / primes.len().max(1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::salem_context;

    fn ctx(c: &[i64], n: usize) -> SalemContext {
        salem_context(&UniPoly::from_ints(c), n).unwrap()
    }

    #[test]
    fn profile_examples() {
        let c = ctx(&[1, -3, 1], 2);
        let s = splitting_profile(&c, 3).unwrap();
        assert_eq!(s.entries, vec![PrimeOfE { degree: 1, behavior: Behavior::Inert }]);
        assert!(s.in_sigma_ns);
        let s = splitting_profile(&c, 11).unwrap();
        assert_eq!(s.entries[0].behavior, Behavior::Split);
        assert!(!s.in_sigma_ns);
        let s = splitting_profile(&c, 5).unwrap();
        assert!(s.ramified_in_k_or_e && s.entries.is_empty());
        // 5 ≡ 5 mod 8 is not a 2-adic square: 2 is inert in Q(√5)
        assert!(splitting_profile(&c, 2).unwrap().in_sigma_ns);

        let q = ctx(&[1, -1, -1, -1, 1], 3);
        let s = splitting_profile(&q, 61).unwrap();
        assert_eq!(s.entries.len(), 2);
        assert!(s.in_sigma_ns && s.in_spl_h);
    }

    #[test]
    fn candidate_examples() {
        let c = ctx(&[1, -3, 1], 2);
        assert_eq!(
            enumerate_candidate_primes(&c, Constraint::SigmaNs, 4, 1000).unwrap(),
            vec![3, 7, 13, 17]
        );
        let c = ctx(&[1, -3, 1], 3);
        assert_eq!(
            enumerate_candidate_primes(&c, Constraint::SigmaNsAndSplH, 2, 1000).unwrap(),
            vec![3, 7]
        );
        assert_eq!(
            enumerate_candidate_primes(&c, Constraint::SigmaNsAndSplH, 1000, 50),
            Err(Error::SearchExhausted { ceiling: 50 })
        );
    }

    #[test]
    fn quadratic_closed_form() {
        let c = ctx(&[1, -3, 1], 2);
        for p in num_prime::nt_funcs::primes(1000) {
            if p == 2 || p == 5 {
                continue;
            }
            let expect = p % 5 == 2 || p % 5 == 3;
            assert_eq!(splitting_profile(&c, p).unwrap().in_sigma_ns, expect, "p = {p}");
        }
    }

    #[test]
    fn hyperbolicity_at_places() {
        let c = ctx(&[1, -3, 1], 2);
        assert_eq!(local_hyperbolicity(&c, Place::Real).unwrap(), Some(true));
        assert_eq!(local_hyperbolicity(&c, Place::Finite(11)).unwrap(), Some(true));
        assert_eq!(local_hyperbolicity(&c, Place::Finite(3)).unwrap(), Some(false));
        // 5 ramifies in Q(√5)
        assert_eq!(local_hyperbolicity(&c, Place::Finite(5)).unwrap(), Some(false));
        let q = ctx(&[1, -1, -1, -1, 1], 3);
        assert_eq!(local_hyperbolicity(&q, Place::Real).unwrap(), Some(false));
        // 3 divides disc(f) but not disc(g) = 13
        assert_eq!(local_hyperbolicity(&q, Place::Finite(3)).unwrap(), Some(false));
        assert_eq!(local_hyperbolicity(&q, Place::Finite(13)).unwrap(), None);
    }
}
