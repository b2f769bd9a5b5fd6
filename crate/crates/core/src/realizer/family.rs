use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::arith::{is_local_square, is_prime, squarefree_class};
use crate::brauer::{realize_even_set, realize_with_second_slot_fixed, BrauerClass, HilbertPair, DEFAULT_PAIR_BOUND};
use crate::error::{Error, Result};
use crate::exact::{Int, Rat, UniPoly};
use crate::places::{
    candidate_primes_after, search_ceiling, splitting_profile, Constraint, Place,
};
use crate::polyalg::{salem_context, SalemContext};
use crate::quadform::{is_admissible, maclachlan_commensurable, split_witt_key, QuadForm};

use super::conditions::{bf_existence_check, Check};

/// Which construction applies, determined by the parity of `n` and the
/// deficiency `n + 1 - deg f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Deficiency at least 3: only the signature condition matters.
    DefGe3,
    /// `n = 2` with a quadratic Salem polynomial.
    N2,
    /// `n ≥ 4` even, deficiency 1.
    EvenDef1,
    /// `n` odd, deficiency 2.
    OddDef2,
    /// `n` odd, deficiency 0.
    OddDef0,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::DefGe3 => "def_ge3",
            CaseTag::N2 => "n2",
            CaseTag::EvenDef1 => "even_def1",
            CaseTag::OddDef2 => "odd_def2",
            CaseTag::OddDef0 => "odd_def0",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn case_tag(n: usize, deficiency: usize) -> Result<CaseTag> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if (n + deficiency).is_multiple_of(2) {
        return Err(Error::Shape(format!(
            "deficiency {deficiency} has the wrong parity for n = {n}"
        )));
    }
    Ok(match (n % 2, deficiency) {
        (_, d) if d >= 3 => CaseTag::DefGe3,
        (0, 1) if n == 2 => CaseTag::N2,
        (0, 1) => CaseTag::EvenDef1,
        (1, 2) => CaseTag::OddDef2,
        (1, 0) => CaseTag::OddDef0,
        _ => unreachable!("parity checked above"),
    })
}

/// Whether every A-set must contain 2: the hyperbolic reference Hasse
/// invariant ramifies at 2 when `deg f / 2 ≡ 2, 3 mod 4`.
pub fn requires_two(ctx: &SalemContext) -> bool {
    let tag = case_tag(ctx.n, ctx.deficiency).expect("valid context");
    !matches!(tag, CaseTag::DefGe3 | CaseTag::N2) && matches!(ctx.m() % 4, 2 | 3)
}

/// Primes allowed in A-sets. With deficiency at least 3 only the
/// commensurability argument constrains A, so Σⁿˢ is not required.
fn constraint(ctx: &SalemContext) -> Constraint {
    let unconstrained = ctx.deficiency >= 3;
    if unconstrained && ctx.n % 2 == 1 {
        Constraint::SplH
    } else if unconstrained {
        Constraint::Any
    } else if ctx.n % 2 == 1 {
        Constraint::SigmaNsAndSplH
    } else {
        Constraint::SigmaNs
    }
}

/// Whether `p` may appear in an A-set other than as a forced 2.
fn admissible_prime(ctx: &SalemContext, p: u64) -> Result<bool> {
    let prof = splitting_profile(ctx, p)?;
    let ok = match constraint(ctx) {
        Constraint::Any => true,
        Constraint::SplH => prof.in_spl_h,
        Constraint::SigmaNs => prof.in_sigma_ns,
        Constraint::SigmaNsAndSplH => prof.in_sigma_ns && prof.in_spl_h,
    };
    Ok(ok && (ctx.n != 2 || !is_local_square(&ctx.delta_rat(), Place::Finite(p))))
}

/// Checks that `a_set` obeys the constraints of its case.
pub fn check_a_set(ctx: &SalemContext, a_set: &BTreeSet<u64>) -> Result<bool> {
    if let Some(&p) = a_set.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    if a_set.len() % 2 == 1 {
        return Ok(false);
    }
    let forced = requires_two(ctx);
    if forced && !a_set.contains(&2) {
        return Ok(false);
    }
    for &p in a_set {
        if p == 2 && forced {
            continue;
        }
        if !admissible_prime(ctx, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pairs `{c_i, c_j}` (`i < j`) in colexicographic order: `{c0,c1}`,
/// `{c0,c2}`, `{c1,c2}`, `{c0,c3}`, ...
fn colex_pairs(c: &[u64], count: usize) -> Vec<BTreeSet<u64>> {
    let mut out = Vec::with_capacity(count);
    'outer: for j in 1..c.len() {
        for i in 0..j {
            if out.len() == count {
                break 'outer;
            }
            out.push(BTreeSet::from([c[i], c[j]]));
        }
    }
    out
}

fn candidates(ctx: &SalemContext, count: usize) -> Result<Vec<u64>> {
    let ceiling = search_ceiling();
    let mut out = Vec::with_capacity(count);
    let mut after = 1;
    while out.len() < count {
        let batch = candidate_primes_after(ctx, constraint(ctx), after, count - out.len(), ceiling)?;
        after = *batch.last().expect("nonempty batch");
        for p in batch {
            if admissible_prime(ctx, p)? {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// The first `count` A-sets of the case: `{2, p}` over the candidate primes
/// when 2 is forced, otherwise pairs of candidate primes in colex order.
pub fn enumerate_a_sets(ctx: &SalemContext, count: usize) -> Result<Vec<BTreeSet<u64>>> {
    if count == 0 {
        return Err(Error::DegenerateInput("count must be at least 1".into()));
    }
    if requires_two(ctx) {
        return Ok(candidates(ctx, count)?
            .into_iter()
            .map(|p| BTreeSet::from([2, p]))
            .collect());
    }
    let mut k = 2;
    while k * (k - 1) / 2 < count {
        k += 1;
    }
    Ok(colex_pairs(&candidates(ctx, k)?, count))
}

fn places_of(a_set: &BTreeSet<u64>) -> BTreeSet<Place> {
    a_set.iter().map(|&p| Place::Finite(p)).collect()
}

/// The quadratic form attached to an A-set, and the Hilbert pair used.
///
/// For `n = 2` this is `⟨-δa, a, 1⟩` with `(a, δ)` ramified at A; otherwise
/// `⟨-Da, -Db, Dab⟩ ⊕ ⟨1⟩^(n-2)` with `(a, b) = B_A · (-1, -D)`.
pub fn build_candidate_form(ctx: &SalemContext, a_set: &BTreeSet<u64>) -> Result<(QuadForm, HilbertPair)> {
    let target = places_of(a_set);
    if ctx.n == 2 {
        let delta = ctx.delta_rat();
        let a = realize_with_second_slot_fixed(&target, &delta, DEFAULT_PAIR_BOUND)?;
        let ar = Rat::from_integer(a.clone());
        let q = QuadForm::diagonal(&[-&delta * &ar, ar.clone(), Rat::from_integer(1.into())])?;
        let class = BrauerClass::of_pair(&ar, &delta)?;
        let pair = HilbertPair {
            a,
            b: ctx.delta.clone(),
            class,
        };
        return Ok((q, pair));
    }
    let d = ctx.d_rat();
    let m1 = Rat::from_integer((-1).into());
    let minus_one_minus_d = BrauerClass::of_pair(&m1, &-&d)?;
    let target = BrauerClass::new(target)?.product(&minus_one_minus_d);
    let pair = realize_even_set(target.ram(), DEFAULT_PAIR_BOUND)?;
    let a = Rat::from_integer(pair.a.clone());
    let b = Rat::from_integer(pair.b.clone());
    let mut diag = vec![-&d * &a, -&d * &b, &d * &a * &b];
    diag.extend((0..ctx.n - 2).map(|_| Rat::from_integer(1.into())));
    Ok((QuadForm::diagonal(&diag)?, pair))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub ctx: SalemContext,
    pub n: usize,
    pub case_tag: CaseTag,
    pub a_set: BTreeSet<u64>,
    pub hilbert_pair: HilbertPair,
    pub q: QuadForm,
    /// `F = f (x+1)^deficiency`.
    pub char_poly: UniPoly,
    pub checks: Vec<Check>,
}

impl RealizationCertificate {
    /// Commensurability key: the Witt class for `n` even; for `n` odd the
    /// discriminant class with the split part of the Witt class.
    pub fn class_key(&self) -> Result<(Option<Int>, BTreeSet<Place>)> {
        class_key(&self.q, self.n)
    }
}

pub fn class_key(q: &QuadForm, n: usize) -> Result<(Option<Int>, BTreeSet<Place>)> {
    if n.is_multiple_of(2) {
        Ok((None, q.witt()?.ram().clone()))
    } else {
        Ok((Some(q.disc_class()), split_witt_key(q)?))
    }
}

/// All certificate checks, recomputed from `f`, `n`, the A-set and the
/// diagonal of `q`.
pub fn validate(
    f: &UniPoly,
    n: usize,
    a_set: &BTreeSet<u64>,
    q: &QuadForm,
    pair: &HilbertPair,
) -> Result<Vec<Check>> {
    let ctx = salem_context(f, n)?;
    let mut checks = vec![Check::new("a_constraint", check_a_set(&ctx, a_set)?)];
    checks.push(Check::new("admissible", is_admissible(q, n)?));
    let det_ok = q.det_class() == squarefree_class(&ctx.d_rat())?;
    let report = bf_existence_check(&ctx, q)?;
    if !report.checks.iter().any(|c| c.name == "det_condition") {
        checks.push(Check::new("det_condition", det_ok));
    }
    checks.extend(report.checks);
    let b_a = BrauerClass::new(places_of(a_set))?;
    let pair_class = BrauerClass::of_pair(&Rat::from_integer(pair.a.clone()), &Rat::from_integer(pair.b.clone()))?;
    let expected_pair = if n == 2 {
        b_a.clone()
    } else {
        b_a.product(&BrauerClass::of_pair(&Rat::from_integer((-1).into()), &-ctx.d_rat())?)
    };
    checks.push(Check::new(
        "hasse_target_met",
        q.hasse()? == b_a && pair_class == expected_pair && pair.class == pair_class,
    ));
    Ok(checks)
}

fn first_failure(checks: &[Check]) -> Option<&'static str> {
    checks.iter().find(|c| !c.pass).map(|c| c.name)
}

/// Builds and checks the form attached to `a_set`.
pub fn certify(ctx: &SalemContext, a_set: &BTreeSet<u64>) -> Result<RealizationCertificate> {
    if !check_a_set(ctx, a_set)? {
        return Err(Error::CheckFailed("a_constraint".into()));
    }
    let (q, pair) = build_candidate_form(ctx, a_set)?;
    let checks = validate(&ctx.f, ctx.n, a_set, &q, &pair)?;
    if let Some(name) = first_failure(&checks) {
        return Err(Error::CheckFailed(name.into()));
    }
    Ok(RealizationCertificate {
        ctx: ctx.clone(),
        n: ctx.n,
        case_tag: case_tag(ctx.n, ctx.deficiency)?,
        a_set: a_set.clone(),
        hilbert_pair: pair,
        q,
        char_poly: ctx.full_char_poly(),
        checks,
    })
}

/// Recomputes every check of a certificate without trusting stored values.
pub fn revalidate(cert: &RealizationCertificate) -> Result<bool> {
    let checks = validate(&cert.ctx.f, cert.n, &cert.a_set, &cert.q, &cert.hilbert_pair)?;
    Ok(first_failure(&checks).is_none() && checks == cert.checks)
}

/// `count` certified forms that are pairwise not commensurable.
pub fn incommensurable_family(ctx: &SalemContext, count: usize) -> Result<Vec<RealizationCertificate>> {
    let mut out: Vec<RealizationCertificate> = Vec::with_capacity(count);
    let mut tried = 0;
    let mut want = count;
    while out.len() < count {
        let sets = enumerate_a_sets(ctx, want)?;
        let fresh: Vec<Result<RealizationCertificate>> = sets[tried..]
            .par_iter()
            .map(|a| certify(ctx, a))
            .collect();
        tried = sets.len();
        for cert in fresh {
            let cert = cert?;
            if out.len() == count {
                break;
            }
            let mut distinct = true;
            for other in &out {
                if maclachlan_commensurable(&cert.q, &other.q, ctx.n)? {
                    distinct = false;
                    break;
                }
            }
            if distinct {
                out.push(cert);
            }
        }
        want = tried + (count - out.len()).max(1);
    }
    Ok(out)
}
