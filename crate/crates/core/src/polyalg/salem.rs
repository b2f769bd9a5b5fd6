//! Self-reciprocal polynomials, Salem verification and the derived data of a
//! Salem number in a given dimension.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::zfactor::{factor_over_q, factor_over_z};
use crate::arith::squarefree_class;
use crate::error::{Error, Result};
use crate::exact::{bisect_root, rat, Bound, Int, Rat, SturmChain, UniPoly};

/// Width of the exact brackets around `λ` and `λ + 1/λ`.
pub fn bracket_width() -> Rat {
    Rat::new(Int::one(), Int::one() << 50)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    /// `Some(ε)` when `F(x) = ε x^deg F(1/x)`.
    pub epsilon: Option<i8>,
    /// `F*(x) = x^deg F(1/x) / F(0)`.
    pub star: UniPoly,
}

pub fn star(f: &UniPoly) -> Result<UniPoly> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(f.reversed().scale(&(Rat::one() / c0)))
}

pub fn symmetry_check(f: &UniPoly) -> Result<SymmetryReport> {
    let star = star(f)?;
    let rev = f.reversed();
    let epsilon = if rev == *f {
        Some(1)
    } else if rev == -f {
        Some(-1)
    } else {
        None
    };
    Ok(SymmetryReport { epsilon, star })
}

/// `x^k + x^-k` as a polynomial in `y = x + 1/x`, for `k = 0..=m`.
fn chebyshev_like(m: usize) -> Vec<UniPoly> {
    let y = UniPoly::x();
    let mut out = vec![UniPoly::constant(rat(2)), y.clone()];
    while out.len() <= m {
        let n = out.len();
        let next = &(&y * &out[n - 1]) - &out[n - 2];
        out.push(next);
    }
    out.truncate(m + 1);
    out
}

/// The polynomial `g` of degree `m` with `f(x) = x^m g(x + 1/x)`.
pub fn trace_substitute(f: &UniPoly) -> Result<UniPoly> {
    let d = f.degree();
    if f.is_zero() || d % 2 == 1 || f.reversed() != *f {
        return Err(Error::NotReciprocal);
    }
    let m = d / 2;
    let p = chebyshev_like(m);
    let mut g = UniPoly::constant(f.coeff(m));
    for k in 1..=m {
        g = &g + &p[k].scale(&f.coeff(m + k));
    }
    Ok(g)
}

/// Inverse of [`trace_substitute`]: `x^m g(x + 1/x)`.
pub fn trace_expand(g: &UniPoly) -> UniPoly {
    let m = g.degree();
    // y = (x^2 + 1) / x, so x^m g(y) = sum g_k (x^2+1)^k x^(m-k)
    let x2p1 = UniPoly::from_ints(&[1, 0, 1]);
    let mut out = UniPoly::zero();
    for k in 0..=m {
        let term = &x2p1.pow(k) * &UniPoly::monomial(g.coeff(k), m - k);
        out = &out + &term;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSalemReason {
    DegreeTooSmall,
    NotIntegral,
    NotMonic,
    OddDegree,
    NotSelfReciprocal,
    Reducible(Vec<(UniPoly, usize)>),
    /// The trace polynomial vanishes at `2` or `-2`.
    TraceRootAtTwo,
    /// Root counts of the trace polynomial: roots above 2, roots in
    /// `(-2, 2)`, and its degree.
    TraceRoots {
        above_two: usize,
        inside: usize,
        degree: usize,
    },
}

impl fmt::Display for NotSalemReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegreeTooSmall => write!(f, "degree below 2"),
            Self::NotIntegral => write!(f, "coefficients are not all integers"),
            Self::NotMonic => write!(f, "not monic"),
            Self::OddDegree => write!(f, "odd degree"),
            Self::NotSelfReciprocal => write!(f, "not self-reciprocal"),
            Self::Reducible(fs) => {
                let parts: Vec<String> = fs
                    .iter()
                    .map(|(g, e)| if *e == 1 { format!("({g})") } else { format!("({g})^{e}") })
                    .collect();
                write!(f, "reducible: {}", parts.join(" * "))
            }
            Self::TraceRootAtTwo => write!(f, "trace polynomial vanishes at 2 or -2"),
            Self::TraceRoots {
                above_two,
                inside,
                degree,
            } => write!(
                f,
                "trace polynomial of degree {degree} has {above_two} roots above 2 and {inside} in (-2, 2)"
            ),
        }
    }
}

impl NotSalemReason {
    /// Short machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Self::DegreeTooSmall => "degree_too_small",
            Self::NotIntegral => "not_integral",
            Self::NotMonic => "not_monic",
            Self::OddDegree => "odd_degree",
            Self::NotSelfReciprocal => "not_self_reciprocal",
            Self::Reducible(_) => "reducible",
            Self::TraceRootAtTwo => "trace_root_at_two",
            Self::TraceRoots { .. } => "trace_root_pattern",
        }
    }
}

/// Evidence that a polynomial is a Salem polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalemCertificate {
    pub f: UniPoly,
    pub g: UniPoly,
    /// Roots of `g` in `(2, ∞)`; always 1.
    pub roots_above_two: usize,
    /// Roots of `g` in `(-2, 2)`; always `deg g - 1`.
    pub roots_inside: usize,
    /// `λ ∈ (lambda_lo, lambda_hi]`.
    pub lambda_lo: Rat,
    pub lambda_hi: Rat,
    /// `λ + 1/λ ∈ (trace_lo, trace_hi]`.
    pub trace_lo: Rat,
    pub trace_hi: Rat,
}

impl SalemCertificate {
    pub fn lambda(&self) -> f64 {
        crate::exact::rat_to_f64(&((&self.lambda_lo + &self.lambda_hi) / rat(2)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SalemVerdict {
    Salem(SalemCertificate),
    NotSalem(NotSalemReason),
}

impl SalemVerdict {
    pub fn is_salem(&self) -> bool {
        matches!(self, SalemVerdict::Salem(_))
    }
}

/// Upper bound on the absolute values of the real roots.
fn cauchy_bound(p: &UniPoly) -> Rat {
    let l = p.lead().abs();
    let m = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    Rat::one() + m / l
}

/// Decides whether `f` is a Salem polynomial: monic, integral, irreducible,
/// self-reciprocal of even degree, with trace polynomial having exactly one
/// root above 2 and all other roots in `(-2, 2)`.
pub fn classify_salem(f: &UniPoly) -> Result<SalemVerdict> {
    use NotSalemReason::*;
    let no = |r| Ok(SalemVerdict::NotSalem(r));
    if f.degree() < 2 || f.is_zero() {
        return no(DegreeTooSmall);
    }
    if !f.is_integral() {
        return no(NotIntegral);
    }
    if !f.is_monic() {
        return no(NotMonic);
    }
    if f.degree() % 2 == 1 {
        return no(OddDegree);
    }
    if f.reversed() != *f {
        return no(NotSelfReciprocal);
    }
    let fs = factor_over_z(f)?;
    if fs.factors.len() != 1 || fs.factors[0].1 != 1 {
        return no(Reducible(fs.factors));
    }
    let g = trace_substitute(f)?;
    let two = rat(2);
    if g.eval(&two).is_zero() || g.eval(&-&two).is_zero() {
        return no(TraceRootAtTwo);
    }
    let chain = SturmChain::new(&g)?;
    let above_two = chain.count(&Bound::Finite(two.clone()), &Bound::PosInf);
    let inside = chain.count(&Bound::Finite(-&two), &Bound::Finite(two.clone()));
    let m = g.degree();
    if above_two != 1 || inside + 1 != m {
        return no(TraceRoots {
            above_two,
            inside,
            degree: m,
        });
    }
    let w = bracket_width();
    let (trace_lo, trace_hi) = bisect_root(&g, &two, &cauchy_bound(&g).max(rat(3)), &w)?;
    let (lambda_lo, lambda_hi) =
        bisect_root(f, &Rat::one(), &cauchy_bound(f).max(two.clone()), &w)?;
    Ok(SalemVerdict::Salem(SalemCertificate {
        f: f.clone(),
        g,
        roots_above_two: above_two,
        roots_inside: inside,
        lambda_lo,
        lambda_hi,
        trace_lo,
        trace_hi,
    }))
}

/// Factorization of an ε-symmetric polynomial into factors of type 0
/// (`x ± 1`), type 1 (irreducible and symmetric) and type 2 (pairs `q, q*`
/// with `q ≠ q*`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDecomposition {
    pub lead: Rat,
    pub type0: Vec<(UniPoly, usize)>,
    pub type1: Vec<(UniPoly, usize)>,
    /// `(q, q*, multiplicity)`; the product contains `(q q*)^multiplicity`.
    pub type2: Vec<(UniPoly, UniPoly, usize)>,
}

impl TypeDecomposition {
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.lead.clone());
        for (q, e) in self.type0.iter().chain(&self.type1) {
            acc = &acc * &q.pow(*e);
        }
        for (q, s, e) in &self.type2 {
            acc = &acc * &(q * s).pow(*e);
        }
        acc
    }

    /// Hyperbolic over Q: every type 0 and type 1 factor has even
    /// multiplicity.
    pub fn is_hyperbolic(&self) -> bool {
        self.type0.iter().chain(&self.type1).all(|(_, e)| e % 2 == 0)
    }
}

pub fn symmetric_decompose(f: &UniPoly) -> Result<TypeDecomposition> {
    if symmetry_check(f)?.epsilon.is_none() {
        return Err(Error::NotSymmetric);
    }
    let x_minus_1 = UniPoly::from_ints(&[-1, 1]);
    let x_plus_1 = UniPoly::from_ints(&[1, 1]);
    let mut out = TypeDecomposition {
        lead: f.lead(),
        type0: Vec::new(),
        type1: Vec::new(),
        type2: Vec::new(),
    };
    for (q, e) in factor_over_q(f)? {
        if q == x_minus_1 || q == x_plus_1 {
            out.type0.push((q, e));
            continue;
        }
        let s = star(&q)?;
        if s == q {
            out.type1.push((q, e));
        } else if q.canonical_cmp(&s).is_lt() {
            out.type2.push((q, s, e));
        }
    }
    Ok(out)
}

/// A verified Salem polynomial with the data attached to a dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalemContext {
    pub f: UniPoly,
    /// Minimal polynomial of `λ + 1/λ`.
    pub g: UniPoly,
    pub n: usize,
    /// `f(1) f(-1)`.
    pub d: Int,
    /// Squarefree representative of `(-1)^(n(n+1)/2) D`.
    pub delta: Int,
    /// `n + 1 - deg f`.
    pub deficiency: usize,
    pub disc_f: Int,
    pub disc_g: Int,
    pub certificate: SalemCertificate,
}

impl SalemContext {
    /// Half the degree of `f`.
    pub fn m(&self) -> usize {
        self.g.degree()
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    /// `F = f (x+1)^deficiency`.
    pub fn full_char_poly(&self) -> UniPoly {
        &self.f * &UniPoly::from_ints(&[1, 1]).pow(self.deficiency)
    }

    pub fn d_rat(&self) -> Rat {
        Rat::from_integer(self.d.clone())
    }

    pub fn delta_rat(&self) -> Rat {
        Rat::from_integer(self.delta.clone())
    }

    pub fn lambda(&self) -> f64 {
        self.certificate.lambda()
    }
}

pub fn salem_context(f: &UniPoly, n: usize) -> Result<SalemContext> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let certificate = match classify_salem(f)? {
        SalemVerdict::Salem(c) => c,
        SalemVerdict::NotSalem(r) => return Err(Error::NotSalem(r.to_string())),
    };
    let deg = f.degree();
    if deg > n + 1 {
        return Err(Error::DimensionTooSmall {
            degree: deg,
            bound: n + 1,
        });
    }
    let d = (f.eval(&rat(1)) * f.eval(&rat(-1))).to_integer();
    assert!(d.is_negative(), "f(1) f(-1) must be negative for a Salem polynomial");
    let sign = if (n * (n + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let delta = squarefree_class(&Rat::from_integer(&d * sign))?;
    let g = certificate.g.clone();
    Ok(SalemContext {
        f: f.clone(),
        n,
        delta,
        deficiency: n + 1 - deg,
        disc_f: f.discriminant().to_integer(),
        disc_g: g.discriminant().to_integer(),
        g,
        d,
        certificate,
    })
}
