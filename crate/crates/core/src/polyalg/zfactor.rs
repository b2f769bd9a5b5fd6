//! Factorization over Z and Q: squarefree decomposition, factorization
//! modulo a good prime, Hensel lifting and subset recombination.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::{factor_fp, FpPoly};
use crate::arith::next_prime;
use crate::error::{Error, Result};
use crate::exact::{Int, Rat, UniPoly};

/// `f = content * prod factors_i ^ e_i` with primitive integer factors of
/// positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZFactorization {
    pub content: Rat,
    pub factors: Vec<(UniPoly, usize)>,
}

impl ZFactorization {
    pub fn product(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.content.clone()), |acc, (g, e)| &acc * &g.pow(*e))
    }
}

/// Factorization into Q-irreducible primitive integer polynomials, ordered by
/// degree then coefficients.
pub fn factor_over_z(f: &UniPoly) -> Result<ZFactorization> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("cannot factor the zero polynomial".into()));
    }
    let mut factors = Vec::new();
    for (part, e) in f.squarefree_decomposition() {
        let (_, prim) = part.primitive_part();
        for g in factor_squarefree(&prim)? {
            factors.push((UniPoly::from_bigints(&g), e));
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
    let lead_prod: Rat = factors
        .iter()
        .map(|(g, e)| num_traits::pow(g.lead(), *e))
        .product();
    let content = f.lead() / lead_prod;
    Ok(ZFactorization { content, factors })
}

/// Monic Q-irreducible factors with multiplicities.
pub fn factor_over_q(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut out: Vec<(UniPoly, usize)> = factor_over_z(f)?
        .factors
        .into_iter()
        .map(|(g, e)| (g.monic(), e))
        .collect();
    out.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
    Ok(out)
}

pub fn is_irreducible_over_q(f: &UniPoly) -> Result<bool> {
    if f.degree() == 0 {
        return Ok(false);
    }
    let fs = factor_over_z(f)?;
    Ok(fs.factors.len() == 1 && fs.factors[0].1 == 1)
}

fn sym_mod(v: &Int, m: &Int) -> Int {
    let r = v.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

fn zmul(a: &[Int], b: &[Int], m: &Int) -> Vec<Int> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|v| v.mod_floor(m)).collect()
}

/// Factors of a squarefree primitive integer polynomial.
fn factor_squarefree(f: &[Int]) -> Result<Vec<Vec<Int>>> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    let lc = f[n].clone();
    let (p, modular) = choose_prime(f)?;
    if modular.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }

    // Mignotte-type bound on coefficients of lc * (monic factor).
    let norm2: Int = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (Int::one() << n) * (norm2.sqrt() + 1u32);
    let pz = Int::from(p);
    let mut k = 1u32;
    let mut modulus = pz.clone();
    while modulus <= &bound * 2u32 {
        modulus *= &pz;
        k += 1;
    }

    let lifted = lift_all(f, &modular, p, k);
    Ok(recombine(f.to_vec(), lifted, &modulus))
}

/// Picks among the first few good primes the one with the fewest modular
/// factors.
fn choose_prime(f: &[Int]) -> Result<(u64, Vec<FpPoly>)> {
    let n = f.len() - 1;
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut good = 0;
    let mut p = 2;
    while good < 5 {
        p = next_prime(p);
        if p > 1 << 20 {
            break;
        }
        let fp = FpPoly::from_ints(p, f);
        if fp.degree() != n || !fp.gcd(&fp.derivative()).is_one() {
            continue;
        }
        good += 1;
        let fs: Vec<FpPoly> = factor_fp(&fp).into_iter().map(|(g, _)| g).collect();
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            let done = fs.len() == 1;
            best = Some((p, fs));
            if done {
                break;
            }
        }
    }
    best.ok_or_else(|| Error::TooLarge("no good prime found for factorization".into()))
}

/// Lifts `f ≡ lc(f) * prod u_i (mod p)` to monic factors modulo `p^k`.
fn lift_all(f: &[Int], us: &[FpPoly], p: u64, k: u32) -> Vec<Vec<Int>> {
    let m = Int::from(p).pow(k);
    let n = f.len() - 1;
    if us.len() == 1 {
        let inv = crate::arith::mod_inverse(&f[n], &m).expect("p does not divide lc");
        return vec![f.iter().map(|c| (c * &inv).mod_floor(&m)).collect()];
    }
    let lc_p = FpPoly::from_ints(p, &f[n..]).coeff(0);
    let rest = us[1..]
        .iter()
        .fold(FpPoly::new(p, vec![lc_p]), |acc, u| acc.mul(u));
    let (g, h) = lift_pair(f, &us[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(lift_all(&h, &us[1..], p, k));
    out
}

/// Linear Hensel lifting of `f ≡ g0 * h0 (mod p)` with `g0` monic and
/// `gcd(g0, h0) = 1`, to `f ≡ g * h (mod p^k)`, `g` monic and
/// `lead(h) = lead(f)`.
fn lift_pair(f: &[Int], g0: &FpPoly, h0: &FpPoly, p: u64, k: u32) -> (Vec<Int>, Vec<Int>) {
    let pz = Int::from(p);
    let n = f.len() - 1;
    let mk = pz.pow(k);
    let (_, s, t) = g0.ext_gcd(h0);
    debug_assert!(s.mul(g0).add(&t.mul(h0)).is_one());
    let mut g = g0.to_ints();
    let mut h = h0.to_ints();
    let hd = h.len() - 1;
    h[hd] = f[n].mod_floor(&mk);
    let mut pi = pz.clone();
    for _ in 1..k {
        let next = &pi * &pz;
        let gh = zmul(&g, &h, &next);
        let e: Vec<Int> = (0..f.len())
            .map(|i| {
                let v = (&f[i] - gh.get(i).cloned().unwrap_or_default()).mod_floor(&next);
                debug_assert!((&v % &pi).is_zero());
                v / &pi
            })
            .collect();
        let e = FpPoly::from_ints(p, &e);
        let dg = t.mul(&e).rem(g0);
        let dh = e.sub(&dg.mul(h0)).exact_div(g0);
        for (i, c) in dg.coeffs().iter().enumerate() {
            g[i] += &pi * c;
        }
        for (i, c) in dh.coeffs().iter().enumerate() {
            h[i] += &pi * c;
        }
        pi = next;
    }
    (
        g.iter().map(|c| c.mod_floor(&mk)).collect(),
        h.iter().map(|c| c.mod_floor(&mk)).collect(),
    )
}

/// Lifts a monic factor `phi` of `g mod p`, coprime to its cofactor, to a
/// monic factor of `g` modulo `p^k`. `g` must be monic.
pub(crate) fn hensel_factor(g: &[Int], phi: &FpPoly, p: u64, k: u32) -> Vec<Int> {
    let gp = FpPoly::from_ints(p, g);
    let cofactor = gp.exact_div(phi);
    lift_pair(g, phi, &cofactor, p, k).0
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn primitive(v: &[Int]) -> Vec<Int> {
    let mut g = v.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    v.iter().map(|c| c / &g).collect()
}

/// Exact quotient of integer polynomials if `d` divides `f` over Z.
fn int_div(f: &[Int], d: &[Int]) -> Option<Vec<Int>> {
    let (q, r) = UniPoly::from_bigints(f).div_rem(&UniPoly::from_bigints(d));
    if !r.is_zero() {
        return None;
    }
    q.int_coeffs()
}

fn recombine(mut f: Vec<Int>, mut us: Vec<Vec<Int>>, m: &Int) -> Vec<Vec<Int>> {
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= us.len() {
        let mut hit = None;
        for subset in combinations(us.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc];
            for &i in &subset {
                g = zmul(&g, &us[i], m);
            }
            let g: Vec<Int> = g.iter().map(|c| sym_mod(c, m)).collect();
            let g = primitive(&g);
            if g[0].is_zero() || !(&f[0] % &g[0]).is_zero() {
                continue;
            }
            if let Some(q) = int_div(&f, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    us.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        found.push(primitive(&f));
    }
    found
}

/// Sum of `degree * multiplicity`.
pub fn total_degree(fs: &[(UniPoly, usize)]) -> usize {
    fs.iter().map(|(g, e)| g.degree() * e).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn examples() {
        let q = p(&[1, -1, -1, -1, 1]);
        let fs = factor_over_z(&q).unwrap();
        assert_eq!(fs.factors, vec![(q.clone(), 1)]);

        let fs = factor_over_z(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            fs.factors,
            vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1), (p(&[1, 0, 1]), 1)]
        );

        let f = &p(&[1, -3, 1]) * &p(&[1, 1]).pow(2);
        let fs = factor_over_z(&f).unwrap();
        assert_eq!(fs.factors, vec![(p(&[1, 1]), 2), (p(&[1, -3, 1]), 1)]);
        assert_eq!(fs.product(), f);
    }

    #[test]
    fn lehmer_is_irreducible() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(is_irreducible_over_q(&lehmer).unwrap());
    }

    #[test]
    fn swinnerton_dyer_style_products() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
        assert!(is_irreducible_over_q(&p(&[1, 0, -10, 0, 1])).unwrap());
        // product of many quadratics needing recombination
        let f = &(&p(&[1, 0, -10, 0, 1]) * &p(&[-2, 0, 1])) * &p(&[3, 0, 0, 1]);
        let fs = factor_over_z(&f).unwrap();
        assert_eq!(fs.product(), f);
        assert_eq!(fs.factors.len(), 3);
    }

    #[test]
    fn content_and_non_monic() {
        let f = &p(&[6, 4]) * &p(&[-1, 3]);
        let fs = factor_over_z(&f).unwrap();
        assert_eq!(fs.product(), f);
        assert_eq!(fs.factors, vec![(p(&[-1, 3]), 1), (p(&[3, 2]), 1)]);
        assert_eq!(fs.content, Rat::from_integer(2.into()));
    }

    #[test]
    fn rational_monic_factors() {
        let f = UniPoly::new(vec![
            Rat::one(),
            Rat::new((-5).into(), 2.into()),
            Rat::one(),
        ]);
        let fs = factor_over_q(&f).unwrap();
        assert_eq!(
            fs,
            vec![
                (p(&[-2, 1]), 1),
                (UniPoly::new(vec![Rat::new((-1).into(), 2.into()), Rat::one()]), 1)
            ]
        );
    }
}
