use num_traits::{Signed, Zero};

use super::{Rat, UniPoly};
use crate::error::{Error, Result};

/// Endpoint of a real interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl From<Rat> for Bound {
    fn from(r: Rat) -> Self {
        Bound::Finite(r)
    }
}

/// Sturm chain of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DegenerateInput("Sturm chain of the zero polynomial".into()));
        }
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone(), p0.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            chain.push(-&r);
        }
        chain.pop();
        Ok(Self { chain })
    }

    fn variations(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().filter_map(|q| {
            let s = match at {
                Bound::Finite(x) => {
                    let v = q.eval(x);
                    if v.is_zero() {
                        return None;
                    }
                    v.is_positive()
                }
                Bound::PosInf => q.lead().is_positive(),
                Bound::NegInf => q.lead().is_positive() == (q.degree() % 2 == 0),
            };
            Some(s)
        });
        let mut count = 0;
        let mut prev: Option<bool> = None;
        for s in signs {
            if prev.is_some_and(|p| p != s) {
                count += 1;
            }
            prev = Some(s);
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        if !bound_lt(lo, hi) {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

fn bound_lt(a: &Bound, b: &Bound) -> bool {
    match (a, b) {
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        (Bound::NegInf, _) | (_, Bound::PosInf) => true,
        (Bound::Finite(x), Bound::Finite(y)) => x < y,
    }
}

/// Exact number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Shrinks `(lo, hi]`, which must contain exactly one distinct root of `p`,
/// to an interval of width at most `width` still containing that root.
pub fn bisect_root(p: &UniPoly, lo: &Rat, hi: &Rat, width: &Rat) -> Result<(Rat, Rat)> {
    let chain = SturmChain::new(p)?;
    let (mut a, mut b) = (lo.clone(), hi.clone());
    let found = chain.count(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
    if found != 1 {
        return Err(Error::DegenerateInput(format!(
            "interval holds {found} roots, expected exactly one"
        )));
    }
    let two = Rat::from_integer(2.into());
    while &b - &a > *width {
        let mid = (&a + &b) / &two;
        if chain.count(&Bound::Finite(a.clone()), &Bound::Finite(mid.clone())) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn counts_on_examples() {
        let f = p(&[1, -3, 1]);
        assert_eq!(sturm_count(&f, &Bound::Finite(rat(2)), &Bound::PosInf).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
        assert_eq!(
            sturm_count(&p(&[-1, 0, 1]), &Bound::Finite(rat(-2)), &Bound::Finite(rat(2))).unwrap(),
            2
        );
        assert!(matches!(
            sturm_count(&UniPoly::zero(), &Bound::NegInf, &Bound::PosInf),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn half_open_convention() {
        // roots at 1 and 2
        let f = p(&[2, -3, 1]);
        let c = |a: i64, b: i64| {
            sturm_count(&f, &Bound::Finite(rat(a)), &Bound::Finite(rat(b))).unwrap()
        };
        assert_eq!(c(0, 1), 1);
        assert_eq!(c(1, 2), 1);
        assert_eq!(c(1, 3), 1);
        assert_eq!(c(0, 2), 2);
        // repeated roots are counted once
        let sq = &f * &f;
        assert_eq!(sturm_count(&sq, &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
    }

    #[test]
    fn bisection_brackets_golden_square() {
        let f = p(&[1, -3, 1]);
        let w = ratio(1, 1 << 40);
        let (a, b) = bisect_root(&f, &rat(2), &rat(3), &w).unwrap();
        assert!(&b - &a <= w);
        let approx = crate::exact::rat_to_f64(&b);
        assert!((approx - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-11);
    }
}
