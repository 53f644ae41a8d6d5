use num_traits::{One, Signed, Zero};

use super::ExtRational;
use crate::error::{Error, Result};
use crate::field::{Poly, Rational};

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<Poly>,
}

fn sign_of(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p0 = p.squarefree_part();
        let mut seq = vec![p0.clone()];
        if p0.degree() == 0 {
            return Ok(SturmChain { seq });
        }
        let mut prev = p0;
        let mut cur = prev.derivative();
        while !cur.is_zero() {
            seq.push(cur.clone());
            let r = -prev.rem(&cur);
            prev = cur;
            cur = r;
        }
        Ok(SturmChain { seq })
    }

    pub fn sequence(&self) -> &[Poly] {
        &self.seq
    }

    /// The square-free polynomial heading the chain.
    pub fn base(&self) -> &Poly {
        &self.seq[0]
    }

    pub fn variations_at(&self, x: &ExtRational) -> usize {
        match x {
            ExtRational::Finite(q) => variations(self.seq.iter().map(|p| sign_of(&p.eval(q)))),
            ExtRational::PosInfinity => variations(self.seq.iter().map(|p| p.lc_sign())),
            ExtRational::NegInfinity => variations(self.seq.iter().map(|p| {
                let s = p.lc_sign();
                if p.degree() % 2 == 1 {
                    -s
                } else {
                    s
                }
            })),
        }
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &ExtRational, hi: &ExtRational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rational, hi: &Rational) -> usize {
        let at_lo = usize::from(self.base().eval(lo).is_zero());
        if lo == hi {
            return at_lo;
        }
        at_lo + self.variations_at(&ExtRational::Finite(lo.clone()))
            - self.variations_at(&ExtRational::Finite(hi.clone()))
    }
}

/// Standard Sturm chain of the square-free part of `p`.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>> {
    Ok(SturmChain::new(p)?.seq)
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn count_real_roots(p: &Poly, lo: &ExtRational, hi: &ExtRational) -> Result<usize> {
    SturmChain::new(p)?.count(lo, hi)
}

/// Bound strictly exceeding the absolute value of every root.
pub fn cauchy_bound(p: &Poly) -> Rational {
    let lc = p.lc().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.degree())
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    max + Rational::one()
}

/// An isolated real root: an exact rational, or an open interval whose
/// endpoints are non-roots and which contains exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isolated {
    Point(Rational),
    Interval(Rational, Rational),
}

/// Isolates every real root of `p`, in increasing order.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<Isolated>> {
    let chain = SturmChain::new(p)?;
    let s = chain.base().clone();
    if s.degree() == 0 {
        return Ok(Vec::new());
    }
    let m = cauchy_bound(&s);
    let mut stack = vec![(-m.clone(), m)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(
            &ExtRational::Finite(lo.clone()),
            &ExtRational::Finite(hi.clone()),
        )?;
        match n {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    let two = Rational::from_integer(2.into());
    let mut out = Vec::new();
    for (mut lo, mut hi) in found {
        // Root lies in (lo, hi]; make both endpoints non-roots.
        loop {
            if s.eval(&hi).is_zero() {
                out.push(Isolated::Point(hi));
                break;
            }
            if !s.eval(&lo).is_zero() {
                out.push(Isolated::Interval(lo, hi));
                break;
            }
            let mid = (&lo + &hi) / &two;
            let left = chain.count(
                &ExtRational::Finite(lo.clone()),
                &ExtRational::Finite(mid.clone()),
            )?;
            if left == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn fin(n: i64) -> ExtRational {
        ExtRational::Finite(int(n))
    }

    #[test]
    fn chain_examples() {
        let c = sturm_sequence(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c[2].degree() == 0 && !c[2].is_zero());
        assert_eq!(
            sturm_sequence(&p(&[-1, 1])).unwrap(),
            vec![p(&[-1, 1]), p(&[1])]
        );
        assert_eq!(sturm_sequence(&p(&[0, 0, 1])).unwrap()[0], p(&[0, 1]));
        assert_eq!(sturm_sequence(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn counting_examples() {
        assert_eq!(
            count_real_roots(&p(&[-2, 0, 1]), &fin(0), &fin(2)).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(
                &p(&[1, 0, 1]),
                &ExtRational::NegInfinity,
                &ExtRational::PosInfinity
            )
            .unwrap(),
            0
        );
        assert_eq!(
            count_real_roots(&p(&[0, -1, 0, 1]), &fin(-2), &fin(2)).unwrap(),
            3
        );
        // Half-open: the root at the upper end counts, at the lower end does not.
        assert_eq!(count_real_roots(&p(&[-1, 1]), &fin(0), &fin(1)).unwrap(), 1);
        assert_eq!(count_real_roots(&p(&[-1, 1]), &fin(1), &fin(2)).unwrap(), 0);
        assert_eq!(
            count_real_roots(&p(&[-1, 1]), &fin(2), &fin(1)),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (t - 1)(t - 1001/1000)(t^2 - 2)
        let f =
            &(&p(&[-1, 1]) * &Poly::linear_root(&crate::field::rat(1001, 1000))) * &p(&[-2, 0, 1]);
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots.len(), 4);
        let holds_one = |r: &Isolated| match r {
            Isolated::Point(x) => *x == int(1),
            Isolated::Interval(lo, hi) => *lo < int(1) && int(1) < *hi,
        };
        assert_eq!(roots.iter().filter(|r| holds_one(r)).count(), 1);
    }
}
