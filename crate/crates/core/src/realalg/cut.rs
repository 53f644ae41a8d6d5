use std::fmt;

use num_traits::{One, Zero};

use super::number::{RealAlgebraic, REFINEMENT_BUDGET};
use super::sturm::{cauchy_bound, SturmChain};
use super::{ExtRational, Sign};
use crate::error::{Error, Result};
use crate::field::{poly_gcd, Poly, RatFunc, Rational};

/// Placement of `t` relative to the real algebraic numbers, which fixes an
/// ordering of Q(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingCut {
    PlusInfinity,
    MinusInfinity,
    RightOf(RealAlgebraic),
    LeftOf(RealAlgebraic),
}

impl OrderingCut {
    /// The mirror cut under `t -> -t`.
    pub fn reflect(&self) -> OrderingCut {
        match self {
            OrderingCut::PlusInfinity => OrderingCut::MinusInfinity,
            OrderingCut::MinusInfinity => OrderingCut::PlusInfinity,
            OrderingCut::RightOf(r) => OrderingCut::LeftOf(r.neg()),
            OrderingCut::LeftOf(r) => OrderingCut::RightOf(r.neg()),
        }
    }
}

impl fmt::Display for OrderingCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderingCut::PlusInfinity => f.write_str("t -> +inf"),
            OrderingCut::MinusInfinity => f.write_str("t -> -inf"),
            OrderingCut::RightOf(r) => write!(f, "t -> {r}+"),
            OrderingCut::LeftOf(r) => write!(f, "t -> {r}-"),
        }
    }
}

/// Evidence for a sign under a cut: `f` has neither zeros nor poles on
/// `interval`, the cut lies at its inner end, and `f(sample) = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCertificate {
    pub sign: Sign,
    pub sample: Rational,
    pub value: Rational,
    pub interval: (ExtRational, ExtRational),
}

fn reflect_rf(f: &RatFunc) -> RatFunc {
    RatFunc::new(f.num().reflect(), f.den().reflect())
}

fn certificate(
    f: &RatFunc,
    sample: Rational,
    interval: (ExtRational, ExtRational),
) -> SignCertificate {
    let value = f.evaluate(&sample).expect("sample avoids every pole");
    SignCertificate {
        sign: Sign::of(&value),
        sample,
        value,
        interval,
    }
}

/// Certificate for a non-zero `f` with `t` just right of `r`.
fn right_of(f: &RatFunc, g: &Poly, r: &RealAlgebraic) -> Result<SignCertificate> {
    if let Some(q) = r.as_rational() {
        let chain = SturmChain::new(g)?;
        let mut step = Rational::one();
        for _ in 0..REFINEMENT_BUDGET {
            let hi = q + &step;
            let lo_e = ExtRational::Finite(q.clone());
            let hi_e = ExtRational::Finite(hi.clone());
            if chain.count(&lo_e, &hi_e)? == 0 {
                return Ok(certificate(f, hi, (lo_e, hi_e)));
            }
            step /= Rational::from_integer(2.into());
        }
        return Err(Error::RefinementBudget(REFINEMENT_BUDGET));
    }
    // Irrational r: strip its own minimal polynomial, then refine until the
    // isolating interval carries no other zero or pole.
    let mut rest = g.clone();
    let h = poly_gcd(g, r.defining());
    if h.degree() > 0 {
        rest = rest.exact_div(&h).expect("gcd divides");
    }
    let chain = SturmChain::new(&rest)?;
    let mut x = r.clone();
    for _ in 0..REFINEMENT_BUDGET {
        let (lo, hi) = x.interval();
        if chain.count_closed(lo, hi) == 0 {
            let interval = (
                ExtRational::Finite(lo.clone()),
                ExtRational::Finite(hi.clone()),
            );
            return Ok(certificate(f, hi.clone(), interval));
        }
        x = x.bisect();
    }
    Err(Error::RefinementBudget(REFINEMENT_BUDGET))
}

/// Sign of `f` under the ordering of Q(t) given by `cut`, with evidence.
pub fn sign_certificate(f: &RatFunc, cut: &OrderingCut) -> Result<SignCertificate> {
    if f.is_zero() {
        return Ok(SignCertificate {
            sign: Sign::Zero,
            sample: Rational::zero(),
            value: Rational::zero(),
            interval: (ExtRational::NegInfinity, ExtRational::PosInfinity),
        });
    }
    match cut {
        OrderingCut::PlusInfinity => {
            let g = (f.num() * f.den()).squarefree_part();
            let b = cauchy_bound(&g);
            Ok(certificate(
                f,
                b.clone(),
                (ExtRational::Finite(b), ExtRational::PosInfinity),
            ))
        }
        OrderingCut::RightOf(r) => {
            let g = (f.num() * f.den()).squarefree_part();
            right_of(f, &g, r)
        }
        OrderingCut::MinusInfinity | OrderingCut::LeftOf(_) => {
            let c = sign_certificate(&reflect_rf(f), &cut.reflect())?;
            let flip = |e: ExtRational| match e {
                ExtRational::NegInfinity => ExtRational::PosInfinity,
                ExtRational::PosInfinity => ExtRational::NegInfinity,
                ExtRational::Finite(q) => ExtRational::Finite(-q),
            };
            Ok(SignCertificate {
                sign: c.sign,
                sample: -c.sample,
                value: c.value,
                interval: (flip(c.interval.1), flip(c.interval.0)),
            })
        }
    }
}

/// Sign of `f` in the ordered field Q(t) whose ordering is given by `cut`.
///
/// Panics only if the refinement budget is exhausted.
pub fn sign_at_cut(f: &RatFunc, cut: &OrderingCut) -> Sign {
    sign_certificate(f, cut).expect("sign determination").sign
}
