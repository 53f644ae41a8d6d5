use num_traits::Zero;

use super::RankOneClassification;
use crate::error::{Error, Result};
use crate::field::{inverse_mod, partial_fractions, squarefree_factor, Poly, RatFunc, Rational};

/// `g = rational' + residual`, with `residual` proper and its denominator
/// square-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteReduction {
    pub rational: RatFunc,
    pub residual: RatFunc,
}

fn antiderivative(p: &Poly) -> Poly {
    let mut c = vec![Rational::zero()];
    for (i, a) in p.coeffs().iter().enumerate() {
        c.push(a / Rational::from_integer((i as i64 + 1).into()));
    }
    Poly::new(c)
}

/// Hermite reduction over the square-free factorization of the denominator.
pub fn hermite_reduce(g: &RatFunc) -> Result<HermiteReduction> {
    let (poly_part, mut a) = g.num().div_rem(g.den());
    let mut rational = RatFunc::from_poly(antiderivative(&poly_part));
    let mut d = g.den().clone();
    if a.is_zero() {
        return Ok(HermiteReduction {
            rational,
            residual: RatFunc::zero(),
        });
    }
    for (v, i) in squarefree_factor(&d.clone())? {
        if i < 2 {
            continue;
        }
        let u = d
            .exact_div(&v.pow(i as u32))
            .expect("square-free factor divides");
        let uv = &u * &v.derivative();
        let s = inverse_mod(&uv.rem(&v), &v);
        for j in (1..i).rev() {
            let jq = Rational::from_integer((j as i64).into());
            // Solve b*u*v' + c*v = -a/j with deg b < deg v.
            let rhs = a.scale(&-jq.recip());
            let b = (&rhs * &s).rem(&v);
            let c = (&rhs - &(&b * &uv))
                .exact_div(&v)
                .expect("Hermite step is exact");
            rational = &rational + &RatFunc::new(b.clone(), v.pow(j as u32));
            a = &c.scale(&-jq) - &(&u * &b.derivative());
        }
        d = &u * &v;
    }
    let residual = RatFunc::new(a, d);
    if &(&rational.derive() + &residual) != g {
        return Err(Error::Internal(
            "Hermite reduction does not recombine".into(),
        ));
    }
    Ok(HermiteReduction { rational, residual })
}

/// Decides whether `x' = g` has a solution in Q(t).
pub fn classify_quadrature(g: &RatFunc) -> Result<RankOneClassification> {
    let h = hermite_reduce(g)?;
    if h.residual.is_zero() {
        return Ok(RankOneClassification::InField {
            solution: h.rational,
        });
    }
    let residue = partial_fractions(&h.residual)
        .terms
        .into_iter()
        .find(|t| t.power == 1 && !t.numerator.is_zero())
        .ok_or_else(|| Error::Internal("non-zero residual without a simple pole".into()))?;
    Ok(RankOneClassification::AdditiveTranscendental { residue })
}
