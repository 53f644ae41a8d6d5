use std::fmt;

use num_traits::Zero;

use super::BiPoly;
use crate::diffeq::RankOneClassification;
use crate::error::{Error, Result};
use crate::field::{interpolate, poly_gcd, resultant, Poly, RatFunc, Rational};
use crate::realalg::RealAlgebraic;

/// A relation `P(y, w) = 0` between a solution `y` of `y' = a*y` and a
/// constant `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedRelation {
    pub poly: BiPoly,
    pub a: RatFunc,
}

impl LiftedRelation {
    pub fn new(poly: BiPoly, a: RatFunc) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(LiftedRelation { poly, a })
    }
}

impl fmt::Display for LiftedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// The derivation `d/dt + a*y*d/dy` (with `w' = 0`) applied to `L.poly`.
pub fn total_derivative(l: &LiftedRelation) -> BiPoly {
    &l.poly.derive_coefficients() + &l.poly.euler_y().scale(&l.a)
}

/// Outcome of dividing the total derivative by the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DInvariance {
    pub invariant: bool,
    pub derivative: BiPoly,
    pub quotient: BiPoly,
    pub remainder: BiPoly,
}

/// Whether the hypersurface `P = 0` is carried by the derivation: `P`
/// divides its total derivative.
pub fn is_d_invariant(l: &LiftedRelation) -> Result<DInvariance> {
    if l.poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let derivative = total_derivative(l);
    let (quotient, remainder) = derivative.div_rem(&l.poly)?;
    Ok(DInvariance {
        invariant: remainder.is_zero(),
        derivative,
        quotient,
        remainder,
    })
}

/// `y^n - w*f` for a Kummer classification, re-verified to be invariant.
pub fn minimal_lift_rank_one(cl: &RankOneClassification) -> Result<LiftedRelation> {
    let k = cl.as_kummer().ok_or(Error::NotKummer)?;
    let poly =
        &BiPoly::monomial(RatFunc::one(), k.n as usize, 0) - &BiPoly::monomial(k.f.clone(), 0, 1);
    let lift = LiftedRelation::new(poly, k.coefficient())?;
    let check = is_d_invariant(&lift)?;
    if !check.invariant {
        return Err(Error::Internal(format!(
            "minimal lift {lift} is not invariant"
        )));
    }
    Ok(lift)
}

/// `R(w1, w2) = Res_y(P1(y, w1), P2(y, w2))` with `coeffs[i][j]` the
/// coefficient of `w1^i w2^j`, and its value at a pair of constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disjointness {
    pub disjoint: bool,
    pub resultant: Vec<Vec<RatFunc>>,
    /// `R(c1, c2) = (sum_k values[k] t^k) / denominator`.
    pub values: Vec<RealAlgebraic>,
    pub denominator: Poly,
}

impl Disjointness {
    /// `R(c1, c2)` as text; a plain rational function when all values are rational.
    pub fn value_string(&self) -> String {
        if let Some(qs) = self
            .values
            .iter()
            .map(|v| v.as_rational().cloned())
            .collect::<Option<Vec<_>>>()
        {
            return RatFunc::new(Poly::new(qs), self.denominator.clone()).to_string();
        }
        let terms: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| match k {
                0 => format!("({v})"),
                1 => format!("({v})*t"),
                _ => format!("({v})*t^{k}"),
            })
            .collect();
        let num = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        if self.denominator.is_one() {
            num
        } else {
            format!("({num})/({})", self.denominator)
        }
    }

    /// `R(w1, w2)` as text in the variables `w1`, `w2`.
    pub fn resultant_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, row) in self.resultant.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mono: Vec<String> = [("w1", i), ("w2", j)]
                    .iter()
                    .filter(|(_, e)| *e > 0)
                    .map(|(v, e)| {
                        if *e == 1 {
                            v.to_string()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
                terms.push(if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                });
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn nodes(n: usize) -> Vec<Rational> {
    (0..n as i64)
        .map(|i| Rational::from_integer(i.into()))
        .collect()
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    (a * b)
        .exact_div(&poly_gcd(a, b))
        .expect("gcd divides")
        .monic()
}

/// `R(w1, w2) = Res_y(P1(y, w1), P2(y, w2))` for a pair of lifts, cleared
/// to `N(t, w1, w2) / denominator`. It depends only on the lifts, so one
/// computation serves every pair of constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResultant {
    pub coeffs: Vec<Vec<RatFunc>>,
    pub denominator: Poly,
    /// `t_coeffs[k][i][j]`: rational coefficient of `t^k w1^i w2^j` in `N`.
    t_coeffs: Vec<Vec<Vec<Rational>>>,
}

/// Computes `R(w1, w2)` by interpolation over an integer grid in `(w1, w2)`.
pub fn lift_resultant(l1: &LiftedRelation, l2: &LiftedRelation) -> Result<LiftResultant> {
    let (p1, p2) = (&l1.poly, &l2.poly);
    if p1.support() != p2.support() || l1.a != l2.a {
        return Err(Error::ShapeMismatch);
    }
    for p in [p1, p2] {
        if p.degree_y() == 0 || p.leading_y().as_constant().is_none() {
            return Err(Error::NotMonic);
        }
    }
    // Bounds on the degrees of R in w1 and w2.
    let d1 = p1.degree_w() * p2.degree_y();
    let d2 = p2.degree_w() * p1.degree_y();
    let (n1, n2) = (nodes(d1 + 1), nodes(d2 + 1));
    let at2: Vec<Vec<RatFunc>> = n2.iter().map(|w| p2.at_w(w)).collect();
    // For each w1 node, R(w1, .) as a polynomial in w2.
    let rows: Vec<Vec<RatFunc>> = n1
        .iter()
        .map(|w1| {
            let a = p1.at_w(w1);
            let vals: Vec<RatFunc> = at2.iter().map(|b| resultant(&a, b)).collect();
            let mut c = interpolate(&n2, &vals);
            c.resize(d2 + 1, RatFunc::zero());
            c
        })
        .collect();
    let mut coeffs = vec![vec![RatFunc::zero(); d2 + 1]; d1 + 1];
    for j in 0..=d2 {
        let column: Vec<RatFunc> = rows.iter().map(|r| r[j].clone()).collect();
        for (i, c) in interpolate(&n1, &column).into_iter().enumerate() {
            coeffs[i][j] = c;
        }
    }
    let denominator = coeffs
        .iter()
        .flatten()
        .fold(Poly::one(), |acc, c| lcm(&acc, c.den()));
    let numerators: Vec<Vec<Poly>> = coeffs
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    (c.num() * &denominator)
                        .exact_div(c.den())
                        .expect("common denominator")
                })
                .collect()
        })
        .collect();
    let t_degree = numerators
        .iter()
        .flatten()
        .map(Poly::degree)
        .max()
        .unwrap_or(0);
    let t_coeffs = (0..=t_degree)
        .map(|k| {
            numerators
                .iter()
                .map(|row| row.iter().map(|p| p.coeff(k)).collect())
                .collect()
        })
        .collect();
    Ok(LiftResultant {
        coeffs,
        denominator,
        t_coeffs,
    })
}

/// `Some(q)` with `a = q * b` entrywise, for non-zero `b`.
fn proportional(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Option<Rational> {
    let mut ratio: Option<Rational> = None;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            match (x.is_zero(), y.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let q = x / y;
                    match &ratio {
                        Some(r) if *r != q => return None,
                        Some(_) => {}
                        None => ratio = Some(q),
                    }
                }
                _ => return None,
            }
        }
    }
    ratio
}

impl LiftResultant {
    /// `R(c1, c2)`: each `t`-coefficient of `N` evaluated exactly at the
    /// constants. Disjoint iff one of them is non-zero.
    pub fn specialize(&self, c1: &RealAlgebraic, c2: &RealAlgebraic) -> Result<Disjointness> {
        let mut values: Vec<RealAlgebraic> = Vec::with_capacity(self.t_coeffs.len());
        for (k, s) in self.t_coeffs.iter().enumerate() {
            if s.iter().flatten().all(Zero::is_zero) {
                values.push(RealAlgebraic::zero());
                continue;
            }
            // Coefficients that are rational multiples of an earlier one reuse its value.
            let earlier = (0..k).find_map(|j| proportional(s, &self.t_coeffs[j]).map(|q| (j, q)));
            values.push(match earlier {
                Some((j, q)) => values[j].mul(&RealAlgebraic::from_rational(q))?,
                None => RealAlgebraic::eval_bivariate(s, c1, c2)?,
            });
        }
        let disjoint = values.iter().any(|v| !v.is_zero());
        Ok(Disjointness {
            disjoint,
            resultant: self.coeffs.clone(),
            values,
            denominator: self.denominator.clone(),
        })
    }
}

/// Decides whether the specializations `P1(y, c1)` and `P2(y, c2)` have
/// no common solution, via the resultant in `y`.
pub fn disjoint_lifts(
    l1: &LiftedRelation,
    c1: &RealAlgebraic,
    l2: &LiftedRelation,
    c2: &RealAlgebraic,
) -> Result<Disjointness> {
    lift_resultant(l1, l2)?.specialize(c1, c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffeq::classify_rank_one;
    use crate::field::int;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    fn y2_minus_w(f: RatFunc) -> BiPoly {
        &BiPoly::monomial(RatFunc::one(), 2, 0) - &BiPoly::monomial(f, 0, 1)
    }

    #[test]
    fn total_derivative_examples() {
        let l = LiftedRelation::new(y2_minus_w(RatFunc::t()), rf(&[1], &[0, 2])).unwrap();
        assert_eq!(total_derivative(&l), l.poly.scale(&rf(&[1], &[0, 1])));
        let w = LiftedRelation::new(BiPoly::w(), rf(&[3], &[1, 1])).unwrap();
        assert!(total_derivative(&w).is_zero());
        let a = &rf(&[3], &[0, 2]) + &rf(&[1], &[-1, 1]);
        let f =
            RatFunc::from_poly(&Poly::from_ints(&[0, 0, 0, 1]) * &Poly::from_ints(&[-1, 1]).pow(2));
        let l = LiftedRelation::new(y2_minus_w(f), a.clone()).unwrap();
        assert_eq!(total_derivative(&l), l.poly.scale(&a.scale(&int(2))));
    }

    #[test]
    fn invariance_examples() {
        let l = LiftedRelation::new(y2_minus_w(RatFunc::t()), rf(&[1], &[0, 2])).unwrap();
        let d = is_d_invariant(&l).unwrap();
        assert!(d.invariant);
        assert_eq!(d.quotient, BiPoly::constant(rf(&[1], &[0, 1])));
        let l = LiftedRelation::new(y2_minus_w(rf(&[0, 0, 1], &[1])), rf(&[1], &[0, 2])).unwrap();
        let d = is_d_invariant(&l).unwrap();
        assert!(!d.invariant);
        assert_eq!(d.remainder, BiPoly::monomial(-RatFunc::t(), 0, 1));
        let l = LiftedRelation::new(&BiPoly::y() - &BiPoly::w(), RatFunc::zero()).unwrap();
        let d = is_d_invariant(&l).unwrap();
        assert!(d.invariant && d.quotient.is_zero());
    }

    #[test]
    fn minimal_lifts() {
        let cl = classify_rank_one(&rf(&[0, 1], &[1, 0, 1])).unwrap();
        let l = minimal_lift_rank_one(&cl).unwrap();
        assert_eq!(l.poly.to_string(), "y^2 - (t^2 + 1)*w");
        assert_eq!(
            minimal_lift_rank_one(&classify_rank_one(&RatFunc::one()).unwrap()),
            Err(Error::NotKummer)
        );
    }

    #[test]
    fn disjointness_examples() {
        let l = LiftedRelation::new(y2_minus_w(RatFunc::t()), rf(&[1], &[0, 2])).unwrap();
        let one = RealAlgebraic::one();
        let d = disjoint_lifts(&l, &one, &l, &RealAlgebraic::from_int(2)).unwrap();
        assert!(d.disjoint);
        assert_eq!(d.value_string(), "t^2");
        assert_eq!(
            d.resultant_string(),
            "(t^2)*w1^2 + (-2*t^2)*w1*w2 + (t^2)*w2^2"
        );
        assert!(!disjoint_lifts(&l, &one, &l, &one).unwrap().disjoint);
        let d = disjoint_lifts(&l, &RealAlgebraic::from_int(-1), &l, &one).unwrap();
        assert_eq!(d.value_string(), "4*t^2");
        let other = LiftedRelation::new(&BiPoly::y() - &BiPoly::w(), RatFunc::zero()).unwrap();
        assert_eq!(
            disjoint_lifts(&l, &one, &other, &one),
            Err(Error::ShapeMismatch)
        );
    }

    #[test]
    fn disjointness_with_irrational_constants() {
        let l = LiftedRelation::new(y2_minus_w(RatFunc::t()), rf(&[1], &[0, 2])).unwrap();
        let s2 = RealAlgebraic::from_root(&Poly::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap();
        let s2b =
            RealAlgebraic::from_root(&Poly::from_ints(&[0, -2, 0, 1]), int(1), int(3)).unwrap();
        assert!(!disjoint_lifts(&l, &s2, &l, &s2b).unwrap().disjoint);
        assert!(disjoint_lifts(&l, &s2, &l, &s2.neg()).unwrap().disjoint);
    }
}
