use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::sturm::{isolate_real_roots, Isolated, SturmChain};
use super::Sign;
use crate::error::{Error, Result};
use crate::field::{factor, interpolate, poly_gcd, resultant, Poly, RatFunc, Rational};

/// Maximum number of bisection rounds a single operation may spend before
/// giving up with [`Error::RefinementBudget`].
pub const REFINEMENT_BUDGET: usize = 256;

/// A real algebraic number: an irreducible primitive integer polynomial
/// together with a rational interval isolating one of its real roots.
///
/// Rationals are stored as a linear polynomial with `lo == hi`. For every
/// other number `lo < hi`, neither endpoint is a root, and the root lies
/// strictly inside.
#[derive(Clone)]
pub struct RealAlgebraic {
    defining: Poly,
    lo: Rational,
    hi: Rational,
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

fn sign_at(p: &Poly, x: &Rational) -> Sign {
    Sign::of(&p.eval(x))
}

fn pow_q(q: &Rational, n: u32) -> Rational {
    num_traits::pow(q.clone(), n as usize)
}

/// `R(z) = Res_y(a(y), b_z(y))` recovered by interpolation at `0..=degree_bound`.
fn resultant_in_z(a: &Poly, degree_bound: usize, b_at: impl Fn(&Rational) -> Poly) -> Poly {
    let nodes: Vec<Rational> = (0..=degree_bound as i64)
        .map(|i| Rational::from_integer(i.into()))
        .collect();
    let values: Vec<Rational> = nodes
        .iter()
        .map(|z| resultant(a.coeffs(), b_at(z).coeffs()))
        .collect();
    Poly::new(interpolate(&nodes, &values))
}

fn eval2_q(coeffs: &[Vec<Rational>], x: &Rational, y: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, row| {
        acc * x
            + row
                .iter()
                .rev()
                .fold(Rational::zero(), |inner, c| inner * y + c)
    })
}

type Interval = (Rational, Rational);

fn imul(a: &Interval, b: (&Rational, &Rational)) -> Interval {
    let p = [&a.0 * b.0, &a.0 * b.1, &a.1 * b.0, &a.1 * b.1];
    (
        p.iter().min().unwrap().clone(),
        p.iter().max().unwrap().clone(),
    )
}

/// Interval Horner enclosure of `e` over the box `x × y`.
fn eval2_interval(
    coeffs: &[Vec<Rational>],
    x: (&Rational, &Rational),
    y: (&Rational, &Rational),
) -> Interval {
    let zero = (Rational::zero(), Rational::zero());
    coeffs.iter().rev().fold(zero.clone(), |acc, row| {
        let inner = row.iter().rev().fold(zero.clone(), |v, c| {
            let m = imul(&v, y);
            (m.0 + c, m.1 + c)
        });
        let m = imul(&acc, x);
        (m.0 + inner.0, m.1 + inner.1)
    })
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Mul,
}

impl RealAlgebraic {
    pub fn from_rational(q: Rational) -> Self {
        RealAlgebraic {
            defining: Poly::linear_root(&q).primitive(),
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The unique root of `p` in the closed interval `[lo, hi]`.
    pub fn from_root(p: &Poly, lo: Rational, hi: Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let invalid = || Error::InvalidIsolation {
            lo: lo.to_string(),
            hi: hi.to_string(),
        };
        if lo > hi {
            return Err(invalid());
        }
        let chain = SturmChain::new(p)?;
        if chain.count_closed(&lo, &hi) != 1 {
            return Err(invalid());
        }
        let s = chain.base();
        if s.eval(&lo).is_zero() {
            return Ok(Self::from_rational(lo));
        }
        if s.eval(&hi).is_zero() {
            return Ok(Self::from_rational(hi));
        }
        for (g, _) in factor(s)? {
            if SturmChain::new(&g)?.count_closed(&lo, &hi) == 0 {
                continue;
            }
            if g.degree() == 1 {
                return Ok(Self::from_rational(-g.coeff(0) / g.coeff(1)));
            }
            return Ok(RealAlgebraic {
                defining: g.primitive(),
                lo,
                hi,
            });
        }
        Err(Error::Internal(
            "isolated root lost during factorization".into(),
        ))
    }

    pub fn defining(&self) -> &Poly {
        &self.defining
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_zero())
    }

    /// Algebraic degree over Q.
    pub fn degree(&self) -> usize {
        self.defining.degree()
    }

    /// One bisection step; rationals are returned unchanged.
    pub fn bisect(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / two();
        let (lo, hi) = if sign_at(&self.defining, &self.lo) != sign_at(&self.defining, &mid) {
            (self.lo.clone(), mid)
        } else {
            (mid, self.hi.clone())
        };
        RealAlgebraic {
            defining: self.defining.clone(),
            lo,
            hi,
        }
    }

    /// Same number with an isolating interval of width at most `width`.
    pub fn refined_to(&self, width: &Rational) -> Result<Self> {
        let mut x = self.clone();
        for _ in 0..REFINEMENT_BUDGET {
            if &(&x.hi - &x.lo) <= width {
                return Ok(x);
            }
            x = x.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    /// Splits the interval at 0 when it straddles it (0 is never an
    /// irrational root).
    fn away_from_zero(&self) -> Self {
        if self.is_rational() || !(self.lo.is_negative() && self.hi.is_positive()) {
            return self.clone();
        }
        let zero = Rational::zero();
        let (lo, hi) = if sign_at(&self.defining, &self.lo) != sign_at(&self.defining, &zero) {
            (self.lo.clone(), zero)
        } else {
            (zero, self.hi.clone())
        };
        RealAlgebraic {
            defining: self.defining.clone(),
            lo,
            hi,
        }
    }

    pub fn sign(&self) -> Sign {
        if let Some(q) = self.as_rational() {
            return Sign::of(q);
        }
        let x = self.away_from_zero();
        if x.lo.is_negative() || (x.lo.is_zero() && x.hi.is_zero()) {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    /// Exact comparison: interval refinement plus a common-root test on
    /// `gcd` of the defining polynomials.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Ok(a.cmp(b));
        }
        let g = poly_gcd(&self.defining, &other.defining);
        let common = if g.degree() > 0 {
            Some(SturmChain::new(&g)?)
        } else {
            None
        };
        let (mut x, mut y) = (self.clone(), other.clone());
        for _ in 0..REFINEMENT_BUDGET {
            if x.hi <= y.lo && !(x.is_rational() && y.is_rational()) {
                return Ok(Ordering::Less);
            }
            if y.hi <= x.lo {
                return Ok(Ordering::Greater);
            }
            if let Some(chain) = &common {
                let lo = if x.lo > y.lo { &x.lo } else { &y.lo };
                let hi = if x.hi < y.hi { &x.hi } else { &y.hi };
                if lo <= hi && chain.count_closed(lo, hi) > 0 {
                    return Ok(Ordering::Equal);
                }
            }
            x = x.bisect();
            y = y.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    pub fn neg(&self) -> Self {
        if let Some(q) = self.as_rational() {
            return Self::from_rational(-q);
        }
        RealAlgebraic {
            defining: self.defining.reflect().primitive(),
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    /// `self + q` for rational `q`, by translation of the defining polynomial.
    pub fn add_rational(&self, q: &Rational) -> Self {
        if let Some(a) = self.as_rational() {
            return Self::from_rational(a + q);
        }
        let shift = Poly::new(vec![-q.clone(), Rational::one()]);
        RealAlgebraic {
            defining: self.defining.compose(&shift).primitive(),
            lo: &self.lo + q,
            hi: &self.hi + q,
        }
    }

    /// `q * self` for non-zero rational `q`: the defining polynomial becomes `p(t/q)`.
    fn scale_rational(&self, q: &Rational) -> Self {
        let (a, b) = (&self.lo * q, &self.hi * q);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        RealAlgebraic {
            defining: self
                .defining
                .compose(&Poly::new(vec![Rational::zero(), q.recip()]))
                .primitive(),
            lo,
            hi,
        }
    }

    fn combine(&self, other: &Self, op: BinOp) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Ok(Self::from_rational(match op {
                BinOp::Add => a + b,
                BinOp::Mul => a * b,
            }));
        }
        match op {
            BinOp::Mul if self.is_zero() || other.is_zero() => return Ok(Self::zero()),
            BinOp::Add if self.is_rational() => return Ok(other.add_rational(&self.lo)),
            BinOp::Add if other.is_rational() => return Ok(self.add_rational(&other.lo)),
            BinOp::Mul if self.is_rational() => return Ok(other.scale_rational(&self.lo)),
            BinOp::Mul if other.is_rational() => return Ok(self.scale_rational(&other.lo)),
            _ => {}
        }
        let px = &self.defining;
        let py = &other.defining;
        let bound = px.degree() * py.degree();
        let r = match op {
            BinOp::Add => resultant_in_z(px, bound, |z| {
                py.compose(&Poly::new(vec![z.clone(), -Rational::one()]))
            }),
            BinOp::Mul => {
                let m = py.degree();
                resultant_in_z(px, bound, |z| {
                    let mut c = vec![Rational::zero(); m + 1];
                    let mut zi = Rational::one();
                    for (i, qi) in py.coeffs().iter().enumerate() {
                        c[m - i] = qi * &zi;
                        zi *= z;
                    }
                    Poly::new(c)
                })
            }
        };
        let chain = SturmChain::new(&r)?;
        let (mut x, mut y) = (self.clone(), other.clone());
        for _ in 0..REFINEMENT_BUDGET {
            let (lo, hi) = match op {
                BinOp::Add => (&x.lo + &y.lo, &x.hi + &y.hi),
                BinOp::Mul => {
                    let prods = [&x.lo * &y.lo, &x.lo * &y.hi, &x.hi * &y.lo, &x.hi * &y.hi];
                    let lo = prods.iter().min().unwrap().clone();
                    let hi = prods.iter().max().unwrap().clone();
                    (lo, hi)
                }
            };
            if chain.count_closed(&lo, &hi) == 1 {
                return Self::from_root(&r, lo, hi);
            }
            x = x.bisect();
            y = y.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, BinOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(&other.neg(), BinOp::Add)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, BinOp::Mul)
    }

    pub fn inv(&self) -> Result<Self> {
        if let Some(q) = self.as_rational() {
            if q.is_zero() {
                return Err(Error::ZeroInput);
            }
            return Ok(Self::from_rational(q.recip()));
        }
        let mut x = self.away_from_zero();
        for _ in 0..REFINEMENT_BUDGET {
            if !x.lo.is_zero() && !x.hi.is_zero() {
                break;
            }
            x = x.bisect();
        }
        if x.lo.is_zero() || x.hi.is_zero() {
            return Err(Error::RefinementBudget(REFINEMENT_BUDGET));
        }
        let (lo, hi) = (x.hi.recip(), x.lo.recip());
        Self::from_root(&x.defining.reverse(), lo, hi)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// `self^n` through the resultant `Res_y(p(y), z - y^n)`.
    pub fn pow(&self, n: u32) -> Result<Self> {
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(pow_q(q, n)));
        }
        if n == 0 {
            return Ok(Self::one());
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let px = &self.defining;
        let r = resultant_in_z(px, px.degree(), |z| {
            let mut c = vec![Rational::zero(); n as usize + 1];
            c[0] = z.clone();
            c[n as usize] = -Rational::one();
            Poly::new(c)
        });
        let chain = SturmChain::new(&r)?;
        let mut x = self.away_from_zero();
        for _ in 0..REFINEMENT_BUDGET {
            let (a, b) = (pow_q(&x.lo, n), pow_q(&x.hi, n));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            if chain.count_closed(&lo, &hi) == 1 {
                return Self::from_root(&r, lo, hi);
            }
            x = x.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    /// `e(x, y) = sum coeffs[i][j] x^i y^j` as a single algebraic number,
    /// from `P(z) = Res_u(px(u), Res_v(py(v), z - e(u, v)))`, whose roots are
    /// the values of `e` at all conjugate pairs.
    pub fn eval_bivariate(coeffs: &[Vec<Rational>], x: &Self, y: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (x.as_rational(), y.as_rational()) {
            return Ok(Self::from_rational(eval2_q(coeffs, a, b)));
        }
        let (px, py) = (x.defining.monic(), y.defining.monic());
        let bound = px.degree() * py.degree();
        let py_u: Vec<RatFunc> = py
            .coeffs()
            .iter()
            .map(|c| RatFunc::constant(c.clone()))
            .collect();
        // e as a polynomial in v with coefficients in Q[u]; u plays the role of t.
        let width = coeffs.iter().map(Vec::len).max().unwrap_or(0);
        let e_v: Vec<Poly> = (0..width)
            .map(|j| {
                Poly::new(
                    coeffs
                        .iter()
                        .map(|row| row.get(j).cloned().unwrap_or_default())
                        .collect(),
                )
            })
            .collect();
        let nodes: Vec<Rational> = (0..=bound as i64)
            .map(|i| Rational::from_integer(i.into()))
            .collect();
        let values: Vec<Rational> = nodes
            .iter()
            .map(|z| {
                let mut b: Vec<RatFunc> = e_v.iter().map(|c| RatFunc::from_poly(-c)).collect();
                if b.is_empty() {
                    b.push(RatFunc::zero());
                }
                b[0] = &b[0] + &RatFunc::constant(z.clone());
                while b.len() > 1 && b.last().is_some_and(RatFunc::is_zero) {
                    b.pop();
                }
                let inner = resultant(&py_u, &b);
                resultant(px.coeffs(), inner.num().coeffs())
            })
            .collect();
        let r = Poly::new(interpolate(&nodes, &values));
        let chain = SturmChain::new(&r)?;
        let (mut x, mut y) = (x.clone(), y.clone());
        for _ in 0..REFINEMENT_BUDGET {
            let (lo, hi) = eval2_interval(coeffs, (&x.lo, &x.hi), (&y.lo, &y.hi));
            if chain.count_closed(&lo, &hi) == 1 {
                return Self::from_root(&r, lo, hi);
            }
            x = x.bisect();
            y = y.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    /// A real `z` with `z^n = self`, the non-negative one when two exist;
    /// `None` when `n` is even and `self < 0`.
    pub fn nth_root(&self, n: u32) -> Result<Option<Self>> {
        if n == 0 {
            return Err(Error::Unsupported("zeroth root".into()));
        }
        if n == 1 || self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let s = self.sign();
        if s == Sign::Negative && n.is_multiple_of(2) {
            return Ok(None);
        }
        if let Some(q) = self.as_rational() {
            let (a, b) = (q.numer().abs(), q.denom().clone());
            let (ra, rb) = (a.nth_root(n), b.nth_root(n));
            if num_traits::pow(ra.clone(), n as usize) == a
                && num_traits::pow(rb.clone(), n as usize) == b
            {
                let r = Rational::new(ra, rb);
                return Ok(Some(Self::from_rational(if s == Sign::Negative {
                    -r
                } else {
                    r
                })));
            }
        }
        let q = self
            .defining
            .compose(&Poly::monomial(Rational::one(), n as usize));
        let mut cands = Vec::new();
        for iso in isolate_real_roots(&q)? {
            let c = match iso {
                Isolated::Point(r) => Self::from_rational(r),
                Isolated::Interval(lo, hi) => Self::from_root(&q, lo, hi)?,
            };
            if c.sign() == s {
                cands.push(c.away_from_zero());
            }
        }
        let mut x = self.clone();
        for _ in 0..REFINEMENT_BUDGET {
            if cands.len() == 1 {
                return Ok(cands.pop());
            }
            let mut kept = Vec::new();
            for c in cands.drain(..) {
                // z -> z^n is increasing on the side of the candidates.
                let (ilo, ihi) = (pow_q(&c.lo, n), pow_q(&c.hi, n));
                if ihi < x.lo || ilo > x.hi {
                    continue;
                }
                if x.lo <= ilo && ihi <= x.hi {
                    return Ok(Some(c));
                }
                kept.push(c.bisect());
            }
            if kept.is_empty() {
                return Err(Error::Internal("no n-th root candidate survived".into()));
            }
            cands = kept;
            x = x.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    pub fn floor(&self) -> Result<BigInt> {
        if let Some(q) = self.as_rational() {
            return Ok(q.floor().to_integer());
        }
        let mut x = self.clone();
        for _ in 0..REFINEMENT_BUDGET {
            let (a, b) = (x.lo.floor(), x.hi.floor());
            if a == b {
                return Ok(a.to_integer());
            }
            x = x.bisect();
        }
        Err(Error::RefinementBudget(REFINEMENT_BUDGET))
    }

    /// Decimal approximation with `digits` fractional digits, for display.
    pub fn approx(&self, digits: usize) -> String {
        let scale = Rational::from_integer(num_traits::pow(BigInt::from(10), digits));
        let width = scale.recip() / two();
        let x = self.refined_to(&width).unwrap_or_else(|_| self.clone());
        let mid = (&x.lo + &x.hi) / two();
        let scaled = (mid * &scale).round().to_integer();
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let s = format!("{:0>width$}", s, width = digits + 1);
        let (ip, fp) = s.split_at(s.len() - digits);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{fp}")
        }
    }
}

/// `z` with `z^n = x` in the real algebraic numbers, when one exists.
pub fn nth_root_in_ralg(x: &RealAlgebraic, n: u32) -> Result<Option<RealAlgebraic>> {
    x.nth_root(n)
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    /// Panics if the refinement budget is exhausted.
    fn cmp(&self, other: &Self) -> Ordering {
        self.try_cmp(other).expect("real algebraic comparison")
    }
}

impl From<Rational> for RealAlgebraic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

/// `q` for rationals, `root(p, [lo, hi])` otherwise.
impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "root({}, [{}, {}])", self.defining, self.lo, self.hi),
        }
    }
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealAlgebraic({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn sqrt(n: i64) -> RealAlgebraic {
        RealAlgebraic::from_root(&Poly::from_ints(&[-n, 0, 1]), int(0), int(n.max(1))).unwrap()
    }

    #[test]
    fn compare_examples() {
        let r2 = sqrt(2);
        assert_eq!(
            r2.try_cmp(&RealAlgebraic::from_rational(rat(14, 10)))
                .unwrap(),
            Ordering::Greater
        );
        let other = RealAlgebraic::from_root(&Poly::from_ints(&[-2, 0, 1]), rat(13, 10), rat(3, 2))
            .unwrap();
        assert_eq!(r2.try_cmp(&other).unwrap(), Ordering::Equal);
        assert_eq!(
            r2.neg().try_cmp(&RealAlgebraic::zero()).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn normalizes_to_irreducible_factor() {
        // (t^2 - 2)(t - 3) on [1, 2] picks t^2 - 2.
        let p = &Poly::from_ints(&[-2, 0, 1]) * &Poly::from_ints(&[-3, 1]);
        let x = RealAlgebraic::from_root(&p, int(1), int(2)).unwrap();
        assert_eq!(x.defining(), &Poly::from_ints(&[-2, 0, 1]));
        let y = RealAlgebraic::from_root(&p, rat(5, 2), int(4)).unwrap();
        assert_eq!(y.as_rational(), Some(&int(3)));
        assert!(RealAlgebraic::from_root(&p, int(-2), int(4)).is_err());
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(
            RealAlgebraic::from_int(4).nth_root(2).unwrap(),
            Some(RealAlgebraic::from_int(2))
        );
        assert_eq!(RealAlgebraic::from_int(-4).nth_root(2).unwrap(), None);
        assert_eq!(
            RealAlgebraic::from_int(-8).nth_root(3).unwrap(),
            Some(RealAlgebraic::from_int(-2))
        );
        let r = RealAlgebraic::from_int(2).nth_root(2).unwrap().unwrap();
        assert_eq!(r, sqrt(2));
        // Root of an irrational.
        let fourth = sqrt(2).nth_root(2).unwrap().unwrap();
        assert_eq!(fourth.defining(), &Poly::from_ints(&[-2, 0, 0, 0, 1]));
        assert_eq!(fourth.pow(4).unwrap(), RealAlgebraic::from_int(2));
    }

    #[test]
    fn field_operations() {
        let (a, b) = (sqrt(2), sqrt(3));
        let s = a.add(&b).unwrap();
        assert_eq!(s.defining(), &Poly::from_ints(&[1, 0, -10, 0, 1]));
        let p = a.mul(&b).unwrap();
        assert_eq!(p, sqrt(6));
        assert_eq!(a.mul(&a).unwrap(), RealAlgebraic::from_int(2));
        assert_eq!(a.sub(&a).unwrap(), RealAlgebraic::zero());
        assert_eq!(a.inv().unwrap().mul(&a).unwrap(), RealAlgebraic::one());
        assert_eq!(a.neg().pow(3).unwrap(), a.pow(3).unwrap().neg());
        assert_eq!(RealAlgebraic::zero().inv().unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn bivariate_evaluation() {
        let q = |n: i64| Rational::from_integer(n.into());
        let (s2, s3) = (sqrt(2), sqrt(3));
        // x*y + x
        let e = vec![vec![q(0)], vec![q(1), q(1)]];
        assert_eq!(
            RealAlgebraic::eval_bivariate(&e, &s2, &s3).unwrap(),
            s2.mul(&s3).unwrap().add(&s2).unwrap()
        );
        // x - y at equal arguments, and x*y at (sqrt 2, sqrt 2)
        let diff = vec![vec![q(0), q(-1)], vec![q(1)]];
        assert!(RealAlgebraic::eval_bivariate(&diff, &s2, &s2)
            .unwrap()
            .is_zero());
        let prod = vec![vec![], vec![q(0), q(1)]];
        assert_eq!(
            RealAlgebraic::eval_bivariate(&prod, &s2, &s2).unwrap(),
            RealAlgebraic::from_int(2)
        );
        assert_eq!(
            RealAlgebraic::eval_bivariate(&prod, &s2, &RealAlgebraic::from_int(3)).unwrap(),
            s2.mul(&RealAlgebraic::from_int(3)).unwrap()
        );
    }

    #[test]
    fn sign_floor_and_display() {
        assert_eq!(sqrt(2).neg().sign(), Sign::Negative);
        let wide =
            RealAlgebraic::from_root(&Poly::from_ints(&[-2, 0, 1]), int(-1), int(5)).unwrap();
        assert_eq!(wide.sign(), Sign::Positive);
        assert_eq!(sqrt(2).floor().unwrap(), BigInt::from(1));
        assert_eq!(sqrt(2).neg().floor().unwrap(), BigInt::from(-2));
        assert_eq!(sqrt(2).approx(4), "1.4142");
        assert_eq!(sqrt(2).to_string(), "root(t^2 - 2, [0, 2])");
        assert_eq!(RealAlgebraic::from_rational(rat(-1, 3)).to_string(), "-1/3");
    }
}
