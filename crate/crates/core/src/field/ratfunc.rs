use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{poly_gcd, Poly, Rational};
use crate::error::{Error, Result};

/// Element of the differential field Q(t), t' = 1, in lowest terms with a
/// monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Panics when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g).unwrap();
        let den = den.exact_div(&g).unwrap();
        let lc = den.lc();
        RatFunc {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        }
    }

    /// `num/den` already coprime; only the denominator is made monic.
    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.lc();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        RatFunc {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| RatFunc::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Option<RatFunc> {
        other.inv().map(|i| self * &i)
    }

    /// Integer powers; negative exponents require a non-zero base.
    pub fn pow(&self, e: i64) -> RatFunc {
        let mag = e.unsigned_abs() as u32;
        let p = RatFunc {
            num: self.num.pow(mag),
            den: self.den.pow(mag),
        };
        if e < 0 {
            p.inv().expect("negative power of zero")
        } else {
            p
        }
    }

    /// Quotient-rule derivative with respect to t. With `g = gcd(d, d')`,
    /// `(n/d)' = (n' d/g - n d'/g) / (d * d/g)` and only `g`-parts can cancel.
    pub fn derive(&self) -> RatFunc {
        if self.den.is_one() {
            return RatFunc::from_poly(self.num.derivative());
        }
        let dd = self.den.derivative();
        let g = poly_gcd(&self.den, &dd);
        let dg = self.den.exact_div(&g).unwrap();
        let num = &(&self.num.derivative() * &dg) - &(&self.num * &dd.exact_div(&g).unwrap());
        let den = &self.den * &dg;
        if g.is_one() {
            return RatFunc::reduced(num, den);
        }
        RatFunc::new(num, den)
    }

    /// `f'/f`.
    pub fn log_derivative(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (n, d) = (&self.num, &self.den);
        let (gn, gd) = (poly_gcd(n, &n.derivative()), poly_gcd(d, &d.derivative()));
        // n'/n - d'/d with the repeated parts divided out first.
        let nr = RatFunc::reduced(
            n.derivative().exact_div(&gn).unwrap(),
            n.exact_div(&gn).unwrap(),
        );
        let dr = RatFunc::reduced(
            d.derivative().exact_div(&gd).unwrap(),
            d.exact_div(&gd).unwrap(),
        );
        Ok(&nr - &dr)
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Sign of the leading coefficient of `num` (den is monic).
    pub fn lc_sign(&self) -> i8 {
        self.num.lc_sign()
    }

    /// Whether the canonical display needs no parentheses as a factor:
    /// a positive integer, `t` or `t^k`.
    pub fn is_atom(&self) -> bool {
        self.den.is_one() && is_atom(&self.num)
    }

    /// Numerator and denominator as coprime integer polynomials with
    /// positive denominator leading coefficient.
    pub fn integer_parts(&self) -> (Poly, Poly) {
        let (cn, pn) = self.num.integer_primitive();
        let (cd, pd) = self.den.integer_primitive();
        let ratio = cn / cd;
        let (a, b) = (ratio.numer().clone(), ratio.denom().clone());
        let num = Poly::from_bigints(&pn.iter().map(|c| c * &a).collect::<Vec<BigInt>>());
        let den = Poly::from_bigints(&pd.iter().map(|c| c * &b).collect::<Vec<BigInt>>());
        (num, den)
    }
}

fn is_atom(p: &Poly) -> bool {
    // Zero, a positive integer, `t` or `t^k`.
    match p.term_count() {
        0 => true,
        1 => {
            let lc = p.lc();
            lc.is_positive() && (p.degree() == 0 || lc.is_one())
        }
        _ => false,
    }
}

/// Canonical form parsed back by the expression grammar: integer
/// coefficients only, e.g. `1/(2*t)`, `-1/t^2`, `(t + 1)/(t^2 + 1)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (num, den) = self.integer_parts();
        if den.is_one() {
            return write!(f, "{num}");
        }
        let num_s = if num.term_count() > 1 {
            format!("({num})")
        } else {
            num.to_string()
        };
        let den_s = if is_atom(&den) {
            den.to_string()
        } else {
            format!("({den})")
        };
        write!(f, "{num_s}/{den_s}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = poly_gcd(&self.den, &rhs.den);
        if g.is_one() {
            return RatFunc::reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let t = &(&self.num * &d2) + &(&rhs.num * &d1);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let h = poly_gcd(&t, &g);
        RatFunc::reduced(
            t.exact_div(&h).unwrap(),
            &d1 * &rhs.den.exact_div(&h).unwrap(),
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        RatFunc::reduced(
            &self.num.exact_div(&g1).unwrap() * &rhs.num.exact_div(&g2).unwrap(),
            &self.den.exact_div(&g2).unwrap() * &rhs.den.exact_div(&g1).unwrap(),
        )
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl super::FieldElem for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self.checked_div(other).expect("division by zero in Q(t)")
    }
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
}

/// Least common multiple of the denominators of a list of rationals.
pub(crate) fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
