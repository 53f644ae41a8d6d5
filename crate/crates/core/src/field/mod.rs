//! Exact arithmetic over Q, Q[t] and the differential field Q(t) with t' = 1.

mod factor;
mod modp;
mod partial;
mod poly;
mod ratfunc;
mod resultant;

pub use factor::{factor, factor_squarefree};
pub use partial::{partial_fractions, PartialFraction, PartialFractionTerm};
pub use poly::{poly_gcd, squarefree_factor, Poly};
pub use ratfunc::RatFunc;
pub use resultant::{interpolate, resultant};

pub(crate) use partial::inverse_mod;
pub(crate) use ratfunc::denominator_lcm;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Elements of Q, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Height max(|num|, den) of a rational.
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    let d = q.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Minimal field interface shared by Q and Q(t), enough for Euclidean
/// resultants and Newton interpolation.
pub trait FieldElem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics when `other` is zero.
    fn div(&self, other: &Self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }

    fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl FieldElem for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        self / other
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Parses `a`, `-a`, `a/b` or a finite decimal such as `1.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let value = if let Some((n, d)) = body.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Rational::new(n, d)
    } else if let Some((ip, fp)) = body.split_once('.') {
        if ip.is_empty() && fp.is_empty() {
            return None;
        }
        if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{ip}{fp}").parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        Rational::new(digits, scale)
    } else {
        if !body.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        Rational::from_integer(body.parse().ok()?)
    };
    Some(if neg { -value } else { value })
}
