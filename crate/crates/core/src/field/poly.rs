use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{modp, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q in the variable `t`.
///
/// Coefficients are indexed by degree; trailing zeros are never stored, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `t - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the convention `deg 0 = 0`. Check `is_zero` where it matters.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lc();
        self.scale(&lc.recip())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self(-t)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `t^deg * self(1/t)`.
    pub fn reverse(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dd = divisor.degree();
        let inv_lc = divisor.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and positive leading coefficient.
    pub fn integer_primitive(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, lcm), prim)
    }

    /// Primitive integer representative with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        Poly::from_bigints(&self.integer_primitive().1)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = poly_gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Sign of the leading coefficient.
    pub fn lc_sign(&self) -> i8 {
        let lc = self.lc();
        if lc.is_positive() {
            1
        } else if lc.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Formats with an arbitrary variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    /// Number of non-zero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Orders by degree, then coefficients from the leading one down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Integer polynomial kernels used by the gcd.

pub(crate) fn zp_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn zp_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

pub(crate) fn zp_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let mut g = zp_content(p);
    if g.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn zp_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = (a.len() - b.len() + 1) as u32;
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r = zp_trim(r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps as usize);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Inputs at least this long go through the modular algorithm.
const MODULAR_GCD_LEN: usize = 12;

/// Greatest common divisor of integer polynomials. Result is primitive,
/// positive lc.
pub(crate) fn zp_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (a, b) = (zp_primitive(a), zp_primitive(b));
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len().max(b.len()) >= MODULAR_GCD_LEN {
        modular_gcd(&a, &b)
    } else {
        subresultant_gcd(a, b)
    }
}

fn is_prime_u64(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn reduce_mod(p: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut out: Vec<u64> = p
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().expect("residue fits"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Exact quotient `a / b` in Z[t], or None when `b` does not divide `a`.
pub(crate) fn zp_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() > a.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then(|| zp_trim(q))
}

/// Brown's modular gcd: images modulo word primes below 2^31, combined by
/// Chinese remaindering until the candidate divides both inputs.
fn modular_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let l = a.last().unwrap().gcd(b.last().unwrap());
    let mut degree = usize::MAX;
    let mut modulus = BigInt::one();
    let mut image: Vec<BigInt> = Vec::new();
    let mut candidate: Vec<BigInt> = Vec::new();
    let mut p: u64 = (1 << 31) - 1;
    loop {
        p -= 2;
        if !is_prime_u64(p) {
            continue;
        }
        let pb = BigInt::from(p);
        if (&l % &pb).is_zero() {
            continue;
        }
        let g = modp::gcd(&reduce_mod(a, p), &reduce_mod(b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > degree {
            continue;
        }
        let lp = l.mod_floor(&pb).to_u64().unwrap();
        let g: Vec<BigInt> = modp::scale(&g, lp, p)
            .into_iter()
            .map(BigInt::from)
            .collect();
        if d < degree {
            degree = d;
            modulus = pb;
            image = g;
        } else {
            // x = image + modulus * ((g - image) / modulus mod p)
            let inv = BigInt::from(modp::inv_mod(modulus.mod_floor(&pb).to_u64().unwrap(), p));
            for (x, gi) in image.iter_mut().zip(&g) {
                let k = ((gi - &*x) * &inv).mod_floor(&pb);
                *x += &modulus * k;
            }
            modulus *= pb;
        }
        let half = &modulus >> 1;
        let next: Vec<BigInt> = zp_primitive(
            &image
                .iter()
                .map(|c| if *c > half { c - &modulus } else { c.clone() })
                .collect::<Vec<_>>(),
        );
        if next == candidate && zp_exact_div(a, &next).is_some() && zp_exact_div(b, &next).is_some()
        {
            return next;
        }
        candidate = next;
    }
}

/// Subresultant remainder sequence on primitive inputs.
fn subresultant_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.len() - b.len();
        let r = zp_prem(&a, &b);
        if r.is_empty() {
            return zp_primitive(&b);
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
    }
}

/// Monic greatest common divisor over Q; `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() {
        return p.monic();
    }
    let g = zp_gcd(&p.integer_primitive().1, &q.integer_primitive().1);
    Poly::from_bigints(&g).monic()
}

/// Square-free decomposition of `monic(p)` by Yun's algorithm: pairwise
/// coprime monic square-free factors with their multiplicities.
pub fn squarefree_factor(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return Ok(out);
    }
    let fp = f.derivative();
    let a0 = poly_gcd(&f, &fp);
    let mut b = f.exact_div(&a0).unwrap();
    let mut c = fp.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > 0 {
        let a = poly_gcd(&b, &d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

impl super::FieldElem for Poly {
    // Only ring operations are meaningful; `div` is exact division.
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
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
        self.exact_div(other).expect("inexact polynomial division")
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
}
