use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{RatFunc, Rational};

/// Polynomial in `y` (the solution) and `w` (a constant parameter) with
/// coefficients in Q(t). `coeffs[i][j]` multiplies `y^i w^j`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<Vec<RatFunc>>,
}

fn trim_row(row: &mut Vec<RatFunc>) {
    while row.last().is_some_and(|c| c.is_zero()) {
        row.pop();
    }
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Vec<RatFunc>>) -> Self {
        for row in coeffs.iter_mut() {
            trim_row(row);
        }
        while coeffs.last().is_some_and(|r| r.is_empty()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * y^i * w^j`.
    pub fn monomial(c: RatFunc, i: usize, j: usize) -> Self {
        let mut coeffs = vec![Vec::new(); i + 1];
        coeffs[i] = vec![RatFunc::zero(); j + 1];
        coeffs[i][j] = c;
        Self::new(coeffs)
    }

    pub fn y() -> Self {
        Self::monomial(RatFunc::one(), 1, 0)
    }

    pub fn w() -> Self {
        Self::monomial(RatFunc::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> RatFunc {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn rows(&self) -> &[Vec<RatFunc>] {
        &self.coeffs
    }

    /// Degree in `y`; 0 for the zero polynomial.
    pub fn degree_y(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn degree_w(&self) -> usize {
        self.coeffs
            .iter()
            .map(|r| r.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of the highest power of `y`, as a polynomial in `w`.
    pub fn leading_y(&self) -> BiPoly {
        match self.coeffs.last() {
            Some(r) => BiPoly::new(vec![r.clone()]),
            None => BiPoly::zero(),
        }
    }

    /// The coefficient in Q(t) when the polynomial has no `y` or `w`.
    pub fn as_constant(&self) -> Option<RatFunc> {
        match self.coeffs.as_slice() {
            [] => Some(RatFunc::zero()),
            [row] if row.len() == 1 => Some(row[0].clone()),
            _ => None,
        }
    }

    /// Non-zero monomial positions, for shape comparisons.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> BiPoly {
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        )
    }

    pub fn scale(&self, c: &RatFunc) -> BiPoly {
        self.map(|x| x * c)
    }

    /// `d/dt` applied to every coefficient.
    pub fn derive_coefficients(&self) -> BiPoly {
        self.map(RatFunc::derive)
    }

    /// `y * dP/dy`.
    pub fn euler_y(&self) -> BiPoly {
        BiPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    r.iter()
                        .map(|c| c.scale(&Rational::from_integer((i as i64).into())))
                        .collect()
                })
                .collect(),
        )
    }

    /// Substitutes a value for `w`, giving coefficients in `y`.
    pub fn at_w(&self, w: &Rational) -> Vec<RatFunc> {
        self.coeffs
            .iter()
            .map(|row| {
                row.iter().rev().fold(RatFunc::zero(), |acc, c| {
                    &(&acc * &RatFunc::constant(w.clone())) + c
                })
            })
            .collect()
    }

    /// Division in `y` by a divisor whose leading `y`-coefficient is a unit of
    /// Q(t); when the divisor has no `y`, division is in `w` coefficientwise.
    pub fn div_rem(&self, d: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if d.degree_y() == 0 {
            return Ok(self.div_rem_w(&d.coeffs[0]));
        }
        let lead = d.leading_y().as_constant().ok_or(Error::NotMonic)?;
        let inv = lead.inv().expect("leading coefficient is non-zero");
        let dy = d.degree_y();
        let mut r = self.clone();
        let mut q = BiPoly::zero();
        while !r.is_zero() && r.degree_y() >= dy {
            let shift = r.degree_y() - dy;
            let top = BiPoly::new(vec![r.coeffs.last().unwrap().clone()]).scale(&inv);
            let term = &top * &BiPoly::monomial(RatFunc::one(), shift, 0);
            r = &r - &(&term * d);
            q = &q + &term;
        }
        Ok((q, r))
    }

    fn div_rem_w(&self, d: &[RatFunc]) -> (BiPoly, BiPoly) {
        let dw = d.len() - 1;
        let inv = d[dw].inv().expect("non-zero");
        let mut qs = Vec::new();
        let mut rs = Vec::new();
        for row in &self.coeffs {
            let mut r = row.clone();
            let mut q = vec![RatFunc::zero(); r.len().saturating_sub(dw).max(1)];
            while r.len() > dw {
                let k = r.len() - 1 - dw;
                let c = r.last().unwrap() * &inv;
                for (j, dj) in d.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * dj);
                }
                q[k] = c;
                r.pop();
                trim_row(&mut r);
            }
            qs.push(q);
            rs.push(r);
        }
        (BiPoly::new(qs), BiPoly::new(rs))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
            let b = rhs.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
            let m = a.len().max(b.len());
            out.push(
                (0..m)
                    .map(|j| match (a.get(j), b.get(j)) {
                        (Some(x), Some(y)) => x + y,
                        (Some(x), None) | (None, Some(x)) => x.clone(),
                        (None, None) => unreachable!(),
                    })
                    .collect(),
            );
        }
        BiPoly::new(out)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.map(|c| -c)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![
            vec![RatFunc::zero(); self.degree_w() + rhs.degree_w() + 1];
            self.coeffs.len() + rhs.coeffs.len() - 1
        ];
        for (i, ra) in self.coeffs.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rb) in rhs.coeffs.iter().enumerate() {
                    for (l, b) in rb.iter().enumerate() {
                        out[i + k][j + l] = &out[i + k][j + l] + &(a * b);
                    }
                }
            }
        }
        BiPoly::new(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

fn monomial_str(i: usize, j: usize) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("y".to_string()),
        _ => parts.push(format!("y^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push("w".to_string()),
        _ => parts.push(format!("w^{j}")),
    }
    parts.join("*")
}

/// Terms by decreasing `y`, then `w` degree: `y^2 - t*w`, `(t + 1)*y`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let negative = c.num().lc().is_negative();
                let mag = if negative { -c } else { c.clone() };
                let mono = monomial_str(i, j);
                let body = if mono.is_empty() {
                    mag.to_string()
                } else if mag == RatFunc::one() {
                    mono
                } else if mag.is_atom() {
                    format!("{mag}*{mono}")
                } else {
                    format!("({mag})*{mono}")
                };
                match (first, negative) {
                    (true, true) => write!(f, "-{body}")?,
                    (true, false) => write!(f, "{body}")?,
                    (false, true) => write!(f, " - {body}")?,
                    (false, false) => write!(f, " + {body}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
