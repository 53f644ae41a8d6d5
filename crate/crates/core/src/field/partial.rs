use std::fmt;

use super::{factor, poly_gcd, Poly, RatFunc};

/// One term `numerator / irreducible_den^power`, `deg numerator < deg irreducible_den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionTerm {
    pub irreducible_den: Poly,
    pub power: usize,
    pub numerator: Poly,
}

/// Full partial-fraction decomposition over Q with irreducible denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFraction {
    pub polynomial_part: Poly,
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFraction {
    /// Sums the decomposition back into a single rational function.
    pub fn recombine(&self) -> RatFunc {
        self.terms.iter().fold(
            RatFunc::from_poly(self.polynomial_part.clone()),
            |acc, term| {
                &acc + &RatFunc::new(
                    term.numerator.clone(),
                    term.irreducible_den.pow(term.power as u32),
                )
            },
        )
    }

    /// Terms with a simple pole.
    pub fn simple_terms(&self) -> impl Iterator<Item = &PartialFractionTerm> {
        self.terms.iter().filter(|t| t.power == 1)
    }
}

impl fmt::Display for PartialFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.polynomial_part.is_zero() || self.terms.is_empty() {
            parts.push(self.polynomial_part.to_string());
        }
        for t in &self.terms {
            let den = if t.power == 1 {
                format!("({})", t.irreducible_den)
            } else {
                format!("({})^{}", t.irreducible_den, t.power)
            };
            parts.push(format!("({})/{}", t.numerator, den));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// `s` with `s * a = 1 (mod m)` for coprime `a`, `m`.
pub(crate) fn inverse_mod(a: &Poly, m: &Poly) -> Poly {
    let (mut r0, mut r1) = (m.clone(), a.rem(m));
    let (mut s0, mut s1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s2 = &s0 - &(&q * &s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    debug_assert_eq!(r0.degree(), 0, "inverse_mod on non-coprime inputs");
    s0.scale(&r0.lc().recip()).rem(m)
}

/// Decomposes `r` as polynomial part plus a sum of `c / p^k` with `p` monic
/// irreducible over Q and `deg c < deg p`. Terms are ordered by denominator,
/// then by increasing power.
pub fn partial_fractions(r: &RatFunc) -> PartialFraction {
    let (poly_part, rem) = r.num().div_rem(r.den());
    let mut terms = Vec::new();
    if !rem.is_zero() {
        let den = r.den();
        let factors = factor(den).expect("denominator is non-zero");
        for (p, e) in factors {
            let pe = p.pow(e as u32);
            let cofactor = den.exact_div(&pe).unwrap();
            debug_assert!(poly_gcd(&cofactor, &pe).is_one());
            // A / p^e with A = rem * cofactor^{-1} mod p^e.
            let mut a = (&rem * &inverse_mod(&cofactor, &pe)).rem(&pe);
            // p-adic expansion A = sum c_j p^j gives terms c_j / p^(e - j).
            let mut local = Vec::new();
            for j in 0..e {
                let (q, c) = a.div_rem(&p);
                if !c.is_zero() {
                    local.push(PartialFractionTerm {
                        irreducible_den: p.clone(),
                        power: e - j,
                        numerator: c,
                    });
                }
                a = q;
            }
            local.reverse();
            terms.extend(local);
        }
    }
    PartialFraction {
        polynomial_part: poly_part,
        terms,
    }
}
