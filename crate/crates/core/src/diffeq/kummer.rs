use std::fmt;

use num_traits::ToPrimitive;

use super::RankOneClassification;
use crate::error::{Error, Result};
use crate::field::{denominator_lcm, partial_fractions, Poly, RatFunc, Rational};
use crate::realalg::RealAlgebraic;

/// The Kummer invariant: every solution `y` of `x' = a*x` satisfies
/// `y^n = c*f` for a constant `c`, with `a = f'/(n f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kummer {
    pub n: u32,
    pub f: RatFunc,
    /// Monic irreducible factors with their residues `r_i`, `f = prod p_i^(n r_i)`.
    pub residues: Vec<(Poly, Rational)>,
}

impl Kummer {
    /// Recovers `a = f'/(n f)`.
    pub fn coefficient(&self) -> RatFunc {
        let ld = self.f.log_derivative().expect("f is non-zero");
        ld.scale(&Rational::from_integer(self.n.into()).recip())
    }

    /// `n*a - f'/f`, zero exactly when the invariant is correct for `a`.
    pub fn identity_residual(&self, a: &RatFunc) -> RatFunc {
        let na = a.scale(&Rational::from_integer(self.n.into()));
        &na - &self.f.log_derivative().expect("f is non-zero")
    }
}

impl fmt::Display for Kummer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let residues: Vec<String> = self
            .residues
            .iter()
            .map(|(p, r)| format!("({p}, {r})"))
            .collect();
        write!(
            f,
            "Kummer{{n={}, f={}, residues=[{}]}}",
            self.n,
            self.f,
            residues.join(", ")
        )
    }
}

/// Why `x' = a*x` has no algebraic solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TranscendenceReason {
    /// `a` has a non-zero polynomial part.
    PolynomialPart(Poly),
    /// `a` has a pole of order at least two at a root of `irreducible`.
    HigherOrderPole { irreducible: Poly, power: usize },
    /// The simple-pole numerator is not a rational multiple of `p'`.
    NonRationalResidue { irreducible: Poly, numerator: Poly },
}

impl fmt::Display for TranscendenceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TranscendenceReason::PolynomialPart(p) => write!(f, "non-zero polynomial part {p}"),
            TranscendenceReason::HigherOrderPole { irreducible, power } => {
                write!(f, "pole of order {power} at {irreducible}")
            }
            TranscendenceReason::NonRationalResidue {
                irreducible,
                numerator,
            } => {
                write!(f, "numerator {numerator} over {irreducible} is not a rational multiple of its derivative")
            }
        }
    }
}

fn transcendental(reason: TranscendenceReason) -> RankOneClassification {
    RankOneClassification::MultiplicativeTranscendental { reason }
}

fn product_of_powers(factors: &[(Poly, Rational)], scale: &Rational, round: bool) -> RatFunc {
    factors.iter().fold(RatFunc::one(), |acc, (p, r)| {
        let e = r * scale;
        let e = if round { e.floor() } else { e };
        let e = e.to_integer().to_i64().expect("exponent fits in i64");
        &acc * &RatFunc::from_poly(p.clone()).pow(e)
    })
}

/// Classifies `x' = a*x` through the partial-fraction decomposition of `a`.
pub fn classify_rank_one(a: &RatFunc) -> Result<RankOneClassification> {
    if a.is_zero() {
        return Ok(RankOneClassification::InField {
            solution: RatFunc::one(),
        });
    }
    let pf = partial_fractions(a);
    if !pf.polynomial_part.is_zero() {
        return Ok(transcendental(TranscendenceReason::PolynomialPart(
            pf.polynomial_part,
        )));
    }
    let mut residues = Vec::new();
    for term in &pf.terms {
        if term.power >= 2 {
            return Ok(transcendental(TranscendenceReason::HigherOrderPole {
                irreducible: term.irreducible_den.clone(),
                power: term.power,
            }));
        }
        let dp = term.irreducible_den.derivative();
        let r = term.numerator.lc() / dp.lc();
        if term.numerator.degree() != dp.degree() || dp.scale(&r) != term.numerator {
            return Ok(transcendental(TranscendenceReason::NonRationalResidue {
                irreducible: term.irreducible_den.clone(),
                numerator: term.numerator.clone(),
            }));
        }
        residues.push((term.irreducible_den.clone(), r));
    }
    residues.sort_by(|x, y| x.0.cmp(&y.0));
    let n_big = denominator_lcm(residues.iter().map(|(_, r)| r));
    let n = n_big.to_u32().ok_or(Error::Unsupported(format!(
        "Kummer exponent {n_big} too large"
    )))?;
    let f = product_of_powers(&residues, &Rational::from_integer(n_big), false);
    let k = Kummer { n, f, residues };
    if !k.identity_residual(a).is_zero() {
        return Err(Error::Internal(format!("Kummer identity fails for {k}")));
    }
    if n == 1 {
        return Ok(RankOneClassification::InField { solution: k.f });
    }
    Ok(RankOneClassification::Kummer(k))
}

/// Evidence that exponent `m < n` does not work: `m*a - f_m'/f_m` is non-zero
/// for `f_m` built from the residues scaled by `m` and rounded down, because
/// the residue at `offending` times `m` is not an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityWitness {
    pub m: u32,
    pub f_m: RatFunc,
    pub residual: RatFunc,
    pub offending: (Poly, Rational),
}

/// One witness per proper divisor of `n`; fails if any divisor would work.
pub fn minimality_certificate(k: &Kummer) -> Result<Vec<MinimalityWitness>> {
    let a = k.coefficient();
    let mut out = Vec::new();
    for m in (1..k.n).filter(|m| k.n.is_multiple_of(*m)) {
        let mq = Rational::from_integer(m.into());
        let f_m = product_of_powers(&k.residues, &mq, true);
        let ma = a.scale(&mq);
        let residual = &ma - &f_m.log_derivative()?;
        let offending = k
            .residues
            .iter()
            .find(|(_, r)| !(r * &mq).is_integer())
            .cloned();
        match offending {
            Some(offending) if !residual.is_zero() => out.push(MinimalityWitness {
                m,
                f_m,
                residual,
                offending,
            }),
            _ => {
                return Err(Error::Internal(format!(
                    "exponent {m} already works for {k}"
                )));
            }
        }
    }
    Ok(out)
}

/// The invariant `y -> y^n/f` of a Kummer equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMap {
    pub n: u32,
    pub f: RatFunc,
}

impl InvariantMap {
    /// `y^n / f`.
    pub fn evaluate(&self, y: &RatFunc) -> RatFunc {
        &y.pow(self.n as i64) * &self.f.inv().expect("f is non-zero")
    }

    /// The constant `c` of a presentation `y^n = c*f`.
    pub fn apply(&self, presentation: &super::PvPresentation) -> Result<RealAlgebraic> {
        match &presentation.relation {
            super::GeneratorRelation::Algebraic {
                degree,
                scalar,
                base,
            } if *degree == self.n => {
                let ratio = base.checked_div(&self.f).ok_or(Error::ZeroInput)?;
                let kappa = ratio.as_constant().ok_or(Error::ShapeMismatch)?;
                scalar.mul(&RealAlgebraic::from_rational(kappa))
            }
            _ => Err(Error::ShapeMismatch),
        }
    }
}

impl fmt::Display for InvariantMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let y = if self.n == 1 {
            "y".to_string()
        } else {
            format!("y^{}", self.n)
        };
        if self.f.is_atom() {
            write!(f, "y ↦ {y}/{}", self.f)
        } else {
            write!(f, "y ↦ {y}/({})", self.f)
        }
    }
}

/// The invariant map of a Kummer classification.
pub fn invariant_map(cl: &RankOneClassification) -> Result<InvariantMap> {
    match cl {
        RankOneClassification::Kummer(k) => Ok(InvariantMap {
            n: k.n,
            f: k.f.clone(),
        }),
        _ => Err(Error::NotKummer),
    }
}
