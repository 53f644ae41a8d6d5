//! Rank-one linear differential equations over Q(t): Kummer detection,
//! rational antiderivatives, invariant maps and concrete presentations of
//! the Picard-Vessiot extension.

mod kummer;
mod presentation;
mod quadrature;

pub use kummer::{
    classify_rank_one, invariant_map, minimality_certificate, InvariantMap, Kummer,
    MinimalityWitness, TranscendenceReason,
};
pub use presentation::{pv_presentation, GaloisGroup, GeneratorRelation, PvPresentation};
pub use quadrature::{classify_quadrature, hermite_reduce, HermiteReduction};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{PartialFractionTerm, RatFunc};

/// Largest denominator degree accepted for an equation coefficient.
pub const MAX_DENOMINATOR_DEGREE: usize = 32;

/// A first-order linear equation: `x' = a*x` or `x' = g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearOde {
    Homogeneous(RatFunc),
    Quadrature(RatFunc),
}

fn check_degree(r: &RatFunc) -> Result<()> {
    let degree = r.den().degree();
    if degree > MAX_DENOMINATOR_DEGREE {
        return Err(Error::DegreeLimit {
            degree,
            bound: MAX_DENOMINATOR_DEGREE,
        });
    }
    Ok(())
}

impl LinearOde {
    pub fn homogeneous(a: RatFunc) -> Result<Self> {
        check_degree(&a)?;
        Ok(LinearOde::Homogeneous(a))
    }

    pub fn quadrature(g: RatFunc) -> Result<Self> {
        check_degree(&g)?;
        Ok(LinearOde::Quadrature(g))
    }

    pub fn coefficient(&self) -> &RatFunc {
        match self {
            LinearOde::Homogeneous(a) | LinearOde::Quadrature(a) => a,
        }
    }

    pub fn classify(&self) -> Result<RankOneClassification> {
        match self {
            LinearOde::Homogeneous(a) => classify_rank_one(a),
            LinearOde::Quadrature(g) => classify_quadrature(g),
        }
    }
}

/// Parses back to the same equation.
impl fmt::Display for LinearOde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearOde::Homogeneous(a) if a.is_atom() => write!(f, "x' = {a}*x"),
            LinearOde::Homogeneous(a) => write!(f, "x' = ({a})*x"),
            LinearOde::Quadrature(g) => write!(f, "x' = {g}"),
        }
    }
}

/// Outcome of classifying a rank-one equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankOneClassification {
    /// Solutions satisfy `y^n = c*f`; `n >= 2` is minimal.
    Kummer(Kummer),
    /// `x' = a*x` with an exponential-type solution.
    MultiplicativeTranscendental { reason: TranscendenceReason },
    /// `x' = g` without an antiderivative in Q(t); `residue` is a simple
    /// pole term of the non-integrable remainder.
    AdditiveTranscendental { residue: PartialFractionTerm },
    /// The solution space is spanned by an element of Q(t).
    InField { solution: RatFunc },
}

impl RankOneClassification {
    pub fn variant_name(&self) -> &'static str {
        match self {
            RankOneClassification::Kummer(_) => "Kummer",
            RankOneClassification::MultiplicativeTranscendental { .. } => {
                "MultiplicativeTranscendental"
            }
            RankOneClassification::AdditiveTranscendental { .. } => "AdditiveTranscendental",
            RankOneClassification::InField { .. } => "InField",
        }
    }

    pub fn as_kummer(&self) -> Option<&Kummer> {
        match self {
            RankOneClassification::Kummer(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for RankOneClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankOneClassification::Kummer(k) => write!(f, "{k}"),
            RankOneClassification::InField { solution } => {
                write!(f, "InField{{solution={solution}}}")
            }
            other => f.write_str(other.variant_name()),
        }
    }
}
