use std::fmt;

use num_traits::One;

use super::RankOneClassification;
use crate::error::{Error, Result};
use crate::field::RatFunc;
use crate::realalg::RealAlgebraic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisGroup {
    MuN(u32),
    Gm,
    Ga,
    Trivial,
}

impl fmt::Display for GaloisGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisGroup::MuN(n) => write!(f, "mu_{n}"),
            GaloisGroup::Gm => f.write_str("G_m"),
            GaloisGroup::Ga => f.write_str("G_a"),
            GaloisGroup::Trivial => f.write_str("trivial"),
        }
    }
}

/// How the generator `y` of the extension is tied to the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorRelation {
    /// `y^degree - scalar * base = 0`.
    Algebraic {
        degree: u32,
        scalar: RealAlgebraic,
        base: RatFunc,
    },
    Transcendental,
    /// The extension is trivial: `y = solution` already lies in Q(t).
    InBase {
        solution: RatFunc,
    },
}

/// A concrete presentation of the Picard-Vessiot extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvPresentation {
    pub relation: GeneratorRelation,
    pub galois_group: GaloisGroup,
}

fn factor_str(r: &RatFunc) -> String {
    if r.is_atom() {
        r.to_string()
    } else {
        format!("({r})")
    }
}

/// `y^2 = t`, `y^3 = -t`, `y^2 = 3*(t + 1)`, `y transcendental`, `y = t^2`.
impl fmt::Display for PvPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.relation {
            GeneratorRelation::Algebraic {
                degree,
                scalar,
                base,
            } => {
                let lhs = if *degree == 1 {
                    "y".to_string()
                } else {
                    format!("y^{degree}")
                };
                let rhs = match scalar.as_rational() {
                    Some(c) if c.is_one() => base.to_string(),
                    Some(c) if (-c).is_one() => (-base).to_string(),
                    Some(c) if c.is_integer() => format!("{c}*{}", factor_str(base)),
                    _ => format!("({scalar})*{}", factor_str(base)),
                };
                write!(f, "{lhs} = {rhs}")
            }
            GeneratorRelation::Transcendental => f.write_str("y transcendental"),
            GeneratorRelation::InBase { solution } => write!(f, "y = {solution}"),
        }
    }
}

/// The presentation attached to the object `c` (ignored outside the Kummer case).
pub fn pv_presentation(
    cl: &RankOneClassification,
    c: Option<&RealAlgebraic>,
) -> Result<PvPresentation> {
    Ok(match cl {
        RankOneClassification::Kummer(k) => {
            let c = c.filter(|c| !c.is_zero()).ok_or(Error::ZeroObjectPoint)?;
            PvPresentation {
                relation: GeneratorRelation::Algebraic {
                    degree: k.n,
                    scalar: c.clone(),
                    base: k.f.clone(),
                },
                galois_group: if k.n == 1 {
                    GaloisGroup::Trivial
                } else {
                    GaloisGroup::MuN(k.n)
                },
            }
        }
        RankOneClassification::MultiplicativeTranscendental { .. } => PvPresentation {
            relation: GeneratorRelation::Transcendental,
            galois_group: GaloisGroup::Gm,
        },
        RankOneClassification::AdditiveTranscendental { .. } => PvPresentation {
            relation: GeneratorRelation::Transcendental,
            galois_group: GaloisGroup::Ga,
        },
        RankOneClassification::InField { solution } => PvPresentation {
            relation: GeneratorRelation::InBase {
                solution: solution.clone(),
            },
            galois_group: GaloisGroup::Trivial,
        },
    })
}
