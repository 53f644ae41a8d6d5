//! The real closed field of real algebraic numbers, one-variable
//! semialgebraic sets, and sign determination under orderings of Q(t).

mod cut;
mod number;
mod semialg;
mod sturm;

pub use cut::{sign_at_cut, sign_certificate, OrderingCut, SignCertificate};
pub use number::{nth_root_in_ralg, RealAlgebraic, REFINEMENT_BUDGET};
pub use semialg::{Component, Endpoint, SemialgebraicSet1D};
pub use sturm::{
    cauchy_bound, count_real_roots, isolate_real_roots, sturm_sequence, Isolated, SturmChain,
};

use std::fmt;

use crate::field::Rational;

/// A rational or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtRational {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for ExtRational {
    fn from(q: Rational) -> Self {
        ExtRational::Finite(q)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInfinity => f.write_str("-inf"),
            ExtRational::Finite(q) => write!(f, "{q}"),
            ExtRational::PosInfinity => f.write_str("+inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        use num_traits::Signed;
        if q.is_positive() {
            Sign::Positive
        } else if q.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn from_i8(s: i8) -> Sign {
        match s.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i8(self.as_i8() * rhs.as_i8())
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign::from_i8(-self.as_i8())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-1",
            Sign::Zero => "0",
            Sign::Positive => "+1",
        })
    }
}
