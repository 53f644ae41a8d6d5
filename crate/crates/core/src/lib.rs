//! Exact classification of real Picard–Vessiot extensions for first-order
//! linear equations over `Q(t)`.
//!
//! The pipeline runs from field kernels (`field`) through real algebraic
//! numbers (`realalg`) and rank-one classification (`diffeq`) to invariant
//! hypersurfaces (`dvariety`) and the solution groupoid (`groupoid`).

pub mod diffeq;
pub mod dvariety;
pub mod error;
pub mod field;
pub mod groupoid;
pub mod parse;
pub mod realalg;

pub use diffeq::{classify_rank_one, GaloisGroup, Kummer, LinearOde, RankOneClassification};
pub use error::{Error, Result};
pub use field::{Poly, RatFunc, Rational};
pub use groupoid::{analyze, ClassificationReport, GroupoidDescriptor, TheorySpec, Verdict};
pub use parse::{parse_constant, parse_cut, parse_equation, parse_ratfunc, EquationKind};
pub use realalg::{OrderingCut, RealAlgebraic, SemialgebraicSet1D, Sign};
