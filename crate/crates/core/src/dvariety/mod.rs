//! Invariant hypersurfaces for rank-one equations: minimal lifts `y^n - w*f`,
//! the derivation-invariance check, and disjointness of lifts via resultants.

mod bipoly;
mod lift;

pub use bipoly::BiPoly;
pub use lift::{
    disjoint_lifts, is_d_invariant, lift_resultant, minimal_lift_rank_one, total_derivative,
    DInvariance, Disjointness, LiftResultant, LiftedRelation,
};
