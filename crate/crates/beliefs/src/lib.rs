//! Beliefs over opponent strategy profiles and exact tests for whether a
//! strategy can be rationalized by one.
//!
//! Everything here is exact rational arithmetic; the searches behind the
//! `exists_*` functions are small linear programs solved by an in-crate
//! simplex, and every positive answer comes with an explicit witness belief.

pub mod dominance;
pub mod exists;
pub mod lp;
pub mod rationality;
pub mod types;

pub use dominance::{dominated_by_mixture, DominanceKind};
pub use exists::{
    exists_belief_system, exists_best_response_belief, exists_rationalizing_belief,
    RationalityFlavor, SystemMode,
};
pub use rationality::{
    conditional_expected_utility, is_rational_at, is_rational_continuation_at, ContinuationTable,
};
pub use types::{uniform_system, Belief, BeliefSystem, SetSpec, SupportSpec};
