//! Subgroups, conjugacy, Sylow subgroups, quotients and solvability tests.

pub mod classes;
pub mod quotient;
pub mod solvable;
pub mod subgroups;
pub mod thm12;

pub use classes::{center, centralizer, conjugacy_classes, is_normal, normal_closure, normal_subgroups, normalizer};
pub use quotient::{quotient, Quotient};
pub use solvable::{is_clt, is_supersolvable, prime_order_normal_subgroup};
pub use subgroups::{
    divisors, extend_subgroup, for_each_subgroup_of_order, generated_subgroup, is_subgroup, p_part, prime_factors,
    subgroup_chain, subgroup_generated_by_set, subgroup_of_order, subgroup_of_order_within, subgroups_of_order_within,
    sylow, sylow_within, Subgroup, SubgroupChain,
};
pub use thm12::{involution_hypotheses, thm12_hypotheses, InvolutionHypotheses};
