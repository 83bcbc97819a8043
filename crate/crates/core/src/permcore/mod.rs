//! Permutations and finite permutation groups held as full element tables.

mod group;
mod perm;
mod subgroups;
mod transversal;

pub use group::{FiniteGroup, IndexedSubgroup, DEFAULT_ORDER_CAP};
pub use perm::Permutation;
pub use subgroups::{
    derived_subgroup, faithful_reduction, index2_overgroups, intermediate_subgroups,
    lower_central_series, normal_core, point_stabilizer, FaithfulReduction, LowerCentralSeries,
    DEFAULT_SUBGROUP_LIMIT,
};
pub use transversal::Transversal;

pub(crate) use subgroups::{
    derived_in, index2_overgroups_in, intermediate_subgroups_in,
    lower_central_series_in,
};
