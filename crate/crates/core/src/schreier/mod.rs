//! Connection multisets, Schreier graphs, the bipartite criterion and
//! Reidemeister–Schreier induction.

mod criterion;
mod graph;
mod induce;
mod multiset;
mod search;

pub use criterion::{bipartite_criterion, BipartiteCriterion};
pub use graph::{connectivity_and_bipartiteness, schreier_graph, Connectivity, SchreierGraph};
pub use induce::{rs_induce, rs_induce_multiset};
pub use multiset::{symmetric_subsets, symmetrize, Multiset, SymmetricMultiset};
pub use search::{
    dedup_counterexample_search, SearchOptions, SearchOutcome, Witness, MULTISET_TOL, WITNESS_TOL,
};
