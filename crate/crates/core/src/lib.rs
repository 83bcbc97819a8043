//! Schreier graphs of finite permutation groups, their spectra, and the
//! expansion bounds attached to them.
//!
//! Conventions: permutations act on the right, so `p.compose(q)` applies
//! `p` first; commutators are `[x, y] = x⁻¹y⁻¹xy`; cosets are right cosets
//! `Hx`.

pub mod bounds;
pub mod catalog;
pub mod error;
pub mod format;
pub mod montecarlo;
pub mod permcore;
pub mod schreier;
pub mod spectral;
pub mod sweep;

pub use bounds::{BoundReport, DerivedIndexCheck, GlwiBound, ThetaProfile};
pub use error::{Error, Result};
pub use montecarlo::TrialStats;
pub use permcore::{FiniteGroup, IndexedSubgroup, Permutation, Transversal};
pub use schreier::{Multiset, SchreierGraph, SymmetricMultiset};
pub use spectral::{Matrix, SpectralSummary};
