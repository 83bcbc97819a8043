//! Closed-form expansion bounds and the report comparing them with measured spectra.

mod derived;
mod formulas;
mod report;
mod theta;

pub use derived::{derived_index_check, DerivedIndexCheck, DERIVED_INDEX_TOL};
pub use formulas::{
    abelian_gap_bound, gap_ceiling, nilpotent_exponents, nilpotent_gap_bound, theta_min_set_size,
    NilpotentExponents,
};
pub use report::{BoundReport, ReportOptions, Verdict, SET_SIZE_TOL};
pub use theta::{glwi_bound, theta, GlwiBound, IntervalEntry, ThetaProfile};
