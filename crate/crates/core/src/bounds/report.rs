use serde::{Deserialize, Serialize};

use super::formulas::{abelian_gap_bound, gap_ceiling, nilpotent_gap_bound, theta_min_set_size};
use super::theta::ThetaProfile;
use crate::error::Result;
use crate::permcore::{lower_central_series_in, FiniteGroup};
use crate::schreier::{SchreierGraph, SymmetricMultiset};
use crate::spectral::{spectral_summary_capped, DEFAULT_DIM_CAP, EIGEN_TOL};

/// Slack on the set-size comparison derived from Θ.
pub const SET_SIZE_TOL: f64 = 1e-9;

/// Every closed-form bound for one instance next to the measured spectrum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub omega_size: usize,
    pub set_size: usize,
    pub theta: f64,
    pub glwi_bound: f64,
    pub glwi_argmin: usize,
    pub glwi_argmin_order: usize,
    pub glwi_vacuous: bool,
    pub abelian_bound: Option<f64>,
    pub abelian_vacuous: Option<bool>,
    pub nilpotent_bound: Option<f64>,
    pub nilpotent_class: Option<usize>,
    pub nilpotent_vacuous: Option<bool>,
    pub connected: bool,
    pub measured_gap: f64,
    pub measured_lambda: f64,
    pub epsilon_used: Option<f64>,
    pub min_set_size: Option<f64>,
}

/// Outcome of one inequality on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub pass: bool,
}

impl Verdict {
    fn at_most(name: &str, lhs: f64, rhs: f64, tol: f64) -> Verdict {
        Verdict { name: name.to_string(), lhs, rhs, pass: lhs <= rhs + tol }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub subgroup_limit: usize,
    pub dim_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { subgroup_limit: crate::permcore::DEFAULT_SUBGROUP_LIMIT, dim_cap: DEFAULT_DIM_CAP }
    }
}

impl BoundReport {
    pub fn compute(
        g: &FiniteGroup,
        y: &FiniteGroup,
        s: &SymmetricMultiset,
        epsilon: Option<f64>,
        opts: &ReportOptions,
    ) -> Result<BoundReport> {
        let profile = ThetaProfile::compute(g, y, opts.subgroup_limit)?;
        let graph = SchreierGraph::new(g, y, s)?;
        let summary = spectral_summary_capped(&graph, opts.dim_cap)?;
        let class = lower_central_series_in(g).1;
        Self::assemble(&profile, g.is_abelian(), class, &graph, summary.gap, summary.two_sided_lambda, epsilon)
    }

    /// Builds a report from precomputed pieces, so sweeps can reuse one
    /// Θ profile across many connection sets.
    pub fn assemble(
        profile: &ThetaProfile,
        abelian: bool,
        class: Option<usize>,
        graph: &SchreierGraph,
        measured_gap: f64,
        measured_lambda: f64,
        epsilon: Option<f64>,
    ) -> Result<BoundReport> {
        let omega = profile.omega_size;
        let set_size = graph.degree();
        let ceiling = gap_ceiling(omega);
        let glwi = profile.glwi(set_size)?;
        let abelian_bound = if abelian { Some(abelian_gap_bound(omega, set_size)?) } else { None };
        let (nilpotent_bound, nilpotent_class) = match class {
            Some(c) if set_size >= 2 => (Some(nilpotent_gap_bound(omega, set_size, c)?), Some(c)),
            Some(c) => (None, Some(c)),
            None => (None, None),
        };
        let theta = profile.theta();
        let min_set_size = epsilon.map(|e| theta_min_set_size(theta, e)).transpose()?;
        Ok(BoundReport {
            omega_size: omega,
            set_size,
            theta,
            glwi_bound: glwi.value,
            glwi_argmin: glwi.argmin,
            glwi_argmin_order: glwi.argmin_order,
            glwi_vacuous: glwi.vacuous,
            abelian_bound,
            abelian_vacuous: abelian_bound.map(|b| b >= ceiling),
            nilpotent_bound,
            nilpotent_class,
            nilpotent_vacuous: nilpotent_bound.map(|b| b >= ceiling),
            connected: graph.connectivity().connected,
            measured_gap,
            measured_lambda,
            epsilon_used: epsilon,
            min_set_size,
        })
    }

    /// Every inequality whose hypotheses hold on this instance.
    pub fn verdicts(&self) -> Vec<Verdict> {
        let mut out = vec![
            Verdict::at_most("theta_range", 1.0, self.theta, 1e-12),
            Verdict::at_most("theta_range", self.theta, self.omega_size as f64, 1e-9),
            Verdict::at_most("glwi", self.measured_gap, self.glwi_bound, EIGEN_TOL),
        ];
        if let Some(b) = self.abelian_bound {
            out.push(Verdict::at_most("abelian", self.measured_gap, b, EIGEN_TOL));
        }
        if let Some(b) = self.nilpotent_bound {
            out.push(Verdict::at_most("nilpotent", self.measured_gap, b, EIGEN_TOL));
        }
        if !self.connected {
            out.push(Verdict::at_most("disconnected_gap", self.measured_gap, 0.0, EIGEN_TOL));
        }
        if let (Some(eps), Some(min)) = (self.epsilon_used, self.min_set_size) {
            if self.measured_gap >= eps {
                // |S| ≥ 2 ln Θ / ln(5/ε), written as min ≤ |S|
                out.push(Verdict::at_most("min_set_size", min, self.set_size as f64, SET_SIZE_TOL));
            }
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts().iter().all(|v| v.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;
    use crate::schreier::symmetrize;

    #[test]
    fn cyclic_four_report() {
        let gen = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let g = FiniteGroup::generate(vec![gen.clone()], 10).unwrap();
        let s = symmetrize(&[gen].into_iter().collect()).unwrap();
        let r = BoundReport::compute(&g, &FiniteGroup::trivial(4), &s, Some(0.5), &ReportOptions::default())
            .unwrap();
        assert!((r.measured_gap - 1.0).abs() < 1e-12);
        assert!((r.glwi_bound - 1.25).abs() < 1e-12);
        assert!((r.abelian_bound.unwrap() - 1.25).abs() < 1e-12);
        assert_eq!(r.nilpotent_class, Some(1));
        assert!((r.theta - 4.0).abs() < 1e-12);
        assert!(r.connected);
        let names: Vec<String> = r.verdicts().into_iter().map(|v| v.name).collect();
        assert!(names.contains(&"min_set_size".to_string()));
        assert!(r.all_pass());
    }

    #[test]
    fn json_field_names() {
        let gen = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let g = FiniteGroup::generate(vec![gen.clone()], 10).unwrap();
        let s = symmetrize(&[gen].into_iter().collect()).unwrap();
        let r = BoundReport::compute(&g, &FiniteGroup::trivial(3), &s, None, &ReportOptions::default()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["theta", "glwi_bound", "abelian_bound", "nilpotent_bound", "measured_gap", "measured_lambda", "epsilon_used", "min_set_size"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let back: BoundReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
