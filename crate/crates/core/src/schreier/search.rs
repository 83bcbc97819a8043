//! Exhaustive search for connection sets whose Reidemeister–Schreier image,
//! once its multiplicities are discarded, has a smaller spectral gap than
//! the original graph.

use rayon::prelude::*;
use serde::Serialize;

use super::graph::SchreierGraph;
use super::induce::rs_induce;
use super::multiset::{symmetric_subsets, SymmetricMultiset};
use crate::error::{Error, Result};
use crate::permcore::{FiniteGroup, Permutation, Transversal};
use crate::spectral::{sym_eigenvalues, SpectralSummary};

/// Slack on the "set" comparison; a witness must beat it.
pub const WITNESS_TOL: f64 = 1e-9;
/// Slack on the multiset comparison, which must never fail.
pub const MULTISET_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub subset_cap: u128,
    pub transversal_cap: u128,
    /// Retry with every transversal of `H` when the default one finds nothing.
    pub try_all_transversals: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { subset_cap: 1 << 20, transversal_cap: 1 << 16, try_all_transversals: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// The symmetric subset `S ⊆ G`.
    pub subset: SymmetricMultiset,
    /// `S̄` with its multiplicities.
    pub induced: SymmetricMultiset,
    pub gap_g: f64,
    /// Gap of `Sch(H, Y, set(S̄))`.
    pub gap_h_set: f64,
    /// Gap of `Sch(H, Y, S̄)`.
    pub gap_h_multiset: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    /// Connected instances examined per transversal.
    pub instances: usize,
    pub transversals_tried: usize,
    /// Representatives of the transversal the witnesses come from (the
    /// default one when nothing was found).
    pub transversal: Vec<Permutation>,
    /// Instances where `gap(H, Y, set(S̄)) < gap(G, Y, S) - 1e-9`.
    pub witnesses: Vec<Witness>,
    /// Instances where the multiset comparison fails, over every transversal tried.
    pub multiset_violations: Vec<Witness>,
}

fn gap_of(graph: &SchreierGraph) -> Result<f64> {
    Ok(SpectralSummary::from_eigenvalues(sym_eigenvalues(&graph.walk())?).gap)
}

/// Runs the search over every non-empty symmetric subset `S ⊆ G` with
/// `Sch(G, Y, S)` connected.
pub fn dedup_counterexample_search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    y: &FiniteGroup,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    if !y.is_subgroup_of(h) || !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup("search requires Y ≤ H ≤ G"));
    }
    let g_cosets = Transversal::new(g, y)?;
    let h_cosets = Transversal::new(h, y)?;

    let connected: Vec<(SymmetricMultiset, f64)> = symmetric_subsets(g, opts.subset_cap)?
        .into_par_iter()
        .map(|s| {
            let graph = SchreierGraph::on_cosets(&g_cosets, &s)?;
            if graph.connectivity().connected {
                Ok(Some((s, gap_of(&graph)?)))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let run = |t: &Transversal| -> Result<(Vec<Witness>, Vec<Witness>)> {
        let evaluated = connected
            .par_iter()
            .map(|(s, gap_g)| {
                let induced = rs_induce(t, s)?;
                let gap_h_multiset = gap_of(&SchreierGraph::on_cosets(&h_cosets, &induced)?)?;
                let gap_h_set = gap_of(&SchreierGraph::on_cosets(&h_cosets, &induced.to_set())?)?;
                Ok(Witness { subset: s.clone(), induced, gap_g: *gap_g, gap_h_set, gap_h_multiset })
            })
            .collect::<Result<Vec<_>>>()?;
        let violations = evaluated
            .iter()
            .filter(|w| w.gap_h_multiset < w.gap_g - MULTISET_TOL)
            .cloned()
            .collect();
        let witnesses = evaluated
            .into_iter()
            .filter(|w| w.gap_h_set < w.gap_g - WITNESS_TOL)
            .collect();
        Ok((witnesses, violations))
    };

    let default_t = Transversal::new(g, h)?;
    let (witnesses, mut multiset_violations) = run(&default_t)?;
    let mut outcome = SearchOutcome {
        instances: connected.len(),
        transversals_tried: 1,
        transversal: default_t.reps(),
        witnesses,
        multiset_violations: Vec::new(),
    };
    if outcome.witnesses.is_empty() && opts.try_all_transversals && g.order() != h.order() {
        for t in Transversal::all(g, h, opts.transversal_cap)? {
            if t.rep_indices() == default_t.rep_indices() {
                continue;
            }
            outcome.transversals_tried += 1;
            let (w, v) = run(&t)?;
            multiset_violations.extend(v);
            if !w.is_empty() {
                outcome.transversal = t.reps();
                outcome.witnesses = w;
                break;
            }
        }
    }
    outcome.multiset_violations = multiset_violations;
    Ok(outcome)
}
