use serde::{Deserialize, Serialize};

use super::formulas::nilpotent_exponents;
use crate::error::Result;
use crate::permcore::{derived_in, lower_central_series_in, FiniteGroup};
use crate::schreier::SymmetricMultiset;

/// Slack for the log-space comparison of the two indices.
pub const DERIVED_INDEX_TOL: f64 = 1e-9;

/// The comparison `|G:G'Y| ≥ |G:Y|^β(d, c)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DerivedIndexCheck {
    /// `⟨Y ∪ S⟩ = G` and some `γ_{c+1}(G)` lies in `Y`.
    pub hypotheses_hold: bool,
    pub generates: bool,
    /// Number of inverse pairs `{s, s⁻¹}` in the support of `S`, raised to
    /// 2 if smaller. `Y` and one element per pair generate `⟨Y ∪ S⟩`.
    pub d: usize,
    /// Least `c ≥ 1` with `γ_{c+1}(G) ≤ Y`.
    pub c: Option<usize>,
    pub beta: Option<f64>,
    /// `|G:G'Y|`.
    pub lhs: f64,
    /// `|G:Y|^β`, when the hypotheses hold.
    pub rhs: Option<f64>,
    pub ok: bool,
}

pub fn derived_index_check(g: &FiniteGroup, y: &FiniteGroup, s: &SymmetricMultiset) -> Result<DerivedIndexCheck> {
    let y_idx = y.as_indexed_in(g)?;
    let s_idx: Vec<usize> = s.as_multiset().indices_in(g)?.into_iter().map(|(x, _)| x).collect();

    let mut seeds = y_idx.generators().to_vec();
    seeds.extend_from_slice(&s_idx);
    let generates = g.closure(&seeds).order() == g.order();

    let whole = g.closure(&g.generator_indices());
    let mut gy = derived_in(g, &whole).generators().to_vec();
    gy.extend_from_slice(y_idx.generators());
    let lhs = (g.order() / g.closure(&gy).order()) as f64;

    let (terms, _) = lower_central_series_in(g);
    // terms[i] is γ_{i+1}; a series that stalls above Y never reaches it.
    let c = terms
        .iter()
        .position(|t| t.is_subset(&y_idx))
        .map(|i| i.max(1));

    let pairs = s_idx.iter().filter(|&&x| x <= g.inv(x)).count();
    let d = pairs.max(2);
    let mut check = DerivedIndexCheck {
        hypotheses_hold: generates && c.is_some(),
        generates,
        d,
        c,
        beta: None,
        lhs,
        rhs: None,
        ok: true,
    };
    if let (true, Some(c)) = (generates, c) {
        let beta = nilpotent_exponents(d, c)?.beta;
        let log_index = ((g.order() / y.order()) as f64).ln();
        check.beta = Some(beta);
        check.rhs = Some((beta * log_index).exp());
        check.ok = lhs.ln() >= beta * log_index - DERIVED_INDEX_TOL;
    }
    Ok(check)
}
