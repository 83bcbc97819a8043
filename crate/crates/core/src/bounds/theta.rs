use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::formulas::gap_ceiling;
use crate::error::{Error, Result};
use crate::permcore::{derived_in, intermediate_subgroups_in, FiniteGroup, Permutation, DEFAULT_SUBGROUP_LIMIT};

/// One subgroup `H` of the interval `[Y, G]` with the sizes entering Θ.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalEntry {
    pub order: usize,
    /// `|G:H|`.
    pub index: usize,
    /// `|H : H'Y|`.
    pub quotient: usize,
    pub generators: Vec<Permutation>,
}

impl IntervalEntry {
    /// `ln|H:H'Y| / |G:H|`, the log of this subgroup's contribution to Θ.
    pub fn log_term(&self) -> f64 {
        (self.quotient as f64).ln() / self.index as f64
    }
}

/// The interval `[Y, G]` annotated for Θ, in discovery order (`Y` first).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaProfile {
    pub omega_size: usize,
    pub entries: Vec<IntervalEntry>,
}

impl ThetaProfile {
    pub fn compute(g: &FiniteGroup, y: &FiniteGroup, limit: usize) -> Result<ThetaProfile> {
        let y_idx = y.as_indexed_in(g).map_err(|_| Error::NotASubgroup("Y is not contained in G"))?;
        let interval = intermediate_subgroups_in(g, &y_idx, limit)?;
        let entries = interval
            .par_iter()
            .map(|h| {
                let mut seeds = derived_in(g, h).generators().to_vec();
                seeds.extend_from_slice(y_idx.generators());
                let hy = g.closure(&seeds);
                IntervalEntry {
                    order: h.order(),
                    index: g.order() / h.order(),
                    quotient: h.order() / hy.order(),
                    generators: h.generators().iter().map(|&i| g.element(i).clone()).collect(),
                }
            })
            .collect();
        Ok(ThetaProfile { omega_size: g.order() / y.order(), entries })
    }

    /// Position of the subgroup attaining Θ; ties go to the earliest one.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, e) in self.entries.iter().enumerate() {
            if e.log_term() > self.entries[best].log_term() {
                best = i;
            }
        }
        best
    }

    pub fn log_theta(&self) -> f64 {
        self.entries[self.argmax()].log_term()
    }

    pub fn theta(&self) -> f64 {
        self.log_theta().exp()
    }

    /// The intermediate-subgroup gap bound for a connection multiset of
    /// the given size: the minimum over `H` of
    /// `5·|H:H'Y|^(-2/(|S|·|G:H|))`.
    pub fn glwi(&self, set_size: usize) -> Result<GlwiBound> {
        if set_size == 0 {
            return Err(Error::EmptyMultiset);
        }
        let argmin = self.argmax();
        let value = (5f64.ln() - 2.0 * self.entries[argmin].log_term() / set_size as f64).exp();
        Ok(GlwiBound {
            value,
            argmin,
            argmin_order: self.entries[argmin].order,
            vacuous: value >= gap_ceiling(self.omega_size),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlwiBound {
    pub value: f64,
    /// Position of the minimizing subgroup in the interval.
    pub argmin: usize,
    pub argmin_order: usize,
    pub vacuous: bool,
}

/// `Θ(G ↻ G/Y)`.
pub fn theta(g: &FiniteGroup, y: &FiniteGroup) -> Result<f64> {
    Ok(ThetaProfile::compute(g, y, DEFAULT_SUBGROUP_LIMIT)?.theta())
}

pub fn glwi_bound(g: &FiniteGroup, y: &FiniteGroup, set_size: usize) -> Result<GlwiBound> {
    ThetaProfile::compute(g, y, DEFAULT_SUBGROUP_LIMIT)?.glwi(set_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::point_stabilizer;

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::generate(vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()], 100).unwrap()
    }

    fn sym3() -> FiniteGroup {
        let gens = vec![
            Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
        ];
        FiniteGroup::generate(gens, 10).unwrap()
    }

    #[test]
    fn cyclic_four_regular() {
        let g = cyclic(4);
        let p = ThetaProfile::compute(&g, &FiniteGroup::trivial(4), 100).unwrap();
        assert_eq!(p.entries.len(), 3);
        assert!((p.theta() - 4.0).abs() < 1e-12);
        assert_eq!(p.entries[p.argmax()].order, 4);
        let b = p.glwi(2).unwrap();
        assert!((b.value - 1.25).abs() < 1e-12);
        assert_eq!(b.argmin_order, 4);
        assert!(!b.vacuous);
    }

    #[test]
    fn sym3_natural_is_vacuous() {
        let g = sym3();
        let y = point_stabilizer(&g, 2).unwrap();
        let p = ThetaProfile::compute(&g, &y, 100).unwrap();
        assert_eq!(p.entries.len(), 2);
        assert_eq!(p.theta(), 1.0);
        for size in 1..6 {
            assert!((p.glwi(size).unwrap().value - 5.0).abs() < 1e-12);
        }
    }

    #[test]
    fn abelian_regular_theta_is_order() {
        for n in [2, 5, 6, 12] {
            assert!((theta(&cyclic(n), &FiniteGroup::trivial(n)).unwrap() - n as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_non_subgroup() {
        let g = cyclic(4);
        assert!(theta(&g, &sym3()).is_err());
        assert_eq!(ThetaProfile::compute(&g, &FiniteGroup::trivial(4), 2).unwrap_err(), Error::SubgroupLimit { limit: 2 });
    }
}
