//! Fixtures shared by the benchmarks.

use rand::Rng;
use schreier_core::catalog::catalog;
use schreier_core::montecarlo::{random_symmetric_multiset, trial_rng};
use schreier_core::permcore::FiniteGroup;
use schreier_core::schreier::{SchreierGraph, SymmetricMultiset};
use schreier_core::spectral::Matrix;

pub const SEED: u64 = 7;

pub fn group(name: &str) -> FiniteGroup {
    catalog(name).expect("catalog name")
}

/// `S ⊔ S⁻¹` from `draws` uniform draws.
pub fn random_set(g: &FiniteGroup, draws: usize) -> SymmetricMultiset {
    random_symmetric_multiset(g, draws, &mut trial_rng(SEED, 0)).expect("non-empty")
}

/// A dense symmetric matrix with entries in [-1, 1).
pub fn random_symmetric(n: usize) -> Matrix {
    let mut rng = trial_rng(SEED, 1);
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-1.0..1.0);
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    m
}

/// The walk matrix of a random Cayley graph of `name`.
pub fn cayley_walk(name: &str, draws: usize) -> Matrix {
    let g = group(name);
    let s = random_set(&g, draws);
    SchreierGraph::new(&g, &FiniteGroup::trivial(g.degree()), &s).expect("valid instance").walk()
}
