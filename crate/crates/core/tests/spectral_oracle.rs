mod common;

use common::arb_group_and_subgroup;
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schreier_core::montecarlo::random_symmetric_multiset_of_size;
use schreier_core::permcore::{faithful_reduction, point_stabilizer, FiniteGroup};
use schreier_core::schreier::{Multiset, SchreierGraph, SymmetricMultiset};
use schreier_core::spectral::{spectral_summary, sym_eigenvalues, Matrix};

fn nalgebra_eigenvalues(m: &Matrix) -> Vec<f64> {
    let n = m.dim();
    let mut ev: Vec<f64> = DMatrix::from_fn(n, n, |i, j| m.get(i, j)).symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

fn random_instance(g: &FiniteGroup, seed: u64, size: usize) -> SymmetricMultiset {
    random_symmetric_multiset_of_size(g, size, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_nalgebra_on_random_symmetric(n in 1usize..40, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v: f64 = rng.gen_range(-1.0..1.0);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        let ours = sym_eigenvalues(&m).unwrap();
        for (a, b) in ours.iter().zip(nalgebra_eigenvalues(&m)) {
            prop_assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn schreier_spectrum_properties((g, y) in arb_group_and_subgroup(), seed in any::<u64>(), size in 1usize..=6) {
        let s = random_instance(&g, seed, size);
        let graph = SchreierGraph::new(&g, &y, &s).unwrap();
        let walk = graph.walk();
        let summary = spectral_summary(&graph).unwrap();
        let ev = &summary.eigenvalues;

        // oracle
        for (a, b) in ev.iter().zip(nalgebra_eigenvalues(&walk)) {
            prop_assert!((a - b).abs() < 1e-8);
        }
        // row-stochastic and bounded
        prop_assert!((ev[0] - 1.0).abs() < 1e-8);
        prop_assert!(ev.iter().all(|&l| (-1.0 - 1e-8..=1.0 + 1e-8).contains(&l)));
        for i in 0..walk.dim() {
            prop_assert!((walk.row(i).iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
        // trace equals loop mass
        let loops: u32 = (0..graph.vertex_count()).map(|v| graph.count(v, v)).sum();
        prop_assert!((ev.iter().sum::<f64>() - loops as f64 / s.size() as f64).abs() < 1e-8);
        prop_assert!((walk.trace() - ev.iter().sum::<f64>()).abs() < 1e-8);

        // quotient invariance under the faithful reduction
        let red = faithful_reduction(&g, &y).unwrap();
        let mut mapped = Multiset::new();
        for (x, m) in s.iter() {
            mapped.insert(red.map(x).unwrap(), m);
        }
        let mapped = SymmetricMultiset::new(mapped).unwrap();
        let stab = point_stabilizer(&red.image, red.base_point).unwrap();
        let reduced = SchreierGraph::new(&red.image, &stab, &mapped).unwrap();
        let ev2 = spectral_summary(&reduced).unwrap().eigenvalues;
        prop_assert_eq!(ev.len(), ev2.len());
        for (a, b) in ev.iter().zip(&ev2) {
            prop_assert!((a - b).abs() < 1e-8);
        }

        // every Schreier eigenvalue is a Cayley eigenvalue
        let cayley = sym_eigenvalues(&SchreierGraph::new(&g, &FiniteGroup::trivial(g.degree()), &s).unwrap().walk()).unwrap();
        for l in ev {
            prop_assert!(cayley.iter().any(|c| (c - l).abs() < 1e-6));
        }

        // summary consistency
        if ev.len() > 1 {
            prop_assert!((summary.gap - (1.0 - ev[1]).clamp(0.0, 2.0)).abs() < 1e-15);
            prop_assert!((summary.two_sided_lambda - ev[1].abs().max(ev[ev.len() - 1].abs())).abs() < 1e-15);
        }
    }
}

#[test]
fn single_point_summary() {
    let g = FiniteGroup::trivial(1);
    let s = random_instance(&g, 1, 2);
    let summary = spectral_summary(&SchreierGraph::new(&g, &g, &s).unwrap()).unwrap();
    assert_eq!(summary.eigenvalues, vec![1.0]);
    assert_eq!(summary.gap, 2.0);
    assert_eq!(summary.two_sided_lambda, 0.0);
    assert_eq!(summary.lambda2, None);
}
