#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use schreier_core::permcore::{FiniteGroup, Permutation};

/// Independent closure oracle: plain BFS over image vectors.
pub fn closure_oracle(degree: usize, gens: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            // x then g
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn element_set(g: &FiniteGroup) -> BTreeSet<Vec<u32>> {
    g.elements().iter().map(|p| p.images().to_vec()).collect()
}

pub fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).unwrap()
}

/// A random image vector of the given degree.
pub fn arb_images(degree: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..degree as u32).collect::<Vec<u32>>()).prop_shuffle()
}

/// A subgroup of Sym(n), 3 ≤ n ≤ 5, generated by one to three random permutations.
pub fn arb_group() -> impl Strategy<Value = FiniteGroup> {
    (3usize..=5)
        .prop_flat_map(|n| prop::collection::vec(arb_images(n), 1..=3))
        .prop_map(|gens| FiniteGroup::generate(gens.into_iter().map(perm).collect(), 1000).unwrap())
}

/// A group together with a subgroup generated by at most two of its elements.
pub fn arb_group_and_subgroup() -> impl Strategy<Value = (FiniteGroup, FiniteGroup)> {
    (arb_group(), prop::collection::vec(any::<prop::sample::Index>(), 0..=2)).prop_map(|(g, picks)| {
        let gens: Vec<Permutation> = picks.iter().map(|i| g.element(i.index(g.order())).clone()).collect();
        let y = if gens.is_empty() { FiniteGroup::trivial(g.degree()) } else { g.subgroup_generated_by(&gens).unwrap() };
        (g, y)
    })
}
