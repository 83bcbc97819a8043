use super::graph::SchreierGraph;
use super::multiset::SymmetricMultiset;
use crate::error::{Error, Result};
use crate::permcore::{index2_overgroups_in, FiniteGroup};

/// Outcome of the index-2 avoidance test for a connected Schreier graph.
#[derive(Clone, Debug)]
pub struct BipartiteCriterion {
    /// Some index-2 subgroup containing `Y` is disjoint from `S`.
    pub holds: bool,
    /// The first such subgroup found.
    pub witness: Option<FiniteGroup>,
}

/// Index-2 avoidance test for a connected `Sch(G, Y, S)`.
///
/// When `holds` is true the graph is bipartite, with the two cosets of the
/// witness as the colour classes. The converse needs `Y` normal in `G`.
/// Without normality it can fail: in `dihedral:8` on 4 points with
/// `Y = ⟨(1 3)⟩` and `S = {(0 1)(2 3), (0 2)(1 3)}` the graph is a 4-cycle,
/// yet the only index-2 subgroup containing `Y` also contains `(0 2)(1 3)`.
/// `alt:4` acting on 4 points has no index-2 subgroup at all and still
/// gives a 4-cycle for the same `S`.
pub fn bipartite_criterion(g: &FiniteGroup, y: &FiniteGroup, s: &SymmetricMultiset) -> Result<BipartiteCriterion> {
    if !SchreierGraph::new(g, y, s)?.connectivity().connected {
        return Err(Error::Disconnected);
    }
    let y_idx = y.as_indexed_in(g)?;
    let entries = s.as_multiset().indices_in(g)?;
    let witness = index2_overgroups_in(g, &y_idx)
        .into_iter()
        .find(|n| entries.iter().all(|&(x, _)| !n.contains(x)));
    Ok(BipartiteCriterion {
        holds: witness.is_some(),
        witness: witness.map(|n| g.subgroup(&n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::Permutation;
    use crate::schreier::{symmetrize, Multiset};

    fn cyclic(n: usize) -> FiniteGroup {
        let gen = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        FiniteGroup::generate(vec![gen], 1000).unwrap()
    }

    #[test]
    fn even_cycle_avoids_even_powers() {
        let g = cyclic(6);
        let s = symmetrize(&g.generators().iter().cloned().collect()).unwrap();
        let c = bipartite_criterion(&g, &FiniteGroup::trivial(6), &s).unwrap();
        assert!(c.holds);
        let w = c.witness.unwrap();
        assert_eq!(w.order(), 3);
        let gen = &g.generators()[0];
        assert!(w.contains(&gen.then(gen)));
    }

    #[test]
    fn sym3_transpositions_avoid_alt3() {
        let t = |c: Vec<usize>| Permutation::from_cycles(3, &[c]).unwrap();
        let g = FiniteGroup::generate(vec![t(vec![0, 1]), t(vec![0, 1, 2])], 10).unwrap();
        let s: Multiset = [t(vec![0, 1]), t(vec![0, 2]), t(vec![1, 2])].into_iter().collect();
        let c = bipartite_criterion(&g, &FiniteGroup::trivial(3), &SymmetricMultiset::new(s).unwrap())
            .unwrap();
        assert!(c.holds);
        assert_eq!(c.witness.unwrap().order(), 3);
    }

    #[test]
    fn odd_cycle_is_not_bipartite() {
        let g = cyclic(5);
        let s = symmetrize(&g.generators().iter().cloned().collect()).unwrap();
        let c = bipartite_criterion(&g, &FiniteGroup::trivial(5), &s).unwrap();
        assert!(!c.holds);
        assert!(c.witness.is_none());
    }

    fn bfs_bipartite(g: &FiniteGroup, y: &FiniteGroup, s: &SymmetricMultiset) -> bool {
        let c = SchreierGraph::new(g, y, s).unwrap().connectivity();
        assert!(c.connected);
        c.bipartite
    }

    fn on_four(cycles: &[Vec<usize>]) -> Permutation {
        Permutation::from_cycles(4, cycles).unwrap()
    }

    #[test]
    fn converse_fails_for_non_normal_y() {
        let g = FiniteGroup::generate(vec![on_four(&[vec![0, 1, 2, 3]]), on_four(&[vec![1, 3]])], 100).unwrap();
        let y = FiniteGroup::generate(vec![on_four(&[vec![1, 3]])], 10).unwrap();
        let s: Multiset =
            [on_four(&[vec![0, 1], vec![2, 3]]), on_four(&[vec![0, 2], vec![1, 3]])].into_iter().collect();
        let s = SymmetricMultiset::new(s).unwrap();
        assert!(bfs_bipartite(&g, &y, &s));
        assert!(!bipartite_criterion(&g, &y, &s).unwrap().holds);
    }

    #[test]
    fn alt4_on_points_has_a_bipartite_schreier_graph() {
        let g = FiniteGroup::generate(vec![on_four(&[vec![0, 1, 2]]), on_four(&[vec![1, 2, 3]])], 100).unwrap();
        let y = FiniteGroup::generate(vec![on_four(&[vec![1, 2, 3]])], 10).unwrap();
        let s: Multiset =
            [on_four(&[vec![0, 1], vec![2, 3]]), on_four(&[vec![0, 2], vec![1, 3]])].into_iter().collect();
        let s = SymmetricMultiset::new(s).unwrap();
        assert!(bfs_bipartite(&g, &y, &s));
        assert!(index2_overgroups_in(&g, &FiniteGroup::trivial(4).as_indexed_in(&g).unwrap()).is_empty());
        assert!(!bipartite_criterion(&g, &y, &s).unwrap().holds);
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = cyclic(4);
        let gen = &g.generators()[0];
        let s = SymmetricMultiset::new([(gen.then(gen), 2)].into_iter().collect()).unwrap();
        assert_eq!(
            bipartite_criterion(&g, &FiniteGroup::trivial(4), &s).unwrap_err(),
            Error::Disconnected
        );
    }
}
