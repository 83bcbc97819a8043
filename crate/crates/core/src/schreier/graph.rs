use std::collections::VecDeque;

use super::multiset::SymmetricMultiset;
use crate::error::{Error, Result};
use crate::permcore::{FiniteGroup, Transversal};
use crate::spectral::Matrix;

/// Schreier graph of `G` acting on the right cosets of `Y`, with connection
/// multiset `S`. Loops and parallel edges are kept.
///
/// The walk matrix is stored as integer edge counts: `count(ω, ω')` is the
/// number of `s ∈ S` (with multiplicity) with `ω^s = ω'`, and the averaging
/// operator is `count / |S|`.
#[derive(Clone, Debug)]
pub struct SchreierGraph {
    vertex_count: usize,
    degree: usize,
    counts: Vec<u32>,
    group_order: usize,
    stabilizer_order: usize,
    multiset: SymmetricMultiset,
}

impl SchreierGraph {
    /// `Sch(G, Y, S)`; the Cayley graph when `Y` is trivial.
    pub fn new(g: &FiniteGroup, y: &FiniteGroup, s: &SymmetricMultiset) -> Result<SchreierGraph> {
        let t = Transversal::new(g, y)?;
        SchreierGraph::on_cosets(&t, s)
    }

    /// Builds the graph on the cosets of a precomputed transversal.
    pub fn on_cosets(t: &Transversal, s: &SymmetricMultiset) -> Result<SchreierGraph> {
        let g = t.parent();
        let entries = s.as_multiset().indices_in(g)?;
        let n = t.index();
        let mut counts = vec![0u32; n * n];
        for (from, &r) in t.rep_indices().iter().enumerate() {
            for &(x, m) in &entries {
                let to = t.coset_of(g.mul(r, x));
                counts[from * n + to] += m as u32;
            }
        }
        Ok(SchreierGraph {
            vertex_count: n,
            degree: s.size(),
            counts,
            group_order: g.order(),
            stabilizer_order: t.subgroup().order(),
            multiset: s.clone(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `|S|`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer_order
    }

    pub fn multiset(&self) -> &SymmetricMultiset {
        &self.multiset
    }

    pub fn count(&self, from: usize, to: usize) -> u32 {
        self.counts[from * self.vertex_count + to]
    }

    pub fn walk_entry(&self, from: usize, to: usize) -> f64 {
        self.count(from, to) as f64 / self.degree as f64
    }

    /// The averaging operator `M`.
    pub fn walk(&self) -> Matrix {
        Matrix::from_fn(self.vertex_count, |i, j| self.walk_entry(i, j))
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.vertex_count;
        self.counts[v * n..(v + 1) * n]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, _)| w)
    }

    /// Connected components and two-colourability, by breadth-first search.
    pub fn connectivity(&self) -> Connectivity {
        let n = self.vertex_count;
        let mut colour: Vec<Option<u8>> = vec![None; n];
        let mut components = 0;
        let mut bipartite = true;
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            components += 1;
            colour[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].expect("queued vertices are coloured");
                for w in self.neighbours(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(1 - cv);
                            queue.push_back(w);
                        }
                        // a loop (w == v) lands here too
                        Some(cw) if cw == cv => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
        }
        Connectivity {
            connected: components <= 1,
            components,
            bipartite,
            classes: bipartite.then(|| colour.into_iter().map(|c| c.unwrap_or(0)).collect()),
        }
    }
}

/// Result of [`SchreierGraph::connectivity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
    /// Every component admits a proper 2-colouring; loops rule this out.
    pub bipartite: bool,
    /// The colouring, when one exists.
    pub classes: Option<Vec<u8>>,
}

pub fn connectivity_and_bipartiteness(graph: &SchreierGraph) -> Connectivity {
    graph.connectivity()
}

/// `Sch(G, Y, S)` with a check that the multiset lives in `G`.
pub fn schreier_graph(g: &FiniteGroup, y: &FiniteGroup, s: &SymmetricMultiset) -> Result<SchreierGraph> {
    if s.degree() != g.degree() {
        return Err(Error::DegreeMismatch { expected: g.degree(), found: s.degree() });
    }
    SchreierGraph::new(g, y, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{point_stabilizer, Permutation};
    use crate::schreier::{symmetrize, Multiset};

    fn cyclic(n: usize) -> FiniteGroup {
        let gen = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        FiniteGroup::generate(vec![gen], 1000).unwrap()
    }

    fn s3() -> FiniteGroup {
        let t = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        FiniteGroup::generate(vec![t, c], 100).unwrap()
    }

    fn transpositions() -> SymmetricMultiset {
        let ts: Multiset = [vec![0, 1], vec![0, 2], vec![1, 2]]
            .into_iter()
            .map(|c| Permutation::from_cycles(3, &[c]).unwrap())
            .collect();
        SymmetricMultiset::new(ts).unwrap()
    }

    #[test]
    fn six_cycle() {
        let g = cyclic(6);
        let s = symmetrize(&g.generators().iter().cloned().collect()).unwrap();
        let graph = schreier_graph(&g, &FiniteGroup::trivial(6), &s).unwrap();
        for i in 0..6 {
            let row: Vec<f64> = (0..6).map(|j| graph.walk_entry(i, j)).collect();
            assert_eq!(row.iter().filter(|&&x| x == 0.5).count(), 2);
            assert_eq!(row.iter().sum::<f64>(), 1.0);
        }
        let c = graph.connectivity();
        assert!(c.connected && c.bipartite);
    }

    #[test]
    fn sym3_on_three_points_is_uniform_with_loops() {
        let g = s3();
        let y = point_stabilizer(&g, 2).unwrap();
        let graph = schreier_graph(&g, &y, &transpositions()).unwrap();
        assert_eq!(graph.vertex_count(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(graph.count(i, j), 1);
            }
        }
        assert!(!graph.connectivity().bipartite);
    }

    #[test]
    fn identity_pair_gives_identity_walk() {
        let g = s3();
        let e = Permutation::identity(3);
        let s = SymmetricMultiset::new([(e, 2)].into_iter().collect()).unwrap();
        let graph = schreier_graph(&g, &FiniteGroup::trivial(3), &s).unwrap();
        assert_eq!(graph.walk(), Matrix::identity(6));
        let c = graph.connectivity();
        assert!(!c.connected);
        assert!(!c.bipartite);
        assert_eq!(c.components, 6);
    }

    #[test]
    fn square_of_generator_disconnects_c4() {
        let g = cyclic(4);
        let gen = &g.generators()[0];
        let sq = gen.then(gen);
        let s = SymmetricMultiset::new([(sq, 2)].into_iter().collect()).unwrap();
        let c = schreier_graph(&g, &FiniteGroup::trivial(4), &s).unwrap().connectivity();
        assert!(!c.connected);
        assert_eq!(c.components, 2);
    }

    #[test]
    fn element_outside_group_is_rejected() {
        let g = cyclic(4);
        let t = Permutation::from_cycles(4, &[vec![0, 1]]).unwrap();
        let s = SymmetricMultiset::new([t].into_iter().collect()).unwrap();
        assert!(matches!(
            schreier_graph(&g, &FiniteGroup::trivial(4), &s),
            Err(Error::ElementNotInGroup(_))
        ));
    }
}
