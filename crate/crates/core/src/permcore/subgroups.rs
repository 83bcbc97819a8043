//! Subgroup constructions over full element tables: commutator subgroups,
//! the lower central series, normal cores, the faithful quotient action,
//! intermediate-subgroup intervals and index-2 overgroups.

use std::collections::HashMap;
use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::group::{FiniteGroup, IndexedSubgroup};
use super::perm::Permutation;
use super::transversal::Transversal;
use crate::error::{Error, Result};

/// Default limit on the number of subgroups an interval enumeration may produce.
pub const DEFAULT_SUBGROUP_LIMIT: usize = 20_000;

/// `[H, H]`, as a standalone group.
pub fn derived_subgroup(h: &FiniteGroup) -> FiniteGroup {
    let all = h.closure(&h.generator_indices());
    h.subgroup(&derived_in(h, &all))
}

/// `[K, K]` for a subgroup `K` of `g`, in `g`'s index space.
pub(crate) fn derived_in(g: &FiniteGroup, k: &IndexedSubgroup) -> IndexedSubgroup {
    let gens = &k.gens;
    let mut seeds = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    g.normal_closure(&seeds, gens)
}

/// The lower central series `γ₁ = G ⊵ γ₂ ⊵ …`, up to triviality or stabilization.
#[derive(Clone, Debug)]
pub struct LowerCentralSeries {
    pub terms: Vec<FiniteGroup>,
    /// Least `c` with `γ_{c+1} = 1`; `None` if the series stabilizes above 1.
    pub class: Option<usize>,
}

impl LowerCentralSeries {
    pub fn is_nilpotent(&self) -> bool {
        self.class.is_some()
    }
}

pub fn lower_central_series(g: &FiniteGroup) -> LowerCentralSeries {
    let series = lower_central_series_in(g);
    LowerCentralSeries {
        terms: series.0.iter().map(|t| g.subgroup(t)).collect(),
        class: series.1,
    }
}

pub(crate) fn lower_central_series_in(g: &FiniteGroup) -> (Vec<IndexedSubgroup>, Option<usize>) {
    let gens = g.generator_indices();
    let mut terms = vec![g.closure(&gens)];
    loop {
        let last = terms.last().expect("series is never empty");
        let seeds: Vec<usize> = last
            .gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&s| (a, s)))
            .map(|(a, s)| g.commutator(a, s))
            .collect();
        let next = g.normal_closure(&seeds, &gens);
        let stalled = next.order == last.order;
        let trivial = next.order == 1;
        terms.push(next);
        if trivial {
            let class = terms.len() - 1;
            return (terms, Some(class));
        }
        if stalled {
            terms.pop();
            return (terms, None);
        }
    }
}

/// Largest normal subgroup of `g` contained in `y`.
pub fn normal_core(g: &FiniteGroup, y: &FiniteGroup) -> Result<FiniteGroup> {
    let t = Transversal::new(g, y)?;
    let y_idx = y.embed_in(g)?;
    let mut core = FixedBitSet::with_capacity(g.order());
    y_idx.iter().for_each(|&i| core.insert(i));
    for &rep in t.rep_indices() {
        let mut conj = FixedBitSet::with_capacity(g.order());
        y_idx.iter().for_each(|&i| conj.insert(g.conj(i, rep)));
        core.intersect_with(&conj);
    }
    Ok(g.subgroup(&g.subgroup_from_members(&core)))
}

/// The permutation action of `G` on the right cosets of `Y`.
#[derive(Clone, Debug)]
pub struct FaithfulReduction {
    /// Image of `G` acting on `|G:Y|` points.
    pub image: FiniteGroup,
    /// The point corresponding to the coset `Y` itself.
    pub base_point: usize,
    pub transversal: Transversal,
}

impl FaithfulReduction {
    /// Permutation induced on the cosets by an element of `G`.
    pub fn map(&self, x: &Permutation) -> Result<Permutation> {
        let g = self.transversal.parent();
        Ok(coset_action(&self.transversal, g.require(x)?))
    }
}

pub(crate) fn coset_action(t: &Transversal, x: usize) -> Permutation {
    let g = t.parent();
    let images = t
        .rep_indices()
        .iter()
        .map(|&r| t.coset_of(g.mul(r, x)) as u32)
        .collect();
    Permutation::from_images(images).expect("right multiplication permutes cosets")
}

pub fn faithful_reduction(g: &FiniteGroup, y: &FiniteGroup) -> Result<FaithfulReduction> {
    let t = Transversal::new(g, y)?;
    let gens = g
        .generator_indices()
        .into_iter()
        .map(|s| coset_action(&t, s))
        .collect();
    let image = FiniteGroup::generate(gens, g.order())?;
    let base_point = t.coset_of(0);
    Ok(FaithfulReduction { image, base_point, transversal: t })
}

/// Stabilizer of `point` in the natural action of `g`.
pub fn point_stabilizer(g: &FiniteGroup, point: usize) -> Result<FiniteGroup> {
    if point >= g.degree() {
        return Err(Error::PointOutOfRange { point, degree: g.degree() });
    }
    let mut members = FixedBitSet::with_capacity(g.order());
    for (i, e) in g.elements().iter().enumerate() {
        if e.images()[point] as usize == point {
            members.insert(i);
        }
    }
    Ok(g.subgroup(&g.subgroup_from_members(&members)))
}

/// Every subgroup `H` with `Y ≤ H ≤ G`.
///
/// Grows the interval from `Y` by adjoining one element of `G` at a time
/// until no new subgroup appears. The result is in discovery order, starting
/// with `Y`.
pub fn intermediate_subgroups(g: &FiniteGroup, y: &FiniteGroup, limit: usize) -> Result<Vec<FiniteGroup>> {
    let y_idx = y.as_indexed_in(g).map_err(|_| Error::NotASubgroup("Y is not contained in G"))?;
    Ok(intermediate_subgroups_in(g, &y_idx, limit)?
        .iter()
        .map(|h| g.subgroup(h))
        .collect())
}

pub(crate) fn intermediate_subgroups_in(
    g: &FiniteGroup,
    y: &IndexedSubgroup,
    limit: usize,
) -> Result<Vec<IndexedSubgroup>> {
    let mut found = vec![y.clone()];
    let mut seen: HashSet<FixedBitSet> = HashSet::from([y.members.clone()]);
    if found.len() > limit {
        return Err(Error::SubgroupLimit { limit });
    }
    let mut i = 0;
    while i < found.len() {
        let k = found[i].clone();
        let k_members: Vec<usize> = k.members().collect();
        // ⟨K, kx⟩ = ⟨K, x⟩, so one representative per right coset Kx suffices.
        let mut covered = k.members.clone();
        for x in 0..g.order() {
            if covered.contains(x) {
                continue;
            }
            for &m in &k_members {
                covered.insert(g.mul(m, x));
            }
            let mut gens = k.gens.clone();
            gens.push(x);
            let l = g.closure(&gens);
            if seen.insert(l.members.clone()) {
                found.push(l);
                if found.len() > limit {
                    return Err(Error::SubgroupLimit { limit });
                }
            }
        }
        i += 1;
    }
    Ok(found)
}

/// Every index-2 subgroup of `G` that contains `Y`.
pub fn index2_overgroups(g: &FiniteGroup, y: &FiniteGroup) -> Result<Vec<FiniteGroup>> {
    let y_idx = y.as_indexed_in(g).map_err(|_| Error::NotASubgroup("Y is not contained in G"))?;
    Ok(index2_overgroups_in(g, &y_idx)
        .iter()
        .map(|n| g.subgroup(n))
        .collect())
}

pub(crate) fn index2_overgroups_in(g: &FiniteGroup, y: &IndexedSubgroup) -> Vec<IndexedSubgroup> {
    let gens = g.generator_indices();
    // K = G'G², so G/K is elementary abelian of rank r.
    let mut seeds: Vec<usize> = gens.iter().map(|&s| g.mul(s, s)).collect();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seeds.push(g.commutator(a, b));
        }
    }
    let k = g.normal_closure(&seeds, &gens);
    let t = Transversal::new(g, &g.subgroup(&k)).expect("K is a subgroup of G");

    // Coordinates of each coset of K over the field with two elements.
    let mut coords: HashMap<usize, u64> = HashMap::from([(t.coset_of(0), 0u64)]);
    let mut rank = 0;
    for &s in &gens {
        if coords.contains_key(&t.coset_of(s)) {
            continue;
        }
        let bit = 1u64 << rank;
        rank += 1;
        let snapshot: Vec<(usize, u64)> = coords.iter().map(|(&c, &v)| (c, v)).collect();
        for (c, v) in snapshot {
            let rep = t.rep_indices()[c];
            coords.insert(t.coset_of(g.mul(rep, s)), v | bit);
        }
    }
    debug_assert_eq!(coords.len(), t.index());

    let vec_of: Vec<u64> = (0..g.order()).map(|x| coords[&t.coset_of(x)]).collect();
    let mut out = Vec::new();
    for functional in 1u64..(1u64 << rank) {
        let mut members = FixedBitSet::with_capacity(g.order());
        for (x, v) in vec_of.iter().enumerate() {
            if (v & functional).count_ones() % 2 == 0 {
                members.insert(x);
            }
        }
        if y.members.is_subset(&members) {
            out.push(g.subgroup_from_members(&members));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    fn group(n: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
        FiniteGroup::generate(gens.iter().map(|c| cyc(n, c)).collect(), 100_000).unwrap()
    }

    fn c4() -> FiniteGroup {
        group(4, &[&[&[0, 1, 2, 3]]])
    }

    fn s3() -> FiniteGroup {
        group(3, &[&[&[0, 1]], &[&[0, 1, 2]]])
    }

    fn d8() -> FiniteGroup {
        group(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]])
    }

    // Brute force over all element pairs.
    fn all_commutators(g: &FiniteGroup) -> usize {
        let mut seeds = Vec::new();
        for a in 0..g.order() {
            for b in 0..g.order() {
                seeds.push(g.commutator(a, b));
            }
        }
        g.closure(&seeds).order()
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(derived_subgroup(&c4()).order(), 1);
        assert_eq!(derived_subgroup(&s3()).order(), 3);
        assert_eq!(all_commutators(&s3()), 3);
        let d = derived_subgroup(&d8());
        assert_eq!(d.order(), 2);
        assert_eq!(all_commutators(&d8()), 2);
        // the derived subgroup of D8 is its centre {e, r²}
        let r = d8().generators()[0].clone();
        assert!(d.contains(&r.then(&r)));
    }

    #[test]
    fn lower_central_series_examples() {
        let ab = lower_central_series(&c4());
        assert_eq!(ab.class, Some(1));
        let d = lower_central_series(&d8());
        assert_eq!(d.class, Some(2));
        assert_eq!(d.terms.iter().map(|t| t.order()).collect::<Vec<_>>(), vec![8, 2, 1]);
        let s = lower_central_series(&s3());
        assert_eq!(s.class, None);
        assert_eq!(s.terms.last().unwrap().order(), 3);
    }

    #[test]
    fn normal_cores() {
        let g = s3();
        let y = g.subgroup_generated_by(&[cyc(3, &[&[0, 1]])]).unwrap();
        assert_eq!(normal_core(&g, &y).unwrap().order(), 1);
        let a3 = derived_subgroup(&g);
        assert!(normal_core(&g, &a3).unwrap().same_elements(&a3));
        assert!(normal_core(&g, &g).unwrap().same_elements(&g));
    }

    #[test]
    fn faithful_reductions() {
        let g = c4();
        let red = faithful_reduction(&g, &FiniteGroup::trivial(4)).unwrap();
        assert_eq!(red.image.degree(), 4);
        assert_eq!(red.image.order(), 4);

        let s = s3();
        let stab = point_stabilizer(&s, 2).unwrap();
        let red = faithful_reduction(&s, &stab).unwrap();
        assert_eq!((red.image.degree(), red.image.order()), (3, 6));
        assert_eq!(red.base_point, 0);

        let gen = g.generators()[0].clone();
        let c2 = g.subgroup_generated_by(&[gen.then(&gen)]).unwrap();
        let red = faithful_reduction(&g, &c2).unwrap();
        assert_eq!((red.image.degree(), red.image.order()), (2, 2));
    }

    #[test]
    fn intermediate_subgroup_examples() {
        let g = c4();
        let subs = intermediate_subgroups(&g, &FiniteGroup::trivial(4), 100).unwrap();
        let mut orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4]);

        let s = s3();
        let y = s.subgroup_generated_by(&[cyc(3, &[&[0, 1]])]).unwrap();
        assert_eq!(intermediate_subgroups(&s, &y, 100).unwrap().len(), 2);
        assert_eq!(intermediate_subgroups(&s, &s, 100).unwrap().len(), 1);
        assert_eq!(
            intermediate_subgroups(&g, &FiniteGroup::trivial(4), 2).unwrap_err(),
            Error::SubgroupLimit { limit: 2 }
        );
    }

    #[test]
    fn index_two_overgroups() {
        let g = c4();
        let found = index2_overgroups(&g, &FiniteGroup::trivial(4)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].order(), 2);

        let a5 = group(5, &[&[&[0, 1, 2]], &[&[0, 1, 3]], &[&[0, 1, 4]]]);
        assert_eq!(a5.order(), 60);
        assert!(index2_overgroups(&a5, &FiniteGroup::trivial(5)).unwrap().is_empty());

        let klein = group(4, &[&[&[0, 1]], &[&[2, 3]]]);
        assert_eq!(index2_overgroups(&klein, &FiniteGroup::trivial(4)).unwrap().len(), 3);

        // only one of the three contains a given involution
        let y = klein.subgroup_generated_by(&[cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(index2_overgroups(&klein, &y).unwrap().len(), 1);
    }
}
