use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

/// Groups up to this order get a full multiplication table on first use.
const MUL_TABLE_LIMIT: usize = 2048;

/// A finite permutation group stored as a full element table.
///
/// Element 0 is always the identity. The remaining elements appear in
/// breadth-first discovery order from the identity, multiplying on the right
/// by the generators in the order given, so the table is a deterministic
/// function of the generator list.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    // (parent, generator) pair that discovered each element; the identity has none.
    discovery: Vec<Option<(usize, usize)>>,
    table: OnceLock<Option<Arc<Vec<u32>>>>,
}

/// A subgroup of some parent group, held as a membership set over the
/// parent's element indices together with the generators that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexedSubgroup {
    pub(crate) gens: Vec<usize>,
    pub(crate) members: FixedBitSet,
    pub(crate) order: usize,
}

impl IndexedSubgroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members.contains(idx)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_subset(&self, other: &IndexedSubgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl FiniteGroup {
    /// Closes `gens` under composition by breadth-first search.
    ///
    /// Fails with [`Error::GroupTooLarge`] as soon as more than `cap`
    /// elements have been found.
    pub fn generate(gens: Vec<Permutation>, cap: usize) -> Result<FiniteGroup> {
        let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: bad.degree() });
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut discovery = vec![None];
        let mut head = 0;
        while head < elements.len() {
            for (k, s) in gens.iter().enumerate() {
                let y = elements[head].then(s);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                    discovery.push(Some((head, k)));
                }
            }
            head += 1;
        }
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        Ok(FiniteGroup {
            degree,
            generators: gens,
            elements,
            index,
            inverses,
            discovery,
            table: OnceLock::new(),
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> FiniteGroup {
        FiniteGroup::generate(vec![Permutation::identity(degree)], 1)
            .expect("trivial group always fits")
    }

    /// Rebuilds a group from a previously enumerated table, checking that the
    /// table is exactly the breadth-first closure of `gens`.
    pub fn from_table(gens: Vec<Permutation>, elements: Vec<Permutation>) -> Result<FiniteGroup> {
        let group = FiniteGroup::generate(gens, elements.len().max(1))?;
        if group.elements != elements {
            return Err(Error::InvalidParameter(
                "element table does not match the closure of its generators".into(),
            ));
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Like [`index_of`](Self::index_of) but with a descriptive error.
    pub fn require(&self, p: &Permutation) -> Result<usize> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: p.degree() });
        }
        self.index_of(p).ok_or_else(|| Error::ElementNotInGroup(p.to_cycle_string()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Indices of the generators within the element table.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every element of `self` lies in `parent`.
    pub fn is_subgroup_of(&self, parent: &FiniteGroup) -> bool {
        self.degree == parent.degree && self.generators.iter().all(|g| parent.contains(g))
    }

    /// Element-set equality.
    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Positions of this group's elements in `parent`'s table.
    pub fn embed_in(&self, parent: &FiniteGroup) -> Result<Vec<usize>> {
        if !self.is_subgroup_of(parent) {
            return Err(Error::NotASubgroup("element outside the parent group"));
        }
        Ok(self.elements.iter().map(|e| parent.index[e]).collect())
    }

    /// This group as a membership set over `parent`'s indices.
    pub fn as_indexed_in(&self, parent: &FiniteGroup) -> Result<IndexedSubgroup> {
        let idx = self.embed_in(parent)?;
        let mut members = FixedBitSet::with_capacity(parent.order());
        idx.iter().for_each(|&i| members.insert(i));
        Ok(IndexedSubgroup {
            gens: self.generators.iter().map(|g| parent.index[g]).collect(),
            members,
            order: idx.len(),
        })
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `elements[a]` followed by `elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    /// `g⁻¹ a g`.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| (self.order() <= MUL_TABLE_LIMIT).then(|| Arc::new(self.build_table())))
            .as_deref()
    }

    // Row a of the table is filled in discovery order: a·b = (a·parent(b))·gen(b).
    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let gen_idx = self.generator_indices();
        let right: Vec<Vec<u32>> = self
            .elements
            .iter()
            .map(|e| self.generators.iter().map(|s| self.index[&e.then(s)] as u32).collect())
            .collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[0] = a as u32;
            for b in 1..n {
                let (p, k) = self.discovery[b].expect("non-identity elements have a parent");
                row[b] = right[row[p] as usize][k];
            }
        }
        debug_assert!(gen_idx.iter().all(|&g| table[g] as usize == g));
        table
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(&self, seeds: &[usize]) -> IndexedSubgroup {
        let mut gens: Vec<usize> = Vec::with_capacity(seeds.len());
        for &s in seeds {
            if s != 0 && !gens.contains(&s) {
                gens.push(s);
            }
        }
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(0);
        let mut queue = VecDeque::from([0usize]);
        let mut order = 1;
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if !members.put(y) {
                    order += 1;
                    queue.push_back(y);
                }
            }
        }
        IndexedSubgroup { gens, members, order }
    }

    /// Smallest subgroup containing `seeds` that is normalised by every
    /// element of `by`.
    pub fn normal_closure(&self, seeds: &[usize], by: &[usize]) -> IndexedSubgroup {
        let mut current = self.closure(seeds);
        'grow: loop {
            for k in current.gens.clone() {
                for &g in by {
                    let c = self.conj(k, g);
                    if !current.contains(c) {
                        let mut gens = current.gens.clone();
                        gens.push(c);
                        current = self.closure(&gens);
                        continue 'grow;
                    }
                }
            }
            return current;
        }
    }

    /// Subgroup with exactly the given members, with a greedily chosen
    /// generating set. The caller guarantees `members` is a subgroup.
    pub fn subgroup_from_members(&self, members: &FixedBitSet) -> IndexedSubgroup {
        let mut current = self.closure(&[]);
        for m in members.ones() {
            if !current.contains(m) {
                let mut gens = current.gens.clone();
                gens.push(m);
                current = self.closure(&gens);
            }
        }
        debug_assert_eq!(&current.members, members);
        current
    }

    /// Materializes an indexed subgroup as a standalone group.
    pub fn subgroup(&self, sub: &IndexedSubgroup) -> FiniteGroup {
        let gens: Vec<Permutation> = if sub.gens.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            sub.gens.iter().map(|&g| self.elements[g].clone()).collect()
        };
        FiniteGroup::generate(gens, sub.order.max(1)).expect("subgroup fits in its own order")
    }

    /// Subgroup generated by explicit permutations, all of which must lie in `self`.
    pub fn subgroup_generated_by(&self, gens: &[Permutation]) -> Result<FiniteGroup> {
        let idx = gens.iter().map(|g| self.require(g)).collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&self.closure(&idx)))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    #[test]
    fn cyclic_four() {
        let g = FiniteGroup::generate(vec![cyc(4, &[&[0, 1, 2, 3]])], 100).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.element(0).is_identity());
        assert!(g.is_abelian());
    }

    #[test]
    fn sym_six_from_transposition_and_six_cycle() {
        let g = FiniteGroup::generate(
            vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2, 3, 4, 5]])],
            10_000,
        )
        .unwrap();
        assert_eq!(g.order(), 720);
        assert!(!g.is_abelian());
    }

    #[test]
    fn identity_generates_trivial_group() {
        let g = FiniteGroup::generate(vec![Permutation::identity(3)], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_trivial());
    }

    #[test]
    fn cap_is_an_explicit_failure() {
        let err = FiniteGroup::generate(
            vec![cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2, 3, 4, 5]])],
            719,
        )
        .unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 719 });
    }

    #[test]
    fn generation_rejects_bad_input() {
        assert_eq!(FiniteGroup::generate(vec![], 10).unwrap_err(), Error::NoGenerators);
        assert!(matches!(
            FiniteGroup::generate(vec![Permutation::identity(2), Permutation::identity(3)], 10),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn table_and_hash_multiplication_agree() {
        let g = FiniteGroup::generate(vec![cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])], 200)
            .unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let direct = g.index_of(&g.element(a).then(g.element(b))).unwrap();
                assert_eq!(g.mul(a, b), direct);
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn closure_and_normal_closure() {
        let s3 = FiniteGroup::generate(vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 10).unwrap();
        let t = s3.index_of(&cyc(3, &[&[0, 1]])).unwrap();
        assert_eq!(s3.closure(&[t]).order(), 2);
        assert_eq!(s3.normal_closure(&[t], &s3.generator_indices()).order(), 6);
        assert_eq!(s3.closure(&[]).order(), 1);
    }

    #[test]
    fn from_table_round_trip() {
        let g = FiniteGroup::generate(vec![cyc(4, &[&[0, 1, 2, 3]])], 100).unwrap();
        let back = FiniteGroup::from_table(g.generators().to_vec(), g.elements().to_vec()).unwrap();
        assert_eq!(back.order(), 4);
        let mut shuffled = g.elements().to_vec();
        shuffled.swap(1, 2);
        assert!(FiniteGroup::from_table(g.generators().to_vec(), shuffled).is_err());
    }
}
