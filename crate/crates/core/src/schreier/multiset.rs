use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::{FiniteGroup, Permutation};

/// A finite multiset of permutations, stored canonically (sorted by element).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(Permutation, usize)>", from = "Vec<(Permutation, usize)>")]
pub struct Multiset {
    counts: BTreeMap<Permutation, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, p: Permutation, multiplicity: usize) {
        if multiplicity > 0 {
            *self.counts.entry(p).or_insert(0) += multiplicity;
        }
    }

    /// Total multiplicity `|S|`.
    pub fn size(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of distinct elements.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn multiplicity(&self, p: &Permutation) -> usize {
        self.counts.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, usize)> {
        self.counts.iter().map(|(p, &m)| (p, m))
    }

    /// Distinct elements in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.counts.keys()
    }

    /// `S⁻¹`, with multiplicities carried over.
    pub fn inverse(&self) -> Multiset {
        self.iter().map(|(p, m)| (p.inverse(), m)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(p, m)| self.multiplicity(&p.inverse()) == m)
    }

    /// The underlying set: every element with multiplicity one.
    pub fn to_set(&self) -> Multiset {
        self.support().map(|p| (p.clone(), 1)).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.counts.keys().next().map(|p| p.degree())
    }

    /// Looks up every element in `g`, returning `(index, multiplicity)` pairs.
    pub fn indices_in(&self, g: &FiniteGroup) -> Result<Vec<(usize, usize)>> {
        self.iter().map(|(p, m)| Ok((g.require(p)?, m))).collect()
    }
}

impl FromIterator<(Permutation, usize)> for Multiset {
    fn from_iter<I: IntoIterator<Item = (Permutation, usize)>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for (p, k) in iter {
            m.insert(p, k);
        }
        m
    }
}

impl From<Vec<(Permutation, usize)>> for Multiset {
    fn from(entries: Vec<(Permutation, usize)>) -> Self {
        entries.into_iter().collect()
    }
}

impl From<Multiset> for Vec<(Permutation, usize)> {
    fn from(m: Multiset) -> Self {
        m.counts.into_iter().collect()
    }
}

impl FromIterator<Permutation> for Multiset {
    fn from_iter<I: IntoIterator<Item = Permutation>>(iter: I) -> Self {
        iter.into_iter().map(|p| (p, 1)).collect()
    }
}

/// A non-empty multiset in which every element has the same multiplicity as
/// its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Multiset", into = "Multiset")]
pub struct SymmetricMultiset(Multiset);

impl SymmetricMultiset {
    pub fn new(m: Multiset) -> Result<Self> {
        let degree = m.degree().ok_or(Error::EmptyMultiset)?;
        if let Some(p) = m.support().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: p.degree() });
        }
        if let Some((p, _)) = m.iter().find(|&(p, k)| m.multiplicity(&p.inverse()) != k) {
            return Err(Error::NotSymmetric(p.to_cycle_string()));
        }
        Ok(SymmetricMultiset(m))
    }

    pub fn as_multiset(&self) -> &Multiset {
        &self.0
    }

    pub fn into_multiset(self) -> Multiset {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("symmetric multisets are non-empty")
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, usize)> {
        self.0.iter()
    }

    /// The underlying set, still symmetric.
    pub fn to_set(&self) -> SymmetricMultiset {
        SymmetricMultiset(self.0.to_set())
    }
}

impl TryFrom<Multiset> for SymmetricMultiset {
    type Error = Error;

    fn try_from(m: Multiset) -> Result<Self> {
        SymmetricMultiset::new(m)
    }
}

impl From<SymmetricMultiset> for Multiset {
    fn from(s: SymmetricMultiset) -> Multiset {
        s.0
    }
}

/// `S ⊔ S⁻¹`: every entry contributes itself and its inverse, so involutions
/// end up with doubled multiplicity and the size always doubles.
pub fn symmetrize(s: &Multiset) -> Result<SymmetricMultiset> {
    if s.is_empty() {
        return Err(Error::EmptyMultiset);
    }
    let mut out = s.clone();
    for (p, m) in s.iter() {
        out.insert(p.inverse(), m);
    }
    SymmetricMultiset::new(out)
}

/// Every non-empty inverse-closed subset of `g` (multiplicity one), in a
/// fixed order. Fails if there would be more than `cap` of them.
pub fn symmetric_subsets(g: &FiniteGroup, cap: u128) -> Result<Vec<SymmetricMultiset>> {
    // classes {x, x⁻¹} in table order
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; g.order()];
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let xi = g.inv(x);
        seen[x] = true;
        seen[xi] = true;
        classes.push(if xi == x { vec![x] } else { vec![x, xi] });
    }
    if classes.len() >= 127 {
        return Err(Error::SearchSpaceTooLarge { size: u128::MAX, cap });
    }
    let count = (1u128 << classes.len()) - 1;
    if count > cap {
        return Err(Error::SearchSpaceTooLarge { size: count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    for mask in 1..=count {
        let set: Multiset = classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.iter().map(|&x| g.element(x).clone()))
            .collect();
        out.push(SymmetricMultiset(set));
    }
    Ok(out)
}
