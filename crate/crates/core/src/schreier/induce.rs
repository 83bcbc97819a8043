//! Reidemeister–Schreier rewriting of a connection multiset of `G` into one
//! of a subgroup `H`.

use super::multiset::{Multiset, SymmetricMultiset};
use crate::error::{Error, Result};
use crate::permcore::Transversal;

/// `{ t·s·(bar(t·s))⁻¹ : t ∈ T, s ∈ S }` with multiplicities, for any
/// multiset `S` of the parent group. Every element lies in `H` and the size
/// is `|G:H|·|S|`.
pub fn rs_induce_multiset(t: &Transversal, s: &Multiset) -> Result<Multiset> {
    let g = t.parent();
    let entries = s.indices_in(g)?;
    let mut out = Multiset::new();
    for &rep in t.rep_indices() {
        for &(x, m) in &entries {
            let ts = g.mul(rep, x);
            let y = g.mul(ts, g.inv(t.bar(ts)));
            debug_assert!(t.subgroup().contains(g.element(y)));
            out.insert(g.element(y).clone(), m);
        }
    }
    Ok(out)
}

/// The induced multiset `S̄ ⊆ H` of a symmetric `S`, which is again symmetric.
pub fn rs_induce(t: &Transversal, s: &SymmetricMultiset) -> Result<SymmetricMultiset> {
    if s.degree() != t.parent().degree() {
        return Err(Error::DegreeMismatch { expected: t.parent().degree(), found: s.degree() });
    }
    SymmetricMultiset::new(rs_induce_multiset(t, s.as_multiset())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::{FiniteGroup, Permutation};
    use crate::schreier::symmetrize;

    fn c4() -> (FiniteGroup, Permutation) {
        let gen = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        (FiniteGroup::generate(vec![gen.clone()], 10).unwrap(), gen)
    }

    #[test]
    fn c4_into_its_square_subgroup() {
        let (g, gen) = c4();
        let sq = gen.then(&gen);
        let h = g.subgroup_generated_by(&[sq.clone()]).unwrap();
        let t = Transversal::new(&g, &h).unwrap();
        assert_eq!(t.reps(), vec![Permutation::identity(4), gen.clone()]);
        let s = symmetrize(&[gen].into_iter().collect()).unwrap();
        let bar = rs_induce(&t, &s).unwrap();
        // t = e: g -> g·g⁻¹ = e, g³ -> g³·g⁻¹ = g²; t = g: g -> g², g³ -> e
        let want: Multiset = [(Permutation::identity(4), 2), (sq, 2)].into_iter().collect();
        assert_eq!(bar.as_multiset(), &want);
        assert_eq!(bar.size(), 4);
    }

    #[test]
    fn whole_group_fixes_the_multiset() {
        let (g, gen) = c4();
        let t = Transversal::new(&g, &g).unwrap();
        let s = symmetrize(&[gen].into_iter().collect()).unwrap();
        assert_eq!(rs_induce(&t, &s).unwrap(), s);
    }

    #[test]
    fn identity_pair_induces_identities() {
        let (g, _) = c4();
        let h = FiniteGroup::trivial(4);
        let t = Transversal::new(&g, &h).unwrap();
        let e = Permutation::identity(4);
        let s = SymmetricMultiset::new([(e.clone(), 2)].into_iter().collect()).unwrap();
        let bar = rs_induce(&t, &s).unwrap();
        assert_eq!(bar.as_multiset().multiplicity(&e), 8);
        assert_eq!(bar.as_multiset().distinct(), 1);
    }
}
