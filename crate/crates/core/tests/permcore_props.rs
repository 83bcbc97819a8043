mod common;

use std::collections::BTreeSet;

use common::{arb_group, arb_group_and_subgroup, closure_oracle, element_set};
use proptest::prelude::*;
use schreier_core::permcore::{
    derived_subgroup, faithful_reduction, index2_overgroups, intermediate_subgroups, lower_central_series,
    normal_core, point_stabilizer, FiniteGroup, Transversal,
};

fn images(g: &FiniteGroup, i: usize) -> Vec<u32> {
    g.element(i).images().to_vec()
}

/// Every subgroup containing `Y` is `⟨Y, a, b, c⟩` for some three elements
/// when `|G| ≤ 24`, since subgroups of Sym(4) and Sym(5) of that size need at
/// most two generators.
fn interval_oracle(g: &FiniteGroup, y: &FiniteGroup) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let base: Vec<Vec<u32>> = y.generators().iter().map(|p| p.images().to_vec()).collect();
    let n = g.order();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let mut gens = base.clone();
                gens.extend([images(g, a), images(g, b), images(g, c)]);
                out.insert(closure_oracle(g.degree(), &gens));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_matches_closure_oracle(g in arb_group()) {
        let gens: Vec<Vec<u32>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
        prop_assert_eq!(element_set(&g), closure_oracle(g.degree(), &gens));
        prop_assert!(g.element(0).is_identity());
    }

    #[test]
    fn lagrange_and_transversal_partition((g, y) in arb_group_and_subgroup()) {
        let t = Transversal::new(&g, &y).unwrap();
        prop_assert_eq!(g.order(), y.order() * t.index());
        let mut sizes = vec![0usize; t.index()];
        for x in 0..g.order() {
            let c = t.coset_of(x);
            sizes[c] += 1;
            // x and its representative differ by an element of Y
            let rep = t.rep_indices()[c];
            prop_assert!(y.contains(&g.element(x).compose(&g.element(rep).inverse()).unwrap()));
        }
        prop_assert!(sizes.iter().all(|&s| s == y.order()));
        for (c, &rep) in t.rep_indices().iter().enumerate() {
            prop_assert_eq!(t.coset_of(rep), c);
            prop_assert_eq!(t.bar(rep), rep);
        }
    }

    #[test]
    fn derived_subgroup_is_normal(g in arb_group()) {
        let d = derived_subgroup(&g);
        prop_assert!(d.is_subgroup_of(&g));
        for x in g.elements() {
            for h in d.generators() {
                let conj = x.inverse().compose(h).unwrap().compose(x).unwrap();
                prop_assert!(d.contains(&conj));
            }
        }
        // G/G' is abelian: every commutator of generators lies in G'
        for a in g.generators() {
            for b in g.generators() {
                let c = a.inverse().compose(&b.inverse()).unwrap().compose(a).unwrap().compose(b).unwrap();
                prop_assert!(d.contains(&c));
            }
        }
    }

    #[test]
    fn faithful_reduction_order((g, y) in arb_group_and_subgroup()) {
        let core = normal_core(&g, &y).unwrap();
        let red = faithful_reduction(&g, &y).unwrap();
        prop_assert_eq!(red.image.order(), g.order() / core.order());
        prop_assert_eq!(red.image.degree(), g.order() / y.order());
        let stab = point_stabilizer(&red.image, red.base_point).unwrap();
        prop_assert_eq!(stab.order(), y.order() / core.order());
    }

    #[test]
    fn index2_overgroups_match_brute_force((g, y) in arb_group_and_subgroup()) {
        let found: BTreeSet<BTreeSet<Vec<u32>>> =
            index2_overgroups(&g, &y).unwrap().iter().map(element_set).collect();
        let all = intermediate_subgroups(&g, &y, 10_000).unwrap();
        let expected: BTreeSet<BTreeSet<Vec<u32>>> =
            all.iter().filter(|h| 2 * h.order() == g.order()).map(element_set).collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn lower_central_series_descends(g in arb_group()) {
        let lcs = lower_central_series(&g);
        prop_assert!(lcs.terms[0].same_elements(&g));
        for w in lcs.terms.windows(2) {
            prop_assert!(w[1].is_subgroup_of(&w[0]));
        }
        if let Some(c) = lcs.class {
            prop_assert!(lcs.terms[c].is_trivial());
        }
        prop_assert_eq!(matches!(lcs.class, Some(c) if c <= 1), g.is_abelian());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn intermediate_subgroups_match_oracle((g, y) in arb_group_and_subgroup().prop_filter("small", |(g, _)| g.order() <= 24)) {
        let found: Vec<BTreeSet<Vec<u32>>> = intermediate_subgroups(&g, &y, 10_000).unwrap().iter().map(element_set).collect();
        let unique: BTreeSet<BTreeSet<Vec<u32>>> = found.iter().cloned().collect();
        prop_assert_eq!(unique.len(), found.len());
        prop_assert_eq!(&found[0], &element_set(&y));
        prop_assert_eq!(unique, interval_oracle(&g, &y));
    }
}

#[test]
fn sym4_has_thirty_subgroups() {
    let g = schreier_core::catalog::catalog("sym:4").unwrap();
    let subs = intermediate_subgroups(&g, &FiniteGroup::trivial(4), 10_000).unwrap();
    assert_eq!(subs.len(), 30);
    let alt5 = schreier_core::catalog::catalog("alt:5").unwrap();
    assert_eq!(intermediate_subgroups(&alt5, &FiniteGroup::trivial(5), 10_000).unwrap().len(), 59);
}
