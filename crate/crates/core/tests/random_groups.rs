//! Invariants on groups generated by random permutations.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use classprod::{ClassTable, FiniteGroup, HypothesisKind, Lab, Permutation, Status};
use common::{class_map, Brute};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=2)
            .prop_map(move |gens| FiniteGroup::generate(n, &gens, 1000).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompositions_match_pair_enumeration(g in group()) {
        let t = ClassTable::new(Arc::new(g));
        let brute = Brute::new(t.group());
        let map = class_map(&brute, &t);
        prop_assert_eq!(t.sizes().iter().sum::<usize>(), t.group().order());
        for x in 0..brute.classes.len() {
            for y in 0..brute.classes.len() {
                let want = brute.decomposition(x, y);
                let got = t.product_decomposition(map[x], map[y]);
                let total: u64 = (0..t.len()).map(|c| got.get(c) * t.class(c).size() as u64).sum();
                prop_assert_eq!(total, (t.class(map[x]).size() * t.class(map[y]).size()) as u64);
                for c in 0..want.len() {
                    prop_assert_eq!(got.get(map[c]), want[c]);
                }
            }
        }
    }

    #[test]
    fn element_orders_and_reality(g in group()) {
        let t = ClassTable::new(Arc::new(g));
        let brute = Brute::new(t.group());
        for (c, members) in brute.classes.iter().enumerate() {
            let id = t.class_of(members[0]);
            let class = t.class(id);
            prop_assert_eq!(class.members.clone(), members.clone());
            prop_assert_eq!(class.element_order, brute.order_of(members[0]));
            prop_assert_eq!(class.real, brute.is_real(c));
        }
    }

    #[test]
    fn sweeps_never_falsify(g in group()) {
        let t = ClassTable::new(Arc::new(g));
        let lab = Lab::new(&t, "random");
        let kinds: BTreeSet<_> = HypothesisKind::ALL.into_iter().collect();
        for r in lab.sweep(&kinds) {
            prop_assert!(r.status != Status::Falsified, "{:?}", r);
        }
    }

    #[test]
    fn derived_strategies_agree(g in group()) {
        let by_pairs = g.derived_subgroup_by_pairs();
        let by_closure = g.derived_subgroup_by_normal_closure();
        prop_assert!(by_pairs.same_elements(&by_closure));
    }
}
