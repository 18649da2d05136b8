//! Subgroup computations checked against exhaustive enumeration.

use std::collections::BTreeSet;

use charlab_core::{GroupSpec, PermGroup, Permutation};
use proptest::prelude::*;

fn group(text: &str) -> PermGroup {
    GroupSpec::parse(text).unwrap().build().unwrap()
}

fn perm(text: &str, n: usize) -> Permutation {
    Permutation::parse(text, n).unwrap()
}

fn element_set(g: &PermGroup) -> BTreeSet<Permutation> {
    g.elements().into_iter().collect()
}

fn brute_centralizer(g: &PermGroup, s: &Permutation) -> BTreeSet<Permutation> {
    g.elements().into_iter().filter(|x| (x * s) == (s * x)).collect()
}

fn brute_normalizer(g: &PermGroup, h: &PermGroup) -> BTreeSet<Permutation> {
    let hs = element_set(h);
    g.elements()
        .into_iter()
        .filter(|x| hs.iter().all(|y| hs.contains(&y.conjugate_by(x))))
        .collect()
}

#[test]
fn centralizer_of_five_cycle_in_a5() {
    let a5 = group("A(5)");
    let s = perm("(1 2 3 4 5)", 5);
    let c = a5.centralizer_of_element(&s).unwrap();
    assert_eq!(c.order_u64(), 5);
    assert_eq!(element_set(&c), brute_centralizer(&a5, &s));
}

#[test]
fn centralizer_of_identity_is_everything() {
    let s4 = group("S(4)");
    assert_eq!(s4.centralizer_of_element(&s4.identity()).unwrap().order_u64(), 24);
}

#[test]
fn centralizer_of_double_transposition_in_s4() {
    let s4 = group("S(4)");
    let s = perm("(1 2)(3 4)", 4);
    let c = s4.centralizer_of_element(&s).unwrap();
    assert_eq!(c.order_u64(), 8);
    assert!(!c.is_abelian());
    assert_eq!(element_set(&c), brute_centralizer(&s4, &s));
}

#[test]
fn centralizer_of_subgroup_and_errors() {
    let s5 = group("S(5)");
    let sub = PermGroup::new(5, vec![perm("(1 2)", 5), perm("(3 4)", 5)]).unwrap();
    let c = s5.centralizer(&sub).unwrap();
    let brute: BTreeSet<_> = s5
        .elements()
        .into_iter()
        .filter(|x| sub.generators().iter().all(|s| (x * s) == (s * x)))
        .collect();
    assert_eq!(element_set(&c), brute);
    let a5 = group("A(5)");
    assert!(a5.centralizer_of_element(&perm("(1 2)", 5)).is_err());
}

#[test]
fn normalizer_of_sylow_five_in_a5_is_dihedral_of_order_ten() {
    let a5 = group("A(5)");
    let p = a5.sylow_subgroup(5).unwrap();
    assert_eq!(p.order_u64(), 5);
    let n = a5.normalizer(&p).unwrap();
    assert_eq!(n.order_u64(), 10);
    assert!(!n.is_abelian());
    assert_eq!(element_set(&n), brute_normalizer(&a5, &p));
}

#[test]
fn normalizer_edge_cases() {
    let s4 = group("S(4)");
    assert_eq!(s4.normalizer(&s4).unwrap().order_u64(), 24);
    let p3 = s4.sylow_subgroup(3).unwrap();
    let n = s4.normalizer(&p3).unwrap();
    assert_eq!(n.order_u64(), 6);
    assert_eq!(element_set(&n), brute_normalizer(&s4, &p3));
    let a4 = group("A(4)");
    let not_sub = PermGroup::new(4, vec![perm("(1 2)", 4)]).unwrap();
    assert!(a4.normalizer(&not_sub).is_err());
}

#[test]
fn sylow_subgroups() {
    let a5 = group("A(5)");
    assert!(a5.sylow_subgroup(7).unwrap().is_trivial());
    assert!(a5.sylow_subgroup(4).is_err());
    let s4 = group("S(4)");
    let p2 = s4.sylow_subgroup(2).unwrap();
    assert_eq!(p2.order_u64(), 8);
    assert!(!p2.is_abelian());
    for (text, p) in [("S(6)", 2), ("S(6)", 3), ("GL(2,3)", 2), ("SL(2,5)", 2), ("A(7)", 3), ("D(24)", 2)] {
        let g = group(text);
        let s = g.sylow_subgroup(p).unwrap();
        let order = g.order_u64();
        let mut want = 1;
        while order.is_multiple_of(want * p) {
            want *= p;
        }
        assert_eq!(s.order_u64(), want, "{text} p={p}");
        assert!(g.contains_group(&s).unwrap());
    }
}

#[test]
fn sylow_subgroups_from_different_ambient_generators_are_conjugate() {
    let g1 = group("S(5)");
    // same group, different generating set, so the growth path differs
    let g2 = PermGroup::new(5, vec![perm("(1 2 3 4)", 5), perm("(4 5)", 5), perm("(1 3)", 5)]).unwrap();
    for p in [2, 3, 5] {
        let a = g1.sylow_subgroup(p).unwrap();
        let b = g2.sylow_subgroup(p).unwrap();
        let x = g1.conjugating_element(&a, &b).unwrap().expect("Sylow subgroups are conjugate");
        let conj: BTreeSet<_> = a.elements().iter().map(|y| y.conjugate_by(&x)).collect();
        assert_eq!(conj, element_set(&b));
    }
}

#[test]
fn derived_subgroups_and_abelianization_exponents() {
    let c4 = group("C(4)");
    assert!(c4.derived_subgroup().unwrap().is_trivial());
    assert_eq!(c4.abelian_exponent().unwrap(), 4);

    let q8 = group("Q(8)");
    let d = q8.derived_subgroup().unwrap();
    assert_eq!(d.order_u64(), 2);
    // Q8' is the centre
    let centre: BTreeSet<_> =
        q8.elements().into_iter().filter(|x| q8.generators().iter().all(|s| (x * s) == (s * x))).collect();
    assert_eq!(element_set(&d), centre);
    assert_eq!(q8.abelian_exponent().unwrap(), 2);

    let p5 = group("A(5)").sylow_subgroup(5).unwrap();
    assert_eq!(p5.abelian_exponent().unwrap(), 5);
    assert_eq!(group("A(5)").derived_subgroup().unwrap().order_u64(), 60);
    assert_eq!(group("S(4)").derived_subgroup().unwrap().order_u64(), 12);
}

fn arb_group() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["S(4)", "A(5)", "D(12)", "Q(12)", "SL(2,3)", "GL(2,3)", "S(3)xC(3)", "D(8)xC(2)"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bsgs_order_matches_enumeration(name in arb_group()) {
        let g = group(name);
        let mut seen = BTreeSet::new();
        let mut frontier = vec![g.identity()];
        seen.insert(g.identity());
        while let Some(x) = frontier.pop() {
            for s in g.generators() {
                let y = &x * s;
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        prop_assert_eq!(seen.len() as u64, g.order_u64());
        for x in &seen {
            prop_assert!(g.contains(x).unwrap());
        }
    }

    #[test]
    fn centralizers_and_normalizers_match_brute_force(name in arb_group(), idx in 0usize..1000) {
        let g = group(name);
        let x = g.element(idx % g.order_u64() as usize);
        let c = g.centralizer_of_element(&x).unwrap();
        prop_assert_eq!(element_set(&c), brute_centralizer(&g, &x));
        prop_assert_eq!(g.order_u64() % c.order_u64(), 0);
        let h = PermGroup::new(g.degree(), vec![x.clone()]).unwrap();
        let n = g.normalizer(&h).unwrap();
        prop_assert!(n.contains_group(&h).unwrap());
        prop_assert_eq!(element_set(&n), brute_normalizer(&g, &h));
    }
}
