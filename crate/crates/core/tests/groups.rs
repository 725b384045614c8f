//! Group and catalog invariants over every built-in group and the order-40
//! fixtures, checked against literal definitions.

use std::path::Path;

use mixed_moore::catalog::{catalog_for_order, construct, Catalog, GroupSpec, COMPLETE_ORDERS};
use mixed_moore::group::{
    automorphism_group, canonical_set, groups_isomorphic, index2_subgroups, Group,
};
use proptest::prelude::*;

fn fixture_groups() -> Vec<Group> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/groups/order40");
    Catalog::from_dir(&dir)
        .unwrap()
        .for_order(40)
        .unwrap()
        .groups
}

fn all_groups() -> Vec<Group> {
    let mut groups: Vec<Group> = COMPLETE_ORDERS
        .iter()
        .flat_map(|&n| catalog_for_order(n).groups)
        .collect();
    groups.extend(fixture_groups());
    groups
}

#[test]
fn tables_are_latin_associative_with_identity_zero() {
    for g in all_groups() {
        let n = g.order();
        for a in g.elements() {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            let mut row: Vec<usize> = g.elements().map(|b| g.mul(a, b)).collect();
            let mut col: Vec<usize> = g.elements().map(|b| g.mul(b, a)).collect();
            row.sort_unstable();
            col.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>(), "{}", g.name());
            assert_eq!(col, (0..n).collect::<Vec<_>>(), "{}", g.name());
            for b in g.elements() {
                for c in g.elements() {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{}", g.name());
                }
            }
        }
    }
}

#[test]
fn inverses_and_orders_follow_definitions() {
    for g in all_groups() {
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            let order = (1..=g.order()).find(|&k| g.pow(a, k) == 0).unwrap();
            assert_eq!(g.element_order(a), order, "{} element {a}", g.name());
            assert_eq!(g.element_order(g.inv(a)), order);
            assert_eq!(g.order() % order, 0);
        }
    }
}

#[test]
fn automorphisms_form_a_group_preserving_orders() {
    for g in all_groups().into_iter().filter(|g| g.order() <= 30) {
        let auts = automorphism_group(&g).unwrap();
        for phi in &auts {
            for a in g.elements() {
                assert_eq!(g.element_order(phi.apply(a)), g.element_order(a));
            }
            assert!(auts.binary_search(&phi.inverse()).is_ok());
        }
        // Closure under composition, sampled against a fixed partner set.
        for phi in &auts {
            for psi in auts.iter().step_by(1 + auts.len() / 8) {
                assert!(
                    auts.binary_search(&phi.compose(psi)).is_ok(),
                    "{}",
                    g.name()
                );
            }
        }
    }
}

/// Every subset of size n/2 containing the identity and closed under
/// multiplication.
fn brute_index2(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    if n % 2 == 1 {
        return Vec::new();
    }
    let mut found = Vec::new();
    let mut current = vec![0];
    fn go(g: &Group, start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            let closed = cur
                .iter()
                .all(|&a| cur.iter().all(|&b| cur.binary_search(&g.mul(a, b)).is_ok()));
            if closed {
                out.push(cur.clone());
            }
            return;
        }
        for x in start..g.order() {
            if g.order() - x < k - cur.len() {
                break;
            }
            // Any subgroup containing x contains its inverse; prune on that.
            if g.inv(x) < x && cur.binary_search(&g.inv(x)).is_err() {
                continue;
            }
            cur.push(x);
            go(g, x + 1, k, cur, out);
            cur.pop();
        }
    }
    go(g, 1, n / 2, &mut current, &mut found);
    found
}

#[test]
fn index2_subgroups_match_brute_force_up_to_20() {
    for n in [6, 12, 18, 20] {
        for g in catalog_for_order(n).groups {
            let got: Vec<Vec<usize>> = index2_subgroups(&g)
                .iter()
                .map(|h| h.elements().to_vec())
                .collect();
            assert_eq!(got, brute_index2(&g), "{}", g.name());
        }
    }
    for m in 1..=10 {
        let g = construct(&GroupSpec::Cyclic(2 * m)).unwrap();
        assert_eq!(index2_subgroups(&g).len(), 1);
    }
}

/// Isomorphism invariants computed from the table alone: abelian flag,
/// sorted element orders, centre size, number of index-2 subgroups found by
/// brute force, and commuting-pair count.
fn fingerprint(g: &Group) -> (bool, Vec<usize>, usize, usize, usize) {
    let centre = g
        .elements()
        .filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)))
        .count();
    let commuting = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| g.mul(a, b) == g.mul(b, a))
        .count();
    let mut orders: Vec<usize> = g.elements().map(|a| g.element_order(a)).collect();
    orders.sort_unstable();
    let index2 = if g.order() <= 20 {
        brute_index2(g).len()
    } else {
        index2_subgroups(g).len()
    };
    (g.is_abelian(), orders, centre, index2, commuting)
}

#[test]
fn complete_catalogs_are_pairwise_non_isomorphic() {
    let expected = [(6, 2), (12, 5), (18, 5), (20, 5), (30, 4)];
    for (n, count) in expected {
        let cat = catalog_for_order(n);
        assert!(cat.complete);
        assert_eq!(cat.groups.len(), count, "order {n}");
        for (i, a) in cat.groups.iter().enumerate() {
            for b in &cat.groups[i + 1..] {
                assert!(
                    !groups_isomorphic(a, b).unwrap(),
                    "{} vs {}",
                    a.name(),
                    b.name()
                );
                assert_ne!(
                    fingerprint(a),
                    fingerprint(b),
                    "{} vs {}",
                    a.name(),
                    b.name()
                );
            }
        }
    }
}

#[test]
fn order_40_fixtures_are_fourteen_distinct_groups() {
    let groups = fixture_groups();
    assert_eq!(groups.len(), 14);
    for (i, a) in groups.iter().enumerate() {
        assert_eq!(a.order(), 40);
        for b in &groups[i + 1..] {
            assert!(
                !groups_isomorphic(a, b).unwrap(),
                "{} vs {}",
                a.name(),
                b.name()
            );
        }
    }
}

#[test]
fn dihedral_involution_counts() {
    // m reflections, plus the half-turn when m is even.
    for m in 3..=15 {
        let g = construct(&GroupSpec::Dihedral(2 * m)).unwrap();
        let expected = if m % 2 == 1 { m } else { m + 1 };
        assert_eq!(g.involution_count(), expected, "D{}", 2 * m);
    }
}

#[test]
fn prime_orders_are_complete() {
    for p in [2, 3, 5, 7, 11, 13] {
        let cat = catalog_for_order(p);
        assert!(cat.complete);
        assert_eq!(cat.groups.len(), 1);
    }
    let c22 = catalog_for_order(22);
    assert!(!c22.complete);
    assert_eq!(c22.completeness_label(), "possibly incomplete");
}

fn group_strategy() -> impl Strategy<Value = (usize, usize)> {
    let sizes: Vec<usize> = COMPLETE_ORDERS
        .iter()
        .map(|&n| catalog_for_order(n).groups.len())
        .collect();
    (0..COMPLETE_ORDERS.len()).prop_flat_map(move |i| (Just(i), 0..sizes[i]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_set_is_an_orbit_invariant(
        (oi, gi) in group_strategy(),
        raw in proptest::collection::vec(0usize..1000, 0..5),
        pick in 0usize..10_000,
    ) {
        let g = catalog_for_order(COMPLETE_ORDERS[oi]).groups.swap_remove(gi);
        let auts = automorphism_group(&g).unwrap();
        let mut set: Vec<usize> = raw.iter().map(|x| x % g.order()).collect();
        set.sort_unstable();
        set.dedup();
        let canon = canonical_set(&set, &auts);
        prop_assert_eq!(canonical_set(&canon, &auts), canon.clone());
        let phi = &auts[pick % auts.len()];
        prop_assert_eq!(canonical_set(&phi.image_of_set(&set), &auts), canon);
    }
}
