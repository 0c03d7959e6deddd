use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use zeta_core::rational::ratio;
use zeta_core::verify::mutants::{mutant_for, Mutant};
use zeta_core::verify::{verify_law_with, Maps};
use zeta_core::*;

fn cat(n: usize) -> usize {
    catalan(n as u32).try_into().unwrap()
}

/// Area vectors generated directly from their characterization.
fn all_area_vectors(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let max = prefix.last().map_or(0, |&a| a + 1);
        for a in 0..=max {
            prefix.push(a);
            extend(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
fn brute_force_isomorphic(p: &Relation, q: &Relation, perms: &[Vec<usize>]) -> bool {
    p.len() == q.len() && perms.iter().any(|perm| &p.relabel(perm) == q)
}

#[test]
fn area_vector_round_trips() {
    for n in 0..=10 {
        let vectors = all_area_vectors(n);
        assert_eq!(vectors.len(), cat(n));
        for v in vectors {
            let a = AreaVector::new(v.clone()).unwrap();
            assert_eq!(area_vector(&dyck_from_area(&a)).entries(), &v[..]);
        }
    }
    for n in 0..=12 {
        for d in enumerate_dyck(n) {
            assert_eq!(dyck_from_area(&area_vector(&d)), d);
        }
    }
}

#[test]
fn enumerations_are_complete_and_duplicate_free() {
    for n in 0..=12 {
        let paths: HashSet<String> = enumerate_dyck(n).map(|d| d.to_string()).collect();
        assert_eq!(paths.len(), cat(n), "paths, n = {n}");
    }
    for n in 0..=10 {
        let trees: HashSet<String> = enumerate_trees(n).map(|t| t.to_string()).collect();
        assert_eq!(trees.len(), cat(n), "trees, n = {n}");
    }
    let n12 = enumerate_dyck(12).count();
    assert_eq!(BigUint::from(n12), catalan(12));
}

#[test]
fn enumeration_is_lexicographic() {
    for n in 0..=9 {
        let words: Vec<String> = enumerate_dyck(n).map(|d| d.to_string()).collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]), "n = {n}");
    }
}

#[test]
fn canonical_form_permutation_invariant_up_to_5() {
    for n in 0..=5 {
        let perms = permutations(n);
        for p in enumerate_posets(n) {
            assert_eq!(canonical_form(p.relation()).unwrap(), p, "idempotent");
            for perm in &perms {
                let shuffled = p.relation().relabel(perm);
                assert_eq!(canonical_form(&shuffled).unwrap(), p);
                assert!(posets_isomorphic(&shuffled, p.relation()).unwrap());
            }
        }
    }
}

#[test]
fn canonical_form_matches_brute_force_isomorphism_on_5() {
    let perms = permutations(5);
    let posets: Vec<UnitIntervalPoset> = enumerate_posets(5).collect();
    // Random relabelings, so the brute-force side sees scrambled labels.
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    let scrambled: Vec<Relation> = posets
        .iter()
        .map(|p| {
            let mut perm: Vec<usize> = (0..5).collect();
            perm.shuffle(&mut rng);
            p.relation().relabel(&perm)
        })
        .collect();
    let mut classes: Vec<&Relation> = Vec::new();
    for (i, p) in scrambled.iter().enumerate() {
        for (j, q) in scrambled.iter().enumerate() {
            let brute = brute_force_isomorphic(p, q, &perms);
            assert_eq!(posets_isomorphic(p, q).unwrap(), brute, "{i} vs {j}");
            assert_eq!(brute, i == j);
        }
        if !classes.iter().any(|c| brute_force_isomorphic(c, p, &perms)) {
            classes.push(p);
        }
    }
    assert_eq!(classes.len(), 42);
}

#[test]
fn down_and_up_sets_are_nested_up_to_8() {
    for n in 0..=8 {
        for p in enumerate_posets(n) {
            let rel = p.relation();
            for i in 0..n {
                for j in i + 1..n {
                    // down(i) within down(j), up(j) within up(i)
                    for k in 0..n {
                        assert!(!rel.lt(k, i) || rel.lt(k, j));
                        assert!(!rel.lt(j, k) || rel.lt(i, k));
                    }
                }
            }
        }
    }
}

#[test]
fn steep_and_bounce_round_trips_up_to_10() {
    for n in 0..=10 {
        for d in enumerate_dyck(n) {
            let steep = lambda_steep(&d);
            assert_eq!(xi_steep(&steep), d);
            assert_eq!(lambda_steep(&xi_steep(&steep)), steep);
            let bounce = lambda_bounce(&d);
            assert_eq!(xi_bounce(&bounce), d);
            assert_eq!(lambda_bounce(&xi_bounce(&steep)), steep);
        }
    }
}

#[test]
fn clockwise_depth_is_area_plus_one() {
    for n in 0..=10 {
        for t in enumerate_trees(n) {
            let area = area_vector(&xi_steep(&t));
            let depths: Vec<usize> = t.clockwise_preorder().iter().map(|&u| t.depth(u)).collect();
            let expected: Vec<usize> = area.entries().iter().map(|a| a + 1).collect();
            assert_eq!(depths, expected, "{t}");
        }
    }
}

#[test]
fn xi_poset_is_canonical_and_breadth_ordered() {
    for n in 0..=10 {
        for t in enumerate_trees(n) {
            let p = xi_poset(&t);
            assert_eq!(UnitIntervalPoset::new(p.relation().clone()).unwrap(), p);
            // Sorted node values list the nodes in breadth order.
            let values = node_values(&t);
            let breadth: Vec<_> = t.breadth_order()[1..]
                .iter()
                .map(|&u| values[u].clone())
                .collect();
            assert_eq!(starting_set_of_tree(&t).points(), &breadth[..]);
        }
    }
}

#[test]
fn parent_condition_and_gap_bound_up_to_10() {
    for n in 0..=10 {
        for t in enumerate_trees(n) {
            assert!(check_parent_condition(&t), "{t}");
            assert!(check_parent_gap_bound(&t), "{t}");
        }
    }
}

#[test]
fn phi_is_a_bijection_up_to_10() {
    for n in 0..=10 {
        let image: HashSet<DyckPath> = enumerate_posets(n).map(|p| phi(&p)).collect();
        assert_eq!(image.len(), cat(n), "n = {n}");
        for d in enumerate_dyck(n) {
            assert!(image.contains(&d));
            assert_eq!(phi(&phi_inverse(&d)), d);
        }
    }
}

#[test]
fn phi_agrees_with_merge_and_up_sets_decrease() {
    for n in 0..=10 {
        for t in enumerate_trees(n) {
            let set = starting_set_of_tree(&t);
            let p = poset_from_starting_set(&set);
            assert_eq!(phi_via_merge(&p, &set).unwrap(), phi(&p), "{t}");
            let up = p.up_sizes();
            assert!(up.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

#[test]
fn psi_outputs_are_closed_unit_interval_orders() {
    for d in enumerate_dyck(6) {
        let rel = psi_relation(&d);
        assert_eq!(rel.transitive_closure(), rel);
        assert!(is_unit_interval(&rel));
        assert!(is_unit_interval(psi(&d).relation()));
    }
    assert_eq!(enumerate_dyck(6).count(), 132);
}

#[test]
fn psi_inverse_matches_brute_force_search_on_8() {
    // For every poset, the paths it comes from under psi.
    let mut preimages: HashMap<UnitIntervalPoset, Vec<DyckPath>> = HashMap::new();
    for d in enumerate_dyck(8) {
        preimages.entry(psi(&d)).or_default().push(d);
    }
    assert_eq!(preimages.len(), 1430);
    for p in enumerate_posets(8) {
        let found = &preimages[&p];
        assert_eq!(found, &vec![psi_inverse(&p)]);
    }
}

#[test]
fn classical_oracle_calibration() {
    let small: Vec<DyckPath> = (0..=4).flat_map(enumerate_dyck).collect();
    assert_eq!(
        calibrate_zeta_convention(small.iter()),
        Some(ZetaConvention::FROZEN)
    );
    for d in enumerate_dyck(6) {
        assert_eq!(zeta_classical_oracle(&d), zeta(&d));
    }
}

#[test]
fn zeta_is_a_bijection_up_to_10() {
    for n in 0..=10 {
        let image: HashSet<DyckPath> = enumerate_dyck(n).map(|d| zeta(&d)).collect();
        assert_eq!(image.len(), cat(n));
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let maps = Maps::standard();
    let strip = |mut r: LawReport| {
        r.millis = 0;
        r.to_json()
    };
    for law in Law::ALL {
        let one = strip(verify_law_with(law, 8, &maps, 1));
        let four = strip(verify_law_with(law, 8, &maps, 4));
        assert_eq!(one, four, "{law}");
    }
    // A failing sweep keeps its counterexamples in stream order too.
    let bad = Mutant::CounterclockwiseSteep.maps();
    let one = strip(verify_law_with(Law::Main, 9, &bad, 1));
    let three = strip(verify_law_with(Law::Main, 9, &bad, 3));
    assert_eq!(one, three);
}

#[test]
fn every_mutant_breaks_its_laws_at_3() {
    for mutant in Mutant::ALL {
        for &law in mutant.targets() {
            let r = verify_law_with(law, 3, &mutant.maps(), 1);
            assert!(!r.success(), "{mutant:?} survives {law}");
        }
    }
    for law in Law::ALL {
        assert!(mutant_for(law).targets().contains(&law));
    }
}

#[test]
fn verify_all_totals_up_to_8() {
    let reports = verify_all(8, 1);
    assert_eq!(reports.len(), 8 * Law::ALL.len());
    for law in Law::ALL {
        let mine: Vec<LawReport> = reports.iter().filter(|r| r.law == law).cloned().collect();
        let total = LawReport::combine(law, &mine);
        assert!(total.success(), "{law}");
        assert_eq!(total.checked, 2055, "{law}");
    }
}

#[test]
fn node_values_have_bounded_denominators() {
    for t in enumerate_trees(7) {
        let base = BigUint::from(t.max_arity() + 2);
        for (u, x) in node_values(&t).iter().enumerate() {
            let power = num_traits::pow(base.clone(), t.depth(u));
            let denom: BigUint = x.denom().try_into().unwrap();
            assert_eq!(&power % &denom, BigUint::from(0u32));
        }
    }
    // The depth-1 values of a star are 1 + c/(m+2).
    let star: PlaneTree = "(()()())".parse().unwrap();
    let got = starting_set_of_tree(&star);
    assert_eq!(got.points(), &[ratio(6, 5), ratio(7, 5), ratio(8, 5)]);
}

fn rational_set(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-40i64..40, 1i64..7), 0..=max_len)
}

proptest! {
    #[test]
    fn starting_sets_give_unit_interval_orders(raw in rational_set(8)) {
        let mut points: Vec<_> = raw.iter().map(|&(a, b)| ratio(a, b)).collect();
        points.sort();
        points.dedup();
        let set = StartingSet::new(points).unwrap();
        let p = poset_from_starting_set(&set);
        prop_assert!(is_unit_interval(p.relation()));
        prop_assert!(p.relation().check_strict_order().is_ok());
        // Start-point labeling is already canonical.
        prop_assert_eq!(&canonical_form(p.relation()).unwrap(), &p);
        // Round trip through the tree picks a different realization of the
        // same poset.
        prop_assert_eq!(xi_poset(&lambda_poset(&p)), p);
    }

    #[test]
    fn canonical_form_ignores_labels(seed in 0usize..1430, shuffle in any::<u64>()) {
        let p = enumerate_posets(8).nth(seed).unwrap();
        let mut perm: Vec<usize> = (0..8).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(shuffle));
        let q = p.relation().relabel(&perm);
        prop_assert_eq!(canonical_form(&q).unwrap(), p);
    }

    #[test]
    fn json_round_trip(seed in 0usize..429) {
        let p = enumerate_posets(7).nth(seed).unwrap();
        let text = p.to_json_string();
        prop_assert_eq!(UnitIntervalPoset::from_json_str(&text).unwrap(), p);
    }
}
