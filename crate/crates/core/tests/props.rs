//! Randomized property suites: the search machinery against brute-force
//! oracles, and the compression bound suite on random inputs.

use boxclique_core::combination::{graph_counts, Combination};
use boxclique_core::compress;
use boxclique_core::graphs::{alpha_brute, omega};
use boxclique_core::interval::{Box3, Interval};
use boxclique_core::level::Level;
use boxclique_core::pipeline::is_clique;
use proptest::prelude::*;

fn iv(a: i32, b: i32) -> Interval {
    Interval::new(a, b)
}

/// Random combination over the level-`s` family with bounded support/mass.
fn arb_level_combination(s: u32, max_support: usize) -> impl Strategy<Value = Combination<Interval>> {
    let lvl = Level::new(s).unwrap();
    let n = lvl.len();
    proptest::collection::vec((0..n, 1u32..=3), 1..=max_support).prop_map(move |picks| {
        let lvl = Level::new(s).unwrap();
        picks
            .into_iter()
            .map(|(k, m)| (lvl.intervals()[k], m))
            .collect()
    })
}

/// Random combination of arbitrary integer intervals in a small window.
fn arb_free_combination() -> impl Strategy<Value = Combination<Interval>> {
    proptest::collection::vec((0i32..10, 1i32..=6, 1u32..=3), 1..=7).prop_map(|picks| {
        picks
            .into_iter()
            .map(|(lo, len, m)| (iv(lo, lo + len), m))
            .collect()
    })
}

/// Random 3-D clique grown greedily from random boxes on a small grid.
fn arb_clique() -> impl Strategy<Value = Vec<Box3>> {
    let coord = (0i32..5, 1i32..=3).prop_map(|(lo, len)| (lo, lo + len));
    proptest::collection::vec((coord.clone(), coord.clone(), coord), 1..=16).prop_map(|cands| {
        let mut clique: Vec<Box3> = Vec::new();
        for (a, b, c) in cands {
            let bx = Box3::new(iv(a.0, a.1), iv(b.0, b.1), iv(c.0, c.1));
            if !clique.contains(&bx) && clique.iter().all(|x| x.adjacent(&bx)) {
                clique.push(bx);
            }
        }
        clique
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 10_000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn alpha_formula_equals_brute_force(gamma in (3u32..=5).prop_flat_map(|s| {
        arb_level_combination(s, 8).prop_map(move |g| (s, g))
    })) {
        let (s, gamma) = gamma;
        let lvl = Level::new(s).unwrap();
        let fast = lvl.alpha(&gamma).unwrap();
        let brute = alpha_brute(&gamma, |a, b| a.adjacent(b));
        prop_assert_eq!(fast, brute);
    }

    #[test]
    fn omega_at_most_2_on_interval_families(gamma in arb_free_combination()) {
        // 1-D interval families have no triangles
        prop_assert!(omega(&gamma, |a, b| a.adjacent(b)) <= 2);
    }

    #[test]
    fn mass_bound_and_compression_suite(gamma in arb_free_combination()) {
        let violations = compress::check_bounds_suite(std::slice::from_ref(&gamma));
        prop_assert!(violations.is_empty(), "{:?}", violations);
    }

    #[test]
    fn eps_vectors_are_symmetric(ax in 0i32..6, bx in 0i32..6, al in 1i32..4, bl in 1i32..4,
                                 ay in 0i32..6, by in 0i32..6, cl in 1i32..4, dl in 1i32..4,
                                 az in 0i32..6, bz in 0i32..6) {
        let p = Box3::new(iv(ax, ax + al), iv(ay, ay + cl), iv(az, az + 1));
        let q = Box3::new(iv(bx, bx + bl), iv(by, by + dl), iv(bz, bz + 2));
        let e1 = p.eps_vector(&q);
        let e2 = q.eps_vector(&p);
        prop_assert_eq!(e1, e2);
        prop_assert_eq!(p.adjacent(&q), !e1.is_zero());
    }

    #[test]
    fn projection_inequality_on_cliques(clique in arb_clique()) {
        // for every proper axis split: independence of one side is capped by
        // the clique number of the other
        prop_assume!(!clique.is_empty());
        prop_assert!(is_clique(&clique));
        let adj = |a: &Interval, b: &Interval| a.adjacent(b);
        let box2_adj = |a: &boxclique_core::interval::Box2, b: &boxclique_core::interval::Box2| a.adjacent(b);
        for axis in 0..3usize {
            let single: Combination<Interval> =
                clique.iter().map(|b| (b.coord(axis), 1)).collect();
            let rest: Combination<boxclique_core::interval::Box2> = clique
                .iter()
                .map(|b| {
                    let others: Vec<usize> = (0..3).filter(|&i| i != axis).collect();
                    (b.project2([others[0], others[1]]), 1)
                })
                .collect();
            let a1 = alpha_brute(&single, adj);
            let w2 = omega(&rest, box2_adj);
            prop_assert!(a1 <= w2, "axis {}: alpha {} > omega {}", axis, a1, w2);
            // and the mirrored split
            let a2 = alpha_brute(&rest, box2_adj);
            let w1 = omega(&single, adj);
            prop_assert!(a2 <= w1, "axis-pair {}: alpha {} > omega {}", axis, a2, w1);
        }
    }

    #[test]
    fn edge_count_subadditive_over_axes(clique in arb_clique()) {
        let edge_pairs = clique.len() as u64 * (clique.len() as u64 - 1) / 2;
        let mut sum = 0u64;
        for axis in 0..3usize {
            let proj: Combination<Interval> = clique.iter().map(|b| (b.coord(axis), 1)).collect();
            let (_, e) = graph_counts(&proj, |a, b| a.adjacent(b));
            sum += e;
        }
        prop_assert!(edge_pairs <= sum);
    }

    #[test]
    fn graph_counts_match_naive_expansion(gamma in arb_free_combination()) {
        let (v, e) = graph_counts(&gamma, |a, b| a.adjacent(b));
        let expanded = gamma.expand();
        let mut naive = 0u64;
        for i in 0..expanded.len() {
            for j in i + 1..expanded.len() {
                if expanded[i].adjacent(expanded[j]) {
                    naive += 1;
                }
            }
        }
        prop_assert_eq!(v as usize, expanded.len());
        prop_assert_eq!(e, naive);
    }
}

proptest! {
    // the compression runs are costlier; still thousands of cases
    #![proptest_config(ProptestConfig { cases: 2_000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn normalize_is_idempotent_up_to_automorphism(gamma in arb_free_combination()) {
        use std::collections::BTreeSet;
        let supp: BTreeSet<Interval> = gamma.support().copied().collect();
        let first = compress::normalize(&supp).unwrap();
        let image: BTreeSet<Interval> = first.image_family();
        let second = compress::normalize(&image).unwrap();
        prop_assert_eq!(first.s, second.s);
        // the two image families agree up to a level automorphism
        let lvl = Level::new(first.s).unwrap();
        let auts = boxclique_core::autgroup::aut_interval_graph(&lvl);
        let target: BTreeSet<Interval> = second.image_family();
        let related = auts.iter().any(|p| {
            image.iter().map(|iv| p.apply(&lvl, iv)).collect::<BTreeSet<_>>() == target
        });
        prop_assert!(related);
    }

    #[test]
    fn normalized_family_is_incompressible(gamma in arb_free_combination()) {
        use std::collections::BTreeSet;
        let supp: BTreeSet<Interval> = gamma.support().copied().collect();
        let res = compress::normalize(&supp).unwrap();
        let image: BTreeSet<Interval> = res.image_family();
        prop_assert!(compress::support_incompressible(&image).unwrap());
        // oracle: no homomorphism one level down
        if res.s > 0 {
            prop_assert!(compress::find_homomorphism(&image, res.s - 1).is_none());
        }
    }
}

#[test]
fn product_of_planar_cliques_certifies_dimension_4() {
    // two planar 5-cliques multiply into a 25-element clique of 4-boxes
    let c1 = boxclique_core::planar::FiveCycle::new([0, 1, 2, 3, 4]).unwrap();
    let sols = boxclique_core::planar::solve_construction_2d(&c1, &c1);
    let a = &sols[0];
    let b = &sols[3];
    let mut product: Vec<boxclique_core::interval::BoxN<4>> = Vec::new();
    for p in a {
        for q in b {
            product.push(boxclique_core::interval::BoxN([
                p.coord(0),
                p.coord(1),
                q.coord(0),
                q.coord(1),
            ]));
        }
    }
    assert_eq!(product.len(), 25);
    assert!(is_clique(&product));
}

#[test]
fn recursion_bound_chain() {
    // maximum family sizes across dimensions obey the published recursion
    let b = [2u32, 5, 12];
    assert_eq!(boxclique_core::planar::max_clique_2d(), b[1]);
    for n in 1..b.len() {
        assert!(b[n] <= 4 * b[n - 1] - 3);
    }
    // and the product construction from below
    assert!(b[1] * b[1] >= 2 * b[2]);
}
