//! The classification layer against the published data: matrices, symmetry
//! groups, orbit decompositions, chirality, and the compressible exemplars.

use boxclique_core::autgroup::{orbits, product_group, stabilizer_order, GroupFlavor};
use boxclique_core::classify::*;
use boxclique_core::fixtures::FixtureSet;
use boxclique_core::interval::Box3;
use boxclique_core::level::Level;
use boxclique_core::pipeline::*;
use boxclique_core::profiles;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

fn fixtures() -> FixtureSet {
    FixtureSet::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

struct Cqs {
    club: Vec<CliqueRecord>,
    spade: Vec<CliqueRecord>,
}

fn cqs() -> &'static Cqs {
    static CQS: OnceLock<Cqs> = OnceLock::new();
    CQS.get_or_init(|| {
        let co5 = build_co5();
        let cp12 = build_cp5(12, &co5);
        let mc12 = build_mc(12, &cp12, &profiles::lhat_union(12).unwrap());
        let flat12 = build_flat(&mc12);
        Cqs {
            club: assemble_cq(Suit::Club, &flat12.quadruples),
            spade: assemble_cq(Suit::Spade, &flat12.quadruples),
        }
    })
}

#[test]
fn spade_representative_matrices_match_fixture() {
    let fx = fixtures();
    for name in ["d1", "d2"] {
        let boxes = fx.clique(name).unwrap();
        assert!(is_clique(&boxes), "{name}");
        let computed = adjacency_matrix(&boxes);
        let published = AdjMatrix(fx.adjacency(name).unwrap());
        assert_eq!(computed, published, "{name}");
    }
}

#[test]
fn spade_representative_groups() {
    let fx = fixtures();
    let d1 = fx.clique("d1").unwrap();
    let d2 = fx.clique("d2").unwrap();

    assert_eq!(protoautomorphisms(&d1).len(), 48);
    assert_eq!(protoautomorphisms(&d2).len(), 48);

    let g1 = automorphism_group(&d1);
    let g2 = automorphism_group(&d2);
    assert_eq!(g1.len(), 24);
    assert_eq!(g2.len(), 24);

    // published element lists coincide with the computed groups
    let published1: BTreeSet<Vec<usize>> =
        fx.automorphism_list("d1").unwrap().into_iter().collect();
    let published2: BTreeSet<Vec<usize>> =
        fx.automorphism_list("d2").unwrap().into_iter().collect();
    assert_eq!(published1, g1.iter().cloned().collect());
    assert_eq!(published2, g2.iter().cloned().collect());

    // only the second group has an element of order 12
    let max1 = g1.iter().map(|p| perm_order(p)).max().unwrap();
    let max2 = g2.iter().map(|p| perm_order(p)).max().unwrap();
    assert!(max1 < 12);
    assert!(g2.iter().any(|p| perm_order(p) == 12));
    assert_eq!(max2, 12);

    // the two representatives are not equivalent
    assert!(are_isomorphic(&d1, &d2).is_none());
}

#[test]
fn club_symmetries_and_generators() {
    let c = example_clique();
    // published "3070" cannot be a subgroup order of S12; the computed
    // group has 3072 elements (see the project notes)
    assert_eq!(protoautomorphisms(&c.boxes).len(), 3072);
    let g = automorphism_group(&c.boxes);
    assert_eq!(g.len(), 48);

    // the two published generators generate the whole group, under the
    // fixture's member order
    let fx = fixtures();
    let fixture_boxes = fx.example_clique().unwrap();
    let gens = boxclique_core::fixtures::parse_permutations(
        "(1,12,7,4,9,6)(2,10,5,3,11,8)\n(1,12,4,9)(2,11,3,10)(5,6,8,7)\n",
        12,
        "generators",
    )
    .unwrap();
    let generated: BTreeSet<Vec<usize>> = generated_group(&gens, 12).into_iter().collect();
    let full: BTreeSet<Vec<usize>> = automorphism_group(&fixture_boxes).into_iter().collect();
    assert_eq!(generated, full);
}

#[test]
fn orbit_decompositions() {
    let st = cqs();
    let lvl4 = Level::new(4).unwrap();
    let lvl5 = Level::new(5).unwrap();

    // the club family is a single orbit of the per-axis group
    let aut3_4 = product_group(&lvl4, GroupFlavor::AutCube).unwrap();
    let club_set: BTreeSet<Vec<Box3>> = st.club.iter().map(|c| c.boxes.clone()).collect();
    let club_orbits = orbits(&aut3_4, |g, c: &Vec<Box3>| g.apply_clique(&lvl4, c), &club_set);
    assert_eq!(club_orbits.len(), 1);
    assert_eq!(club_orbits[0].len(), 64);

    // the spade family splits 64+64+128 per-axis, and into two orbits under
    // the full product group
    let aut3_5 = product_group(&lvl5, GroupFlavor::AutCube).unwrap();
    let spade_set: BTreeSet<Vec<Box3>> = st.spade.iter().map(|c| c.boxes.clone()).collect();
    let spade_orbits = orbits(&aut3_5, |g, c: &Vec<Box3>| g.apply_clique(&lvl5, c), &spade_set);
    let mut sizes: Vec<usize> = spade_orbits.iter().map(|o| o.len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![64, 64, 128]);

    let a3_5 = product_group(&lvl5, GroupFlavor::FullProduct).unwrap();
    let spade_full = orbits(&a3_5, |g, c: &Vec<Box3>| g.apply_clique(&lvl5, c), &spade_set);
    assert_eq!(spade_full.len(), 2);
    let mut sizes: Vec<usize> = spade_full.iter().map(|o| o.len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![128, 128]);

    // orbit-stabilizer cross-checks against the symmetry group orders
    let a3_4 = product_group(&lvl4, GroupFlavor::FullProduct).unwrap();
    let club_rep = example_clique().boxes;
    let stab = stabilizer_order(&a3_4, |g, c: &Vec<Box3>| g.apply_clique(&lvl4, c), &club_rep);
    assert_eq!(stab, 48);
    assert_eq!(a3_4.len() / stab, 64);

    let fx = fixtures();
    for name in ["d1", "d2"] {
        let mut d = fx.clique(name).unwrap();
        d.sort();
        let stab = stabilizer_order(&a3_5, |g, c: &Vec<Box3>| g.apply_clique(&lvl5, c), &d);
        assert_eq!(stab, 24, "{name}");
        assert_eq!(a3_5.len() / stab, 128, "{name}");
    }
}

#[test]
fn equivalence_class_counts() {
    let st = cqs();
    let fx = fixtures();
    let d1 = fx.clique("d1").unwrap();
    let d2 = fx.clique("d2").unwrap();

    let spade_families: Vec<Vec<Box3>> = st.spade.iter().map(|c| c.boxes.clone()).collect();
    let spade_classes = equivalence_classes(&spade_families);
    assert_eq!(spade_classes.len(), 2);
    // class representatives are equivalent to the two published ones, in
    // one order or the other
    let r0 = &spade_families[spade_classes[0][0]];
    let r1 = &spade_families[spade_classes[1][0]];
    let matches_d1 = are_isomorphic(r0, &d1).is_some() || are_isomorphic(r1, &d1).is_some();
    let matches_d2 = are_isomorphic(r0, &d2).is_some() || are_isomorphic(r1, &d2).is_some();
    assert!(matches_d1 && matches_d2);

    let club_families: Vec<Vec<Box3>> = st.club.iter().map(|c| c.boxes.clone()).collect();
    assert_eq!(equivalence_classes(&club_families).len(), 1);

    // across suits nothing merges: three incompressible types in total
    let mut all = club_families;
    all.extend(spade_families);
    assert_eq!(equivalence_classes(&all).len(), 3);
}

#[test]
fn chirality_club() {
    let st = cqs();
    let report = chirality_report(Suit::Club, &st.club).unwrap();
    let mut lengths: Vec<usize> = report.rotation_orbits.iter().map(|o| o.length).collect();
    lengths.sort();
    assert_eq!(lengths, vec![8, 8, 24, 24]);
    assert_eq!(report.full_orbit_count, 2);
    assert!(report.rotation_orbits.iter().all(|o| !o.achiral));
    let total: usize = report.rotation_orbits.iter().map(|o| o.length).sum();
    assert_eq!(total, 64);

    // the published table rows decode into these orbits with the same
    // lengths and the same full-orbit pairing
    let fx = fixtures();
    let rows = fx.orbit_table("club").unwrap();
    assert_eq!(rows.len(), 4);
    let lvl = Level::new(4).unwrap();
    let rot = product_group(&lvl, GroupFlavor::RotationsOnly).unwrap();
    let mut row_orbit: BTreeMap<usize, usize> = BTreeMap::new();
    for row in &rows {
        let decoded = decode_digit_clique(&row.labels, Suit::Club).unwrap();
        let orb = report
            .rotation_orbits
            .iter()
            .position(|o| {
                orbits(
                    &rot,
                    |g, c: &Vec<Box3>| g.apply_clique(&lvl, c),
                    &BTreeSet::from([decoded.clone()]),
                )[0]
                .binary_search(&o.representative)
                .is_ok()
            })
            .expect("decoded row lies in a computed orbit");
        assert_eq!(report.rotation_orbits[orb].length, row.length, "row {}", row.no);
        assert!(!row.achiral);
        row_orbit.insert(row.no, orb);
    }
    // same-block rows pair into one full-isometry orbit
    for pair in [[1, 2], [3, 4]] {
        let a = report.rotation_orbits[row_orbit[&pair[0]]].full_orbit;
        let b = report.rotation_orbits[row_orbit[&pair[1]]].full_orbit;
        assert_eq!(a, b);
    }
    let distinct: BTreeSet<usize> = row_orbit.values().copied().collect();
    assert_eq!(distinct.len(), 4);
}

#[test]
fn chirality_spade() {
    let st = cqs();
    let report = chirality_report(Suit::Spade, &st.spade).unwrap();
    assert_eq!(report.rotation_orbits.len(), 16);
    let mut lengths: Vec<usize> = report.rotation_orbits.iter().map(|o| o.length).collect();
    lengths.sort();
    assert_eq!(
        lengths,
        vec![4, 4, 8, 12, 12, 12, 12, 12, 12, 24, 24, 24, 24, 24, 24, 24]
    );
    let total: usize = report.rotation_orbits.iter().map(|o| o.length).sum();
    assert_eq!(total, 256);
    assert_eq!(
        report.rotation_orbits.iter().filter(|o| o.achiral).count(),
        2
    );

    let fx = fixtures();
    let rows = fx.orbit_table("spade").unwrap();
    assert_eq!(rows.len(), 16);
    let lvl = Level::new(5).unwrap();
    let rot = product_group(&lvl, GroupFlavor::RotationsOnly).unwrap();

    let orbit_of = |boxes: &Vec<Box3>| -> usize {
        let orbit = &orbits(
            &rot,
            |g, c: &Vec<Box3>| g.apply_clique(&lvl, c),
            &BTreeSet::from([boxes.clone()]),
        )[0];
        report
            .rotation_orbits
            .iter()
            .position(|o| orbit.binary_search(&o.representative).is_ok())
            .expect("row in computed orbit")
    };

    let mut by_block: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for row in &rows {
        let decoded = decode_digit_clique(&row.labels, Suit::Spade).unwrap();
        let orb = orbit_of(&decoded);
        assert!(seen.insert(orb), "rows decode to distinct orbits");
        assert_eq!(report.rotation_orbits[orb].length, row.length, "row {}", row.no);
        assert_eq!(
            report.rotation_orbits[orb].achiral,
            row.achiral,
            "row {} chirality",
            row.no
        );
        // achiral exactly for the published rows 15 and 16
        assert_eq!(row.achiral, row.no == 15 || row.no == 16);
        by_block
            .entry((row.class, row.block))
            .or_default()
            .push(orb);
    }
    // rows sharing a block lie in one full-isometry orbit, distinct blocks
    // in distinct ones
    let mut full_seen = BTreeSet::new();
    for orbs in by_block.values() {
        let fo: BTreeSet<usize> = orbs
            .iter()
            .map(|&o| report.rotation_orbits[o].full_orbit)
            .collect();
        assert_eq!(fo.len(), 1);
        assert!(full_seen.insert(*fo.iter().next().unwrap()));
    }
    // class blocks sum to 128 apiece
    let mut class_mass = BTreeMap::new();
    for row in &rows {
        *class_mass.entry(row.class).or_insert(0usize) += row.length;
    }
    assert_eq!(class_mass, BTreeMap::from([(0, 128), (1, 128)]));
}

#[test]
fn compressible_exemplars() {
    let fx = fixtures();
    let c1 = fx.clique("c1").unwrap();
    let c2 = fx.clique("c2").unwrap();
    let d1 = fx.clique("d1").unwrap();
    let d2 = fx.clique("d2").unwrap();
    let m1 = AdjMatrix(fx.adjacency("c1").unwrap());
    let m2 = AdjMatrix(fx.adjacency("c2").unwrap());
    let report = verify_compressible([&c1, &c2], [&d1, &d2], [&m1, &m2]);
    assert_eq!(report.clique_ok, [true, true]);
    assert_eq!(report.adjacency_matches_fixture, [true, true]);
    assert_eq!(report.dominated_by_incompressible, [true, true]);
    assert_eq!(report.aut_orders, [8, 8]);
    assert_eq!(report.aut_profiles_are_dih4, [true, true]);
    assert!(report.pair_inequivalent);
    assert_eq!(report.rounding_maps_onto, [true, true]);

    // the single-point pattern with the incompressible image: member 1
    // against member 8 touches on the third axis only
    assert_eq!(adjacency_matrix(&c1).0[0][7], 4);
}
