//! Stage-by-stage cardinalities of the search pipeline, plus the agreement
//! between the staged route and the direct construction solver.

use boxclique_core::combination::Combination;
use boxclique_core::interval::{Box2, Interval};
use boxclique_core::named;
use boxclique_core::pipeline::*;
use boxclique_core::profiles;
use std::collections::BTreeSet;
use std::sync::OnceLock;

struct Stages {
    co5: Vec<boxclique_core::planar::FiveCycle>,
    cp12: Vec<(boxclique_core::planar::FiveCycle, boxclique_core::planar::FiveCycle)>,
    cp13: Vec<(boxclique_core::planar::FiveCycle, boxclique_core::planar::FiveCycle)>,
    mc12: Vec<Quadruple>,
    mc13: Vec<Quadruple>,
    flat12: FlatStage,
    flat13: FlatStage,
}

fn stages() -> &'static Stages {
    static STAGES: OnceLock<Stages> = OnceLock::new();
    STAGES.get_or_init(|| {
        let co5 = build_co5();
        let cp12 = build_cp5(12, &co5);
        let cp13 = build_cp5(13, &co5);
        let mc12 = build_mc(12, &cp12, &profiles::lhat_union(12).unwrap());
        let mc13 = build_mc(13, &cp13, &profiles::lhat_union(13).unwrap());
        let flat12 = build_flat(&mc12);
        let flat13 = build_flat(&mc13);
        Stages {
            co5,
            cp12,
            cp13,
            mc12,
            mc13,
            flat12,
            flat13,
        }
    })
}

#[test]
fn stage_counts_v12_and_v13() {
    let st = stages();
    assert_eq!(st.co5.len(), 118);
    assert_eq!(st.cp12.len(), 384);
    assert_eq!(st.cp13.len(), 1135);
    assert_eq!(st.mc12.len(), 372);
    assert_eq!(st.mc13.len(), 409);
    for q in st.mc12.iter().chain(st.mc13.iter()) {
        let v = q.profile.total();
        assert_eq!(q.rest.total(), v - 10);
    }

    // the published stage size counts occupied pair cells; the full union
    // of flat quadruples is larger and is also pinned here
    assert_eq!(st.flat12.occupied_cells, 96);
    assert_eq!(st.flat12.quadruples.len(), 352);
    assert!(st.flat13.quadruples.is_empty());
    assert_eq!(st.flat13.occupied_cells, 0);

    let cert = prove_b3(&st.flat13.quadruples).unwrap();
    assert_eq!((cert.lower_bound, cert.upper_bound), (12, 12));
    assert_eq!(cert.mass14_edge_gap, (91, 60));
    assert!(cert.flat13_empty && cert.l_empty_above_14);
}

#[test]
fn flat12_structure() {
    let st = stages();
    let club = named::lambda_club();
    let spade = named::lambda_spade();
    let diamond = named::lambda_diamond();
    let mut split = [0usize; 3];
    for f in &st.flat12.quadruples {
        let p0 = f.axis_profile(0);
        let p1 = f.axis_profile(1);
        assert_eq!(p0, p1, "both axis profiles coincide");
        if p0 == club {
            split[0] += 1;
        } else if p0 == spade {
            split[1] += 1;
        } else if p0 == diamond {
            split[2] += 1;
        } else {
            panic!("unexpected flat profile {p0}");
        }
    }
    assert_eq!(split, [32, 256, 64]);
    // per-pair bound: ten times ten labelings, two merges at mass 12
    for q in st.mc12.iter().take(8) {
        for qbar in st.mc12.iter().take(8) {
            assert!(build_fl(q, qbar).len() <= 200);
        }
    }
}

#[test]
fn cq_counts_and_membership() {
    let st = stages();
    let cq_club = assemble_cq(Suit::Club, &st.flat12.quadruples);
    let cq_spade = assemble_cq(Suit::Spade, &st.flat12.quadruples);
    assert_eq!(cq_club.len(), 64);
    assert_eq!(cq_spade.len(), 256);
    assert!(cq_club.contains(&example_clique()));
    for c in cq_club.iter().chain(cq_spade.iter()) {
        assert!(c.is_clique());
        assert_eq!(c.boxes.len(), 12);
    }
    for c in &cq_club {
        for a in 0..3 {
            assert_eq!(c.axis_profiles[a], named::lambda_club());
        }
    }
    for c in &cq_spade {
        for a in 0..3 {
            assert_eq!(c.axis_profiles[a], named::lambda_spade());
        }
    }
}

#[test]
fn staged_route_agrees_with_direct_solver() {
    let st = stages();
    let club = named::lambda_club();
    let direct: BTreeSet<_> = solve_construction_3d(&club, &club, &club)
        .into_iter()
        .collect();
    let staged: BTreeSet<_> = assemble_cq(Suit::Club, &st.flat12.quadruples)
        .into_iter()
        .collect();
    assert_eq!(direct, staged);
}

#[test]
fn marozw_two_triples() {
    let st = stages();
    let report = check_marozw(&st.flat12.quadruples).unwrap();

    let (companion, e) = report.high_edge_companion.expect("unique companion");
    assert_eq!(e, 29);
    assert_eq!(companion.total(), 12);
    assert!(report.companion_is_type_i);
    assert_eq!(report.diamond_solutions, 0);
    assert_eq!(report.star_solutions, 0);

    // eight cycles fit inside the diamond support; four unordered pairs sum
    // below the profile, among them the two classically quoted disjoint ones
    assert_eq!(report.diamond_cycles.len(), 8);
    assert_eq!(report.diamond_cycle_pairs.len(), 4);
    let classic = (
        boxclique_core::planar::FiveCycle::new([0, 1, 2, 3, 4]).unwrap(),
        boxclique_core::planar::FiveCycle::new([4, 5, 6, 7, 8]).unwrap(),
    );
    assert!(report.diamond_cycle_pairs.contains(&classic));

    assert_eq!(report.solvable.len(), 2);
    let shapes: BTreeSet<&Combination<Interval>> =
        report.solvable.iter().map(|t| &t[0]).collect();
    assert_eq!(shapes.len(), 2);
    for t in &report.solvable {
        assert!(t[0] == t[1] && t[1] == t[2]);
    }
}

#[test]
fn flat_stage_deterministic_across_thread_counts() {
    // identical serialized artifacts from a 1-thread and a 3-thread pool
    let st = stages();
    let sample: Vec<Quadruple> = st.mc12.iter().take(90).cloned().collect();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| build_flat(&sample))
    };
    let a = run(1);
    let b = run(3);
    assert_eq!(a.occupied_cells, b.occupied_cells);
    assert_eq!(
        serde_json::to_string(&a.quadruples).unwrap(),
        serde_json::to_string(&b.quadruples).unwrap()
    );
}

#[test]
fn flat_union_is_mirror_closed() {
    // the ordered union contains the axis-mirror of each member (swapping
    // the roles of the two quadruples mirrors every flat)
    let st = stages();
    let mirror = |boxes: &[Box2]| -> Vec<Box2> {
        let mut out: Vec<Box2> = boxes
            .iter()
            .map(|b| Box2::of(b.coord(1), b.coord(0)))
            .collect();
        out.sort();
        out
    };
    let set: BTreeSet<_> = st.flat12.quadruples.iter().cloned().collect();
    for f in &st.flat12.quadruples {
        let m = FlatQuadruple {
            phi1: mirror(&f.phi1),
            phi2: mirror(&f.phi2),
            phi3: mirror(&f.phi3),
        };
        assert!(set.contains(&m));
    }
}
