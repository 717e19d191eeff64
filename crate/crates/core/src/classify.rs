//! Classification of the 12-cliques: touching-pattern matrices, their
//! symmetry groups, combinatorial equivalence, orbits under the cube
//! isometries, chirality, and verification of the two compressible
//! exemplars.

use crate::autgroup::{orbits, product_group, GroupFlavor};
use crate::error::{Error, Result};
use crate::interval::{Box3, EpsVector, Interval};
use crate::level::Level;
use crate::pipeline::{is_clique, CliqueRecord, Suit};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Matrix of pairwise touching patterns, encoded as `bit i = axis i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AdjMatrix(pub Vec<Vec<u8>>);

pub fn adjacency_matrix(boxes: &[Box3]) -> AdjMatrix {
    let m = boxes.len();
    AdjMatrix(
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            0
                        } else {
                            boxes[i].eps_vector(&boxes[j]).code()
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

impl AdjMatrix {
    /// Coordinatewise comparison of the underlying 0/1 vectors: every
    /// touching axis of `self` also touches in `other`.
    pub fn le(&self, other: &AdjMatrix) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).all(|(ra, rb)| {
                ra.iter()
                    .zip(rb)
                    .all(|(&a, &b)| EpsVector::<3>::from_code(a).le(&EpsVector::from_code(b)))
            })
    }

    pub fn off_diagonal_nonzero(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &c)| i == j || c != 0))
    }
}

/// Agreement-count matrix: `b_ij` = number of members whose touching
/// patterns against `i` and `j` coincide.
pub fn proto_matrix(boxes: &[Box3]) -> Vec<Vec<u8>> {
    let m = boxes.len();
    let eps: Vec<Vec<u8>> = adjacency_matrix(boxes).0;
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| (0..m).filter(|&k| eps[i][k] == eps[j][k]).count() as u8)
                .collect()
        })
        .collect()
}

/// All permutations fixing the agreement-count matrix. A cheap superset of
/// the symmetry group, found by backtracking on matching row multisets.
pub fn protoautomorphisms(boxes: &[Box3]) -> Vec<Vec<usize>> {
    let b = proto_matrix(boxes);
    let m = boxes.len();
    let mut row_profile: Vec<Vec<u8>> = b.iter().cloned().collect();
    for r in &mut row_profile {
        r.sort_unstable();
    }
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; m];
    let mut used = vec![false; m];
    fn rec(
        i: usize,
        m: usize,
        b: &[Vec<u8>],
        row_profile: &[Vec<u8>],
        img: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == m {
            out.push(img.to_vec());
            return;
        }
        for c in 0..m {
            if used[c] || row_profile[c] != row_profile[i] {
                continue;
            }
            if (0..i).all(|p| b[i][p] == b[c][img[p]]) && b[i][i] == b[c][c] {
                img[i] = c;
                used[c] = true;
                rec(i + 1, m, b, row_profile, img, used, out);
                used[c] = false;
                img[i] = usize::MAX;
            }
        }
    }
    rec(0, m, &b, &row_profile, &mut img, &mut used, &mut out);
    out.sort();
    out
}

/// A combinatorial-equivalence witness: a member bijection plus one global
/// axis permutation transporting every touching pattern.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IsoWitness {
    pub pi: Vec<usize>,
    pub sigma: [usize; 3],
}

const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn search_isomorphisms(
    from: &[Box3],
    to: &[Box3],
    stop_at_first: bool,
) -> Vec<IsoWitness> {
    let m = from.len();
    let mut found = Vec::new();
    if to.len() != m {
        return found;
    }
    let eps_from: Vec<Vec<EpsVector<3>>> = (0..m)
        .map(|i| (0..m).map(|j| from[i].eps_vector(&from[j])).collect())
        .collect();
    let eps_to: Vec<Vec<EpsVector<3>>> = (0..m)
        .map(|i| (0..m).map(|j| to[i].eps_vector(&to[j])).collect())
        .collect();
    for sigma in S3 {
        // permuted target patterns: s_sigma(eps_to)
        let recoded: Vec<Vec<EpsVector<3>>> = eps_to
            .iter()
            .map(|row| row.iter().map(|e| e.permuted(&sigma)).collect())
            .collect();
        let mut img = vec![usize::MAX; m];
        let mut used = vec![false; m];
        #[allow(clippy::too_many_arguments)]
        fn rec(
            i: usize,
            m: usize,
            src: &[Vec<EpsVector<3>>],
            dst: &[Vec<EpsVector<3>>],
            sigma: [usize; 3],
            img: &mut [usize],
            used: &mut [bool],
            found: &mut Vec<IsoWitness>,
            stop: bool,
        ) {
            if stop && !found.is_empty() {
                return;
            }
            if i == m {
                found.push(IsoWitness {
                    pi: img.to_vec(),
                    sigma,
                });
                return;
            }
            for c in 0..m {
                if used[c] {
                    continue;
                }
                if (0..i).all(|p| dst[c][img[p]] == src[i][p]) {
                    img[i] = c;
                    used[c] = true;
                    rec(i + 1, m, src, dst, sigma, img, used, found, stop);
                    used[c] = false;
                    img[i] = usize::MAX;
                }
            }
        }
        rec(
            0,
            m,
            &eps_from,
            &recoded,
            sigma,
            &mut img,
            &mut used,
            &mut found,
            stop_at_first,
        );
        if stop_at_first && !found.is_empty() {
            return found;
        }
    }
    found
}

/// All symmetry witnesses of one family (pairs π, σ).
pub fn automorphism_witnesses(boxes: &[Box3]) -> Vec<IsoWitness> {
    search_isomorphisms(boxes, boxes, false)
}

/// The symmetry group itself: the distinct member permutations.
pub fn automorphism_group(boxes: &[Box3]) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = automorphism_witnesses(boxes)
        .into_iter()
        .map(|w| w.pi)
        .collect();
    perms.sort();
    perms.dedup();
    perms
}

/// A single equivalence witness between two families, if any.
pub fn are_isomorphic(a: &[Box3], b: &[Box3]) -> Option<IsoWitness> {
    search_isomorphisms(a, b, true).into_iter().next()
}

/// Partition of a family list into combinatorial-equivalence classes,
/// returned as index groups in first-seen order.
pub fn equivalence_classes(families: &[Vec<Box3>]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, fam) in families.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            if are_isomorphic(&families[class[0]], fam).is_some() {
                class.push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    classes
}

pub fn perm_order(p: &[usize]) -> u32 {
    let mut seen = vec![false; p.len()];
    let mut order = 1u32;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = p[cur];
            len += 1;
        }
        order = num_lcm(order, len);
    }
    order
}

fn num_lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Multiset of element orders, e.g. {1:1, 2:5, 4:2} for the square's group.
pub fn element_order_profile(group: &[Vec<usize>]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for p in group {
        *out.entry(perm_order(p)).or_insert(0) += 1;
    }
    out
}

/// Subgroup generated by a set of permutations.
pub fn generated_group(gens: &[Vec<usize>], degree: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
    set.insert(id);
    let mut frontier: Vec<Vec<usize>> = set.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for h in gens {
            let comp: Vec<usize> = (0..degree).map(|i| h[g[i]]).collect();
            if set.insert(comp.clone()) {
                frontier.push(comp);
            }
        }
    }
    set.into_iter().collect()
}

// ---------------------------------------------------------------- digits --

/// Digit labels for the suit supports: unit intervals get 1-based positions,
/// the chords get the remaining digits.
pub fn digit_alphabet(suit: Suit) -> Vec<(Interval, char)> {
    match suit {
        Suit::Club => {
            let mut v: Vec<(Interval, char)> = (1..=5)
                .map(|i| (Interval::new(i - 1, i), char::from_digit(i as u32, 10).unwrap()))
                .collect();
            v.push((Interval::new(1, 3), '6'));
            v.push((Interval::new(2, 4), '7'));
            v.push((Interval::new(1, 4), '8'));
            v
        }
        Suit::Spade => {
            let mut v: Vec<(Interval, char)> = (1..=6)
                .map(|i| (Interval::new(i - 1, i), char::from_digit(i as u32, 10).unwrap()))
                .collect();
            v.push((Interval::new(1, 3), '7'));
            v.push((Interval::new(3, 5), '8'));
            v
        }
    }
}

pub fn digit_label(b: &Box3, suit: Suit) -> Result<String> {
    let alpha: BTreeMap<Interval, char> = digit_alphabet(suit).into_iter().collect();
    let mut out = String::new();
    for iv in b.coords() {
        out.push(*alpha.get(iv).ok_or(Error::Fixture {
            name: "digit label".into(),
            msg: format!("interval {iv} is not in the suit support"),
        })?);
    }
    Ok(out)
}

pub fn decode_digit_label(label: &str, suit: Suit) -> Result<Box3> {
    let rev: BTreeMap<char, Interval> = digit_alphabet(suit)
        .into_iter()
        .map(|(iv, c)| (c, iv))
        .collect();
    let chars: Vec<char> = label.chars().collect();
    if chars.len() != 3 {
        return Err(Error::Fixture {
            name: "digit label".into(),
            msg: format!("label {label} is not three digits"),
        });
    }
    let find = |c: char| {
        rev.get(&c).copied().ok_or(Error::Fixture {
            name: "digit label".into(),
            msg: format!("digit {c} unknown"),
        })
    };
    Ok(Box3::new(find(chars[0])?, find(chars[1])?, find(chars[2])?))
}

pub fn decode_digit_clique(labels: &[String], suit: Suit) -> Result<Vec<Box3>> {
    let mut out = Vec::new();
    for l in labels {
        out.push(decode_digit_label(l, suit)?);
    }
    out.sort();
    Ok(out)
}

// ------------------------------------------------------------- chirality --

#[derive(Debug, Clone, Serialize)]
pub struct OrbitInfo {
    pub representative: Vec<Box3>,
    pub rep_labels: Vec<String>,
    pub length: usize,
    /// index of the orbit under the full isometry group
    pub full_orbit: usize,
    /// the rotation orbit equals the full-isometry orbit
    pub achiral: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiralityReport {
    pub suit: Suit,
    pub rotation_orbits: Vec<OrbitInfo>,
    pub full_orbit_count: usize,
}

/// Orbit systems of a clique family under the rotation group and the full
/// isometry group of the ambient cube. A clique is achiral when its two
/// orbits coincide.
pub fn chirality_report(suit: Suit, cliques: &[CliqueRecord]) -> Result<ChiralityReport> {
    let lvl = Level::new(suit.level())?;
    let rot = product_group(&lvl, GroupFlavor::RotationsOnly)?;
    let full = product_group(&lvl, GroupFlavor::CubeIsometries)?;
    let targets: BTreeSet<Vec<Box3>> = cliques.iter().map(|c| c.boxes.clone()).collect();
    let rot_orbits = orbits(&rot, |g, c: &Vec<Box3>| g.apply_clique(&lvl, c), &targets);
    let full_orbits = orbits(&full, |g, c: &Vec<Box3>| g.apply_clique(&lvl, c), &targets);

    let full_index = |c: &Vec<Box3>| -> usize {
        full_orbits
            .iter()
            .position(|o| o.binary_search(c).is_ok())
            .expect("clique is in some full orbit")
    };
    let mut infos = Vec::new();
    for orbit in &rot_orbits {
        let rep = orbit[0].clone();
        let fo = full_index(&rep);
        let achiral = orbit.len() == full_orbits[fo].len();
        let rep_labels = rep
            .iter()
            .map(|b| digit_label(b, suit))
            .collect::<Result<Vec<String>>>()?;
        infos.push(OrbitInfo {
            representative: rep,
            rep_labels,
            length: orbit.len(),
            full_orbit: fo,
            achiral,
        });
    }
    Ok(ChiralityReport {
        suit,
        rotation_orbits: infos,
        full_orbit_count: full_orbits.len(),
    })
}

// --------------------------------------------------- compressible checks --

#[derive(Debug, Clone, Serialize)]
pub struct CompressibleReport {
    pub clique_ok: [bool; 2],
    pub adjacency_matches_fixture: [bool; 2],
    pub dominated_by_incompressible: [bool; 2],
    pub aut_orders: [usize; 2],
    pub aut_profiles_are_dih4: [bool; 2],
    pub pair_inequivalent: bool,
    pub rounding_maps_onto: [bool; 2],
}

fn round_up_half(iv: &Interval) -> Interval {
    let up = |x: i32| (x + 1).div_euclid(2) * 2;
    Interval::from_doubled(up(iv.lo()), up(iv.hi())).expect("rounding keeps order")
}

/// Verify the two compressible exemplars against their published data: they
/// are 12-cliques, their matrices match the fixtures and are dominated by
/// the incompressible ones, their symmetry groups are the square's group,
/// they are inequivalent, and rounding the half-grid endpoints up maps them
/// member-by-member onto the incompressible representatives.
pub fn verify_compressible(
    c: [&[Box3]; 2],
    d: [&[Box3]; 2],
    fixture_c_matrices: [&AdjMatrix; 2],
) -> CompressibleReport {
    let mut report = CompressibleReport {
        clique_ok: [false; 2],
        adjacency_matches_fixture: [false; 2],
        dominated_by_incompressible: [false; 2],
        aut_orders: [0; 2],
        aut_profiles_are_dih4: [false; 2],
        pair_inequivalent: false,
        rounding_maps_onto: [false; 2],
    };
    for i in 0..2 {
        report.clique_ok[i] = c[i].len() == 12 && is_clique(c[i]);
        let ac = adjacency_matrix(c[i]);
        let ad = adjacency_matrix(d[i]);
        report.adjacency_matches_fixture[i] = &ac == fixture_c_matrices[i];
        report.dominated_by_incompressible[i] = ac.le(&ad);
        let group = automorphism_group(c[i]);
        report.aut_orders[i] = group.len();
        let profile = element_order_profile(&group);
        report.aut_profiles_are_dih4[i] =
            profile == BTreeMap::from([(1u32, 1usize), (2, 5), (4, 2)]);
        report.rounding_maps_onto[i] = c[i]
            .iter()
            .zip(d[i])
            .all(|(cb, db)| {
                let rounded = Box3::new(
                    round_up_half(&cb.coord(0)),
                    round_up_half(&cb.coord(1)),
                    round_up_half(&cb.coord(2)),
                );
                rounded == *db
            });
    }
    report.pair_inequivalent = are_isomorphic(c[0], c[1]).is_none();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::example_clique;

    #[test]
    fn adjacency_of_example_family() {
        let c = example_clique();
        let a = adjacency_matrix(&c.boxes);
        assert!(a.off_diagonal_nonzero());
        for i in 0..12 {
            assert_eq!(a.0[i][i], 0);
            for j in 0..12 {
                assert_eq!(a.0[i][j], a.0[j][i]);
            }
        }
    }

    #[test]
    fn proto_matrix_diagonal_is_member_count() {
        let c = example_clique();
        let b = proto_matrix(&c.boxes);
        for i in 0..12 {
            assert_eq!(b[i][i], 12);
        }
    }

    #[test]
    fn automorphisms_are_protoautomorphisms() {
        let c = example_clique();
        let auto = automorphism_group(&c.boxes);
        let proto: BTreeSet<Vec<usize>> = protoautomorphisms(&c.boxes).into_iter().collect();
        for p in &auto {
            assert!(proto.contains(p));
        }
        // closure under composition
        let set: BTreeSet<Vec<usize>> = auto.iter().cloned().collect();
        for a in &auto {
            for b in &auto {
                let comp: Vec<usize> = (0..12).map(|i| a[b[i]]).collect();
                assert!(set.contains(&comp));
            }
        }
    }

    #[test]
    fn isomorphism_to_translated_copy() {
        let c = example_clique();
        // permute axes cyclically: an equivalence witness must exist
        let rotated: Vec<Box3> = c
            .boxes
            .iter()
            .map(|b| Box3::new(b.coord(2), b.coord(0), b.coord(1)))
            .collect();
        assert!(are_isomorphic(&c.boxes, &rotated).is_some());
    }

    #[test]
    fn digit_labels_round_trip() {
        let c = example_clique();
        for b in &c.boxes {
            let lab = digit_label(b, Suit::Club).unwrap();
            assert_eq!(decode_digit_label(&lab, Suit::Club).unwrap(), *b);
        }
        let first = digit_label(&c.boxes[0], Suit::Club).unwrap();
        assert_eq!(first, "148");
    }

    #[test]
    fn perm_orders() {
        assert_eq!(perm_order(&[0, 1, 2]), 1);
        assert_eq!(perm_order(&[1, 0, 2]), 2);
        assert_eq!(perm_order(&[1, 2, 0]), 3);
        assert_eq!(perm_order(&[1, 2, 3, 0, 5, 4]), 4);
    }
}

#[cfg(test)]
mod diag {
    use super::*;
    use crate::pipeline::example_clique;

    #[test]
    #[ignore = "diagnostic"]
    fn proto_count_example() {
        let c = example_clique();
        let n = protoautomorphisms(&c.boxes).len();
        println!("example clique protoautomorphisms: {n}");
        let auto = automorphism_group(&c.boxes);
        println!("example clique automorphisms: {}", auto.len());
    }
}
