//! The staged exhaustive search for maximum 3-D box cliques: candidate
//! 5-cycles, compatible cycle pairs, quadruple decompositions of candidate
//! profiles, flat (2-D) quadruples, and the final lift to 3-D cliques. The
//! end product is the two clique families (64 club-type and 256 spade-type
//! members) and the certificate that 12 is the maximum family size.

use crate::combination::{graph_counts, Combination};
use crate::compress;
use crate::error::{Error, Result};
use crate::graphs::alpha_is_1;
use crate::interval::{Box2, Box3, Interval};
use crate::level::{skeleton, Level};
use crate::named;
use crate::planar::{enumerate_5cycles, solve_construction_2d, FiveCycle};
use crate::profiles::{self, Profile, ProfileType};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeSet;

/// One admissible decomposition `λ = λ¹ + λ² + λ³` of a candidate profile
/// into two 5-cycles and a remainder of mass `v − 10`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Quadruple {
    pub cycle1: FiveCycle,
    pub cycle2: FiveCycle,
    pub rest: Combination<Interval>,
    pub profile: Combination<Interval>,
}

/// A flat quadruple: two planar 5-cliques and a remainder family whose sum
/// has independence number at most 2, projecting to a fixed quadruple pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct FlatQuadruple {
    pub phi1: Vec<Box2>,
    pub phi2: Vec<Box2>,
    pub phi3: Vec<Box2>,
}

impl FlatQuadruple {
    pub fn all_boxes(&self) -> Vec<Box2> {
        let mut out = self.phi1.clone();
        out.extend_from_slice(&self.phi2);
        out.extend_from_slice(&self.phi3);
        out
    }

    pub fn sum(&self) -> Combination<Box2> {
        self.all_boxes().into_iter().map(|b| (b, 1)).collect()
    }

    pub fn axis_profile(&self, axis: usize) -> Combination<Interval> {
        self.all_boxes()
            .into_iter()
            .map(|b| (b.coord(axis), 1))
            .collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Suit {
    Club,
    Spade,
}

impl Suit {
    pub fn profile(&self) -> Combination<Interval> {
        match self {
            Suit::Club => named::lambda_club(),
            Suit::Spade => named::lambda_spade(),
        }
    }

    pub fn betas(&self) -> [Combination<Interval>; 3] {
        match self {
            Suit::Club => named::beta_club(),
            Suit::Spade => named::beta_spade(),
        }
    }

    pub fn level(&self) -> u32 {
        match self {
            Suit::Club => 4,
            Suit::Spade => 5,
        }
    }
}

/// A 12-clique together with its axis profiles.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, serde::Deserialize)]
pub struct CliqueRecord {
    pub boxes: Vec<Box3>,
    pub axis_profiles: [Combination<Interval>; 3],
}

impl CliqueRecord {
    pub fn new(mut boxes: Vec<Box3>) -> CliqueRecord {
        boxes.sort();
        let axis_profiles = [0, 1, 2].map(|a| {
            boxes
                .iter()
                .map(|b| (b.coord(a), 1))
                .collect::<Combination<Interval>>()
        });
        CliqueRecord {
            boxes,
            axis_profiles,
        }
    }

    pub fn is_clique(&self) -> bool {
        is_clique(&self.boxes)
    }
}

/// True iff all unordered pairs are adjacent (duplicates never are).
pub fn is_clique<const N: usize>(boxes: &[crate::interval::BoxN<N>]) -> bool {
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if !boxes[i].adjacent(&boxes[j]) {
                return false;
            }
        }
    }
    true
}

/// Stage 1: candidate 5-cycles (those extendable to an admissible profile).
pub fn build_co5() -> Vec<FiveCycle> {
    enumerate_5cycles(9).expect("level 9 is supported")
}

/// Stage 2: ordered cycle pairs that fit together under one profile roof:
/// at the joint minimal level, the skeleton may miss at most `v − 10`
/// intervals of the union support.
pub fn build_cp5(v: u32, co5: &[FiveCycle]) -> Vec<(FiveCycle, FiveCycle)> {
    let mut out = Vec::new();
    for &c1 in co5 {
        for &c2 in co5 {
            let s = c1.sep().max(c2.sep()).max(3);
            let supp1 = c1.support();
            let supp2 = c2.support();
            let deficit = skeleton(s)
                .expect("s >= 3")
                .into_iter()
                .filter(|iv| !supp1.contains(iv) && !supp2.contains(iv))
                .count();
            if deficit as u32 <= v - 10 {
                out.push((c1, c2));
            }
        }
    }
    out
}

/// Stage 3: quadruples `(λ¹, λ², λ³, λ)` with `(λ¹, λ²)` a compatible pair,
/// `λ` a canonical profile representative and `λ¹ + λ² ≤ λ`.
pub fn build_mc(v: u32, cp5: &[(FiveCycle, FiveCycle)], lhat: &[Profile]) -> Vec<Quadruple> {
    let _ = v;
    let mut out = Vec::new();
    for (c1, c2) in cp5 {
        let pair_sum = c1.combination().sum(&c2.combination());
        for p in lhat {
            if let Some(rest) = p.lam.checked_sub(&pair_sum) {
                out.push(Quadruple {
                    cycle1: *c1,
                    cycle2: *c2,
                    rest,
                    profile: p.lam.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

/// Distinct ways of pairing the two remainder multisets into 2-D boxes.
fn merge_rests(a: &Combination<Interval>, b: &Combination<Interval>) -> Vec<Vec<Box2>> {
    let xs: Vec<Interval> = a.expand().into_iter().copied().collect();
    let ys: Vec<Interval> = b.expand().into_iter().copied().collect();
    debug_assert_eq!(xs.len(), ys.len());
    let mut perm: Vec<usize> = (0..ys.len()).collect();
    let mut seen: BTreeSet<Vec<Box2>> = BTreeSet::new();
    // remainders have at most 3 elements; plain permutation scan is fine
    loop {
        let mut merged: Vec<Box2> = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| Box2::of(xs[i], ys[j]))
            .collect();
        merged.sort();
        seen.insert(merged);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    seen.into_iter().collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// No three pairwise non-adjacent boxes in the list (α ≤ 2 for the
/// corresponding combination; equal boxes are never adjacent, so repeats are
/// handled by the same scan).
fn no_independent_triple(boxes: &[Box2]) -> bool {
    let n = boxes.len();
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].adjacent(&boxes[j]) {
                continue;
            }
            for b in boxes.iter().skip(j + 1) {
                if !boxes[i].adjacent(b) && !boxes[j].adjacent(b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Stage 4 kernel: flat quadruples for one ordered pair of quadruples. The
/// two cycle pairs weld in ten ways each; the remainders merge in at most
/// `(v−10)!` ways; the sum must have independence number at most 2.
pub fn build_fl(q: &Quadruple, qbar: &Quadruple) -> Vec<FlatQuadruple> {
    let mut out = Vec::new();
    let phi1s = solve_construction_2d(&q.cycle1, &qbar.cycle1);
    let phi2s = solve_construction_2d(&q.cycle2, &qbar.cycle2);
    let merges = merge_rests(&q.rest, &qbar.rest);
    let mut buf: Vec<Box2> = Vec::with_capacity(16);
    for phi1 in &phi1s {
        for phi2 in &phi2s {
            buf.clear();
            buf.extend_from_slice(phi1);
            buf.extend_from_slice(phi2);
            if !no_independent_triple(&buf) {
                continue;
            }
            for phi3 in &merges {
                buf.truncate(10);
                buf.extend_from_slice(phi3);
                if no_independent_triple(&buf) {
                    out.push(FlatQuadruple {
                        phi1: phi1.clone(),
                        phi2: phi2.clone(),
                        phi3: phi3.clone(),
                    });
                }
            }
        }
    }
    out
}

/// Stage 4 output: the flat quadruples as one deduplicated union, plus the
/// number of occupied pair cells, which is the cardinality the stage
/// reports (a cell is an ordered quadruple pair whose flat set is
/// nonempty; the published stage size counts cells, not members).
#[derive(Debug, Clone, Serialize)]
pub struct FlatStage {
    pub quadruples: Vec<FlatQuadruple>,
    pub occupied_cells: usize,
}

/// Stage 4: union of the per-pair sets over all ordered quadruple pairs.
pub fn build_flat(mc: &[Quadruple]) -> FlatStage {
    let per_q: Vec<(Vec<FlatQuadruple>, usize)> = mc
        .par_iter()
        .map(|q| {
            let mut local = Vec::new();
            let mut cells = 0;
            for qbar in mc {
                let fl = build_fl(q, qbar);
                if !fl.is_empty() {
                    cells += 1;
                }
                local.extend(fl);
            }
            (local, cells)
        })
        .collect();
    let occupied_cells = per_q.iter().map(|(_, c)| c).sum();
    let mut quadruples: Vec<FlatQuadruple> =
        per_q.into_iter().flat_map(|(l, _)| l).collect();
    quadruples.sort();
    quadruples.dedup();
    FlatStage {
        quadruples,
        occupied_cells,
    }
}

fn distinct_permutation_assignments(targets: &[Interval]) -> Vec<Vec<Interval>> {
    // all distinct orderings of a small multiset
    let mut sorted = targets.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..sorted.len()).collect();
    let mut seen = BTreeSet::new();
    loop {
        let arrangement: Vec<Interval> = perm.iter().map(|&i| sorted[i]).collect();
        if seen.insert(arrangement.clone()) {
            out.push(arrangement);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Stages 5–6: lift flat quadruples with both axis profiles equal to the
/// suit profile by assigning third coordinates from the decomposition
/// pieces, keeping exactly the 12-cliques.
pub fn assemble_cq(suit: Suit, flat12: &[FlatQuadruple]) -> Vec<CliqueRecord> {
    let lam = suit.profile();
    let betas = suit.betas();
    let mut seen: BTreeSet<Vec<Box3>> = BTreeSet::new();
    for fq in flat12 {
        if fq.axis_profile(0) != lam || fq.axis_profile(1) != lam {
            continue;
        }
        let parts = [&fq.phi1, &fq.phi2, &fq.phi3];
        let choices: Vec<Vec<Vec<Interval>>> = (0..3)
            .map(|j| {
                let exp: Vec<Interval> = betas[j].expand().into_iter().copied().collect();
                distinct_permutation_assignments(&exp)
            })
            .collect();
        for a1 in &choices[0] {
            let p1: Vec<Box3> = parts[0]
                .iter()
                .zip(a1)
                .map(|(b, &t)| Box3::new(b.coord(0), b.coord(1), t))
                .collect();
            if !is_clique(&p1) {
                continue;
            }
            for a2 in &choices[1] {
                let p2: Vec<Box3> = parts[1]
                    .iter()
                    .zip(a2)
                    .map(|(b, &t)| Box3::new(b.coord(0), b.coord(1), t))
                    .collect();
                let mut ten = p1.clone();
                ten.extend_from_slice(&p2);
                if !is_clique(&ten) {
                    continue;
                }
                for a3 in &choices[2] {
                    let p3: Vec<Box3> = parts[2]
                        .iter()
                        .zip(a3)
                        .map(|(b, &t)| Box3::new(b.coord(0), b.coord(1), t))
                        .collect();
                    let mut all = ten.clone();
                    all.extend_from_slice(&p3);
                    let gamma: Combination<Box3> = all.iter().map(|&b| (b, 1)).collect();
                    if alpha_is_1(&gamma, |x, y| x.adjacent(y)) {
                        all.sort();
                        seen.insert(all);
                    }
                }
            }
        }
    }
    seen.into_iter().map(CliqueRecord::new).collect()
}

/// Direct solver for the construction problem: all `v`-cliques whose three
/// axis projections are the given profiles. Independent of the flat-quadruple
/// route; used as an oracle and for the two no-solution propositions.
pub fn solve_construction_3d(
    g1: &Combination<Interval>,
    g2: &Combination<Interval>,
    g3: &Combination<Interval>,
) -> Vec<CliqueRecord> {
    let v = g1.total() as usize;
    assert_eq!(v, g2.total() as usize);
    assert_eq!(v, g3.total() as usize);
    // One slot per copy of a first-axis interval; boxes sharing the first
    // coordinate are forced into increasing (y, z) order, which kills both
    // permutation duplicates and repeated boxes. Forward checking keeps a
    // usability bitmask of (y, z) pairs per first-axis value.
    let xs: Vec<Interval> = g1.expand().into_iter().copied().collect();
    let classes: Vec<Interval> = g1.support().copied().collect();
    let class_of: Vec<usize> = xs
        .iter()
        .map(|x| classes.binary_search(x).expect("own support"))
        .collect();
    let ys: Vec<Interval> = g2.support().copied().collect();
    let zs: Vec<Interval> = g3.support().copied().collect();
    let mut pairs: Vec<(Interval, Interval)> = Vec::new();
    for &y in &ys {
        for &z in &zs {
            pairs.push((y, z));
        }
    }
    pairs.sort();
    let np = pairs.len();
    let words = np.div_ceil(64);
    let full_mask = |bits: usize| -> Vec<u64> {
        let mut m = vec![u64::MAX; words];
        if bits % 64 != 0 {
            m[words - 1] = (1u64 << (bits % 64)) - 1;
        }
        m
    };

    // pairs adjacent (on axis 2 or 3) to a given pair's coordinates
    let yz_adj: Vec<Vec<u64>> = pairs
        .iter()
        .map(|&(by, bz)| {
            let mut m = vec![0u64; words];
            for (q, &(y, z)) in pairs.iter().enumerate() {
                if y.adjacent(&by) || z.adjacent(&bz) {
                    m[q / 64] |= 1 << (q % 64);
                }
            }
            m
        })
        .collect();
    let class_adj: Vec<Vec<bool>> = classes
        .iter()
        .map(|a| classes.iter().map(|b| a.adjacent(b)).collect())
        .collect();
    let pairs_with_y: Vec<Vec<u64>> = ys
        .iter()
        .map(|&yv| {
            let mut m = vec![0u64; words];
            for (q, &(y, _)) in pairs.iter().enumerate() {
                if y == yv {
                    m[q / 64] |= 1 << (q % 64);
                }
            }
            m
        })
        .collect();
    let pairs_with_z: Vec<Vec<u64>> = zs
        .iter()
        .map(|&zv| {
            let mut m = vec![0u64; words];
            for (q, &(_, z)) in pairs.iter().enumerate() {
                if z == zv {
                    m[q / 64] |= 1 << (q % 64);
                }
            }
            m
        })
        .collect();

    struct Search<'a> {
        xs: &'a [Interval],
        class_of: &'a [usize],
        pairs: &'a [(Interval, Interval)],
        yz_adj: &'a [Vec<u64>],
        class_adj: &'a [Vec<bool>],
        pairs_with_y: &'a [Vec<u64>],
        pairs_with_z: &'a [Vec<u64>],
        ys: &'a [Interval],
        zs: &'a [Interval],
        words: usize,
        rem2: Vec<u32>,
        rem3: Vec<u32>,
        avail: Vec<u64>,
        usable: Vec<Vec<u64>>,
        demand: Vec<u32>,
        chosen: Vec<Box3>,
        out: Vec<CliqueRecord>,
    }
    impl Search<'_> {
        fn feasible(&self) -> bool {
            for (c, &d) in self.demand.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let live: u32 = (0..self.words)
                    .map(|w| (self.usable[c][w] & self.avail[w]).count_ones())
                    .sum();
                if live < d {
                    return false;
                }
            }
            true
        }

        fn run(&mut self, slot: usize, min_pair: usize) {
            if slot == self.xs.len() {
                self.out.push(CliqueRecord::new(self.chosen.clone()));
                return;
            }
            let c = self.class_of[slot];
            let start = if slot > 0 && self.class_of[slot - 1] == c {
                min_pair
            } else {
                0
            };
            for q in start..self.pairs.len() {
                if self.usable[c][q / 64] >> (q % 64) & 1 == 0
                    || self.avail[q / 64] >> (q % 64) & 1 == 0
                {
                    continue;
                }
                let (y, z) = self.pairs[q];
                let yi = self.ys.binary_search(&y).expect("own support");
                let zi = self.zs.binary_search(&z).expect("own support");

                // consume
                self.rem2[yi] -= 1;
                self.rem3[zi] -= 1;
                self.demand[c] -= 1;
                let saved_avail = self.avail.clone();
                if self.rem2[yi] == 0 {
                    for w in 0..self.words {
                        self.avail[w] &= !self.pairs_with_y[yi][w];
                    }
                }
                if self.rem3[zi] == 0 {
                    for w in 0..self.words {
                        self.avail[w] &= !self.pairs_with_z[zi][w];
                    }
                }
                let saved_usable: Vec<Vec<u64>> = self.usable.clone();
                for c2 in 0..self.usable.len() {
                    if !self.class_adj[c2][c] {
                        for w in 0..self.words {
                            self.usable[c2][w] &= self.yz_adj[q][w];
                        }
                    }
                }
                self.chosen.push(Box3::new(self.xs[slot], y, z));

                if self.feasible() {
                    self.run(slot + 1, q + 1);
                }

                self.chosen.pop();
                self.usable = saved_usable;
                self.avail = saved_avail;
                self.demand[c] += 1;
                self.rem2[yi] += 1;
                self.rem3[zi] += 1;
            }
        }
    }

    let mut demand = vec![0u32; classes.len()];
    for &c in &class_of {
        demand[c] += 1;
    }
    let mut search = Search {
        xs: &xs,
        class_of: &class_of,
        pairs: &pairs,
        yz_adj: &yz_adj,
        class_adj: &class_adj,
        pairs_with_y: &pairs_with_y,
        pairs_with_z: &pairs_with_z,
        ys: &ys,
        zs: &zs,
        words,
        rem2: ys.iter().map(|y| g2.mult(y)).collect(),
        rem3: zs.iter().map(|z| g3.mult(z)).collect(),
        avail: full_mask(np),
        usable: vec![full_mask(np); classes.len()],
        demand,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    search.run(0, 0);
    let mut out = search.out;
    out.sort();
    out.dedup();
    out
}

/// The known 12-clique witness (the example family whose three projections
/// all equal the club profile).
pub fn example_clique() -> CliqueRecord {
    let b = |x: (i32, i32), y: (i32, i32), z: (i32, i32)| {
        Box3::new(
            Interval::new(x.0, x.1),
            Interval::new(y.0, y.1),
            Interval::new(z.0, z.1),
        )
    };
    CliqueRecord::new(vec![
        b((0, 1), (3, 4), (1, 4)),
        b((0, 1), (4, 5), (2, 4)),
        b((1, 2), (3, 4), (1, 3)),
        b((1, 2), (4, 5), (2, 3)),
        b((1, 3), (1, 2), (3, 4)),
        b((1, 4), (0, 1), (3, 4)),
        b((2, 3), (1, 2), (4, 5)),
        b((2, 4), (0, 1), (4, 5)),
        b((3, 4), (1, 3), (1, 2)),
        b((3, 4), (1, 4), (0, 1)),
        b((4, 5), (2, 3), (1, 2)),
        b((4, 5), (2, 4), (0, 1)),
    ])
}

#[derive(Debug, Serialize)]
pub struct B3Certificate {
    pub lower_bound: u32,
    pub upper_bound: u32,
    /// `C(14,2) = 91` versus three times the edge count of the unique
    /// mass-14 profile
    pub mass14_edge_gap: (u64, u64),
    pub flat13_empty: bool,
    pub l_empty_above_14: bool,
}

/// The two-sided certificate: a verified 12-clique from below; from above,
/// the emptiness chain (no admissible profiles beyond mass 14, the unique
/// mass-14 profile losing the edge count race, no flat quadruples at mass
/// 13).
pub fn prove_b3(flat13: &[FlatQuadruple]) -> Result<B3Certificate> {
    let witness = example_clique();
    if !witness.is_clique() || witness.boxes.len() != 12 {
        return Err(Error::NotAClique {
            expected: 12,
            got: witness.boxes.len(),
        });
    }
    for profile in &witness.axis_profiles {
        if profile != &named::lambda_club() {
            return Err(Error::Fixture {
                name: "example clique".into(),
                msg: "axis profile mismatch".into(),
            });
        }
        if !compress::is_incompressible(profile, 4)? {
            return Err(Error::Fixture {
                name: "example clique".into(),
                msg: "axis profile unexpectedly compressible".into(),
            });
        }
    }

    let mut l_empty_above_14 = true;
    let mut mass14: Vec<(u32, Combination<Interval>)> = Vec::new();
    for s in profiles::MIN_S..=profiles::MAX_S {
        for v in 14..=profiles::MAX_V {
            let sols = profiles::enumerate_l(s, v)?;
            if v == 14 {
                mass14.extend(sols.into_iter().map(|l| (s, l)));
            } else if !sols.is_empty() {
                l_empty_above_14 = false;
            }
        }
    }
    if mass14.len() != 1 || mass14[0].1 != named::lambda_bar() {
        return Err(Error::Fixture {
            name: "mass-14 bucket".into(),
            msg: format!("expected exactly the 14-element ladder, got {}", mass14.len()),
        });
    }
    let (_, e_bar) = graph_counts(&mass14[0].1, |a, b| a.adjacent(b));
    let need = 14u64 * 13 / 2;
    let gap = (need, 3 * e_bar);
    let upper_ok = gap.0 > gap.1;

    Ok(B3Certificate {
        lower_bound: 12,
        upper_bound: if upper_ok && flat13.is_empty() { 12 } else { 17 },
        mass14_edge_gap: gap,
        flat13_empty: flat13.is_empty(),
        l_empty_above_14,
    })
}

#[derive(Debug, Serialize)]
pub struct BezrozwReport {
    /// 5-cycles with support inside the exceptional profile
    pub candidate_cycles: Vec<FiveCycle>,
    pub solutions: usize,
}

/// The all-type-II triple (star, star, star) admits no clique.
pub fn check_bezrozw() -> BezrozwReport {
    let star = named::lambda_star();
    let supp: BTreeSet<Interval> = star.support().copied().collect();
    let candidate_cycles = enumerate_5cycles(9)
        .expect("level 9")
        .into_iter()
        .filter(|c| c.support().is_subset(&supp))
        .collect();
    let solutions = solve_construction_3d(&star, &star, &star).len();
    BezrozwReport {
        candidate_cycles,
        solutions,
    }
}

#[derive(Debug, Serialize)]
pub struct MarozwReport {
    /// size of the candidate triple set (edge-sum filter over the mass-12
    /// representatives)
    pub n12_len: usize,
    /// the unique companion profile with edge count ≥ 28 (paired with the
    /// doubled diamond) and its edge count
    pub high_edge_companion: Option<(Combination<Interval>, u64)>,
    pub companion_is_type_i: bool,
    /// 5-cycles dominated by the diamond profile
    pub diamond_cycles: Vec<FiveCycle>,
    /// unordered cycle pairs whose sum stays below the diamond profile
    pub diamond_cycle_pairs: Vec<(FiveCycle, FiveCycle)>,
    /// solutions of the diamond-diamond-companion construction problem,
    /// summed over axis placements
    pub diamond_solutions: usize,
    /// solutions for the exceptional all-type-II triple
    pub star_solutions: usize,
    /// the solvable triples that remain
    pub solvable: Vec<[Combination<Interval>; 3]>,
}

/// Only the two constant triples (club³ and spade³) are solvable among the
/// mass-12 candidates. Every other shape is excluded mechanically: whenever
/// some component is type I, the flat stage forces the other two profiles
/// to coincide and lie in {club, spade, diamond}; the diamond case dies by
/// direct search against its unique admissible companion; the all-type-II
/// case is the star triple, also dead by direct search.
pub fn check_marozw(flat12: &[FlatQuadruple]) -> Result<MarozwReport> {
    let n12 = profiles::build_n(12)?;
    let lhat12 = profiles::lhat_union(12)?;

    // companion search: diamond-diamond-X needs E(X) >= 66 - 2*19 = 28
    let diamond = named::lambda_diamond();
    let high: Vec<&Profile> = lhat12.iter().filter(|p| p.e >= 28).collect();
    let high_edge_companion = match high.as_slice() {
        [one] => Some((one.lam.clone(), one.e)),
        _ => None,
    };
    let companion_is_type_i = high
        .first()
        .map(|p| p.kind == ProfileType::I)
        .unwrap_or(false);

    let supp: BTreeSet<Interval> = diamond.support().copied().collect();
    let diamond_cycles: Vec<FiveCycle> = enumerate_5cycles(9)
        .expect("level 9")
        .into_iter()
        .filter(|c| c.support().is_subset(&supp))
        .collect();
    let mut diamond_cycle_pairs = Vec::new();
    for (i, a) in diamond_cycles.iter().enumerate() {
        for b in diamond_cycles.iter().skip(i) {
            if a.combination().sum(&b.combination()).le(&diamond) {
                diamond_cycle_pairs.push((*a, *b));
            }
        }
    }

    let diamond_solutions = high
        .first()
        .map(|p| {
            solve_construction_3d(&p.lam, &diamond, &diamond).len()
                + solve_construction_3d(&diamond, &p.lam, &diamond).len()
                + solve_construction_3d(&diamond, &diamond, &p.lam).len()
        })
        .unwrap_or(0);

    let star = named::lambda_star();
    let star_solutions = solve_construction_3d(&star, &star, &star).len();

    // flat-stage narrowing: pairs of first-two-axis profiles that actually
    // occur among flat quadruples
    let mut allowed_pairs: BTreeSet<(Combination<Interval>, Combination<Interval>)> =
        BTreeSet::new();
    for fq in flat12 {
        allowed_pairs.insert((fq.axis_profile(0), fq.axis_profile(1)));
    }

    let lvl4 = Level::new(4)?;
    let lvl5 = Level::new(5)?;
    let auts4 = crate::autgroup::aut_interval_graph(&lvl4);
    let auts5 = crate::autgroup::aut_interval_graph(&lvl5);
    let club = profiles::canonical_profile(&lvl4, &auts4, &named::lambda_club());
    let spade = profiles::canonical_profile(&lvl5, &auts5, &named::lambda_spade());

    let mut solvable: Vec<[Combination<Interval>; 3]> = Vec::new();
    for triple in &n12 {
        let kinds = [triple[0].kind, triple[1].kind, triple[2].kind];
        if kinds.iter().all(|k| *k == ProfileType::II) {
            // the unique all-type-II member is the star triple; its direct
            // search is counted separately
            continue;
        }
        // a type-I component may always be moved to the last axis, so the
        // remaining pair must occur as a flat projection pair
        let mut ok = false;
        for last in 0..3 {
            if kinds[last] != ProfileType::I {
                continue;
            }
            let others: Vec<&Profile> =
                (0..3).filter(|&i| i != last).map(|i| &triple[i]).collect();
            if allowed_pairs.contains(&(others[0].lam.clone(), others[1].lam.clone())) {
                ok = true;
            }
        }
        if !ok {
            continue;
        }
        let lams = [&triple[0].lam, &triple[1].lam, &triple[2].lam];
        if lams.iter().all(|l| **l == club) || lams.iter().all(|l| **l == spade) {
            let arr = [
                triple[0].lam.clone(),
                triple[1].lam.clone(),
                triple[2].lam.clone(),
            ];
            if !solvable.contains(&arr) {
                solvable.push(arr);
            }
        }
        // any surviving diamond pair is settled by the direct search above
    }

    Ok(MarozwReport {
        n12_len: n12.len(),
        high_edge_companion,
        companion_is_type_i,
        diamond_cycles,
        diamond_cycle_pairs,
        diamond_solutions,
        star_solutions,
        solvable,
    })
}

/// Stage bookkeeping: element count plus a content hash of the canonical
/// JSON serialization, so reruns are comparable bit-for-bit.
#[derive(Debug, Clone, Serialize, serde::Deserialize)]
pub struct StageManifest {
    pub stage: String,
    pub params: serde_json::Value,
    pub count: usize,
    pub sha256: String,
    pub wall_ms: u128,
}

pub fn manifest<T: Serialize>(
    stage: &str,
    params: serde_json::Value,
    count: usize,
    data: &T,
    wall_ms: u128,
) -> StageManifest {
    let json = serde_json::to_vec(data).expect("serializable stage data");
    let mut hasher = Sha256::new();
    hasher.update(&json);
    StageManifest {
        stage: stage.to_string(),
        params,
        count,
        sha256: format!("{:x}", hasher.finalize()),
        wall_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_clique_is_valid() {
        let c = example_clique();
        assert!(c.is_clique());
        assert_eq!(c.boxes.len(), 12);
        for a in 0..3 {
            assert_eq!(c.axis_profiles[a], named::lambda_club());
        }
    }

    #[test]
    fn clique_with_duplicate_fails() {
        let mut boxes = example_clique().boxes;
        boxes.push(boxes[0]);
        assert!(!is_clique(&boxes));
    }

    #[test]
    fn cp5_excludes_heavy_deficit_pair() {
        // the worked exclusion example: joint skeleton deficit above 2
        let g = FiveCycle::new([0, 1, 2, 3, 4]).unwrap();
        let d = FiveCycle::new([0, 1, 3, 7, 8]).unwrap();
        let cp = build_cp5(12, &[g, d]);
        assert!(!cp.contains(&(g, d)));
        assert!(cp.contains(&(g, g)));
    }

    #[test]
    fn bezrozw_no_solutions_and_five_cycles() {
        let report = check_bezrozw();
        assert_eq!(report.solutions, 0);
        // the five classically listed cycles, plus two more the support
        // admits: (0,1,2,3,5) and (1,3,4,5,6); exhaustive enumeration is
        // authoritative here and the no-solution conclusion stands either way
        let listed: BTreeSet<[i32; 5]> = [
            [0, 1, 2, 3, 4],
            [0, 1, 2, 5, 6],
            [2, 3, 4, 5, 6],
            [0, 1, 3, 5, 6],
            [1, 2, 3, 5, 6],
            [0, 1, 2, 3, 5],
            [1, 3, 4, 5, 6],
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<[i32; 5]> =
            report.candidate_cycles.iter().map(|c| c.breaks).collect();
        assert_eq!(got, listed);
        // the forced anticlique: pairwise disjoint intervals
        let anti = [
            Interval::new(0, 1),
            Interval::new(3, 4),
            Interval::new(5, 6),
        ];
        for i in 0..3 {
            for j in i + 1..3 {
                assert!(!anti[i].adjacent(&anti[j]));
            }
        }
    }

    #[test]
    fn merge_rests_deduplicates() {
        let a: Combination<Interval> = [(Interval::new(1, 4), 1), (Interval::new(2, 3), 1)]
            .into_iter()
            .collect();
        assert_eq!(merge_rests(&a, &a).len(), 2);
        let twice: Combination<Interval> = [(Interval::new(1, 4), 2)].into_iter().collect();
        assert_eq!(merge_rests(&twice, &a).len(), 1);
    }

    #[test]
    fn direct_solver_finds_example_family() {
        let club = named::lambda_club();
        let sols = solve_construction_3d(&club, &club, &club);
        assert!(sols.contains(&example_clique()));
        assert_eq!(sols.len(), 64);
        for c in &sols {
            assert!(c.is_clique());
        }
    }
}
