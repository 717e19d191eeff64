//! The 2-D layer: 5-cycles of intervals, the ten ways of welding two
//! 5-cycles into a planar 5-clique, and the exact maximum clique size for
//! 2-D boxes.

use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::graphs;
use crate::interval::{Box2, Interval};
use crate::level::{skeleton, Level};
use serde::Serialize;
use std::collections::BTreeSet;

/// A 5-cycle of intervals `{[a0,a1], [a1,a2], [a2,a3], [a3,a4], [a1,a3]}`
/// with strictly increasing integer breakpoints. Every 5-cycle of 1-D
/// intervals has this shape, and the breakpoints determine it uniquely.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, serde::Deserialize)]
pub struct FiveCycle {
    pub breaks: [i32; 5],
}

impl FiveCycle {
    pub fn new(breaks: [i32; 5]) -> Result<FiveCycle> {
        if breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::DegenerateInterval {
                lo: 2 * breaks[0],
                hi: 2 * breaks[4],
            });
        }
        Ok(FiveCycle { breaks })
    }

    /// The five member intervals, in the labelling order used throughout:
    /// consecutive intervals first, the long chord `[a1,a3]` last.
    pub fn intervals(&self) -> [Interval; 5] {
        let a = &self.breaks;
        [
            Interval::new(a[0], a[1]),
            Interval::new(a[1], a[2]),
            Interval::new(a[2], a[3]),
            Interval::new(a[3], a[4]),
            Interval::new(a[1], a[3]),
        ]
    }

    pub fn support(&self) -> BTreeSet<Interval> {
        self.intervals().into_iter().collect()
    }

    pub fn combination(&self) -> Combination<Interval> {
        self.intervals().into_iter().map(|iv| (iv, 1)).collect()
    }

    /// Smallest level containing the support. Closed form: `a3` when the
    /// last interval is the boundary unit `[a3, a3+1]`, else `a4`.
    pub fn sep(&self) -> u32 {
        let a = &self.breaks;
        if a[4] == a[3] + 1 {
            a[3] as u32
        } else {
            a[4] as u32
        }
    }

    /// Recover a cycle from a combination, if it is one.
    pub fn from_combination(gamma: &Combination<Interval>) -> Option<FiveCycle> {
        if gamma.total() != 5 || gamma.support_len() != 5 {
            return None;
        }
        let mut pts: Vec<i32> = Vec::new();
        for iv in gamma.support() {
            let (a, b) = iv.as_integer()?;
            pts.push(a);
            pts.push(b);
        }
        pts.sort_unstable();
        pts.dedup();
        if pts.len() != 5 {
            return None;
        }
        let cand = FiveCycle::new([pts[0], pts[1], pts[2], pts[3], pts[4]]).ok()?;
        (&cand.combination() == gamma).then_some(cand)
    }
}

/// All 5-cycles with support inside the level-`s` family that extend to an
/// admissible profile: a profile has mass at most 13 and carries the whole
/// skeleton, so a usable cycle may miss at most `13 − 5` skeleton intervals
/// at its own minimal level.
pub fn enumerate_5cycles(s: u32) -> Result<Vec<FiveCycle>> {
    let lvl = Level::new(s)?;
    let hi = s as i32 + 1;
    let mut out = Vec::new();
    for a0 in 0..=hi - 4 {
        for a1 in a0 + 1..=hi - 3 {
            for a2 in a1 + 1..=hi - 2 {
                for a3 in a2 + 1..=hi - 1 {
                    for a4 in a3 + 1..=hi {
                        let c = FiveCycle {
                            breaks: [a0, a1, a2, a3, a4],
                        };
                        if !c.intervals().iter().all(|iv| lvl.contains(iv)) {
                            continue;
                        }
                        if skeleton_deficit(&c) > 13 - 5 {
                            continue;
                        }
                        out.push(c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Skeleton intervals missing from the cycle's support at its minimal level.
pub fn skeleton_deficit(c: &FiveCycle) -> usize {
    let s = c.sep().max(3);
    let supp = c.support();
    skeleton(s)
        .expect("s >= 3")
        .into_iter()
        .filter(|iv| !supp.contains(iv))
        .count()
}

/// The ten cycle orderings that close a pentagram: every Hamiltonian listing
/// of the complement of the pentagon `1..5`, i.e. all rotations and
/// reversals of `1-3-5-2-4`.
pub const PENTAGRAM_LABELINGS: [[u8; 5]; 10] = [
    [1, 3, 5, 2, 4],
    [3, 5, 2, 4, 1],
    [5, 2, 4, 1, 3],
    [2, 4, 1, 3, 5],
    [4, 1, 3, 5, 2],
    [1, 4, 2, 5, 3],
    [4, 2, 5, 3, 1],
    [2, 5, 3, 1, 4],
    [5, 3, 1, 4, 2],
    [3, 1, 4, 2, 5],
];

/// Re-derivation of the ten labelings: Hamiltonian cycle listings of the
/// pentagon's complement. Used by tests to guard the table above.
pub fn derive_pentagram_labelings() -> Vec<[u8; 5]> {
    let pentagon_edge = |a: u8, b: u8| (a % 5 + 1 == b) || (b % 5 + 1 == a);
    let mut out = Vec::new();
    let mut perm: Vec<u8> = vec![1, 2, 3, 4, 5];
    // all permutations whose cyclic consecutive pairs avoid pentagon edges
    fn heap(k: usize, perm: &mut Vec<u8>, keep: &mut dyn FnMut(&[u8])) {
        if k == 1 {
            keep(perm);
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, keep);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(5, &mut perm, &mut |p: &[u8]| {
        let ok = (0..5).all(|i| !pentagon_edge(p[i], p[(i + 1) % 5]));
        if ok {
            let mut arr = [0u8; 5];
            arr.copy_from_slice(p);
            out.push(arr);
        }
    });
    out.sort();
    out
}

/// A 5-clique of 2-D boxes, sorted canonically.
pub type Clique2 = Vec<Box2>;

/// The solutions of the construction problem for an ordered cycle pair:
/// exactly ten 5-cliques, one per pentagram labeling. The first cycle is
/// labelled canonically; member `m` of the clique pairs the first cycle's
/// interval `m` with the second cycle's interval labelled `m`.
pub fn solve_construction_2d(first: &FiveCycle, second: &FiveCycle) -> Vec<Clique2> {
    let iv1 = first.intervals();
    let iv2 = second.intervals();
    PENTAGRAM_LABELINGS
        .iter()
        .map(|lab| {
            let mut pos = [0usize; 6];
            for (k, &l) in lab.iter().enumerate() {
                pos[l as usize] = k;
            }
            let mut boxes: Vec<Box2> = (1..=5)
                .map(|m| Box2::of(iv1[m - 1], iv2[pos[m]]))
                .collect();
            boxes.sort();
            boxes
        })
        .collect()
}

/// Exact maximum clique size over the 2-D boxes built from the level-3
/// family on each axis. Incompressible planar cliques live inside that grid.
pub fn max_clique_2d() -> u32 {
    let lvl = Level::new(3).expect("level 3");
    let mut verts: Vec<Box2> = Vec::new();
    for &a in lvl.intervals() {
        for &b in lvl.intervals() {
            verts.push(Box2::of(a, b));
        }
    }
    graphs::max_clique(verts.len(), &|i, j| verts[i].adjacent(&verts[j]))
}

/// Split a planar 5-clique into its two 5-cycles: the per-axis projections.
/// The two edge classes partition the ten pairs.
pub fn decompose_2d_clique(clique: &[Box2]) -> Result<(FiveCycle, FiveCycle)> {
    if clique.len() != 5 {
        return Err(Error::NotAClique {
            expected: 5,
            got: clique.len(),
        });
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if !clique[i].adjacent(&clique[j]) {
                return Err(Error::NotAClique {
                    expected: 5,
                    got: clique.len(),
                });
            }
        }
    }
    let proj = |axis: usize| -> Combination<Interval> {
        clique.iter().map(|b| (b.coord(axis), 1)).collect()
    };
    let c1 = FiveCycle::from_combination(&proj(0)).ok_or(Error::NotAClique {
        expected: 5,
        got: 5,
    })?;
    let c2 = FiveCycle::from_combination(&proj(1)).ok_or(Error::NotAClique {
        expected: 5,
        got: 5,
    })?;
    Ok((c1, c2))
}
