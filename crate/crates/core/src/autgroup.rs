//! Automorphisms of the level families, the product symmetry groups acting on
//! boxes, and generic orbit machinery.

use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::interval::{Box3, Interval};
use crate::level::Level;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// An adjacency-preserving bijection of the level-`s` interval family,
/// stored as the image list indexed like `Level::intervals()`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct VertexPerm {
    s: u32,
    images: Vec<u16>,
}

impl VertexPerm {
    pub fn identity(level: &Level) -> VertexPerm {
        VertexPerm {
            s: level.s(),
            images: (0..level.len() as u16).collect(),
        }
    }

    /// The reflection `[a,b] -> [s+1-b, s+1-a]`.
    pub fn reflection(level: &Level) -> VertexPerm {
        let images = level
            .intervals()
            .iter()
            .map(|iv| level.id(&iv.reflect(level.s())).expect("closed under reflection") as u16)
            .collect();
        VertexPerm {
            s: level.s(),
            images,
        }
    }

    pub fn from_map(level: &Level, map: &BTreeMap<Interval, Interval>) -> Result<VertexPerm> {
        let mut images = vec![u16::MAX; level.len()];
        for (src, dst) in map {
            let a = level.id(src).ok_or(Error::SupportOutsideLevel { s: level.s() })?;
            let b = level.id(dst).ok_or(Error::SupportOutsideLevel { s: level.s() })?;
            images[a] = b as u16;
        }
        if images.iter().any(|&x| x == u16::MAX) {
            return Err(Error::Fixture {
                name: "vertex permutation".into(),
                msg: "map does not cover the whole family".into(),
            });
        }
        Ok(VertexPerm {
            s: level.s(),
            images,
        })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn apply_id(&self, id: usize) -> usize {
        self.images[id] as usize
    }

    pub fn apply(&self, level: &Level, iv: &Interval) -> Interval {
        level.intervals()[self.images[level.id(iv).expect("interval in level")] as usize]
    }

    pub fn compose(&self, _level: &Level, inner: &VertexPerm) -> VertexPerm {
        VertexPerm {
            s: self.s,
            images: inner
                .images
                .iter()
                .map(|&m| self.images[m as usize])
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &m)| i == m as usize)
    }

    /// Pushforward of a combination along this permutation.
    pub fn push(&self, level: &Level, gamma: &Combination<Interval>) -> Combination<Interval> {
        gamma.push_forward(|iv| self.apply(level, iv))
    }

    /// Multiplicative order inside the permutation group.
    pub fn order(&self, level: &Level) -> u32 {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = self.compose(level, &acc);
            n += 1;
        }
        n
    }
}

/// Full automorphism group of the level-`s` family, by backtracking on the
/// degree partition. Orders: 2, 2, 10 for s = 1, 2, 3 and 8 for s ≥ 4.
pub fn aut_interval_graph(level: &Level) -> Vec<VertexPerm> {
    let n = level.len();
    let ivs = level.intervals();
    let adj: Vec<Vec<bool>> = ivs
        .iter()
        .map(|a| ivs.iter().map(|b| a.adjacent(b)).collect())
        .collect();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        i: usize,
        n: usize,
        adj: &[Vec<bool>],
        deg: &[usize],
        img: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            out.push(img.to_vec());
            return;
        }
        for c in 0..n {
            if used[c] || deg[c] != deg[i] {
                continue;
            }
            if (0..i).all(|p| adj[i][p] == adj[c][img[p]]) {
                img[i] = c;
                used[c] = true;
                rec(i + 1, n, adj, deg, img, used, out);
                used[c] = false;
                img[i] = usize::MAX;
            }
        }
    }
    let mut raw = Vec::new();
    rec(0, n, &adj, &deg, &mut img, &mut used, &mut raw);
    for images in raw {
        out.push(VertexPerm {
            s: level.s(),
            images: images.into_iter().map(|x| x as u16).collect(),
        });
    }
    out.sort();
    out
}

/// Vertex degrees in the level-`s` family, keyed by interval.
pub fn degree_profile(level: &Level) -> BTreeMap<Interval, usize> {
    level
        .intervals()
        .iter()
        .map(|a| {
            (
                *a,
                level
                    .intervals()
                    .iter()
                    .filter(|b| a.adjacent(b))
                    .count(),
            )
        })
        .collect()
}

/// A symmetry of 3-D boxes: an axis permutation composed with one vertex
/// permutation per axis (the per-axis maps act first, then axes permute).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct BoxSymmetry {
    /// axis `j` moves to position `sigma[j]`
    pub sigma: [usize; 3],
    pub maps: [VertexPerm; 3],
}

impl BoxSymmetry {
    pub fn apply(&self, level: &Level, b: &Box3) -> Box3 {
        let mut coords = [b.coord(0); 3];
        for (j, &target) in self.sigma.iter().enumerate() {
            coords[target] = self.maps[j].apply(level, &b.coord(j));
        }
        crate::interval::BoxN(coords)
    }

    pub fn apply_clique(&self, level: &Level, boxes: &[Box3]) -> Vec<Box3> {
        let mut out: Vec<Box3> = boxes.iter().map(|b| self.apply(level, b)).collect();
        out.sort();
        out
    }

    fn sign(sigma: &[usize; 3]) -> i32 {
        let mut inversions = 0;
        for a in 0..3 {
            for b in a + 1..3 {
                if sigma[a] > sigma[b] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Orientation sign: permutation parity times (−1) per reflecting axis map.
    pub fn orientation(&self, level: &Level) -> i32 {
        let refl = VertexPerm::reflection(level);
        let mut sign = Self::sign(&self.sigma);
        for m in &self.maps {
            if *m == refl {
                sign = -sign;
            }
        }
        sign
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupFlavor {
    /// per-axis automorphisms, no axis permutation (order 8^3)
    AutCube,
    /// the full semidirect product with S3 (order 6·8^3)
    FullProduct,
    /// isometries of the ambient cube (order 48)
    CubeIsometries,
    /// orientation-preserving isometries (order 24)
    RotationsOnly,
}

const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// The symmetry groups acting on 3-D box families over the level-`s` grid.
pub fn product_group(level: &Level, flavor: GroupFlavor) -> Result<Vec<BoxSymmetry>> {
    if level.s() < 4 {
        return Err(Error::LevelOutOfRange {
            s: level.s(),
            min: 4,
            max: crate::level::MAX_LEVEL,
        });
    }
    let per_axis: Vec<VertexPerm> = match flavor {
        GroupFlavor::AutCube | GroupFlavor::FullProduct => aut_interval_graph(level),
        GroupFlavor::CubeIsometries | GroupFlavor::RotationsOnly => {
            vec![VertexPerm::identity(level), VertexPerm::reflection(level)]
        }
    };
    let sigmas: &[[usize; 3]] = match flavor {
        GroupFlavor::AutCube => &S3[..1],
        _ => &S3,
    };
    let mut out = Vec::new();
    for sigma in sigmas {
        for f0 in &per_axis {
            for f1 in &per_axis {
                for f2 in &per_axis {
                    let g = BoxSymmetry {
                        sigma: *sigma,
                        maps: [f0.clone(), f1.clone(), f2.clone()],
                    };
                    if flavor == GroupFlavor::RotationsOnly && g.orientation(level) != 1 {
                        continue;
                    }
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Orbit partition of `targets` under `elements` acting by `act`.
/// Elements of one orbit are returned sorted; orbits are sorted by their
/// least member, so the output is deterministic.
pub fn orbits<X: Ord + Clone, G>(
    elements: &[G],
    act: impl Fn(&G, &X) -> X,
    targets: &BTreeSet<X>,
) -> Vec<Vec<X>> {
    let mut remaining: BTreeSet<X> = targets.clone();
    let mut out = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let mut orbit: BTreeSet<X> = BTreeSet::new();
        let mut frontier = vec![seed.clone()];
        orbit.insert(seed);
        while let Some(x) = frontier.pop() {
            for g in elements {
                let y = act(g, &x);
                if orbit.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        for x in &orbit {
            remaining.remove(x);
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Number of group elements fixing `x`.
pub fn stabilizer_order<X: Ord, G>(elements: &[G], act: impl Fn(&G, &X) -> X, x: &X) -> usize {
    elements.iter().filter(|g| act(g, x) == *x).count()
}

/// Least image of `x` under the group: equal for two inputs iff same orbit.
pub fn canonical_rep<X: Ord + Clone, G>(elements: &[G], act: impl Fn(&G, &X) -> X, x: &X) -> X {
    let mut best = x.clone();
    for g in elements {
        let y = act(g, x);
        if y < best {
            best = y;
        }
    }
    best
}
