//! Compression of 1-D interval families: graph homomorphisms into the
//! canonical families, the minimal level `s`, and incompressibility tests.
//!
//! `normalize` first squeezes the input onto an integer grid, then repeatedly
//! applies two deletion moves (drop a missing boundary unit, drop a missing
//! interior unit) until every unit interval is present in the image. That
//! fixpoint is not always minimal, so an exhaustive homomorphism search into
//! the next level down certifies minimality, recursing when it finds one.

use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::level::Level;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct CompressionResult {
    /// Minimal level: the image lies in the level-`s` family and no
    /// homomorphism into a smaller level exists.
    pub s: u32,
    pub image: BTreeMap<Interval, Interval>,
}

impl CompressionResult {
    pub fn image_family(&self) -> BTreeSet<Interval> {
        self.image.values().copied().collect()
    }
}

/// Exhaustive backtracking search for a graph homomorphism of `family` into
/// the level-`s` family (adjacent intervals must map to adjacent intervals).
pub fn find_homomorphism(
    family: &BTreeSet<Interval>,
    s: u32,
) -> Option<BTreeMap<Interval, Interval>> {
    let lvl = Level::new(s).ok()?;
    let src: Vec<Interval> = family.iter().copied().collect();
    let n = src.len();
    let adj_src: Vec<Vec<bool>> = src
        .iter()
        .map(|a| src.iter().map(|b| a.adjacent(b)).collect())
        .collect();
    let tgt = lvl.intervals();
    let adj_tgt: Vec<Vec<bool>> = tgt
        .iter()
        .map(|a| tgt.iter().map(|b| a.adjacent(b)).collect())
        .collect();
    let mut img = vec![usize::MAX; n];
    fn rec(
        i: usize,
        n: usize,
        adj_src: &[Vec<bool>],
        adj_tgt: &[Vec<bool>],
        m: usize,
        img: &mut [usize],
    ) -> bool {
        if i == n {
            return true;
        }
        for t in 0..m {
            let ok = (0..i).all(|p| !adj_src[i][p] || adj_tgt[t][img[p]]);
            if ok {
                img[i] = t;
                if rec(i + 1, n, adj_src, adj_tgt, m, img) {
                    return true;
                }
            }
        }
        img[i] = usize::MAX;
        false
    }
    if rec(0, n, &adj_src, &adj_tgt, tgt.len(), &mut img) {
        Some(
            src.iter()
                .enumerate()
                .map(|(i, &iv)| (iv, tgt[img[i]]))
                .collect(),
        )
    } else {
        None
    }
}

/// Squeeze endpoints onto consecutive integers starting at 1. This is an
/// order isomorphism, so adjacency is preserved both ways.
fn rank_compress(family: &BTreeSet<Interval>) -> BTreeMap<Interval, Interval> {
    let mut endpoints: Vec<i32> = family
        .iter()
        .flat_map(|iv| [iv.lo(), iv.hi()])
        .collect();
    endpoints.sort_unstable();
    endpoints.dedup();
    let rank: BTreeMap<i32, i32> = endpoints
        .iter()
        .enumerate()
        .map(|(r, &e)| (e, r as i32 + 1))
        .collect();
    family
        .iter()
        .map(|&iv| (iv, Interval::new(rank[&iv.lo()], rank[&iv.hi()])))
        .collect()
}

fn unit_present(family: &BTreeSet<Interval>, i: i32) -> bool {
    family.contains(&Interval::new(i, i + 1))
}

/// One deletion move for a missing interior unit `[i, i+1]`, mapping the
/// level-`s` family into level `s−1`.
fn interior_move(iv: Interval, i: i32) -> Interval {
    let (a, b) = iv.as_integer().expect("integer grid during reduction");
    if b <= i {
        iv
    } else if a <= i {
        Interval::new(a, b - 1)
    } else {
        Interval::new(a - 1, b - 1)
    }
}

/// Deletion move for a missing `[0,1]`.
fn left_boundary_move(iv: Interval) -> Interval {
    let (a, b) = iv.as_integer().expect("integer grid during reduction");
    if a <= 1 && b > 2 {
        Interval::new(1, b - 1)
    } else {
        Interval::new(a - 1, b - 1)
    }
}

/// Smallest level whose family contains the given integer-grid family as a
/// subset (support containment, not homomorphism).
pub fn containment_level(family: &BTreeSet<Interval>) -> Option<u32> {
    'level: for s in 0..=crate::level::MAX_LEVEL {
        let lvl = Level::new(s).ok()?;
        for iv in family {
            if !lvl.contains(iv) {
                continue 'level;
            }
        }
        return Some(s);
    }
    None
}

/// Minimal level and a homomorphism onto a family inside it.
pub fn normalize(family: &BTreeSet<Interval>) -> Result<CompressionResult> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    // start: rank compression puts endpoints on 1..=m, all inside level m
    let mut map = rank_compress(family);
    let mut current: BTreeSet<Interval> = map.values().copied().collect();
    let mut s = current.iter().map(|iv| iv.hi() / 2).max().unwrap() as u32;

    loop {
        // constructive reduction to the all-units-present fixpoint,
        // lowest-index missing unit first
        loop {
            if s == 0 {
                break;
            }
            let missing = (0..=s as i32).find(|&i| !unit_present(&current, i));
            let Some(i) = missing else { break };
            let step: BTreeMap<Interval, Interval> = if i == 0 {
                current.iter().map(|&iv| (iv, left_boundary_move(iv))).collect()
            } else if i == s as i32 {
                // mirror: reflect, drop missing [0,1], reflect back
                current
                    .iter()
                    .map(|&iv| {
                        let r = iv.reflect(s);
                        (iv, left_boundary_move(r).reflect(s - 1))
                    })
                    .collect()
            } else {
                current.iter().map(|&iv| (iv, interior_move(iv, i))).collect()
            };
            for img in map.values_mut() {
                *img = step[img];
            }
            current = map.values().copied().collect();
            s -= 1;
        }
        // minimality certificate: search one level down
        if s == 0 {
            break;
        }
        match find_homomorphism(&current, s - 1) {
            None => break,
            Some(hom) => {
                for img in map.values_mut() {
                    *img = hom[img];
                }
                current = map.values().copied().collect();
                s -= 1;
            }
        }
    }
    Ok(CompressionResult { s, image: map })
}

/// A combination supported at level `s` is incompressible when its support
/// admits no homomorphism into any smaller level.
pub fn is_incompressible(gamma: &Combination<Interval>, s: u32) -> Result<bool> {
    let lvl = Level::new(s)?;
    let supp: BTreeSet<Interval> = gamma.support().copied().collect();
    if supp.iter().any(|iv| !lvl.contains(iv)) {
        return Err(Error::SupportOutsideLevel { s });
    }
    if supp.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(normalize(&supp)?.s == s)
}

/// Incompressibility of a bare support set at its containment level.
pub fn support_incompressible(family: &BTreeSet<Interval>) -> Result<bool> {
    let s = containment_level(family).ok_or(Error::EmptyFamily)?;
    Ok(normalize(family)?.s == s)
}

/// One failed inequality from the bound suite.
#[derive(Debug, Clone)]
pub struct BoundViolation {
    pub rule: &'static str,
    pub detail: String,
}

/// Check the compression bound suite on a batch of 1-D combinations:
/// `|γ| ≤ 4α(γ)−3` for `α > 1`, and on the normalized support, `s ≤ 2α−1`,
/// `α ≥ ⌊s/2⌋+1`, all units present, the two forced chords present for
/// `s ≥ 3`, and monotonicity of `α` under the compression map. Violations
/// come back as a list; an empty list is the pass verdict.
pub fn check_bounds_suite(samples: &[Combination<Interval>]) -> Vec<BoundViolation> {
    use crate::graphs::alpha_brute;
    let mut out = Vec::new();
    let adj = |a: &Interval, b: &Interval| a.adjacent(b);
    for gamma in samples {
        if gamma.is_empty() {
            continue;
        }
        let alpha = alpha_brute(gamma, adj);
        if alpha > 1 && gamma.total() > 4 * alpha - 3 {
            out.push(BoundViolation {
                rule: "mass <= 4*alpha - 3",
                detail: format!("{gamma}: mass {} alpha {alpha}", gamma.total()),
            });
        }
        let supp: BTreeSet<Interval> = gamma.support().copied().collect();
        let Ok(res) = normalize(&supp) else { continue };
        let image = res.image_family();
        let pushed = gamma.push_forward(|iv| res.image[iv]);
        let alpha_img = alpha_brute(&pushed, adj);
        if alpha_img > alpha {
            out.push(BoundViolation {
                rule: "alpha(f_*(gamma)) <= alpha(gamma)",
                detail: format!("{gamma}: {alpha_img} > {alpha}"),
            });
        }
        let s = res.s;
        if alpha_img > 1 && s > 2 * alpha_img - 1 {
            out.push(BoundViolation {
                rule: "s <= 2*alpha - 1",
                detail: format!("{gamma}: s {s} alpha {alpha_img}"),
            });
        }
        let alpha_family = {
            let fam: Combination<Interval> = image.iter().map(|&iv| (iv, 1)).collect();
            alpha_brute(&fam, adj)
        };
        if alpha_family < s / 2 + 1 {
            out.push(BoundViolation {
                rule: "alpha >= floor(s/2) + 1",
                detail: format!("{gamma}: alpha {alpha_family} at level {s}"),
            });
        }
        for i in 0..=s as i32 {
            if !image.contains(&Interval::new(i, i + 1)) {
                out.push(BoundViolation {
                    rule: "all units in minimal image",
                    detail: format!("{gamma}: missing [{i},{}]", i + 1),
                });
            }
        }
        if s >= 3 {
            for chord in [Interval::new(1, 3), Interval::new(s as i32 - 2, s as i32)] {
                if !image.contains(&chord) {
                    out.push(BoundViolation {
                        rule: "forced chords in minimal image",
                        detail: format!("{gamma}: missing {chord}"),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: i32, b: i32) -> Interval {
        Interval::new(a, b)
    }

    fn fam(list: &[(i32, i32)]) -> BTreeSet<Interval> {
        list.iter().map(|&(a, b)| iv(a, b)).collect()
    }

    #[test]
    fn single_interval_compresses_to_zero() {
        let r = normalize(&fam(&[(0, 1)])).unwrap();
        assert_eq!(r.s, 0);
        let r = normalize(&fam(&[(17, 40)])).unwrap();
        assert_eq!(r.s, 0);
    }

    #[test]
    fn empty_family_rejected() {
        assert!(matches!(normalize(&BTreeSet::new()), Err(Error::EmptyFamily)));
    }

    #[test]
    fn level_two_family_compresses() {
        // the full level-2 family maps onto level 1 via [2,3] -> [0,1]
        let r = normalize(&fam(&[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(r.s, 1);
    }

    #[test]
    fn odd_length_two_parities_gives_level_one() {
        let r = normalize(&fam(&[(0, 1), (2, 5), (1, 4), (6, 7)])).unwrap();
        assert_eq!(r.s, 1);
    }

    #[test]
    fn all_units_fixpoint_is_not_taken_for_minimal() {
        // all five units: the fixpoint has every unit present at s=4, yet the
        // family is bipartite, so it must come out at level 1
        let r = normalize(&fam(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])).unwrap();
        assert_eq!(r.s, 1);
    }

    #[test]
    fn level_three_cycle_is_incompressible() {
        let c5 = fam(&[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]);
        let r = normalize(&c5).unwrap();
        assert_eq!(r.s, 3);
        // odd cycle cannot enter the bipartite levels
        assert!(find_homomorphism(&c5, 2).is_none());
    }

    #[test]
    fn normalize_image_is_a_homomorphism_with_all_units() {
        let family = fam(&[(1, 2), (2, 5), (5, 6), (2, 3), (3, 5), (0, 2), (6, 9)]);
        let r = normalize(&family).unwrap();
        for a in &family {
            for b in &family {
                if a.adjacent(b) {
                    assert!(r.image[a].adjacent(&r.image[b]), "{a} {b}");
                }
            }
        }
        let img = r.image_family();
        for i in 0..=r.s as i32 {
            assert!(img.contains(&iv(i, i + 1)), "missing unit [{i},{}]", i + 1);
        }
    }

    #[test]
    fn incompressibility_at_level() {
        let mut gamma: Combination<Interval> = Combination::new();
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)] {
            gamma.add(iv(a, b), 1);
        }
        assert!(is_incompressible(&gamma, 3).unwrap());
        let mut small: Combination<Interval> = Combination::new();
        small.add(iv(0, 1), 1);
        small.add(iv(1, 2), 1);
        assert!(is_incompressible(&small, 1).unwrap());
    }
}
