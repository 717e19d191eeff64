//! The canonical finite interval family at compression level `s`:
//! `{[0,1], [s,s+1]} ∪ {[i,j] : 1 ≤ i < j ≤ s}`, together with its forced
//! skeleton and the maximal independent subfamilies used to evaluate the
//! independence number of a combination without search.

use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::interval::Interval;
use std::collections::BTreeMap;

pub const MAX_LEVEL: u32 = 9;

#[derive(Clone)]
pub struct Level {
    s: u32,
    intervals: Vec<Interval>,
    index: BTreeMap<Interval, usize>,
    /// For each ε in 0..2^s, the member bitmask of the independent family
    /// selected by ε (bit k of the mask = interval k of `intervals`).
    eps_members: Vec<u64>,
}

impl Level {
    pub fn new(s: u32) -> Result<Level> {
        if s > MAX_LEVEL {
            return Err(Error::LevelOutOfRange {
                s,
                min: 0,
                max: MAX_LEVEL,
            });
        }
        let mut intervals = vec![Interval::new(0, 1), Interval::new(s as i32, s as i32 + 1)];
        for i in 1..=s as i32 {
            for j in i + 1..=s as i32 {
                intervals.push(Interval::new(i, j));
            }
        }
        intervals.sort();
        intervals.dedup(); // s = 0 repeats [0,1]
        let index: BTreeMap<Interval, usize> =
            intervals.iter().enumerate().map(|(k, &iv)| (iv, k)).collect();
        assert!(intervals.len() <= 64);

        // [0,1] belongs to the ε-family iff ε_1 = 1; [s,s+1] iff ε_s = 0;
        // an inner [u,v] iff ε_u = 0 and ε_v = 1.
        let mut eps_members = Vec::with_capacity(1 << s);
        for eps in 0..(1u32 << s) {
            let bit = |t: i32| eps >> (t - 1) & 1 == 1;
            let mut mask = 0u64;
            for (k, iv) in intervals.iter().enumerate() {
                let (u, v) = iv.as_integer().expect("level intervals are integral");
                let member = if s == 0 {
                    true
                } else if u == 0 {
                    bit(1)
                } else if v == s as i32 + 1 {
                    !bit(s as i32)
                } else {
                    !bit(u) && bit(v)
                };
                if member {
                    mask |= 1 << k;
                }
            }
            eps_members.push(mask);
        }
        Ok(Level {
            s,
            intervals,
            index,
            eps_members,
        })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, iv: &Interval) -> bool {
        self.index.contains_key(iv)
    }

    pub fn id(&self, iv: &Interval) -> Option<usize> {
        self.index.get(iv).copied()
    }

    pub fn eps_families(&self) -> &[u64] {
        &self.eps_members
    }

    /// The forced subfamily `{[i,i+1] : 0 ≤ i ≤ s} ∪ {[1,3], [s−2,s]}`,
    /// defined for `s ≥ 3`. Any incompressible combination at level `s`
    /// carries all of it in its support.
    pub fn skeleton(&self) -> Result<Vec<Interval>> {
        skeleton(self.s)
    }

    /// Independence number of a combination supported in this level, computed
    /// by scanning the `2^s` maximal independent subfamilies.
    pub fn alpha(&self, gamma: &Combination<Interval>) -> Result<u32> {
        let mut mass = vec![0u32; self.intervals.len()];
        for (iv, k) in gamma.iter() {
            let id = self
                .id(iv)
                .ok_or(Error::SupportOutsideLevel { s: self.s })?;
            mass[id] = k;
        }
        Ok(self
            .eps_members
            .iter()
            .map(|&members| {
                (0..self.intervals.len())
                    .filter(|&k| members >> k & 1 == 1)
                    .map(|k| mass[k])
                    .sum()
            })
            .max()
            .unwrap_or(0))
    }
}

pub fn skeleton(s: u32) -> Result<Vec<Interval>> {
    if s < 3 {
        return Err(Error::LevelOutOfRange { s, min: 3, max: MAX_LEVEL });
    }
    let s = s as i32;
    let mut out: Vec<Interval> = (0..=s).map(|i| Interval::new(i, i + 1)).collect();
    out.push(Interval::new(1, 3));
    out.push(Interval::new(s - 2, s));
    out.sort();
    out.dedup(); // s = 3: [s-2,s] coincides with [1,3]
    Ok(out)
}
