//! Finite formal sums of vertices (multisets with positive multiplicities).
//!
//! A combination `γ = Σ k_x · x` over some vertex universe induces a blown-up
//! graph: `k_x` pairwise non-adjacent copies of each vertex `x`, with copies
//! of `x` and `y` joined whenever `{x, y}` is an edge of the underlying graph.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize)]
#[serde(from = "Vec<(V, u32)>")]
pub struct Combination<V: Ord> {
    mult: BTreeMap<V, u32>,
}

impl<V: Ord> Default for Combination<V> {
    fn default() -> Self {
        Combination {
            mult: BTreeMap::new(),
        }
    }
}

impl<V: Ord> Combination<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(v: V) -> Self {
        let mut c = Self::new();
        c.add(v, 1);
        c
    }

    /// Add `k` copies of `v`.
    pub fn add(&mut self, v: V, k: u32) {
        if k > 0 {
            *self.mult.entry(v).or_insert(0) += k;
        }
    }

    pub fn mult(&self, v: &V) -> u32 {
        self.mult.get(v).copied().unwrap_or(0)
    }

    /// Total mass `|γ| = Σ k_x`.
    pub fn total(&self) -> u32 {
        self.mult.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &V> {
        self.mult.keys()
    }

    pub fn support_len(&self) -> usize {
        self.mult.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, u32)> {
        self.mult.iter().map(|(v, &k)| (v, k))
    }

    /// `self ≤ other` in the coordinatewise order (subcombination).
    pub fn le(&self, other: &Combination<V>) -> bool {
        self.mult.iter().all(|(v, &k)| other.mult(v) >= k)
    }

    /// `self − other`, defined only when `other ≤ self`.
    pub fn checked_sub(&self, other: &Combination<V>) -> Option<Combination<V>>
    where
        V: Clone,
    {
        if !other.le(self) {
            return None;
        }
        let mut out = Combination::new();
        for (v, &k) in &self.mult {
            let rest = k - other.mult(v);
            if rest > 0 {
                out.add(v.clone(), rest);
            }
        }
        Some(out)
    }

    /// Induced subcombination: keep full multiplicities on the selected
    /// support, drop everything else.
    pub fn induced(&self, keep: impl Fn(&V) -> bool) -> Combination<V>
    where
        V: Clone,
    {
        let mut out = Combination::new();
        for (v, &k) in &self.mult {
            if keep(v) {
                out.add(v.clone(), k);
            }
        }
        out
    }

    /// Pushforward along a vertex map: `f_*(γ) = Σ k_x · f(x)`.
    pub fn push_forward<W: Ord>(&self, f: impl Fn(&V) -> W) -> Combination<W> {
        let mut out = Combination::new();
        for (v, &k) in &self.mult {
            out.add(f(v), k);
        }
        out
    }

    /// The blown-up vertex list: each vertex repeated by its multiplicity.
    pub fn expand(&self) -> Vec<&V> {
        let mut out = Vec::with_capacity(self.total() as usize);
        for (v, &k) in &self.mult {
            for _ in 0..k {
                out.push(v);
            }
        }
        out
    }
}

impl<V: Ord + Clone> Combination<V> {
    pub fn sum(&self, other: &Combination<V>) -> Combination<V> {
        let mut out = self.clone();
        for (v, &k) in &other.mult {
            out.add(v.clone(), k);
        }
        out
    }
}

impl<V: Ord> FromIterator<(V, u32)> for Combination<V> {
    fn from_iter<I: IntoIterator<Item = (V, u32)>>(iter: I) -> Self {
        let mut c = Combination::new();
        for (v, k) in iter {
            c.add(v, k);
        }
        c
    }
}

impl<V: Ord> From<Vec<(V, u32)>> for Combination<V> {
    fn from(items: Vec<(V, u32)>) -> Self {
        items.into_iter().collect()
    }
}

/// Canonical form: sorted `(vertex, count)` pairs.
impl<V: Ord + Serialize> Serialize for Combination<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.mult.len()))?;
        for (v, k) in &self.mult {
            seq.serialize_element(&(v, k))?;
        }
        seq.end()
    }
}

impl<V: Ord + fmt::Display> fmt::Display for Combination<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return write!(f, "0");
        }
        for (i, (v, k)) in self.mult.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *k > 1 {
                write!(f, "{k}·")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl<V: Ord + fmt::Display> fmt::Debug for Combination<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Vertex and edge counts of the blown-up graph: `|V| = Σ k_x` and
/// `|E| = Σ_{{x,y} edge} k_x k_y` (copies of one vertex are never adjacent).
pub fn graph_counts<V: Ord>(
    gamma: &Combination<V>,
    adjacent: impl Fn(&V, &V) -> bool,
) -> (u64, u64) {
    let items: Vec<(&V, u32)> = gamma.iter().collect();
    let vertices = gamma.total() as u64;
    let mut edges = 0u64;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if adjacent(items[i].0, items[j].0) {
                edges += items[i].1 as u64 * items[j].1 as u64;
            }
        }
    }
    (vertices, edges)
}
