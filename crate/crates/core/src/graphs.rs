//! Exact independence/clique numbers by branch and bound, on the small vertex
//! sets this engine deals with (at most a few dozen vertices).

use crate::combination::Combination;

/// Size of a maximum independent set of the graph given by `adj` on vertex
/// indices `0..n`.
pub fn max_independent_set(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> u32 {
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && adj(i, j)).collect())
        .collect();
    let mut best = 0u32;
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        i: usize,
        n: usize,
        rows: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        best: &mut u32,
    ) {
        if i == n {
            *best = (*best).max(chosen.len() as u32);
            return;
        }
        if (chosen.len() + (n - i)) as u32 <= *best {
            return;
        }
        if chosen.iter().all(|&c| !rows[i][c]) {
            chosen.push(i);
            rec(i + 1, n, rows, chosen, best);
            chosen.pop();
        }
        rec(i + 1, n, rows, chosen, best);
    }
    rec(0, n, &rows, &mut chosen, &mut best);
    best
}

/// Size of a maximum clique (complement of `max_independent_set`).
pub fn max_clique(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> u32 {
    max_independent_set(n, &|i, j| !adj(i, j))
}

/// A maximum clique itself, as vertex indices.
pub fn max_clique_witness(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> Vec<usize> {
    let rows: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && adj(i, j)).collect())
        .collect();
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(i: usize, n: usize, rows: &[Vec<bool>], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
        if i == n {
            if chosen.len() > best.len() {
                *best = chosen.clone();
            }
            return;
        }
        if chosen.len() + (n - i) <= best.len() {
            return;
        }
        if chosen.iter().all(|&c| rows[i][c]) {
            chosen.push(i);
            rec(i + 1, n, rows, chosen, best);
            chosen.pop();
        }
        rec(i + 1, n, rows, chosen, best);
    }
    rec(0, n, &rows, &mut chosen, &mut best);
    best
}

/// Independence number of a combination's blown-up graph, by brute force.
/// Copies of one vertex are pairwise non-adjacent, so every copy may join an
/// independent set together.
pub fn alpha_brute<V: Ord>(gamma: &Combination<V>, adjacent: impl Fn(&V, &V) -> bool) -> u32 {
    let verts = gamma.expand();
    max_independent_set(verts.len(), &|i, j| adjacent(verts[i], verts[j]))
}

/// Clique number of a combination. Duplicate copies are never adjacent, so
/// only the induced support subgraph matters.
pub fn omega<V: Ord>(gamma: &Combination<V>, adjacent: impl Fn(&V, &V) -> bool) -> u32 {
    let supp: Vec<&V> = gamma.support().collect();
    if supp.is_empty() {
        return 0;
    }
    max_clique(supp.len(), &|i, j| adjacent(supp[i], supp[j]))
}

/// True iff the blown-up graph has no independent triple (`α ≤ 2`), an
/// early-exit test used in the flat-quadruple stage.
pub fn alpha_at_most_2<V: Ord>(
    gamma: &Combination<V>,
    adjacent: impl Fn(&V, &V) -> bool,
) -> bool {
    let items: Vec<(&V, u32)> = gamma.iter().collect();
    let n = items.len();
    for (v, k) in &items {
        let _ = v;
        if *k >= 3 {
            return false;
        }
    }
    // non-adjacent pairs, counting a doubled vertex as a pair with itself
    let mut nonadj: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        if items[i].1 == 2 {
            nonadj.push((i, i));
        }
        for j in i + 1..n {
            if !adjacent(items[i].0, items[j].0) {
                nonadj.push((i, j));
            }
        }
    }
    for &(i, j) in &nonadj {
        for (z, item) in items.iter().enumerate() {
            if z == i || z == j {
                // third copy of a doubled vertex is impossible (k <= 2)
                continue;
            }
            if !adjacent(items[i].0, item.0) && !adjacent(items[j].0, item.0) {
                return false;
            }
        }
        if i == j {
            continue;
        }
        // a doubled endpoint of a non-adjacent pair already gives a triple
        if items[i].1 == 2 || items[j].1 == 2 {
            return false;
        }
    }
    true
}

/// True iff every pair in the blown-up graph is adjacent (`α = 1`): the
/// combination is a clique of distinct boxes.
pub fn alpha_is_1<V: Ord>(gamma: &Combination<V>, adjacent: impl Fn(&V, &V) -> bool) -> bool {
    let items: Vec<(&V, u32)> = gamma.iter().collect();
    if items.iter().any(|(_, k)| *k > 1) {
        return false;
    }
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if !adjacent(items[i].0, items[j].0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;

    fn iv(a: i32, b: i32) -> Interval {
        Interval::new(a, b)
    }

    #[test]
    fn independent_set_on_path() {
        // path of 5 unit intervals: alternate picks
        let verts: Vec<Interval> = (0..5).map(|i| iv(i, i + 1)).collect();
        let a = max_independent_set(5, &|i, j| verts[i].adjacent(&verts[j]));
        assert_eq!(a, 3);
        assert_eq!(max_clique(5, &|i, j| verts[i].adjacent(&verts[j])), 2);
    }

    #[test]
    fn alpha2_matches_brute_on_samples() {
        use crate::combination::Combination;
        let combos: Vec<Combination<Interval>> = vec![
            [(iv(0, 1), 2), (iv(1, 2), 1)].into_iter().collect(),
            [(iv(0, 1), 2), (iv(2, 3), 1)].into_iter().collect(),
            [(iv(0, 1), 1), (iv(1, 2), 1), (iv(2, 3), 1)].into_iter().collect(),
            [(iv(0, 1), 3)].into_iter().collect(),
        ];
        for c in &combos {
            let brute = alpha_brute(c, |a, b| a.adjacent(b));
            assert_eq!(
                alpha_at_most_2(c, |a, b| a.adjacent(b)),
                brute <= 2,
                "combination {c}"
            );
            assert_eq!(alpha_is_1(c, |a, b| a.adjacent(b)), brute == 1);
        }
    }
}
