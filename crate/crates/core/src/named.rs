//! The distinguished axis profiles and decomposition data the search
//! pipeline singles out, as ordinary constants.

use crate::combination::Combination;
use crate::interval::Interval;

fn combo(items: &[(i32, i32, u32)]) -> Combination<Interval> {
    items
        .iter()
        .map(|&(a, b, k)| (Interval::new(a, b), k))
        .collect()
}

/// The level-4 profile shared by all three axes of the club-type cliques.
/// Invariant under every level-4 automorphism.
pub fn lambda_club() -> Combination<Interval> {
    combo(&[
        (0, 1, 2),
        (1, 2, 2),
        (1, 3, 1),
        (1, 4, 1),
        (2, 3, 1),
        (2, 4, 1),
        (3, 4, 2),
        (4, 5, 2),
    ])
}

/// The level-5 profile of the spade-type cliques.
pub fn lambda_spade() -> Combination<Interval> {
    combo(&[
        (0, 1, 1),
        (1, 2, 1),
        (1, 3, 2),
        (2, 3, 2),
        (3, 4, 2),
        (3, 5, 2),
        (4, 5, 1),
        (5, 6, 1),
    ])
}

/// The level-7 profile that appears in flat quadruples but admits no clique.
pub fn lambda_diamond() -> Combination<Interval> {
    combo(&[
        (0, 1, 1),
        (1, 2, 1),
        (1, 3, 1),
        (2, 3, 1),
        (3, 4, 1),
        (3, 5, 2),
        (4, 5, 1),
        (5, 6, 1),
        (5, 7, 1),
        (6, 7, 1),
        (7, 8, 1),
    ])
}

/// The exceptional type-II profile attaining the edge bound with equality.
pub fn lambda_star() -> Combination<Interval> {
    combo(&[
        (0, 1, 1),
        (1, 2, 1),
        (1, 3, 1),
        (1, 5, 1),
        (2, 3, 1),
        (2, 5, 1),
        (3, 4, 1),
        (3, 5, 2),
        (4, 5, 1),
        (5, 6, 2),
    ])
}

/// The unique mass-14 profile (level 9): all units plus the odd ladder.
pub fn lambda_bar() -> Combination<Interval> {
    let mut c: Combination<Interval> = (0..10).map(|i| (Interval::new(i, i + 1), 1)).collect();
    for (a, b) in [(1, 3), (3, 5), (5, 7), (7, 9)] {
        c.add(Interval::new(a, b), 1);
    }
    c
}

/// Mass-5 independent decomposition pieces `(β1, β2, β3)` with
/// `β1 + β2 + β3 = λ`, used to lift flat quadruples to 3-D.
pub fn beta_club() -> [Combination<Interval>; 3] {
    [
        combo(&[(0, 1, 2), (2, 4, 1), (3, 4, 2)]),
        combo(&[(1, 2, 2), (1, 3, 1), (4, 5, 2)]),
        combo(&[(1, 4, 1), (2, 3, 1)]),
    ]
}

pub fn beta_spade() -> [Combination<Interval>; 3] {
    [
        combo(&[(0, 1, 1), (3, 4, 2), (3, 5, 2)]),
        combo(&[(1, 3, 2), (2, 3, 2), (5, 6, 1)]),
        combo(&[(1, 2, 1), (4, 5, 1)]),
    ]
}
