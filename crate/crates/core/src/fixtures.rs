//! Small named maps used by tests, examples and the CLI docs.

use crate::{Dart, Dim, FreeMap, RingItem, RingList};

fn map(n: u32, links: &[(Dim, u32, u32)]) -> FreeMap {
    let mut m = FreeMap::new();
    for d in 1..=n {
        m = m.raw_insert(Dart(d));
    }
    for &(k, x, y) in links {
        m = m.raw_link(k, Dart(x), Dart(y));
    }
    m
}

use Dim::{One, Zero};

/// Two darts and one 0-link `1 -> 2`.
pub fn m2() -> FreeMap {
    map(2, &[(Zero, 1, 2)])
}

/// Two digon faces `{1,3}` and `{2,4}`: vertices `2 -> 3`, `4 -> 1`; edges
/// `1 -> 2`, `3 -> 4`. Planar and connected.
pub fn digon() -> FreeMap {
    map(4, &[(One, 2, 3), (One, 4, 1), (Zero, 1, 2), (Zero, 3, 4)])
}

/// [`digon`] without its last 0-link.
pub fn digon_minus_last_link() -> FreeMap {
    map(4, &[(One, 2, 3), (One, 4, 1), (Zero, 1, 2)])
}

/// One vertex `1 -> 2 -> 3 -> 4` and two crossing edges `{1,3}`, `{2,4}`:
/// a single face on a torus.
pub fn k4t() -> FreeMap {
    map(4, &[(One, 1, 2), (One, 2, 3), (One, 3, 4), (Zero, 1, 3), (Zero, 2, 4)])
}

/// [`k4t`] without its last 0-link.
pub fn k4t_minus_last_link() -> FreeMap {
    map(4, &[(One, 1, 2), (One, 2, 3), (One, 3, 4), (Zero, 1, 3)])
}

/// A 15-dart map with three components and genus one: a torus component
/// on darts 1..=7, 9, 11, 12 with the 9-dart face
/// `1 5 2 11 12 7 6 4 9`, a two-dart sphere `{8, 10}`, and a three-dart
/// sphere `{13, 14, 15}`.
pub fn fix1() -> FreeMap {
    map(
        15,
        &[
            (Zero, 4, 3),
            (Zero, 3, 5),
            (Zero, 1, 6),
            (Zero, 2, 9),
            (Zero, 9, 7),
            (Zero, 11, 12),
            (Zero, 13, 15),
            (Zero, 15, 14),
            (One, 4, 1),
            (One, 1, 2),
            (One, 2, 3),
            (One, 5, 6),
            (One, 6, 9),
            (One, 7, 11),
            (One, 8, 10),
            (One, 13, 14),
            (One, 14, 15),
        ],
    )
}

/// The two-face ring `[(1, t), (3, f)]` on [`digon`].
pub fn digon_ring() -> RingList {
    RingList::from(vec![RingItem::new(1, true), RingItem::new(3, false)])
}

/// The singleton ring `[(1, t)]` on [`m2`].
pub fn m2_ring() -> RingList {
    RingList::from(vec![RingItem::new(1, true)])
}
