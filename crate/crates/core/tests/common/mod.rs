#![allow(dead_code)]

pub mod oracle;

use rand::seq::SliceRandom;
use rand::Rng;

use hypermap::{Dart, Dim, FreeMap, HypermapIndex, HypermapView};

/// A random hypermap (any genus) with up to `max_darts` darts. Inserts and
/// links are interleaved and dart ids are sparse, so the term shape is
/// varied. Every link satisfies the link precondition when made.
pub fn random_hypermap<R: Rng>(rng: &mut R, max_darts: u32) -> FreeMap {
    let n = rng.gen_range(0..=max_darts);
    let mut ids: Vec<u32> = (1..=3 * n.max(1)).collect();
    ids.shuffle(rng);
    ids.truncate(n as usize);
    let mut m = FreeMap::new();
    let mut pending = ids.into_iter();
    let mut inserted: Vec<Dart> = Vec::new();
    let target_links = rng.gen_range(0..=2 * n as usize);
    let mut links = 0;
    loop {
        let can_insert = pending.len() > 0;
        if !can_insert && links >= target_links {
            break;
        }
        if can_insert && (inserted.len() < 2 || rng.gen_bool(0.5) || links >= target_links) {
            let d = Dart(pending.next().unwrap());
            m = m.raw_insert(d);
            inserted.push(d);
            continue;
        }
        let mut placed = false;
        for _ in 0..8 {
            let k = if rng.gen_bool(0.5) { Dim::Zero } else { Dim::One };
            let x = *inserted.choose(rng).unwrap();
            let y = *inserted.choose(rng).unwrap();
            if m.can_link(k, x, y) {
                m = m.raw_link(k, x, y);
                placed = true;
                break;
            }
        }
        links += 1;
        if !placed && !can_insert && links >= target_links {
            break;
        }
    }
    m
}

/// All `(x, y)` satisfying the dimension-`k` link precondition.
pub fn linkable_pairs(idx: &HypermapIndex, k: Dim) -> Vec<(Dart, Dart)> {
    let mut out = Vec::new();
    for &x in idx.darts() {
        if idx.succ(k, x) {
            continue;
        }
        for &y in idx.darts() {
            if !idx.pred(k, y) && idx.closed_next(k, x) != y {
                out.push((x, y));
            }
        }
    }
    out
}
