//! Exhaustive enumeration of small hypermaps and of the rings on them.
//!
//! Under the hypermap invariant every dart has at most one open link out
//! and one in per dimension, and no observer depends on the order in which
//! links were made. A map is therefore determined, up to observational
//! equality, by its dart set and one set of disjoint paths per dimension.
//! Enumerating those structures on darts `1..=n` covers every hypermap on
//! `n` darts up to relabeling.

use crate::fmap::FreeMap;
use crate::index::HypermapIndex;
use crate::orbits::{same_face, same_orbit, OrbitKind};
use crate::rings::{is_ring, RingItem, RingList};
use crate::view::HypermapView;
use crate::{Dart, Dim};

use super::{first_break_keeps_connected, jordan_check_indexed, tail_stays_ring, Verdict, Witness};

/// All successor functions on `0..n` that are injective and acyclic, i.e.
/// every way to arrange `n` points into disjoint directed paths.
pub fn link_structures(n: usize) -> Vec<Vec<Option<usize>>> {
    fn go(
        x: usize,
        n: usize,
        succ: &mut Vec<Option<usize>>,
        has_pred: &mut Vec<bool>,
        out: &mut Vec<Vec<Option<usize>>>,
    ) {
        if x == n {
            out.push(succ.clone());
            return;
        }
        go(x + 1, n, succ, has_pred, out);
        for y in 0..n {
            if y == x || has_pred[y] {
                continue;
            }
            // Reject y whose forward path already reaches x.
            let mut cur = Some(y);
            let mut cycle = false;
            while let Some(c) = cur {
                if c == x {
                    cycle = true;
                    break;
                }
                cur = succ[c];
            }
            if cycle {
                continue;
            }
            succ[x] = Some(y);
            has_pred[y] = true;
            go(x + 1, n, succ, has_pred, out);
            has_pred[y] = false;
            succ[x] = None;
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![None; n], &mut vec![false; n], &mut out);
    out
}

fn build_map(n: usize, zero: &[Option<usize>], one: &[Option<usize>]) -> FreeMap {
    let mut m = FreeMap::new();
    for d in 1..=n as u32 {
        m = m.raw_insert(Dart(d));
    }
    for (k, succ) in [(Dim::Zero, zero), (Dim::One, one)] {
        for (x, y) in succ.iter().enumerate() {
            if let Some(y) = y {
                m = m.raw_link(k, Dart(x as u32 + 1), Dart(*y as u32 + 1));
            }
        }
    }
    m
}

/// Every hypermap on darts `1..=n` for `n <= max_darts`, one term per link
/// structure, `V` first.
pub fn small_maps(max_darts: usize) -> impl Iterator<Item = FreeMap> {
    (0..=max_darts).flat_map(|n| {
        let structures = link_structures(n);
        let pairs: Vec<(usize, usize)> = (0..structures.len())
            .flat_map(|i| (0..structures.len()).map(move |j| (i, j)))
            .collect();
        pairs
            .into_iter()
            .map(move |(i, j)| build_map(n, &structures[i], &structures[j]))
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExhaustiveReport {
    pub maps: u64,
    pub planar_maps: u64,
    pub rings: u64,
    /// `rings_by_len[i]` counts rings with `i + 1` items.
    pub rings_by_len: Vec<u64>,
    pub failures: Vec<Witness>,
}

/// Lists of length `1..=max_len` over the candidate items of `idx` whose
/// prefixes keep distinct edges, adjacent consecutive faces and distinct
/// faces; only these can be rings.
fn candidate_rings(idx: &HypermapIndex, max_len: usize) -> Vec<RingList> {
    let items: Vec<RingItem> = idx
        .darts()
        .iter()
        .filter(|&&x| idx.succ(Dim::Zero, x))
        .flat_map(|&x| [RingItem { dart: x, flag: true }, RingItem { dart: x, flag: false }])
        .collect();
    let rep = |it: RingItem| {
        if it.flag {
            idx.link_next(Dim::Zero, it.dart)
        } else {
            idx.bottom(Dim::Zero, it.dart)
        }
    };
    let mut out = Vec::new();
    let mut stack: Vec<Vec<RingItem>> = items.iter().map(|&it| vec![it]).collect();
    while let Some(prefix) = stack.pop() {
        if prefix.len() < max_len {
            let last = *prefix.last().expect("non-empty prefix");
            for &it in &items {
                let fresh = prefix
                    .iter()
                    .all(|p| !same_orbit(idx, OrbitKind::Edge, p.dart, it.dart) && !same_face(idx, rep(*p), rep(it)));
                if fresh && crate::rings::adjacent_faces(idx, last, it).unwrap_or(false) {
                    let mut next = prefix.clone();
                    next.push(it);
                    stack.push(next);
                }
            }
        }
        out.push(RingList::from(prefix));
    }
    out
}

/// Checks the Jordan property, the first-break lemma and tail preservation
/// on every ring of length at most `max_ring_len` of every planar map with at
/// most `max_darts` darts.
pub fn exhaustive_jordan(max_darts: usize, max_ring_len: usize) -> ExhaustiveReport {
    let mut report = ExhaustiveReport {
        rings_by_len: vec![0; max_ring_len],
        ..Default::default()
    };
    for (i, m) in small_maps(max_darts).enumerate() {
        report.maps += 1;
        let idx = HypermapIndex::build(&m).expect("enumerated maps are hypermaps");
        if !idx.stats().planar {
            continue;
        }
        report.planar_maps += 1;
        for ring in candidate_rings(&idx, max_ring_len) {
            if !is_ring(&idx, &ring) {
                continue;
            }
            report.rings += 1;
            report.rings_by_len[ring.len() - 1] += 1;
            let mut reasons = Vec::new();
            match jordan_check_indexed(&m, &idx, &ring) {
                Ok(o) if o.verdict == Verdict::Pass => {}
                Ok(o) => reasons.push(format!("jordan: {o}")),
                Err(e) => reasons.push(format!("jordan: {e}")),
            }
            if !matches!(first_break_keeps_connected(&m, &idx, &ring), Ok(None | Some(true))) {
                reasons.push("first break lemma".into());
            }
            if ring.len() >= 2 && !matches!(tail_stays_ring(&m, &ring), Ok(true)) {
                reasons.push("tail is not a ring after the first break".into());
            }
            if !reasons.is_empty() {
                report.failures.push(Witness {
                    trial: i as u64,
                    map: m.clone(),
                    ring,
                    reason: reasons.join("; "),
                });
            }
        }
    }
    report
}
