use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criteria::link_keeps_planar;
use crate::error::{HmapError, Result};
use crate::fmap::FreeMap;
use crate::index::HypermapIndex;
use crate::orbits::same_component;
use crate::view::HypermapView;
use crate::{Dart, Dim};

/// Relative frequencies of the three link moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveWeights {
    /// Dimension-zero link between two components.
    pub cross_component: u32,
    /// Dimension-zero link splitting a face.
    pub intra_face: u32,
    /// Either move at dimension one.
    pub dim_one: u32,
    /// Restrict dimension-zero links to pairs of unlinked darts, so every
    /// edge has at most two darts as in an ordinary map. Short edges give
    /// longer cycles of distinct faces.
    pub short_edges: bool,
}

impl Default for MoveWeights {
    fn default() -> Self {
        MoveWeights {
            cross_component: 1,
            intra_face: 2,
            dim_one: 2,
            short_edges: false,
        }
    }
}

/// Deterministic random planar map on darts `1..=n_darts` with up to
/// `n_links` links. See [`gen_planar_with`].
pub fn gen_planar(seed: u64, n_darts: u32, n_links: u32) -> Result<FreeMap> {
    gen_planar_with(seed, n_darts, n_links, MoveWeights::default())
}

/// Inserts the darts, then draws link candidates that satisfy the link
/// precondition and keeps only those the planarity criterion accepts.
/// Attempts are bounded, so fewer than `n_links` links may be placed.
pub fn gen_planar_with(seed: u64, n_darts: u32, n_links: u32, weights: MoveWeights) -> Result<FreeMap> {
    if n_links as u64 > 2 * n_darts as u64 {
        return Err(HmapError::InvalidParameters(format!(
            "{n_links} links requested on {n_darts} darts (at most {})",
            2 * n_darts as u64
        )));
    }
    let total = weights.cross_component as u64 + weights.intra_face as u64 + weights.dim_one as u64;
    if total == 0 {
        return Err(HmapError::InvalidParameters("all move weights are zero".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = FreeMap::new();
    for d in 1..=n_darts {
        m = m.raw_insert(Dart(d));
    }
    let mut idx = HypermapIndex::build(&m)?;
    let mut placed = 0;
    let max_attempts = 20 * n_links as usize + 50;
    for _ in 0..max_attempts {
        if placed == n_links {
            break;
        }
        let r = rng.gen_range(0..total);
        let (k, cross) = if r < weights.cross_component as u64 {
            (Dim::Zero, true)
        } else if r < (weights.cross_component + weights.intra_face) as u64 {
            (Dim::Zero, false)
        } else {
            (Dim::One, rng.gen_bool(0.3))
        };
        let short = weights.short_edges && k == Dim::Zero;
        let Some((x, y)) = pick_candidate(&idx, &mut rng, k, cross, short) else {
            continue;
        };
        if !idx.has_dart(x) || !can_link(&idx, k, x, y) || !link_keeps_planar(&idx, k, x, y) {
            continue;
        }
        m = m.raw_link(k, x, y);
        idx = HypermapIndex::build(&m)?;
        placed += 1;
    }
    Ok(m)
}

fn can_link(idx: &HypermapIndex, k: Dim, x: Dart, y: Dart) -> bool {
    idx.has_dart(x) && idx.has_dart(y) && !idx.succ(k, x) && !idx.pred(k, y) && idx.closed_next(k, x) != y
}

/// Whether `z` is alone in its dimension-`k` orbit.
fn unlinked(idx: &HypermapIndex, k: Dim, z: Dart) -> bool {
    !idx.succ(k, z) && !idx.pred(k, z)
}

fn pick_candidate(idx: &HypermapIndex, rng: &mut ChaCha8Rng, k: Dim, cross: bool, short: bool) -> Option<(Dart, Dart)> {
    let tops: Vec<Dart> = idx
        .darts()
        .iter()
        .copied()
        .filter(|&d| if short { unlinked(idx, k, d) } else { !idx.succ(k, d) })
        .collect();
    let x = *tops.choose(rng)?;
    let x_bottom = idx.bottom(k, x);
    let candidates: Vec<Dart> = if cross {
        idx.darts()
            .iter()
            .copied()
            .filter(|&y| !idx.pred(k, y) && !same_component(idx, x, y) && (!short || unlinked(idx, k, y)))
            .collect()
    } else {
        // Walk the face that the link would split and collect eligible
        // targets: for dimension zero, bottoms `y` in the face of
        // `cA_1 one x`; for dimension one, bottoms `y` whose `cA zero y`
        // lies in the face of `x`.
        let anchor = match k {
            Dim::Zero => idx.closed_prev(Dim::One, x),
            Dim::One => x,
        };
        let mut out = Vec::new();
        let mut w = anchor;
        loop {
            let y = match k {
                Dim::Zero => w,
                Dim::One => idx.closed_prev(Dim::Zero, w),
            };
            if !idx.pred(k, y) && y != x_bottom && (!short || unlinked(idx, k, y)) {
                out.push(y);
            }
            w = idx.face_next(w);
            if w == anchor {
                break;
            }
        }
        out
    };
    let y = *candidates.choose(rng)?;
    Some((x, y))
}
