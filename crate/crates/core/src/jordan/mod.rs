//! The discrete Jordan curve check and the machinery to exercise it at
//! scale: a planarity-preserving generator, a ring search, a parallel fuzzer
//! and an exhaustive small-map mode.

mod exhaustive;
mod fuzz;
mod generate;
mod search;

pub use exhaustive::{exhaustive_jordan, link_structures, small_maps, ExhaustiveReport};
pub use fuzz::{fuzz_jordan, FuzzConfig, FuzzReport, TrialOutcome, Witness};
pub use generate::{gen_planar, gen_planar_with, MoveWeights};
pub use search::find_ring;

use std::fmt;

use crate::characteristics::counts;
use crate::error::{HmapError, Result};
use crate::fmap::FreeMap;
use crate::format::{serialize_map, serialize_ring};
use crate::index::HypermapIndex;
use crate::orbits::{same_component, same_face};
use crate::rings::{break_along, pre_ring0, pre_ring1, pre_ring2, pre_ring3, ring_check, RingList};
use crate::view::HypermapView;
use crate::Dim;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanOutcome {
    pub nc_before: u64,
    pub nc_after: u64,
    /// `nc_after - nc_before`.
    pub delta: i64,
    pub verdict: Verdict,
    /// Serialized map and ring, present on failure.
    pub witness: Option<(String, String)>,
}

impl fmt::Display for JordanOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nc_before={} nc_after={} verdict={}",
            self.nc_before, self.nc_after, self.verdict
        )
    }
}

/// Breaks a planar map along a ring and compares component counts. The
/// break must add exactly one component.
pub fn jordan_check(m: &FreeMap, l: &RingList) -> Result<JordanOutcome> {
    let idx = HypermapIndex::build(m)?;
    jordan_check_indexed(m, &idx, l)
}

pub(crate) fn jordan_check_indexed(m: &FreeMap, idx: &HypermapIndex, l: &RingList) -> Result<JordanOutcome> {
    let stats = idx.stats();
    if !stats.planar {
        return Err(HmapError::NotPlanar(stats.genus));
    }
    let diag = ring_check(idx, l);
    if !diag.is_ring() {
        return Err(HmapError::NotRing(diag.to_string()));
    }
    let broken = break_along(m, l)?;
    let nc_after = counts(&broken)?.nc;
    let delta = nc_after as i64 - stats.nc as i64;
    let verdict = if delta == 1 { Verdict::Pass } else { Verdict::Fail };
    Ok(JordanOutcome {
        nc_before: stats.nc,
        nc_after,
        delta,
        verdict,
        witness: (verdict == Verdict::Fail).then(|| (serialize_map(m), serialize_ring(l))),
    })
}

/// For a ring of two or more items on a planar map, the two sides `y` and
/// `x0` of the first double-link lie in different faces, and breaking that
/// link keeps `x` and `y` connected. `None` for shorter lists.
pub fn first_break_keeps_connected(m: &FreeMap, idx: &HypermapIndex, l: &RingList) -> Result<Option<bool>> {
    if l.len() < 2 {
        return Ok(None);
    }
    let x = l.first().expect("non-empty").dart;
    let y = idx.link_next(Dim::Zero, x);
    if y.is_nil() {
        return Err(HmapError::NoSuccessor(x, Dim::Zero));
    }
    let x0 = idx.bottom(Dim::Zero, x);
    let distinct_faces = !same_face(idx, y, x0);
    let broken = HypermapIndex::build(&m.unlink(Dim::Zero, x))?;
    let still_connected = same_component(&broken, x, y) && broken.stats().nc == idx.stats().nc;
    Ok(Some(distinct_faces && still_connected))
}

/// After breaking the first item's link, the tail of the ring satisfies all
/// four ring conditions in the broken map.
pub fn tail_stays_ring(m: &FreeMap, l: &RingList) -> Result<bool> {
    let Some(first) = l.first() else {
        return Ok(true);
    };
    let m1 = m.unlink(Dim::Zero, first.dart);
    let idx1 = HypermapIndex::build(&m1)?;
    let tail = l.tail();
    Ok(pre_ring0(&idx1, &tail) && pre_ring1(&idx1, &tail) && pre_ring2(&idx1, &tail) && pre_ring3(&idx1, &tail))
}
