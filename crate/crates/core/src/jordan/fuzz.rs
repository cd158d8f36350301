use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    find_ring, first_break_keeps_connected, gen_planar_with, jordan_check_indexed, tail_stays_ring, MoveWeights,
    Verdict,
};
use crate::fmap::FreeMap;
use crate::format::{serialize_map, serialize_ring};
use crate::index::HypermapIndex;
use crate::rings::RingList;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    /// Largest number of darts in a generated map.
    pub size_bound: u32,
    /// Longest ring the search may return.
    pub max_ring_len: usize,
}

impl FuzzConfig {
    pub fn new(trials: u64, seed: u64, size_bound: u32) -> Self {
        FuzzConfig {
            trials,
            seed,
            size_bound,
            max_ring_len: 8,
        }
    }
}

/// A failing (map, ring) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub trial: u64,
    pub map: FreeMap,
    pub ring: RingList,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    pub trial: u64,
    pub n_darts: u32,
    pub ring_len: Option<usize>,
    pub jordan_ok: Option<bool>,
    /// First-break lemma; only checked for rings of two or more items.
    pub connect_ok: Option<bool>,
    pub tail_ok: Option<bool>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials: u64,
    pub rings_found: u64,
    /// `ring_lengths[i]` counts rings with `i + 1` items.
    pub ring_lengths: Vec<u64>,
    pub jordan_failures: u64,
    pub connect_checked: u64,
    pub connect_failures: u64,
    pub tail_checked: u64,
    pub tail_failures: u64,
    /// Trials that failed before a ring search (generator or index errors).
    pub errors: u64,
    pub witnesses: Vec<Witness>,
}

impl FuzzReport {
    pub fn failures(&self) -> u64 {
        self.jordan_failures + self.connect_failures + self.tail_failures + self.errors
    }

    pub fn summary(&self) -> String {
        format!(
            "trials={} rings={} ring_lengths={:?} jordan_failures={} connect_checked={} connect_failures={} tail_checked={} tail_failures={} errors={}",
            self.trials,
            self.rings_found,
            self.ring_lengths,
            self.jordan_failures,
            self.connect_checked,
            self.connect_failures,
            self.tail_checked,
            self.tail_failures,
            self.errors
        )
    }

    /// Writes each witness as `trial-<n>.hmap` and `trial-<n>.ring`.
    pub fn write_witnesses(&self, dir: &Path) -> io::Result<Vec<PathBuf>> {
        if self.witnesses.is_empty() {
            return Ok(Vec::new());
        }
        fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        for w in &self.witnesses {
            let map_path = dir.join(format!("trial-{}.hmap", w.trial));
            let ring_path = dir.join(format!("trial-{}.ring", w.trial));
            fs::write(&map_path, format!("# {}\n{}", w.reason, serialize_map(&w.map)))?;
            fs::write(&ring_path, serialize_ring(&w.ring))?;
            written.push(map_path);
            written.push(ring_path);
        }
        Ok(written)
    }
}

/// Seed of one trial, a pure function of the run seed and trial number.
fn trial_seed(seed: u64, trial: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn run_trial(cfg: &FuzzConfig, trial: u64) -> TrialOutcome {
    let seed = trial_seed(cfg.seed, trial);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_darts = if cfg.size_bound == 0 {
        0
    } else {
        rng.gen_range(1..=cfg.size_bound)
    };
    let n_links = if n_darts == 0 {
        0
    } else {
        rng.gen_range(n_darts / 2..=2 * n_darts)
    };
    // Half the maps keep edges to two darts, which yields longer rings.
    let weights = MoveWeights {
        short_edges: rng.gen_bool(0.5),
        ..MoveWeights::default()
    };
    let mut out = TrialOutcome {
        trial,
        n_darts,
        ring_len: None,
        jordan_ok: None,
        connect_ok: None,
        tail_ok: None,
        witness: None,
    };
    let witness = |m: &FreeMap, ring: &RingList, reason: String| Witness {
        trial,
        map: m.clone(),
        ring: ring.clone(),
        reason,
    };
    let m = match gen_planar_with(seed, n_darts, n_links, weights) {
        Ok(m) => m,
        Err(e) => {
            out.witness = Some(witness(&FreeMap::new(), &RingList::new(), format!("generator: {e}")));
            return out;
        }
    };
    let idx = match HypermapIndex::build(&m) {
        Ok(idx) => idx,
        Err(e) => {
            out.witness = Some(witness(&m, &RingList::new(), format!("generated map invalid: {e}")));
            return out;
        }
    };
    let Some(ring) = find_ring(&idx, cfg.max_ring_len, seed) else {
        return out;
    };
    out.ring_len = Some(ring.len());
    let mut reasons = Vec::new();

    match jordan_check_indexed(&m, &idx, &ring) {
        Ok(o) => {
            out.jordan_ok = Some(o.verdict == Verdict::Pass);
            if o.verdict == Verdict::Fail {
                reasons.push(format!("jordan: {o}"));
            }
        }
        Err(e) => {
            out.jordan_ok = Some(false);
            reasons.push(format!("jordan: {e}"));
        }
    }
    match first_break_keeps_connected(&m, &idx, &ring) {
        Ok(v) => {
            out.connect_ok = v;
            if v == Some(false) {
                reasons.push("first break disconnects or sides share a face".into());
            }
        }
        Err(e) => {
            out.connect_ok = Some(false);
            reasons.push(format!("first break: {e}"));
        }
    }
    if ring.len() >= 2 {
        match tail_stays_ring(&m, &ring) {
            Ok(v) => {
                out.tail_ok = Some(v);
                if !v {
                    reasons.push("tail is not a ring after the first break".into());
                }
            }
            Err(e) => {
                out.tail_ok = Some(false);
                reasons.push(format!("tail: {e}"));
            }
        }
    }
    if !reasons.is_empty() {
        out.witness = Some(witness(&m, &ring, reasons.join("; ")));
    }
    out
}

/// Runs independent trials in parallel and aggregates them in trial order,
/// so the report depends only on the configuration.
pub fn fuzz_jordan(cfg: &FuzzConfig) -> FuzzReport {
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials).into_par_iter().map(|t| run_trial(cfg, t)).collect();
    let mut report = FuzzReport {
        trials: cfg.trials,
        ring_lengths: vec![0; cfg.max_ring_len],
        ..FuzzReport::default()
    };
    for o in outcomes {
        if let Some(len) = o.ring_len {
            report.rings_found += 1;
            report.ring_lengths[len - 1] += 1;
        }
        if o.jordan_ok == Some(false) {
            report.jordan_failures += 1;
        }
        if let Some(ok) = o.connect_ok {
            report.connect_checked += 1;
            report.connect_failures += u64::from(!ok);
        }
        if let Some(ok) = o.tail_ok {
            report.tail_checked += 1;
            report.tail_failures += u64::from(!ok);
        }
        if o.ring_len.is_none() && o.witness.is_some() {
            report.errors += 1;
        }
        if let Some(w) = o.witness {
            report.witnesses.push(w);
        }
    }
    report
}
