//! Cell counts, Euler characteristic, genus and planarity.

use std::collections::HashMap;
use std::fmt;

use crate::error::{HmapError, Result};
use crate::fmap::{FreeMap, Op};
use crate::format::serialize_map;
use crate::index::HypermapIndex;
use crate::unionfind::UnionFind;
use crate::Dim;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MapStats {
    pub nd: u64,
    pub ne: u64,
    pub nv: u64,
    pub nf: u64,
    pub nc: u64,
    /// `nv + ne + nf - nd`.
    pub ec: i64,
    /// `nc - ec / 2`.
    pub genus: i64,
    pub planar: bool,
}

impl MapStats {
    /// Derives `ec`, `genus` and `planar`. An odd characteristic is an
    /// invariant violation: it cannot arise from a hypermap.
    pub fn from_counts(nd: u64, ne: u64, nv: u64, nf: u64, nc: u64) -> Result<Self> {
        let ec = nv as i64 + ne as i64 + nf as i64 - nd as i64;
        if ec % 2 != 0 {
            return Err(HmapError::Invariant(format!("odd Euler characteristic {ec}")));
        }
        let genus = nc as i64 - ec / 2;
        Ok(MapStats {
            nd,
            ne,
            nv,
            nf,
            nc,
            ec,
            genus,
            planar: genus == 0,
        })
    }

    /// Fixed-order `key=value` lines.
    pub fn to_key_values(&self) -> String {
        format!(
            "nd={}\nne={}\nnv={}\nnf={}\nnc={}\nec={}\ngenus={}\nplanar={}\n",
            self.nd, self.ne, self.nv, self.nf, self.nc, self.ec, self.genus, self.planar
        )
    }
}

impl fmt::Display for MapStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "nd={} ne={} nv={} nf={} nc={} ec={} genus={} planar={}",
            self.nd, self.ne, self.nv, self.nf, self.nc, self.ec, self.genus, self.planar
        )
    }
}

/// Counts by orbit enumeration on the compiled index.
pub fn counts(m: &FreeMap) -> Result<MapStats> {
    Ok(*HypermapIndex::build(m)?.stats())
}

pub fn genus(m: &FreeMap) -> Result<i64> {
    Ok(counts(m)?.genus)
}

pub fn euler_characteristic(m: &FreeMap) -> Result<i64> {
    Ok(counts(m)?.ec)
}

pub fn planar(m: &FreeMap) -> Result<bool> {
    Ok(counts(m)?.planar)
}

/// Counts by replaying the term and updating each count per constructor.
///
/// An insertion adds one dart, edge, vertex, face and component. A link at
/// dimension `k` merges two `k`-orbits, merges two components unless its
/// ends were already connected, and either splits one face (+1) or merges
/// two (−1). The face split condition is `x' ~ y` in one face with
/// `x' = cA_1 one x` for dimension zero, and `x ~ cA zero y` for dimension
/// one.
pub fn counts_by_recurrence(m: &FreeMap) -> Result<MapStats> {
    m.validate()?;
    let n = m.darts().count();
    let mut slot: HashMap<crate::Dart, usize> = HashMap::with_capacity(n);
    // Closed permutations and their inverses, per dimension.
    let mut fwd: [Vec<usize>; 2] = [Vec::with_capacity(n), Vec::with_capacity(n)];
    let mut bwd: [Vec<usize>; 2] = [Vec::with_capacity(n), Vec::with_capacity(n)];
    let mut comps = UnionFind::new(n);
    let (mut nd, mut ne, mut nv, mut nf, mut nc) = (0i64, 0i64, 0i64, 0i64, 0i64);

    // phi = alpha1^-1 . alpha0^-1
    let same_face = |bwd: &[Vec<usize>; 2], a: usize, b: usize| -> bool {
        let mut cur = a;
        loop {
            if cur == b {
                return true;
            }
            cur = bwd[1][bwd[0][cur]];
            if cur == a {
                return false;
            }
        }
    };

    for op in m.ops() {
        match *op {
            Op::Insert(x) => {
                let i = slot.len();
                slot.insert(x, i);
                for k in 0..2 {
                    fwd[k].push(i);
                    bwd[k].push(i);
                }
                nd += 1;
                ne += 1;
                nv += 1;
                nf += 1;
                nc += 1;
            }
            Op::Link(k, x, y) => {
                let (x, y) = (slot[&x], slot[&y]);
                let splits = match k {
                    Dim::Zero => same_face(&bwd, bwd[1][x], y),
                    Dim::One => same_face(&bwd, x, fwd[0][y]),
                };
                nf += if splits { 1 } else { -1 };
                if comps.union(x, y) {
                    nc -= 1;
                }
                let ki = k.index();
                let bottom_x = fwd[ki][x];
                let top_y = bwd[ki][y];
                fwd[ki][x] = y;
                fwd[ki][top_y] = bottom_x;
                bwd[ki][y] = x;
                bwd[ki][bottom_x] = top_y;
                match k {
                    Dim::Zero => ne -= 1,
                    Dim::One => nv -= 1,
                }
            }
        }
    }
    let to_u =
        |v: i64| -> Result<u64> { u64::try_from(v).map_err(|_| HmapError::Invariant(format!("negative count {v}"))) };
    MapStats::from_counts(to_u(nd)?, to_u(ne)?, to_u(nv)?, to_u(nf)?, to_u(nc)?)
}

/// Outcome of checking one of the global theorems on a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub stats: MapStats,
    /// Each asserted fact with its verdict.
    pub checks: Vec<(String, bool)>,
    /// Serialized map when any check failed.
    pub counterexample: Option<String>,
}

impl TheoremReport {
    fn new(theorem: &'static str, m: &FreeMap, stats: MapStats, checks: Vec<(String, bool)>) -> Self {
        let failed = checks.iter().any(|(_, ok)| !ok);
        TheoremReport {
            theorem,
            stats,
            checks,
            counterexample: failed.then(|| serialize_map(m)),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// `ec` even, `genus >= 0`, and `2 nc >= ec`.
pub fn check_genus_theorem(m: &FreeMap) -> Result<TheoremReport> {
    let s = counts(m)?;
    let checks = vec![
        (format!("ec={} is even", s.ec), s.ec % 2 == 0),
        (format!("genus={} >= 0", s.genus), s.genus >= 0),
        (format!("2*nc={} >= ec={}", 2 * s.nc, s.ec), 2 * s.nc as i64 >= s.ec),
    ];
    Ok(TheoremReport::new("genus", m, s, checks))
}

/// For a planar map, `ec / 2 = nc`; when also connected and non-empty,
/// `nv + ne + nf - nd = 2`.
pub fn check_euler_formula(m: &FreeMap) -> Result<TheoremReport> {
    let s = counts(m)?;
    if !s.planar {
        return Err(HmapError::NotPlanar(s.genus));
    }
    let mut checks = vec![(format!("ec/2={} = nc={}", s.ec / 2, s.nc), s.ec / 2 == s.nc as i64)];
    if s.nc == 1 && s.nd > 0 {
        let chi = s.nv as i64 + s.ne as i64 + s.nf as i64 - s.nd as i64;
        checks.push((format!("connected: v+e+f-d={chi} = 2"), chi == 2));
    }
    Ok(TheoremReport::new("euler", m, s, checks))
}
