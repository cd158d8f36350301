//! Orbits of the edge, vertex and face permutations, and components.

use std::collections::HashMap;

use crate::error::{HmapError, Result};
use crate::fmap::{FreeMap, Op};
use crate::index::HypermapIndex;
use crate::view::HypermapView;
use crate::{Dart, Dim};

/// Which permutation an orbit is taken under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    /// Closed dimension-zero links.
    Edge,
    /// Closed dimension-one links.
    Vertex,
    /// The face permutation.
    Face,
}

impl OrbitKind {
    pub const ALL: [OrbitKind; 3] = [OrbitKind::Edge, OrbitKind::Vertex, OrbitKind::Face];

    pub(crate) fn index(self) -> usize {
        match self {
            OrbitKind::Edge => 0,
            OrbitKind::Vertex => 1,
            OrbitKind::Face => 2,
        }
    }

    /// Orbits of the closed links at dimension `k`.
    pub fn from_dim(k: Dim) -> Self {
        match k {
            Dim::Zero => OrbitKind::Edge,
            Dim::One => OrbitKind::Vertex,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitKind::Edge => "edge",
            OrbitKind::Vertex => "vertex",
            OrbitKind::Face => "face",
        }
    }

    /// The permutation of this kind under any observer backend.
    pub fn apply<V: HypermapView + ?Sized>(self, view: &V, z: Dart) -> Dart {
        match self {
            OrbitKind::Edge => view.closed_next(Dim::Zero, z),
            OrbitKind::Vertex => view.closed_next(Dim::One, z),
            OrbitKind::Face => view.face_next(z),
        }
    }
}

impl std::str::FromStr for OrbitKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "edge" => Ok(OrbitKind::Edge),
            "vertex" => Ok(OrbitKind::Vertex),
            "face" => Ok(OrbitKind::Face),
            other => Err(format!("unknown orbit kind `{other}` (expected edge, vertex or face)")),
        }
    }
}

/// A full cycle, listed in successor order from `representative`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Dart,
    pub members: Vec<Dart>,
    pub period: usize,
}

impl Orbit {
    /// Members in ascending order.
    pub fn sorted_members(&self) -> Vec<Dart> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }
}

pub fn orbit(idx: &HypermapIndex, kind: OrbitKind, z: Dart) -> Result<Orbit> {
    if !idx.has_dart(z) {
        return Err(HmapError::MissingDart(z));
    }
    let mut members = vec![z];
    let mut cur = idx.step(kind, z);
    while cur != z {
        members.push(cur);
        cur = idx.step(kind, cur);
    }
    Ok(Orbit {
        representative: z,
        period: members.len(),
        members,
    })
}

/// Every orbit of `kind`, each starting at its minimum dart, in ascending
/// order of that dart.
pub fn orbits(idx: &HypermapIndex, kind: OrbitKind) -> Vec<Orbit> {
    (0..idx.orbit_count(kind) as u32)
        .map(|id| orbit(idx, kind, idx.orbit_rep(kind, id)).expect("representative exists"))
        .collect()
}

/// `expo`: `t` is reachable from `z` under the permutation of `kind`.
pub fn same_orbit(idx: &HypermapIndex, kind: OrbitKind, z: Dart, t: Dart) -> bool {
    match (idx.orbit_id(kind, z), idx.orbit_id(kind, t)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

/// `expf`.
pub fn same_face(idx: &HypermapIndex, z: Dart, t: Dart) -> bool {
    same_orbit(idx, OrbitKind::Face, z, t)
}

/// `eqc`: `z` and `t` lie in one connected component.
pub fn same_component(idx: &HypermapIndex, z: Dart, t: Dart) -> bool {
    match (idx.component_id(z), idx.component_id(t)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

/// Reachability by iterating the permutation of `kind` on any backend,
/// bounded by `bound` steps. The reference counterpart of [`same_orbit`].
pub fn same_orbit_by_walk<V: HypermapView + ?Sized>(view: &V, kind: OrbitKind, z: Dart, t: Dart, bound: usize) -> bool {
    if !view.has_dart(z) || !view.has_dart(t) {
        return false;
    }
    let mut cur = z;
    for _ in 0..=bound {
        if cur == t {
            return true;
        }
        cur = kind.apply(view, cur);
        if cur == z {
            return false;
        }
    }
    false
}

/// `eqc` by structural recursion on the term:
///
/// ```text
/// eqc V z t          = false
/// eqc (I m x) z t    = (z = x && t = x) || eqc m z t
/// eqc (L m k x y) z t = eqc m z t || (eqc m z x && eqc m y t)
///                                 || (eqc m z y && eqc m x t)
/// ```
///
/// Memoized on (prefix length, z, t).
pub fn same_component_reference(m: &FreeMap, z: Dart, t: Dart) -> bool {
    fn go(ops: &[Op], z: Dart, t: Dart, memo: &mut HashMap<(usize, Dart, Dart), bool>) -> bool {
        let Some((last, rest)) = ops.split_last() else {
            return false;
        };
        let key = (ops.len(), z, t);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = match *last {
            Op::Insert(x) => (z == x && t == x) || go(rest, z, t, memo),
            Op::Link(_, x, y) => {
                go(rest, z, t, memo)
                    || (go(rest, z, x, memo) && go(rest, y, t, memo))
                    || (go(rest, z, y, memo) && go(rest, x, t, memo))
            }
        };
        memo.insert(key, v);
        v
    }
    go(m.ops(), z, t, &mut HashMap::new())
}
