//! Compiled snapshot of a free map with constant-time observers.

use std::collections::HashMap;

use crate::characteristics::MapStats;
use crate::error::{HmapError, InsertViolation, LinkViolation, Result};
use crate::fmap::{FreeMap, Op};
use crate::orbits::OrbitKind;
use crate::unionfind::UnionFind;
use crate::view::HypermapView;
use crate::{Dart, Dim};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
enum Slots {
    Dense(Vec<u32>),
    Sparse(HashMap<Dart, u32>),
}

impl Slots {
    fn new(sorted: &[Dart]) -> Self {
        let max = sorted.last().map_or(0, |d| d.0 as usize);
        if max <= 8 * sorted.len() + 64 {
            let mut v = vec![NONE; max + 1];
            for (i, d) in sorted.iter().enumerate() {
                v[d.0 as usize] = i as u32;
            }
            Slots::Dense(v)
        } else {
            Slots::Sparse(sorted.iter().enumerate().map(|(i, d)| (*d, i as u32)).collect())
        }
    }

    #[inline]
    fn get(&self, z: Dart) -> Option<usize> {
        match self {
            Slots::Dense(v) => match v.get(z.0 as usize) {
                Some(&i) if i != NONE => Some(i as usize),
                _ => None,
            },
            Slots::Sparse(m) => m.get(&z).map(|&i| i as usize),
        }
    }
}

/// Immutable per-dart tables for one hypermap. Rebuild after any change to
/// the term.
#[derive(Debug, Clone)]
pub struct HypermapIndex {
    darts: Vec<Dart>,
    slots: Slots,
    next: [Vec<u32>; 2],
    prev: [Vec<u32>; 2],
    top: [Vec<u32>; 2],
    bottom: [Vec<u32>; 2],
    closed_next: [Vec<u32>; 2],
    closed_prev: [Vec<u32>; 2],
    face_next: Vec<u32>,
    face_prev: Vec<u32>,
    /// Orbit labels for edge, vertex, face; dense ids numbered by minimum dart.
    labels: [Vec<u32>; 3],
    reps: [Vec<Dart>; 3],
    component: Vec<u32>,
    component_reps: Vec<Dart>,
    stats: MapStats,
}

impl HypermapIndex {
    /// Compiles `m`, rejecting terms that fail `inv_hmap`.
    pub fn build(m: &FreeMap) -> Result<Self> {
        let mut darts: Vec<Dart> = m.darts().collect();
        darts.sort_unstable();
        darts.dedup();
        let n = darts.len();
        let slots = Slots::new(&darts);

        let mut next = [vec![NONE; n], vec![NONE; n]];
        let mut prev = [vec![NONE; n], vec![NONE; n]];
        let mut inserted = vec![false; n];
        let mut orbit_sets = [UnionFind::new(n), UnionFind::new(n)];
        let fail = |position: usize, reason: String| HmapError::NotHypermap { position, reason };

        for (position, op) in m.ops().iter().enumerate() {
            match *op {
                Op::Insert(x) => {
                    if x.is_nil() {
                        return Err(fail(position, InsertViolation::Nil.to_string()));
                    }
                    let i = slots.get(x).expect("inserted dart has a slot");
                    if inserted[i] {
                        return Err(fail(position, InsertViolation::Exists(x).to_string()));
                    }
                    inserted[i] = true;
                }
                Op::Link(k, x, y) => {
                    let ki = k.index();
                    let xi = slots.get(x).filter(|&i| inserted[i]);
                    let yi = slots.get(y).filter(|&i| inserted[i]);
                    let violation = match (xi, yi) {
                        (None, _) => Some(LinkViolation::SourceMissing(x)),
                        (_, None) => Some(LinkViolation::TargetMissing(y)),
                        (Some(xi), Some(yi)) => {
                            if next[ki][xi] != NONE {
                                Some(LinkViolation::SourceHasSucc(x, k))
                            } else if prev[ki][yi] != NONE {
                                Some(LinkViolation::TargetHasPred(y, k))
                            } else if orbit_sets[ki].same(xi, yi) {
                                // x is a top and y a bottom: same orbit means closing it.
                                Some(LinkViolation::ClosesOrbit(x, y, k))
                            } else {
                                next[ki][xi] = yi as u32;
                                prev[ki][yi] = xi as u32;
                                orbit_sets[ki].union(xi, yi);
                                None
                            }
                        }
                    };
                    if let Some(v) = violation {
                        return Err(fail(position, v.to_string()));
                    }
                }
            }
        }

        let mut top = [vec![NONE; n], vec![NONE; n]];
        let mut bottom = [vec![NONE; n], vec![NONE; n]];
        for k in 0..2 {
            for (start, &p) in prev[k].iter().enumerate() {
                if p != NONE {
                    continue;
                }
                let mut end = start;
                while next[k][end] != NONE {
                    end = next[k][end] as usize;
                }
                let mut cur = start;
                loop {
                    bottom[k][cur] = start as u32;
                    top[k][cur] = end as u32;
                    if cur == end {
                        break;
                    }
                    cur = next[k][cur] as usize;
                }
            }
        }

        let closed = |links: &[Vec<u32>; 2], wrap: &[Vec<u32>; 2]| -> [Vec<u32>; 2] {
            let mk = |k: usize| -> Vec<u32> {
                (0..n)
                    .map(|i| if links[k][i] != NONE { links[k][i] } else { wrap[k][i] })
                    .collect()
            };
            [mk(0), mk(1)]
        };
        let closed_next = closed(&next, &bottom);
        let closed_prev = closed(&prev, &top);

        let face_next: Vec<u32> = (0..n).map(|i| closed_prev[1][closed_prev[0][i] as usize]).collect();
        let face_prev: Vec<u32> = (0..n).map(|i| closed_next[0][closed_next[1][i] as usize]).collect();

        let (edge, edge_reps) = label_cycles(&closed_next[0], &darts);
        let (vertex, vertex_reps) = label_cycles(&closed_next[1], &darts);
        let (face, face_reps) = label_cycles(&face_next, &darts);

        let mut comps = UnionFind::new(n);
        for links in &next {
            for (i, &j) in links.iter().enumerate() {
                if j != NONE {
                    comps.union(i, j as usize);
                }
            }
        }
        let mut component = vec![NONE; n];
        let mut root_label: HashMap<usize, u32> = HashMap::new();
        let mut component_reps = Vec::new();
        for i in 0..n {
            let r = comps.find(i);
            let id = *root_label.entry(r).or_insert_with(|| {
                component_reps.push(darts[i]);
                (component_reps.len() - 1) as u32
            });
            component[i] = id;
        }

        let stats = MapStats::from_counts(
            n as u64,
            edge_reps.len() as u64,
            vertex_reps.len() as u64,
            face_reps.len() as u64,
            component_reps.len() as u64,
        )?;

        Ok(HypermapIndex {
            darts,
            slots,
            next,
            prev,
            top,
            bottom,
            closed_next,
            closed_prev,
            face_next,
            face_prev,
            labels: [edge, vertex, face],
            reps: [edge_reps, vertex_reps, face_reps],
            component,
            component_reps,
            stats,
        })
    }

    /// Existing darts in ascending order.
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn nd(&self) -> usize {
        self.darts.len()
    }

    pub fn stats(&self) -> &MapStats {
        &self.stats
    }

    /// Position of `z` in [`Self::darts`].
    #[inline]
    pub fn position(&self, z: Dart) -> Option<usize> {
        self.slots.get(z)
    }

    #[inline]
    fn dart_at(&self, i: u32) -> Dart {
        if i == NONE {
            Dart::NIL
        } else {
            self.darts[i as usize]
        }
    }

    #[inline]
    fn lookup(&self, table: &[u32], z: Dart) -> Dart {
        match self.position(z) {
            Some(i) => self.dart_at(table[i]),
            None => Dart::NIL,
        }
    }

    /// Dense id of the `kind`-orbit of `z`; ids are ordered by the minimum
    /// dart of each orbit.
    pub fn orbit_id(&self, kind: OrbitKind, z: Dart) -> Option<u32> {
        self.position(z).map(|i| self.labels[kind.index()][i])
    }

    pub fn orbit_count(&self, kind: OrbitKind) -> usize {
        self.reps[kind.index()].len()
    }

    /// Minimum dart of the orbit with the given id.
    pub fn orbit_rep(&self, kind: OrbitKind, id: u32) -> Dart {
        self.reps[kind.index()][id as usize]
    }

    pub fn component_id(&self, z: Dart) -> Option<u32> {
        self.position(z).map(|i| self.component[i])
    }

    pub fn component_count(&self) -> usize {
        self.component_reps.len()
    }

    pub fn component_rep(&self, id: u32) -> Dart {
        self.component_reps[id as usize]
    }

    /// The permutation of `kind`, applied to `z`.
    pub fn step(&self, kind: OrbitKind, z: Dart) -> Dart {
        match kind {
            OrbitKind::Edge => self.closed_next(Dim::Zero, z),
            OrbitKind::Vertex => self.closed_next(Dim::One, z),
            OrbitKind::Face => self.face_next(z),
        }
    }
}

impl HypermapView for HypermapIndex {
    fn has_dart(&self, z: Dart) -> bool {
        self.position(z).is_some()
    }
    fn link_next(&self, k: Dim, z: Dart) -> Dart {
        self.lookup(&self.next[k.index()], z)
    }
    fn link_prev(&self, k: Dim, z: Dart) -> Dart {
        self.lookup(&self.prev[k.index()], z)
    }
    fn top(&self, k: Dim, z: Dart) -> Dart {
        self.lookup(&self.top[k.index()], z)
    }
    fn bottom(&self, k: Dim, z: Dart) -> Dart {
        self.lookup(&self.bottom[k.index()], z)
    }
    fn closed_next(&self, k: Dim, z: Dart) -> Dart {
        self.lookup(&self.closed_next[k.index()], z)
    }
    fn closed_prev(&self, k: Dim, z: Dart) -> Dart {
        self.lookup(&self.closed_prev[k.index()], z)
    }
    fn face_next(&self, z: Dart) -> Dart {
        self.lookup(&self.face_next, z)
    }
    fn face_prev(&self, z: Dart) -> Dart {
        self.lookup(&self.face_prev, z)
    }
}

/// Labels the cycles of a permutation on `0..n`, numbering them by
/// ascending minimum position (positions follow ascending dart order).
fn label_cycles(perm: &[u32], darts: &[Dart]) -> (Vec<u32>, Vec<Dart>) {
    let mut label = vec![NONE; perm.len()];
    let mut reps = Vec::new();
    for start in 0..perm.len() {
        if label[start] != NONE {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(darts[start]);
        let mut cur = start;
        while label[cur] == NONE {
            label[cur] = id;
            cur = perm[cur] as usize;
        }
    }
    (label, reps)
}
