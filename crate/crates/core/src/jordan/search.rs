use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::index::HypermapIndex;
use crate::orbits::OrbitKind;
use crate::rings::{is_ring, RingItem, RingList};
use crate::view::HypermapView;
use crate::{Dart, Dim};

/// Upper bound on search-tree expansions per call.
const EXPANSION_BUDGET: usize = 200_000;

/// A 0-link seen as an edge of the face-adjacency multigraph.
#[derive(Debug, Clone, Copy)]
struct DoubleLink {
    dart: Dart,
    edge: u32,
    /// Face of `y = A(m, zero, x)`.
    face_y: u32,
    /// Face of `x0 = bottom(m, zero, x)`.
    face_x0: u32,
}

impl DoubleLink {
    /// The item leaving `from` across this link, and the face it reaches.
    fn leave(&self, from: u32) -> (RingItem, u32) {
        if self.face_y == from {
            (
                RingItem {
                    dart: self.dart,
                    flag: true,
                },
                self.face_x0,
            )
        } else {
            (
                RingItem {
                    dart: self.dart,
                    flag: false,
                },
                self.face_y,
            )
        }
    }
}

/// Searches the face-adjacency multigraph (faces as nodes, 0-links as
/// edges) for a simple cycle of at most `max_len` links with pairwise
/// distinct edges and faces. A target length between two and `max_len` is
/// drawn from `seed`: the first cycle at least that long is returned, else
/// the longest cycle seen within the search budget. A single link whose two
/// sides share a face is the fallback. Every returned list passes the ring
/// check.
pub fn find_ring(idx: &HypermapIndex, max_len: usize, seed: u64) -> Option<RingList> {
    if max_len == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut links: Vec<DoubleLink> = idx
        .darts()
        .iter()
        .filter_map(|&x| {
            let y = idx.link_next(Dim::Zero, x).non_nil()?;
            let x0 = idx.bottom(Dim::Zero, x);
            Some(DoubleLink {
                dart: x,
                edge: idx.orbit_id(OrbitKind::Edge, x)?,
                face_y: idx.orbit_id(OrbitKind::Face, y)?,
                face_x0: idx.orbit_id(OrbitKind::Face, x0)?,
            })
        })
        .collect();
    links.shuffle(&mut rng);

    let nf = idx.orbit_count(OrbitKind::Face);
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for (i, l) in links.iter().enumerate() {
        if l.face_y != l.face_x0 {
            adjacency[l.face_y as usize].push(i);
            adjacency[l.face_x0 as usize].push(i);
        }
    }

    if max_len >= 2 {
        let mut starts: Vec<u32> = (0..nf as u32).filter(|&f| adjacency[f as usize].len() >= 2).collect();
        starts.shuffle(&mut rng);
        let mut search = CycleSearch {
            idx,
            links: &links,
            adjacency: &adjacency,
            max_len,
            budget: EXPANSION_BUDGET,
            target: rng.gen_range(2..=max_len),
            best: None,
            path: Vec::new(),
            faces: HashSet::new(),
            edges: HashSet::new(),
        };
        for start in starts {
            search.faces.insert(start);
            let done = search.extend(start, start);
            search.faces.clear();
            if done || search.budget == 0 {
                break;
            }
        }
        if let Some(ring) = search.best {
            return Some(ring);
        }
    }

    links
        .iter()
        .filter(|l| l.face_y == l.face_x0)
        .map(|l| {
            RingList::from(vec![RingItem {
                dart: l.dart,
                flag: true,
            }])
        })
        .find(|ring| is_ring(idx, ring))
}

struct CycleSearch<'a> {
    idx: &'a HypermapIndex,
    links: &'a [DoubleLink],
    adjacency: &'a [Vec<usize>],
    max_len: usize,
    /// Stop at the first cycle of at least this length.
    target: usize,
    budget: usize,
    /// Longest ring found so far.
    best: Option<RingList>,
    path: Vec<RingItem>,
    faces: HashSet<u32>,
    edges: HashSet<u32>,
}

impl CycleSearch<'_> {
    /// Depth-first extension of the current path; true once a ring of the
    /// target length has been recorded.
    fn extend(&mut self, start: u32, current: u32) -> bool {
        for &li in &self.adjacency[current as usize] {
            if self.budget == 0 {
                return false;
            }
            self.budget -= 1;
            let link = self.links[li];
            if self.edges.contains(&link.edge) {
                continue;
            }
            let (item, next) = link.leave(current);
            if next == start {
                let longer = self.best.as_ref().is_none_or(|b| b.len() < self.path.len() + 1);
                if self.path.is_empty() || !longer {
                    continue;
                }
                let mut items = self.path.clone();
                items.push(item);
                let ring = RingList::from(items);
                if is_ring(self.idx, &ring) {
                    let reached = ring.len() >= self.target;
                    self.best = Some(ring);
                    if reached {
                        return true;
                    }
                }
                continue;
            }
            if self.faces.contains(&next) || self.path.len() + 2 > self.max_len {
                continue;
            }
            self.path.push(item);
            self.faces.insert(next);
            self.edges.insert(link.edge);
            let done = self.extend(start, next);
            self.edges.remove(&link.edge);
            self.faces.remove(&next);
            self.path.pop();
            if done {
                return true;
            }
        }
        false
    }
}
