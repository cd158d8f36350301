//! Rings of faces coded by double-links, their four conditions, and the
//! break along a ring.
//!
//! A double-link is the open 0-link out of a dart `x`. The item `(x, b)`
//! identifies the face on its left: the face of `y = A(m, zero, x)` when `b`
//! holds, the face of `x0 = bottom(m, zero, x)` otherwise.
//!
//! The coding is complete for combinatorial maps, where every edge has at
//! most two darts. On general hypermaps some closed curves of faces cannot
//! be written as such a list; they are simply out of reach of this module.

use std::fmt;

use crate::error::{HmapError, Result};
use crate::fmap::FreeMap;
use crate::index::HypermapIndex;
use crate::orbits::{same_face, same_orbit, OrbitKind};
use crate::view::HypermapView;
use crate::{Dart, Dim};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingItem {
    pub dart: Dart,
    pub flag: bool,
}

impl RingItem {
    pub fn new(dart: impl Into<Dart>, flag: bool) -> Self {
        RingItem {
            dart: dart.into(),
            flag,
        }
    }
}

impl fmt::Display for RingItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dart, self.flag)
    }
}

/// A candidate ring, in break order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RingList {
    items: Vec<RingItem>,
}

impl RingList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[RingItem] {
        &self.items
    }

    pub fn first(&self) -> Option<RingItem> {
        self.items.first().copied()
    }

    pub fn last(&self) -> Option<RingItem> {
        self.items.last().copied()
    }

    /// The list without its first item (empty stays empty).
    pub fn tail(&self) -> RingList {
        RingList {
            items: self.items.iter().skip(1).copied().collect(),
        }
    }

    pub fn push(&mut self, item: RingItem) {
        self.items.push(item);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RingItem> {
        self.items.iter()
    }
}

impl From<Vec<RingItem>> for RingList {
    fn from(items: Vec<RingItem>) -> Self {
        RingList { items }
    }
}

impl FromIterator<RingItem> for RingList {
    fn from_iter<T: IntoIterator<Item = RingItem>>(iter: T) -> Self {
        RingList {
            items: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a RingList {
    type Item = &'a RingItem;
    type IntoIter = std::slice::Iter<'a, RingItem>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

impl fmt::Display for RingList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, it) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{it}")?;
        }
        f.write_str("]")
    }
}

/// `(y, x0)` of an item, or `None` without a 0-successor.
fn link_ends(idx: &HypermapIndex, x: Dart) -> Option<(Dart, Dart)> {
    let y = idx.link_next(Dim::Zero, x).non_nil()?;
    Some((y, idx.bottom(Dim::Zero, x)))
}

/// Face representative with nil propagation: `A(x)` or `bottom(x)`.
fn rep_or_nil(idx: &HypermapIndex, item: RingItem) -> Dart {
    if item.flag {
        idx.link_next(Dim::Zero, item.dart)
    } else {
        idx.bottom(Dim::Zero, item.dart)
    }
}

/// Representative dart of the face identified by `item`.
pub fn face_rep(idx: &HypermapIndex, item: RingItem) -> Result<Dart> {
    let (y, x0) = link_ends(idx, item.dart).ok_or(HmapError::NoSuccessor(item.dart, Dim::Zero))?;
    Ok(if item.flag { y } else { x0 })
}

fn adjacent_unchecked(idx: &HypermapIndex, a: RingItem, b: RingItem) -> bool {
    let y = idx.link_next(Dim::Zero, a.dart);
    let x0 = idx.bottom(Dim::Zero, a.dart);
    let y2 = idx.link_next(Dim::Zero, b.dart);
    let x20 = idx.bottom(Dim::Zero, b.dart);
    match (a.flag, b.flag) {
        (true, true) => same_face(idx, x0, y2),
        (true, false) => same_face(idx, x0, x20),
        (false, true) => same_face(idx, y, y2),
        (false, false) => same_face(idx, y, x20),
    }
}

/// The face identified by `b` is reached from the face identified by `a`
/// across `a`'s double-link.
pub fn adjacent_faces(idx: &HypermapIndex, a: RingItem, b: RingItem) -> Result<bool> {
    for it in [a, b] {
        if !idx.succ(Dim::Zero, it.dart) {
            return Err(HmapError::NoSuccessor(it.dart, Dim::Zero));
        }
    }
    Ok(adjacent_unchecked(idx, a, b))
}

/// A violated ring condition, with the first offending item indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingFault {
    Empty,
    /// Item has no 0-successor.
    MissingLink {
        item: usize,
    },
    /// Two items lie in the same edge.
    SharedEdge {
        first: usize,
        second: usize,
    },
    /// Consecutive faces are not adjacent.
    NotAdjacent {
        first: usize,
        second: usize,
    },
    /// Last and first faces are not adjacent (or, for a single item, its
    /// two sides are different faces).
    NotClosed {
        last: usize,
        first: usize,
    },
    /// Two items identify the same face.
    SharedFace {
        first: usize,
        second: usize,
    },
}

impl fmt::Display for RingFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RingFault::Empty => write!(f, "empty list"),
            RingFault::MissingLink { item } => write!(f, "unicity: item #{item} has no 0-successor"),
            RingFault::SharedEdge { first, second } => {
                write!(f, "unicity: items #{first} and #{second} share an edge")
            }
            RingFault::NotAdjacent { first, second } => {
                write!(f, "continuity: faces of items #{first} and #{second} are not adjacent")
            }
            RingFault::NotClosed { last, first } => {
                write!(f, "circularity: faces of items #{last} and #{first} are not adjacent")
            }
            RingFault::SharedFace { first, second } => {
                write!(f, "simplicity: items #{first} and #{second} identify the same face")
            }
        }
    }
}

/// Condition (0), unicity: every item has a 0-successor and their edges are
/// pairwise distinct.
pub fn unicity_fault(idx: &HypermapIndex, l: &RingList) -> Option<RingFault> {
    let items = l.items();
    for (i, it) in items.iter().enumerate() {
        if !idx.succ(Dim::Zero, it.dart) {
            return Some(RingFault::MissingLink { item: i });
        }
    }
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if same_orbit(idx, OrbitKind::Edge, items[i].dart, items[j].dart) {
                return Some(RingFault::SharedEdge { first: i, second: j });
            }
        }
    }
    None
}

/// Condition (1), continuity.
pub fn continuity_fault(idx: &HypermapIndex, l: &RingList) -> Option<RingFault> {
    l.items()
        .windows(2)
        .position(|w| !adjacent_unchecked(idx, w[0], w[1]))
        .map(|i| RingFault::NotAdjacent {
            first: i,
            second: i + 1,
        })
}

/// Condition (2), circularity.
pub fn circularity_fault(idx: &HypermapIndex, l: &RingList) -> Option<RingFault> {
    let (first, last) = (l.first()?, l.last()?);
    let closed = if l.len() == 1 {
        let y = idx.link_next(Dim::Zero, first.dart);
        same_face(idx, y, idx.bottom(Dim::Zero, first.dart))
    } else {
        adjacent_unchecked(idx, last, first)
    };
    (!closed).then_some(RingFault::NotClosed {
        last: l.len() - 1,
        first: 0,
    })
}

/// Condition (3), simplicity: identified faces pairwise distinct.
pub fn simplicity_fault(idx: &HypermapIndex, l: &RingList) -> Option<RingFault> {
    let reps: Vec<Dart> = l.iter().map(|it| rep_or_nil(idx, *it)).collect();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if same_face(idx, reps[i], reps[j]) {
                return Some(RingFault::SharedFace { first: i, second: j });
            }
        }
    }
    None
}

pub fn pre_ring0(idx: &HypermapIndex, l: &RingList) -> bool {
    unicity_fault(idx, l).is_none()
}

pub fn pre_ring1(idx: &HypermapIndex, l: &RingList) -> bool {
    continuity_fault(idx, l).is_none()
}

pub fn pre_ring2(idx: &HypermapIndex, l: &RingList) -> bool {
    circularity_fault(idx, l).is_none()
}

pub fn pre_ring3(idx: &HypermapIndex, l: &RingList) -> bool {
    simplicity_fault(idx, l).is_none()
}

/// Per-condition verdicts for a candidate ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDiagnostics {
    pub non_empty: bool,
    pub unicity: Option<RingFault>,
    pub continuity: Option<RingFault>,
    pub circularity: Option<RingFault>,
    pub simplicity: Option<RingFault>,
}

impl RingDiagnostics {
    pub fn is_ring(&self) -> bool {
        self.first_fault().is_none()
    }

    /// The first failing condition in the order empty, 0, 1, 2, 3.
    pub fn first_fault(&self) -> Option<RingFault> {
        if !self.non_empty {
            return Some(RingFault::Empty);
        }
        self.unicity
            .or(self.continuity)
            .or(self.circularity)
            .or(self.simplicity)
    }
}

impl fmt::Display for RingDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |fault: &Option<RingFault>| if fault.is_none() { "ok" } else { "FAIL" };
        write!(
            f,
            "non_empty={} unicity={} continuity={} circularity={} simplicity={}",
            self.non_empty,
            mark(&self.unicity),
            mark(&self.continuity),
            mark(&self.circularity),
            mark(&self.simplicity)
        )?;
        if let Some(fault) = self.first_fault() {
            write!(f, " first_fault=\"{fault}\"")?;
        }
        Ok(())
    }
}

pub fn ring_check(idx: &HypermapIndex, l: &RingList) -> RingDiagnostics {
    RingDiagnostics {
        non_empty: !l.is_empty(),
        unicity: unicity_fault(idx, l),
        continuity: continuity_fault(idx, l),
        circularity: circularity_fault(idx, l),
        simplicity: simplicity_fault(idx, l),
    }
}

/// Whether `l` is a ring of faces: non-empty and free of all four faults.
pub fn is_ring(idx: &HypermapIndex, l: &RingList) -> bool {
    !l.is_empty() && pre_ring0(idx, l) && pre_ring1(idx, l) && pre_ring2(idx, l) && pre_ring3(idx, l)
}

/// Breaks the 0-link out of each item, first to last.
pub fn break_along(m: &FreeMap, l: &RingList) -> Result<FreeMap> {
    let mut cur = m.clone();
    for (index, it) in l.iter().enumerate() {
        if !cur.succ(Dim::Zero, it.dart) {
            return Err(HmapError::BreakWithoutLink { index, dart: it.dart });
        }
        cur = cur.unlink(Dim::Zero, it.dart);
    }
    Ok(cur)
}
