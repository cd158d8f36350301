//! Free maps: the term algebra `V | I(m, x) | L(m, k, x, y)`.
//!
//! A term is stored as its constructor trace, innermost first: `ops[0]` is
//! applied to `V`, `ops[1]` to the result, and so on. Structural recursion on
//! the term is therefore a scan of `ops` from the back. Every observer in this
//! module follows the recursive definitions literally and costs a linear scan
//! per call; [`HypermapIndex`](crate::HypermapIndex) is the fast path.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{HmapError, InsertViolation, LinkViolation, Result};
use crate::{Dart, Dim};

/// One constructor of a free-map term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Insert(Dart),
    Link(Dim, Dart, Dart),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeMap {
    ops: Vec<Op>,
}

impl FreeMap {
    /// The void map `V`.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_ops(ops: Vec<Op>) -> Self {
        FreeMap { ops }
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn into_ops(self) -> Vec<Op> {
        self.ops
    }

    /// Number of constructors above `V`.
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_void(&self) -> bool {
        self.ops.is_empty()
    }

    /// Same as [`FreeMap::is_void`].
    pub fn is_empty(&self) -> bool {
        self.is_void()
    }

    /// Inserted darts in insertion order.
    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.ops.iter().filter_map(|op| match op {
            Op::Insert(x) => Some(*x),
            Op::Link(..) => None,
        })
    }

    pub fn links(&self) -> impl Iterator<Item = (Dim, Dart, Dart)> + '_ {
        self.ops.iter().filter_map(|op| match op {
            Op::Link(k, x, y) => Some((*k, *x, *y)),
            Op::Insert(_) => None,
        })
    }

    /// The map with its outermost constructor removed, together with that
    /// constructor. `None` on `V`.
    pub fn split_last(&self) -> Option<(FreeMap, Op)> {
        let (last, rest) = self.ops.split_last()?;
        Some((FreeMap { ops: rest.to_vec() }, *last))
    }

    // ---------------------------------------------------------------------
    // Raw constructors. No precondition is checked.

    /// `I(self, x)` without checking `prec_I`.
    pub fn raw_insert(mut self, x: Dart) -> Self {
        self.ops.push(Op::Insert(x));
        self
    }

    /// `L(self, k, x, y)` without checking `prec_L`.
    pub fn raw_link(mut self, k: Dim, x: Dart, y: Dart) -> Self {
        self.ops.push(Op::Link(k, x, y));
        self
    }

    // ---------------------------------------------------------------------
    // Checked builders. The receiver is assumed to satisfy `inv_hmap`.

    pub fn insert(self, x: Dart) -> Result<Self> {
        self.check_insert(x)?;
        Ok(self.raw_insert(x))
    }

    pub fn link(self, k: Dim, x: Dart, y: Dart) -> Result<Self> {
        self.check_link(k, x, y)?;
        Ok(self.raw_link(k, x, y))
    }

    // ---------------------------------------------------------------------
    // Observers, transcribed from their recursive definitions.

    pub fn has_dart(&self, z: Dart) -> bool {
        self.ops.contains(&Op::Insert(z))
    }

    /// Most recently linked `k`-successor of `z`, or nil.
    pub fn link_next(&self, k: Dim, z: Dart) -> Dart {
        for op in self.ops.iter().rev() {
            if let Op::Link(k0, x, y) = *op {
                if k0 == k && x == z {
                    return y;
                }
            }
        }
        Dart::NIL
    }

    /// Most recently linked `k`-predecessor of `z`, or nil.
    pub fn link_prev(&self, k: Dim, z: Dart) -> Dart {
        for op in self.ops.iter().rev() {
            if let Op::Link(k0, x, y) = *op {
                if k0 == k && y == z {
                    return x;
                }
            }
        }
        Dart::NIL
    }

    pub fn succ(&self, k: Dim, z: Dart) -> bool {
        !self.link_next(k, z).is_nil()
    }

    pub fn pred(&self, k: Dim, z: Dart) -> bool {
        !self.link_prev(k, z).is_nil()
    }

    /// Last dart of the open `k`-orbit of `z`. Nil when `z` does not exist or
    /// when the successor chain is cyclic (impossible under `inv_hmap`).
    pub fn top(&self, k: Dim, z: Dart) -> Dart {
        if !self.has_dart(z) {
            return Dart::NIL;
        }
        self.walk(z, |d| self.link_next(k, d))
    }

    /// First dart of the open `k`-orbit of `z`; nil as for [`Self::top`].
    pub fn bottom(&self, k: Dim, z: Dart) -> Dart {
        if !self.has_dart(z) {
            return Dart::NIL;
        }
        self.walk(z, |d| self.link_prev(k, d))
    }

    fn walk(&self, start: Dart, step: impl Fn(Dart) -> Dart) -> Dart {
        let mut cur = start;
        for _ in 0..=self.ops.len() {
            let next = step(cur);
            if next.is_nil() {
                return cur;
            }
            cur = next;
        }
        Dart::NIL
    }

    /// Closure of `A`: wraps the top of an open orbit onto its bottom.
    pub fn closed_next(&self, k: Dim, z: Dart) -> Dart {
        let y = self.link_next(k, z);
        if !y.is_nil() {
            y
        } else if self.has_dart(z) {
            self.bottom(k, z)
        } else {
            Dart::NIL
        }
    }

    /// Closure of `A_1`: wraps the bottom of an open orbit onto its top.
    pub fn closed_prev(&self, k: Dim, z: Dart) -> Dart {
        let x = self.link_prev(k, z);
        if !x.is_nil() {
            x
        } else if self.has_dart(z) {
            self.top(k, z)
        } else {
            Dart::NIL
        }
    }

    /// `F z = A_1 one (A_1 zero z)`, nil-propagating.
    pub fn face_step(&self, z: Dart) -> Dart {
        let w = self.link_prev(Dim::Zero, z);
        if w.is_nil() {
            Dart::NIL
        } else {
            self.link_prev(Dim::One, w)
        }
    }

    /// `F_1 z = A zero (A one z)`, nil-propagating.
    pub fn face_step_back(&self, z: Dart) -> Dart {
        let w = self.link_next(Dim::One, z);
        if w.is_nil() {
            Dart::NIL
        } else {
            self.link_next(Dim::Zero, w)
        }
    }

    /// The face permutation `cA_1 one ∘ cA_1 zero`.
    pub fn face_next(&self, z: Dart) -> Dart {
        let w = self.closed_prev(Dim::Zero, z);
        if w.is_nil() {
            Dart::NIL
        } else {
            self.closed_prev(Dim::One, w)
        }
    }

    pub fn face_prev(&self, z: Dart) -> Dart {
        let w = self.closed_next(Dim::One, z);
        if w.is_nil() {
            Dart::NIL
        } else {
            self.closed_next(Dim::Zero, w)
        }
    }

    // ---------------------------------------------------------------------
    // Preconditions and the hypermap invariant.

    pub fn check_insert(&self, x: Dart) -> Result<(), InsertViolation> {
        if x.is_nil() {
            Err(InsertViolation::Nil)
        } else if self.has_dart(x) {
            Err(InsertViolation::Exists(x))
        } else {
            Ok(())
        }
    }

    pub fn can_insert(&self, x: Dart) -> bool {
        self.check_insert(x).is_ok()
    }

    pub fn check_link(&self, k: Dim, x: Dart, y: Dart) -> Result<(), LinkViolation> {
        if !self.has_dart(x) {
            Err(LinkViolation::SourceMissing(x))
        } else if !self.has_dart(y) {
            Err(LinkViolation::TargetMissing(y))
        } else if self.succ(k, x) {
            Err(LinkViolation::SourceHasSucc(x, k))
        } else if self.pred(k, y) {
            Err(LinkViolation::TargetHasPred(y, k))
        } else if self.closed_next(k, x) == y {
            Err(LinkViolation::ClosesOrbit(x, y, k))
        } else {
            Ok(())
        }
    }

    pub fn can_link(&self, k: Dim, x: Dart, y: Dart) -> bool {
        self.check_link(k, x, y).is_ok()
    }

    /// `inv_hmap` by its recursive definition: every prefix satisfies the
    /// precondition of the constructor applied to it. Quadratic or worse;
    /// use [`Self::validate`] outside of tests.
    pub fn is_hypermap_reference(&self) -> bool {
        let mut prefix = FreeMap::new();
        for op in &self.ops {
            let ok = match *op {
                Op::Insert(x) => prefix.can_insert(x),
                Op::Link(k, x, y) => prefix.can_link(k, x, y),
            };
            if !ok {
                return false;
            }
            prefix.ops.push(*op);
        }
        true
    }

    /// `inv_hmap`, decided by [`Self::validate`].
    pub fn is_hypermap(&self) -> bool {
        self.validate().is_ok()
    }

    /// Linear-time `inv_hmap` that reports the first offending constructor.
    pub fn validate(&self) -> Result<()> {
        let mut st = LinkState::default();
        for (position, op) in self.ops.iter().enumerate() {
            let res: Result<()> = match *op {
                Op::Insert(x) => st.insert(x).map_err(Into::into),
                Op::Link(k, x, y) => st.link(k, x, y).map_err(Into::into),
            };
            res.map_err(|e| HmapError::NotHypermap {
                position,
                reason: e.to_string(),
            })?;
        }
        Ok(())
    }

    // ---------------------------------------------------------------------
    // Destructors. Absent targets leave the term unchanged.

    /// `B m k x`: removes the latest `L(_, k, x, _)`.
    pub fn unlink(&self, k: Dim, x: Dart) -> FreeMap {
        self.remove_last(|op| matches!(op, Op::Link(k0, x0, _) if k0 == k && x0 == x))
    }

    /// `B_1 m k y`: removes the latest `L(_, k, _, y)`.
    pub fn unlink_back(&self, k: Dim, y: Dart) -> FreeMap {
        self.remove_last(|op| matches!(op, Op::Link(k0, _, y0) if k0 == k && y0 == y))
    }

    /// `D m x`: removes the latest `I(_, x)`.
    pub fn remove_dart(&self, x: Dart) -> FreeMap {
        self.remove_last(|op| op == Op::Insert(x))
    }

    fn remove_last(&self, pred: impl Fn(Op) -> bool) -> FreeMap {
        let mut ops = self.ops.clone();
        if let Some(pos) = ops.iter().rposition(|op| pred(*op)) {
            ops.remove(pos);
        }
        FreeMap { ops }
    }

    /// Checked `B`: refuses when `x` has no `k`-successor.
    pub fn break_link(&self, k: Dim, x: Dart) -> Result<FreeMap> {
        if !self.succ(k, x) {
            return Err(HmapError::NoSuccessor(x, k));
        }
        Ok(self.unlink(k, x))
    }

    /// Checked `B_1`: refuses when `y` has no `k`-predecessor.
    pub fn break_link_back(&self, k: Dim, y: Dart) -> Result<FreeMap> {
        if !self.pred(k, y) {
            return Err(HmapError::NoPredecessor(y, k));
        }
        Ok(self.unlink_back(k, y))
    }

    /// Checked `D`: refuses missing darts and darts that still carry links,
    /// so the result keeps `inv_hmap`.
    pub fn delete_dart(&self, x: Dart) -> Result<FreeMap> {
        if !self.has_dart(x) {
            return Err(HmapError::MissingDart(x));
        }
        if self.links().any(|(_, a, b)| a == x || b == x) {
            return Err(HmapError::DartLinked(x));
        }
        Ok(self.remove_dart(x))
    }
}

impl fmt::Display for FreeMap {
    /// Prefix term notation, e.g. `L(I(I(V,1),2),0,1,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in self.ops.iter().rev() {
            f.write_str(match op {
                Op::Insert(_) => "I(",
                Op::Link(..) => "L(",
            })?;
        }
        f.write_str("V")?;
        for op in &self.ops {
            match op {
                Op::Insert(x) => write!(f, ",{x})")?,
                Op::Link(k, x, y) => write!(f, ",{k},{x},{y})")?,
            }
        }
        Ok(())
    }
}

/// Open-link tables maintained while replaying a term, used for fast
/// precondition checks.
#[derive(Debug, Default, Clone)]
pub(crate) struct LinkState {
    pub(crate) exists: HashSet<Dart>,
    pub(crate) succ: [HashMap<Dart, Dart>; 2],
    pub(crate) pred: [HashMap<Dart, Dart>; 2],
}

impl LinkState {
    pub(crate) fn insert(&mut self, x: Dart) -> Result<(), InsertViolation> {
        if x.is_nil() {
            return Err(InsertViolation::Nil);
        }
        if !self.exists.insert(x) {
            return Err(InsertViolation::Exists(x));
        }
        Ok(())
    }

    pub(crate) fn link(&mut self, k: Dim, x: Dart, y: Dart) -> Result<(), LinkViolation> {
        let i = k.index();
        if !self.exists.contains(&x) {
            return Err(LinkViolation::SourceMissing(x));
        }
        if !self.exists.contains(&y) {
            return Err(LinkViolation::TargetMissing(y));
        }
        if self.succ[i].contains_key(&x) {
            return Err(LinkViolation::SourceHasSucc(x, k));
        }
        if self.pred[i].contains_key(&y) {
            return Err(LinkViolation::TargetHasPred(y, k));
        }
        // x is a top, so its closure image is the bottom of its orbit.
        let mut bottom = x;
        while let Some(&p) = self.pred[i].get(&bottom) {
            bottom = p;
        }
        if bottom == y {
            return Err(LinkViolation::ClosesOrbit(x, y, k));
        }
        self.succ[i].insert(x, y);
        self.pred[i].insert(y, x);
        Ok(())
    }
}
