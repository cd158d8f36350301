use crate::{Dart, Dim, FreeMap};

/// The observer surface shared by the reference term semantics
/// ([`FreeMap`]) and the compiled [`HypermapIndex`](crate::HypermapIndex).
///
/// All observers are total: nil or a missing dart yields nil / `false`.
pub trait HypermapView {
    fn has_dart(&self, z: Dart) -> bool;
    /// Open `k`-successor (`A`).
    fn link_next(&self, k: Dim, z: Dart) -> Dart;
    /// Open `k`-predecessor (`A_1`).
    fn link_prev(&self, k: Dim, z: Dart) -> Dart;
    fn top(&self, k: Dim, z: Dart) -> Dart;
    fn bottom(&self, k: Dim, z: Dart) -> Dart;
    /// Closed `k`-successor (`cA`).
    fn closed_next(&self, k: Dim, z: Dart) -> Dart;
    /// Closed `k`-predecessor (`cA_1`).
    fn closed_prev(&self, k: Dim, z: Dart) -> Dart;
    /// Face permutation (`cF`).
    fn face_next(&self, z: Dart) -> Dart;
    /// Inverse face permutation (`cF_1`).
    fn face_prev(&self, z: Dart) -> Dart;

    fn succ(&self, k: Dim, z: Dart) -> bool {
        !self.link_next(k, z).is_nil()
    }

    fn pred(&self, k: Dim, z: Dart) -> bool {
        !self.link_prev(k, z).is_nil()
    }

    /// Open face step (`F`).
    fn face_step(&self, z: Dart) -> Dart {
        match self.link_prev(Dim::Zero, z).non_nil() {
            Some(w) => self.link_prev(Dim::One, w),
            None => Dart::NIL,
        }
    }

    /// Open inverse face step (`F_1`).
    fn face_step_back(&self, z: Dart) -> Dart {
        match self.link_next(Dim::One, z).non_nil() {
            Some(w) => self.link_next(Dim::Zero, w),
            None => Dart::NIL,
        }
    }
}

impl HypermapView for FreeMap {
    fn has_dart(&self, z: Dart) -> bool {
        FreeMap::has_dart(self, z)
    }
    fn link_next(&self, k: Dim, z: Dart) -> Dart {
        FreeMap::link_next(self, k, z)
    }
    fn link_prev(&self, k: Dim, z: Dart) -> Dart {
        FreeMap::link_prev(self, k, z)
    }
    fn top(&self, k: Dim, z: Dart) -> Dart {
        FreeMap::top(self, k, z)
    }
    fn bottom(&self, k: Dim, z: Dart) -> Dart {
        FreeMap::bottom(self, k, z)
    }
    fn closed_next(&self, k: Dim, z: Dart) -> Dart {
        FreeMap::closed_next(self, k, z)
    }
    fn closed_prev(&self, k: Dim, z: Dart) -> Dart {
        FreeMap::closed_prev(self, k, z)
    }
    fn face_next(&self, z: Dart) -> Dart {
        FreeMap::face_next(self, z)
    }
    fn face_prev(&self, z: Dart) -> Dart {
        FreeMap::face_prev(self, z)
    }
    fn face_step(&self, z: Dart) -> Dart {
        FreeMap::face_step(self, z)
    }
    fn face_step_back(&self, z: Dart) -> Dart {
        FreeMap::face_step_back(self, z)
    }
}
