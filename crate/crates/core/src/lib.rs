//! Hypermaps built as free terms with open orbits.
//!
//! A map is a term over three constructors: the void map, insertion of a
//! dart, and a link of two darts at dimension zero or one. Links form open
//! paths; closing every path gives the two permutations of a hypermap, whose
//! orbits are edges and vertices, while faces are orbits of
//! `cA_1 one ∘ cA_1 zero`.
//!
//! The crate provides:
//! - the term algebra with reference observers ([`FreeMap`]) and a compiled
//!   snapshot with constant-time observers ([`HypermapIndex`]),
//! - orbit enumeration and component tests ([`orbits`]),
//! - counts, Euler characteristic, genus and planarity
//!   ([`characteristics`]),
//! - constructive planarity and disconnection criteria ([`criteria`]),
//! - rings of faces and the break along a ring ([`rings`]),
//! - the discrete Jordan check with a generator, ring search and fuzzer
//!   ([`jordan`]),
//! - text formats and DOT export ([`format`]).
//!
//! ```
//! use hypermap::fixtures::{digon, digon_ring};
//! use hypermap::jordan::{jordan_check, Verdict};
//!
//! let outcome = jordan_check(&digon(), &digon_ring())?;
//! assert_eq!((outcome.nc_before, outcome.nc_after), (1, 2));
//! assert_eq!(outcome.verdict, Verdict::Pass);
//! # Ok::<(), hypermap::HmapError>(())
//! ```

pub mod characteristics;
pub mod criteria;
mod dart;
pub mod error;
pub mod fixtures;
pub mod fmap;
pub mod format;
mod index;
pub mod jordan;
pub mod orbits;
pub mod rings;
mod unionfind;
mod view;

pub use characteristics::MapStats;
pub use dart::{Dart, Dim};
pub use error::{HmapError, Result};
pub use fmap::{FreeMap, Op};
pub use index::HypermapIndex;
pub use orbits::{Orbit, OrbitKind};
pub use rings::{RingItem, RingList};
pub use unionfind::UnionFind;
pub use view::HypermapView;
