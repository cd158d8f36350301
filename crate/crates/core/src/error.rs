use thiserror::Error;

use crate::{Dart, Dim};

/// Which conjunct of the insertion precondition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InsertViolation {
    #[error("prec_I: dart is nil")]
    Nil,
    #[error("prec_I: dart {0} already exists")]
    Exists(Dart),
}

/// Which conjunct of the link precondition failed, in the order they are
/// tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LinkViolation {
    #[error("prec_L: source dart {0} does not exist")]
    SourceMissing(Dart),
    #[error("prec_L: target dart {0} does not exist")]
    TargetMissing(Dart),
    #[error("prec_L: source dart {0} already has a {1}-successor")]
    SourceHasSucc(Dart, Dim),
    #[error("prec_L: target dart {0} already has a {1}-predecessor")]
    TargetHasPred(Dart, Dim),
    #[error("prec_L: closure equality, linking {0} to {1} at dimension {2} would close the orbit")]
    ClosesOrbit(Dart, Dart, Dim),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HmapError {
    #[error(transparent)]
    Insert(#[from] InsertViolation),
    #[error(transparent)]
    Link(#[from] LinkViolation),
    /// The term fails `inv_hmap`; `position` is the index of the first
    /// offending constructor, innermost first.
    #[error("not a hypermap: constructor #{position}: {reason}")]
    NotHypermap { position: usize, reason: String },
    #[error("dart {0} does not exist")]
    MissingDart(Dart),
    #[error("dart {0} has no {1}-successor")]
    NoSuccessor(Dart, Dim),
    #[error("dart {0} has no {1}-predecessor")]
    NoPredecessor(Dart, Dim),
    #[error("dart {0} still carries links and cannot be deleted")]
    DartLinked(Dart),
    #[error("map is not planar (genus {0})")]
    NotPlanar(i64),
    #[error("not a ring: {0}")]
    NotRing(String),
    #[error("ring item #{index} (dart {dart}) has no 0-successor at break time")]
    BreakWithoutLink { index: usize, dart: Dart },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = HmapError> = std::result::Result<T, E>;
