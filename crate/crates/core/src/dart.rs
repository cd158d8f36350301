use std::fmt;

/// A dart identifier. Identifiers are arbitrary naturals; `0` is reserved as
/// [`Dart::NIL`] and signals "no dart" in every observer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Dart(pub u32);

impl Dart {
    pub const NIL: Dart = Dart(0);

    #[inline]
    pub fn is_nil(self) -> bool {
        self.0 == 0
    }

    /// `None` for nil, `Some(self)` otherwise.
    #[inline]
    pub fn non_nil(self) -> Option<Dart> {
        (!self.is_nil()).then_some(self)
    }
}

impl From<u32> for Dart {
    fn from(v: u32) -> Self {
        Dart(v)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The two link dimensions. Zero links build edges, one links build vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    Zero,
    One,
}

impl Dim {
    pub const ALL: [Dim; 2] = [Dim::Zero, Dim::One];

    #[inline]
    pub fn index(self) -> usize {
        match self {
            Dim::Zero => 0,
            Dim::One => 1,
        }
    }

    #[inline]
    pub fn other(self) -> Dim {
        match self {
            Dim::Zero => Dim::One,
            Dim::One => Dim::Zero,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dim::Zero => "0",
            Dim::One => "1",
        })
    }
}
