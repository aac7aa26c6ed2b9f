//! Edge directions and the `(x, y, z)` keys that index wedge types and
//! closure directions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Direction of an edge relative to one of its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// The edge points into the endpoint.
    In,
    /// The edge points out of the endpoint.
    Out,
}

impl Direction {
    /// Both directions, `In` first.
    pub const ALL: [Direction; 2] = [Direction::In, Direction::Out];

    #[inline]
    pub fn complement(self) -> Direction {
        match self {
            Direction::In => Direction::Out,
            Direction::Out => Direction::In,
        }
    }

    #[inline]
    pub fn as_char(self) -> char {
        match self {
            Direction::In => 'i',
            Direction::Out => 'o',
        }
    }

    fn from_char(c: char) -> Option<Direction> {
        match c {
            'i' => Some(Direction::In),
            'o' => Some(Direction::Out),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Wedge type `xy`.
///
/// For head-based wedges `(u, v, w)`, `first` is the direction of the
/// head-center edge relative to the head `u` and `second` is the direction of
/// the center-tail edge relative to the center `v`. For center-based
/// clustering the same pair is read as both directions relative to the center.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeType {
    pub first: Direction,
    pub second: Direction,
}

impl WedgeType {
    /// `ii, io, oi, oo`.
    pub const ALL: [WedgeType; 4] = [
        WedgeType::new(Direction::In, Direction::In),
        WedgeType::new(Direction::In, Direction::Out),
        WedgeType::new(Direction::Out, Direction::In),
        WedgeType::new(Direction::Out, Direction::Out),
    ];

    pub const fn new(first: Direction, second: Direction) -> Self {
        WedgeType { first, second }
    }

    /// Position in [`WedgeType::ALL`].
    #[inline]
    pub fn index(self) -> usize {
        (self.first as usize) * 2 + self.second as usize
    }

    pub fn name(self) -> String {
        format!("{}{}", self.first, self.second)
    }

    /// The key obtained by closing this wedge type in direction `closing`.
    pub fn closed_by(self, closing: Direction) -> CoefficientKey {
        CoefficientKey::new(self.first, self.second, closing)
    }
}

impl fmt::Display for WedgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

impl FromStr for WedgeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (
            chars.next().and_then(Direction::from_char),
            chars.next().and_then(Direction::from_char),
            chars.next(),
        ) {
            (Some(first), Some(second), None) => Ok(WedgeType::new(first, second)),
            _ => Err(Error::InvalidArgument(format!("bad wedge type {s:?}"))),
        }
    }
}

/// One of the eight directed closure coefficients: wedge type `xy` closed in
/// direction `z` (relative to the head).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoefficientKey {
    pub x: Direction,
    pub y: Direction,
    pub z: Direction,
}

impl CoefficientKey {
    /// Canonical order: `ii_i, ii_o, io_i, io_o, oi_i, oi_o, oo_i, oo_o`.
    pub const ALL: [CoefficientKey; 8] = {
        use Direction::{In as I, Out as O};
        [
            CoefficientKey::new(I, I, I),
            CoefficientKey::new(I, I, O),
            CoefficientKey::new(I, O, I),
            CoefficientKey::new(I, O, O),
            CoefficientKey::new(O, I, I),
            CoefficientKey::new(O, I, O),
            CoefficientKey::new(O, O, I),
            CoefficientKey::new(O, O, O),
        ]
    };

    /// The four pairs whose global coefficients coincide on every graph.
    pub const SYMMETRIC_PAIRS: [(CoefficientKey, CoefficientKey); 4] = {
        use Direction::{In as I, Out as O};
        [
            (CoefficientKey::new(I, I, I), CoefficientKey::new(O, O, O)),
            (CoefficientKey::new(I, I, O), CoefficientKey::new(O, O, I)),
            (CoefficientKey::new(I, O, I), CoefficientKey::new(I, O, O)),
            (CoefficientKey::new(O, I, I), CoefficientKey::new(O, I, O)),
        ]
    };

    pub const fn new(x: Direction, y: Direction, z: Direction) -> Self {
        CoefficientKey { x, y, z }
    }

    #[inline]
    pub fn wedge_type(self) -> WedgeType {
        WedgeType::new(self.x, self.y)
    }

    /// Position in [`CoefficientKey::ALL`].
    #[inline]
    pub fn index(self) -> usize {
        self.wedge_type().index() * 2 + self.z as usize
    }

    /// Short form, e.g. `io_o`.
    pub fn short_name(self) -> String {
        format!("{}{}_{}", self.x, self.y, self.z)
    }

    /// Column name, e.g. `closure_io_o`.
    pub fn column_name(self) -> String {
        format!("closure_{}", self.short_name())
    }
}

impl fmt::Display for CoefficientKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}_{}", self.x, self.y, self.z)
    }
}

impl FromStr for CoefficientKey {
    type Err = Error;

    /// Accepts `io_o`, `closure_io_o` or `ioo`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bare = s.strip_prefix("closure_").unwrap_or(s);
        let letters: Vec<char> = bare.chars().filter(|&c| c != '_').collect();
        let dirs: Option<Vec<Direction>> = letters.iter().map(|&c| Direction::from_char(c)).collect();
        match dirs.as_deref() {
            Some(&[x, y, z]) => Ok(CoefficientKey::new(x, y, z)),
            _ => Err(Error::InvalidArgument(format!("bad coefficient key {s:?}"))),
        }
    }
}
