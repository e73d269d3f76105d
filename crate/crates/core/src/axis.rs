//! Spatial axis index with cyclic arithmetic.

use crate::error::{Error, Result};

/// One of the three spatial axes, indexed 1..=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    /// Validates a 1-based index.
    pub fn from_index(index: usize) -> Result<Self> {
        match index {
            1 => Ok(Axis::X1),
            2 => Ok(Axis::X2),
            3 => Ok(Axis::X3),
            _ => Err(Error::IndexOutOfRange {
                what: "spatial axis",
                index,
            }),
        }
    }

    /// 1-based index.
    pub fn index(self) -> usize {
        match self {
            Axis::X1 => 1,
            Axis::X2 => 2,
            Axis::X3 => 3,
        }
    }

    /// Next axis in the forward cycle 1 -> 2 -> 3 -> 1.
    pub fn next(self) -> Self {
        match self {
            Axis::X1 => Axis::X2,
            Axis::X2 => Axis::X3,
            Axis::X3 => Axis::X1,
        }
    }

    /// Previous axis in the forward cycle.
    pub fn prev(self) -> Self {
        self.next().next()
    }
}

/// Levi-Civita symbol over 1-based spatial indices.
pub fn epsilon(i: usize, j: usize, k: usize) -> i8 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (2, 1, 3) | (1, 3, 2) => -1,
        _ => 0,
    }
}
