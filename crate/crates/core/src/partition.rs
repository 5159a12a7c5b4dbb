//! Integer partitions, their diagrams and bounding rectangles.
//!
//! A [`Partition`] is stored in canonical form: parts are non-increasing and
//! strictly positive, so two partitions are equal exactly when their
//! diagrams are. Boxes of a diagram are addressed 1-based as `(row, col)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a partition diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A `width x height` rectangle: at most `height` parts, each at most `width`.
///
/// In Grassmannian terms `Gr(k, n)` uses width `k` and height `n - k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    width: usize,
    height: usize,
}

impl Rectangle {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidRectangle { width, height });
        }
        Ok(Rectangle { width, height })
    }

    /// The `k x (n-k)` rectangle of `Gr(k, n)`.
    pub fn grassmannian(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "Grassmannian needs 1 <= k < n, got k={k}, n={n}"
            )));
        }
        Rectangle::new(k, n - k)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of boxes, `N = width * height`.
    pub fn area(&self) -> usize {
        self.width * self.height
    }

    /// The full rectangle as a partition.
    pub fn full(&self) -> Partition {
        Partition {
            parts: vec![self.width; self.height],
        }
    }
}

/// Builds a partition from signed parts, stripping trailing zeros.
pub fn make_partition(parts: &[i64]) -> Result<Partition> {
    if let Some((index, &value)) = parts.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NegativePart { index, value });
    }
    Partition::new(parts.iter().map(|&v| v as usize).collect::<Vec<_>>())
}

impl Partition {
    /// Builds a partition from non-increasing parts. Trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotMonotone { index });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are canonical.
    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(len, len-1, ..., 1)`.
    pub fn staircase(len: usize) -> Self {
        Partition {
            parts: (1..=len).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_r` for 1-based `r`, zero past the last part.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, `λᵀ_1`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, `λ_1`.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let mut cols = vec![0usize; self.largest()];
        for &p in &self.parts {
            for c in &mut cols[..p] {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// `λ_1 + λᵀ_1`.
    pub fn semiperimeter(&self) -> usize {
        self.largest() + self.len()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Diagram containment: `other_r <= self_r` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::OutOfDiagram {
                row: cell.row,
                col: cell.col,
            });
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .count();
        Ok(arm + leg + 1)
    }

    /// All hook lengths, row by row: `hooks[r][c]` is the hook of box `(r+1, c+1)`.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &p)| (0..p).map(|c| p - c + conj.parts[c] - r - 1).collect())
            .collect()
    }

    /// Iterates over the boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| Cell::new(r + 1, c)))
    }

    pub fn is_bounded(&self, rect: &Rectangle) -> bool {
        self.largest() <= rect.width && self.len() <= rect.height
    }

    /// The 180°-rotated complement inside `rect`.
    pub fn complement(&self, rect: &Rectangle) -> Result<Partition> {
        if !self.is_bounded(rect) {
            return Err(Error::NotBounded {
                width: rect.width,
                height: rect.height,
            });
        }
        let parts = (1..=rect.height)
            .rev()
            .map(|r| rect.width - self.part(r))
            .collect::<Vec<_>>();
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
