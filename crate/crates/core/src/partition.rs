//! Partitions, rectangles and cells.
//!
//! Diagrams use the English convention: row 1 is the top row, and both rows
//! and columns are 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell of a Young diagram, 1-based, row 1 at the top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    /// True when the two cells share an edge.
    pub fn is_adjacent(&self, other: &Cell) -> bool {
        let dr = self.row.abs_diff(other.row);
        let dc = self.col.abs_diff(other.col);
        dr + dc == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The ambient k x (n-k) rectangle that all shapes live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
}

impl Rectangle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!(
                "rectangle sides must be positive, got {rows}x{cols}"
            )));
        }
        Ok(Rectangle { rows, cols })
    }

    pub fn num_cells(&self) -> usize {
        self.rows * self.cols
    }

    /// The full rectangle as a partition: `cols` repeated `rows` times.
    pub fn as_partition(&self) -> Partition {
        Partition::new(vec![self.cols; self.rows]).expect("rectangle is a valid partition")
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl FromStr for Rectangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (rows, cols) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::ParseError(format!("rectangle must look like 6x8, got {s:?}")))?;
        let rows = rows
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::ParseError(format!("bad row count in rectangle {s:?}")))?;
        let cols = cols
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::ParseError(format!("bad column count in rectangle {s:?}")))?;
        Rectangle::new(rows, cols)
    }
}

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Trailing zeros are stripped on construction; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails if the parts are
    /// not weakly decreasing or an interior part is zero.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::ShapeMismatch(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::ShapeMismatch(format!(
                "interior zero part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `row`-th part (1-based); zero beyond the last part.
    pub fn part(&self, row: usize) -> usize {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Componentwise containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    pub fn fits(&self, rect: &Rectangle) -> bool {
        self.len() <= rect.rows && self.part(1) <= rect.cols
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.col <= self.part(cell.row)
    }

    /// The complementary partition inside `rect`: rotate the complement of
    /// the diagram by 180 degrees.
    pub fn complement(&self, rect: &Rectangle) -> Result<Partition> {
        if !self.fits(rect) {
            return Err(Error::ShapeMismatch(format!(
                "partition {self} does not fit in {rect}"
            )));
        }
        let parts = (0..rect.rows)
            .rev()
            .map(|i| rect.cols - self.part(i + 1))
            .collect();
        Partition::new(parts)
    }

    /// Removable cells: cells whose deletion leaves a partition.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Cell::new(r, self.part(r)))
            .collect()
    }

    /// Addable cells (co-corners): cells whose addition leaves a partition.
    /// Unbounded on the right and bottom; intersect with a rectangle if needed.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            if self.part(r) < self.part(r.saturating_sub(1)) || r == 1 {
                out.push(Cell::new(r, self.part(r) + 1));
            }
        }
        out
    }

    /// True when adding `cell` yields a partition.
    pub fn can_add(&self, cell: Cell) -> bool {
        cell.col == self.part(cell.row) + 1
            && (cell.row == 1 || self.part(cell.row - 1) >= cell.col)
    }

    /// The partition with `cell` added.
    pub fn with_added(&self, cell: Cell) -> Result<Partition> {
        if !self.can_add(cell) {
            return Err(Error::InvalidCell(format!(
                "cell {cell} is not addable to {self}"
            )));
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(0);
        }
        parts[cell.row - 1] += 1;
        Partition::new(parts)
    }

    /// The partition with corner `cell` removed.
    pub fn with_removed(&self, cell: Cell) -> Result<Partition> {
        if !self.corners().contains(&cell) {
            return Err(Error::InvalidCell(format!(
                "cell {cell} is not a corner of {self}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        Partition::new(parts)
    }

    /// All partitions contained in `rect`.
    pub fn all_in_rect(rect: &Rectangle) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut frontier = vec![Vec::<usize>::new()];
        while let Some(parts) = frontier.pop() {
            if parts.len() == rect.rows {
                continue;
            }
            let max = if parts.is_empty() {
                rect.cols
            } else {
                parts[parts.len() - 1]
            };
            for p in 1..=max {
                let mut next = parts.clone();
                next.push(p);
                out.push(Partition::new(next.clone()).unwrap());
                frontier.push(next);
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strings: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strings.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::ParseError(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::ParseError(e.to_string()))
    }
}
