//! Skew shapes and their corner sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// A skew shape `outer/inner`: the cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// The four boundary cell sets of a skew shape.
///
/// Corners are cells of the shape whose deletion leaves a skew shape: inner
/// corners are the corners of the outer partition, outer corners the addable
/// cells of the inner partition. Co-corners are exterior cells whose addition
/// leaves a skew shape: inner co-corners are the addable cells of the outer
/// partition, outer co-corners the corners of the inner partition. The sets
/// need not be disjoint; a one-cell row is both an inner and an outer corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSets {
    pub inner_corners: Vec<Cell>,
    pub outer_corners: Vec<Cell>,
    pub inner_cocorners: Vec<Cell>,
    pub outer_cocorners: Vec<Cell>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeMismatch(format!(
                "inner shape {inner} not contained in outer shape {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn empty() -> Self {
        SkewShape::straight(Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_cells(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.num_cells() == 0
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.outer.has_cell(cell) && !self.inner.has_cell(cell)
    }

    /// Column interval of row `r`, as `inner_r..outer_r` (0-based exclusive
    /// start is `inner_r`, cells are `inner_r+1 ..= outer_r`).
    pub fn row_bounds(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    /// Cells in row-major order: top row first, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.num_cells());
        for r in 1..=self.outer.len() {
            let (lo, hi) = self.row_bounds(r);
            for c in lo + 1..=hi {
                out.push(Cell::new(r, c));
            }
        }
        out
    }

    /// Cells in reading order: bottom row first, left to right within a row.
    pub fn reading_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.num_cells());
        for r in (1..=self.outer.len()).rev() {
            let (lo, hi) = self.row_bounds(r);
            for c in lo + 1..=hi {
                out.push(Cell::new(r, c));
            }
        }
        out
    }

    /// The four corner sets.
    pub fn corner_sets(&self) -> CornerSets {
        let in_shape = |c: &Cell| self.contains(*c);
        CornerSets {
            inner_corners: self.outer.corners().into_iter().filter(in_shape).collect(),
            outer_corners: self
                .inner
                .addable_cells()
                .into_iter()
                .filter(in_shape)
                .collect(),
            inner_cocorners: self.outer.addable_cells(),
            outer_cocorners: self.inner.corners(),
        }
    }

    /// True when `ext` extends `self`: the cell sets are disjoint, their union
    /// is a skew shape, and within it `self` occupies the inner region.
    pub fn is_extended_by(&self, ext: &SkewShape) -> bool {
        let max_rows = self.outer.len().max(ext.outer.len());
        // Per-row boundaries of the union shape lam/mu, with mid the boundary
        // between the two regions. None where both rows are empty.
        let mut bounds: Vec<Option<(usize, usize, usize)>> = Vec::with_capacity(max_rows);
        for r in 1..=max_rows {
            let (a_lo, a_hi) = self.row_bounds(r);
            let (b_lo, b_hi) = ext.row_bounds(r);
            let a_present = a_hi > a_lo;
            let b_present = b_hi > b_lo;
            bounds.push(match (a_present, b_present) {
                (true, true) => {
                    if b_lo != a_hi {
                        return false;
                    }
                    Some((a_lo, a_hi, b_hi))
                }
                (true, false) => Some((a_lo, a_hi, a_hi)),
                (false, true) => Some((b_lo, b_lo, b_hi)),
                (false, false) => None,
            });
        }
        // Fill rows that are empty in both shapes with the tightest lower
        // bound from below; a consistent choice exists iff this one works.
        let mut fill = 0usize;
        let mut resolved = Vec::with_capacity(max_rows);
        for r in (0..max_rows).rev() {
            match bounds[r] {
                Some(b) => {
                    fill = b.2;
                    resolved.push(b);
                }
                None => resolved.push((fill, fill, fill)),
            }
        }
        resolved.reverse();
        resolved.windows(2).all(|w| {
            let (mu0, mid0, lam0) = w[0];
            let (mu1, mid1, lam1) = w[1];
            mu0 >= mu1 && mid0 >= mid1 && lam0 >= lam1
        })
    }

    /// Reconstructs a skew shape from an explicit cell set. Rows must be
    /// contiguous intervals and the implied boundaries must be partitions.
    /// Rows without cells take the minimal consistent boundary.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Result<SkewShape> {
        if cells.is_empty() {
            return Ok(SkewShape::empty());
        }
        let max_row = cells.iter().map(|c| c.row).max().unwrap();
        let mut lo = vec![None; max_row];
        let mut hi = vec![None; max_row];
        let mut count = vec![0usize; max_row];
        for c in cells {
            let r = c.row - 1;
            lo[r] = Some(lo[r].map_or(c.col, |v: usize| v.min(c.col)));
            hi[r] = Some(hi[r].map_or(c.col, |v: usize| v.max(c.col)));
            count[r] += 1;
        }
        for r in 0..max_row {
            if let (Some(l), Some(h)) = (lo[r], hi[r]) {
                if h - l + 1 != count[r] {
                    return Err(Error::ShapeMismatch(format!(
                        "cells in row {} are not contiguous",
                        r + 1
                    )));
                }
            }
        }
        let mut lam = vec![0usize; max_row];
        let mut mu = vec![0usize; max_row];
        let mut below = 0usize;
        for r in (0..max_row).rev() {
            match hi[r] {
                Some(h) => {
                    lam[r] = h;
                    below = h;
                }
                None => lam[r] = below,
            }
        }
        for r in (0..max_row).rev() {
            match lo[r] {
                Some(l) => mu[r] = l - 1,
                // a row with no cells is fully inner
                None => mu[r] = lam[r],
            }
        }
        let outer = Partition::new(lam)
            .map_err(|_| Error::ShapeMismatch("cell set has no partition outer boundary".into()))?;
        let inner = Partition::new(mu)
            .map_err(|_| Error::ShapeMismatch("cell set has no partition inner boundary".into()))?;
        let shape = SkewShape::new(outer, inner)?;
        if shape.num_cells() != cells.len() {
            return Err(Error::ShapeMismatch(
                "cell set is not the diagram of a skew shape".into(),
            ));
        }
        Ok(shape)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn corner_sets_of_single_row() {
        let s = shape(&[2], &[]);
        let cs = s.corner_sets();
        assert_eq!(cs.inner_corners, vec![Cell::new(1, 2)]);
        assert_eq!(cs.outer_corners, vec![Cell::new(1, 1)]);
        assert_eq!(cs.inner_cocorners, vec![Cell::new(1, 3), Cell::new(2, 1)]);
        assert!(cs.outer_cocorners.is_empty());
    }

    #[test]
    fn corner_sets_of_hook() {
        let s = shape(&[3, 1], &[1]);
        let cs = s.corner_sets();
        assert_eq!(cs.inner_corners, vec![Cell::new(1, 3), Cell::new(2, 1)]);
        assert_eq!(
            cs.inner_cocorners,
            vec![Cell::new(1, 4), Cell::new(2, 2), Cell::new(3, 1)]
        );
    }

    #[test]
    fn corner_sets_of_empty_shape() {
        let s = SkewShape::empty();
        let cs = s.corner_sets();
        assert!(cs.inner_corners.is_empty());
        assert!(cs.outer_corners.is_empty());
        assert!(cs.outer_cocorners.is_empty());
        assert_eq!(cs.inner_cocorners, vec![Cell::new(1, 1)]);
    }

    #[test]
    fn deleting_corners_and_adding_cocorners_keeps_shapes_valid() {
        for outer in Partition::all_in_rect(&crate::partition::Rectangle::new(3, 3).unwrap()) {
            for inner in Partition::all_in_rect(&crate::partition::Rectangle::new(3, 3).unwrap()) {
                let Ok(s) = SkewShape::new(outer.clone(), inner.clone()) else {
                    continue;
                };
                let cs = s.corner_sets();
                for c in cs.inner_corners {
                    SkewShape::new(s.outer().with_removed(c).unwrap(), s.inner().clone()).unwrap();
                }
                for c in cs.outer_corners {
                    SkewShape::new(s.outer().clone(), s.inner().with_added(c).unwrap()).unwrap();
                }
                for c in cs.inner_cocorners {
                    SkewShape::new(s.outer().with_added(c).unwrap(), s.inner().clone()).unwrap();
                }
                for c in cs.outer_cocorners {
                    SkewShape::new(s.outer().clone(), s.inner().with_removed(c).unwrap()).unwrap();
                }
            }
        }
    }

    #[test]
    fn reading_cells_order() {
        let s = shape(&[3, 2], &[1]);
        assert_eq!(
            s.reading_cells(),
            vec![
                Cell::new(2, 1),
                Cell::new(2, 2),
                Cell::new(1, 2),
                Cell::new(1, 3)
            ]
        );
    }

    #[test]
    fn from_cells_roundtrip() {
        let s = shape(&[3, 3, 1], &[2]);
        let cells: BTreeSet<Cell> = s.cells().into_iter().collect();
        let back = SkewShape::from_cells(&cells).unwrap();
        assert_eq!(back.cells(), s.cells());
    }

    #[test]
    fn from_cells_with_empty_top_row() {
        // cells only in row 2: minimal representation picks (1,1)/(1) boundaries
        let cells: BTreeSet<Cell> = [Cell::new(2, 1)].into_iter().collect();
        let s = SkewShape::from_cells(&cells).unwrap();
        assert_eq!(s.cells(), vec![Cell::new(2, 1)]);
    }

    #[test]
    fn from_cells_rejects_ragged_rows() {
        let cells: BTreeSet<Cell> = [Cell::new(1, 1), Cell::new(1, 3)].into_iter().collect();
        assert!(SkewShape::from_cells(&cells).is_err());
    }

    #[test]
    fn extends() {
        let a = shape(&[2], &[]);
        let b = shape(&[3, 1], &[2]);
        assert!(a.is_extended_by(&b));
        // union would need the non-partition inner boundary (0,1)
        let c = shape(&[3, 2], &[2, 1]);
        assert!(!a.is_extended_by(&c));
    }

    #[test]
    fn extends_requires_adjacency() {
        let a = shape(&[2], &[]);
        let gap = shape(&[4], &[3]);
        assert!(!a.is_extended_by(&gap));
    }
}
