//! Punctured tableaux: a skew filling with one marked empty cell (the box).
//!
//! Internally the box cell stores the value 0 and every real entry is
//! positive. Equality and ordering see the whole grid, so two punctured
//! tableaux are equal exactly when shape, box position and entries agree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::shape::SkewShape;
use crate::tableau::{parse_grid, render_rows, SkewTableau, Word};

/// Classification of the suffix after the box for a value pair `(i, i+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuffixStatus {
    /// Strictly more `i`'s than `(i+1)`'s.
    BallotStrict,
    /// Equal counts.
    Tied,
    /// Fewer `i`'s than `(i+1)`'s.
    Violating,
}

/// A skew shape filled semistandardly except for a single empty marked cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PuncturedTableau {
    shape: SkewShape,
    /// Row-major values over `shape.cells()`; the box cell holds 0.
    values: Vec<usize>,
}

impl PuncturedTableau {
    pub fn new(shape: SkewShape, values: Vec<usize>) -> Result<Self> {
        if values.len() != shape.num_cells() {
            return Err(Error::InvalidInput(format!(
                "{} values for a shape with {} cells",
                values.len(),
                shape.num_cells()
            )));
        }
        let zeros = values.iter().filter(|&&v| v == 0).count();
        if zeros != 1 {
            return Err(Error::InvalidInput(format!(
                "expected exactly one box, found {zeros}"
            )));
        }
        Ok(PuncturedTableau { shape, values })
    }

    /// Builds a punctured tableau from a box cell and the tableau of the
    /// remaining entries, which must live on the same shape minus that cell.
    pub fn from_box_and_tableau(shape: SkewShape, box_cell: Cell, t: &SkewTableau) -> Result<Self> {
        let mut values = Vec::with_capacity(shape.num_cells());
        for cell in shape.cells() {
            if cell == box_cell {
                values.push(0);
            } else {
                values.push(t.get(cell).ok_or_else(|| {
                    Error::InvalidInput(format!("missing entry at {cell}"))
                })?);
            }
        }
        PuncturedTableau::new(shape, values)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    fn index_of(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains(cell) {
            return None;
        }
        let mut idx = 0;
        for r in 1..cell.row {
            let (lo, hi) = self.shape.row_bounds(r);
            idx += hi - lo;
        }
        let (lo, _) = self.shape.row_bounds(cell.row);
        Some(idx + (cell.col - lo - 1))
    }

    fn box_index(&self) -> usize {
        self.values.iter().position(|&v| v == 0).unwrap()
    }

    pub fn box_cell(&self) -> Cell {
        self.shape.cells()[self.box_index()]
    }

    /// Entry at `cell`: `None` if outside the shape or at the box.
    pub fn get(&self, cell: Cell) -> Option<usize> {
        match self.index_of(cell) {
            Some(i) if self.values[i] > 0 => Some(self.values[i]),
            _ => None,
        }
    }

    /// Reading word of the entries, skipping the box.
    pub fn reading_word(&self) -> Word {
        Word(
            self.shape
                .reading_cells()
                .into_iter()
                .filter_map(|c| self.get(c))
                .collect(),
        )
    }

    pub fn content(&self) -> Vec<usize> {
        self.reading_word().content()
    }

    /// Largest entry value; 0 when the tableau has no entries.
    pub fn max_value(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// Cells in reading order paired with values, the box reading as `None`.
    fn reading_sequence(&self) -> Vec<(Cell, Option<usize>)> {
        self.shape
            .reading_cells()
            .into_iter()
            .map(|c| {
                let i = self.index_of(c).unwrap();
                let v = self.values[i];
                (c, if v == 0 { None } else { Some(v) })
            })
            .collect()
    }

    /// True when no entry equal to `v` occurs before the box in reading
    /// order.
    pub fn box_precedes_all(&self, v: usize) -> bool {
        for (_, val) in self.reading_sequence() {
            match val {
                None => return true,
                Some(x) if x == v => return false,
                _ => {}
            }
        }
        true
    }

    /// The nearest cell holding `v` before the box in reading order.
    pub fn nearest_prior(&self, v: usize) -> Option<Cell> {
        let mut last = None;
        for (cell, val) in self.reading_sequence() {
            match val {
                None => return last,
                Some(x) if x == v => last = Some(cell),
                _ => {}
            }
        }
        last
    }

    /// The nearest cell holding `v` after the box in reading order.
    pub fn nearest_after(&self, v: usize) -> Option<Cell> {
        let mut seen_box = false;
        for (cell, val) in self.reading_sequence() {
            match val {
                None => seen_box = true,
                Some(x) if x == v && seen_box => return Some(cell),
                _ => {}
            }
        }
        None
    }

    /// The last cell holding `v` in reading order.
    pub fn last_in_reading(&self, v: usize) -> Option<Cell> {
        let mut last = None;
        for (cell, val) in self.reading_sequence() {
            if val == Some(v) {
                last = Some(cell);
            }
        }
        last
    }

    /// Counts of `i` and `i+1` strictly after the box in reading order.
    pub fn suffix_counts(&self, i: usize) -> (usize, usize) {
        let mut seen_box = false;
        let (mut a, mut b) = (0, 0);
        for (_, val) in self.reading_sequence() {
            match val {
                None => seen_box = true,
                Some(x) if seen_box => {
                    if x == i {
                        a += 1;
                    } else if x == i + 1 {
                        b += 1;
                    }
                }
                _ => {}
            }
        }
        (a, b)
    }

    /// Status of the suffix after the box for the pair `(i, i+1)`.
    pub fn suffix_tie_status(&self, i: usize) -> SuffixStatus {
        let (a, b) = self.suffix_counts(i);
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => SuffixStatus::BallotStrict,
            std::cmp::Ordering::Equal => SuffixStatus::Tied,
            std::cmp::Ordering::Less => SuffixStatus::Violating,
        }
    }

    /// Swaps the box with the entry at `cell`, returning the moved value.
    pub fn swap_box(&mut self, cell: Cell) -> Result<usize> {
        let bi = self.box_index();
        let ci = self
            .index_of(cell)
            .ok_or_else(|| Error::InvalidCell(format!("{cell} outside shape")))?;
        if self.values[ci] == 0 {
            return Err(Error::InvalidCell(format!("{cell} is the box")));
        }
        self.values.swap(bi, ci);
        Ok(self.values[bi])
    }

    /// The tableau with the box replaced by `v`. Validates semistandardness.
    pub fn fill_box(&self, v: usize) -> Result<SkewTableau> {
        let mut entries = self.values.clone();
        entries[self.box_index()] = v;
        SkewTableau::new(self.shape.clone(), entries)
    }

    /// Rows weakly increase and columns strictly increase when the box is
    /// skipped, and the reading word is ballot. This is the validity
    /// condition preserved by every step of local evacuation-shuffling.
    pub fn is_valid_state(&self) -> bool {
        for r in 1..=self.shape.outer().len() {
            let (lo, hi) = self.shape.row_bounds(r);
            let mut prev = None;
            for c in lo + 1..=hi {
                if let Some(v) = self.get(Cell::new(r, c)) {
                    if prev.is_some_and(|p| p > v) {
                        return false;
                    }
                    prev = Some(v);
                }
            }
        }
        let max_col = self.shape.outer().part(1);
        for col in 1..=max_col {
            let mut prev = None;
            for r in 1..=self.shape.outer().len() {
                if let Some(v) = self.get(Cell::new(r, col)) {
                    if prev.is_some_and(|p| p >= v) {
                        return false;
                    }
                    prev = Some(v);
                }
            }
        }
        self.reading_word().is_ballot()
    }

    /// True when the box could be the marked cell of an element of
    /// `LR(alpha, box, beta, gamma)`: it has no in-shape neighbor to the left
    /// or above, so the cell extends the inner shape.
    pub fn box_extends_inner(&self) -> bool {
        let b = self.box_cell();
        (b.col == 1 || !self.shape.contains(Cell::new(b.row, b.col - 1)))
            && (b.row == 1 || !self.shape.contains(Cell::new(b.row - 1, b.col)))
    }

    /// True when the box sits at an outer corner: no in-shape neighbor to the
    /// right or below, as for elements of `LR(alpha, beta, box, gamma)`.
    pub fn box_at_outer_corner(&self) -> bool {
        let b = self.box_cell();
        !self.shape.contains(Cell::new(b.row, b.col + 1))
            && !self.shape.contains(Cell::new(b.row + 1, b.col))
    }

    /// Full membership test for `LR(alpha, box, beta, gamma)`.
    pub fn is_lr_start(&self) -> bool {
        self.box_extends_inner() && self.is_valid_state()
    }

    /// Full membership test for `LR(alpha, beta, box, gamma)`.
    pub fn is_lr_end(&self) -> bool {
        self.box_at_outer_corner() && self.is_valid_state()
    }

    /// Membership in the intermediate set `X_i`: valid state with the box
    /// between the `(i-1)`-st and `i`-th horizontal strips, meaning in-shape
    /// neighbors left/above the box are `< i` and right/below are `>= i`.
    pub fn is_between_strips(&self, i: usize) -> bool {
        if !self.is_valid_state() {
            return false;
        }
        let b = self.box_cell();
        let left = if b.col > 1 {
            self.get(Cell::new(b.row, b.col - 1))
        } else {
            None
        };
        let above = if b.row > 1 {
            self.get(Cell::new(b.row - 1, b.col))
        } else {
            None
        };
        let right = self.get(Cell::new(b.row, b.col + 1));
        let below = self.get(Cell::new(b.row + 1, b.col));
        left.is_none_or(|v| v < i)
            && above.is_none_or(|v| v < i)
            && right.is_none_or(|v| v >= i)
            && below.is_none_or(|v| v >= i)
    }

    /// One backward jeu de taquin slide of the box: entries above or to the
    /// left slide into the hole (the larger one; the one above on ties) until
    /// the box has no such neighbor. Returns the visited cells.
    pub fn slide_box_back(&mut self) -> Vec<Cell> {
        self.slide_box_back_while(|_| true)
    }

    /// Backward slide restricted to moves that would pull a value accepted by
    /// `keep`. Stops before the first refused move.
    pub fn slide_box_back_while<F: Fn(usize) -> bool>(&mut self, keep: F) -> Vec<Cell> {
        let mut path = vec![self.box_cell()];
        loop {
            let b = self.box_cell();
            let above = if b.row > 1 {
                self.get(Cell::new(b.row - 1, b.col))
            } else {
                None
            };
            let left = if b.col > 1 {
                self.get(Cell::new(b.row, b.col - 1))
            } else {
                None
            };
            let from = match (above, left) {
                (None, None) => break,
                (Some(_), None) => Cell::new(b.row - 1, b.col),
                (None, Some(_)) => Cell::new(b.row, b.col - 1),
                (Some(a), Some(l)) => {
                    if a >= l {
                        Cell::new(b.row - 1, b.col)
                    } else {
                        Cell::new(b.row, b.col - 1)
                    }
                }
            };
            if !keep(self.get(from).unwrap()) {
                break;
            }
            self.swap_box(from).unwrap();
            path.push(from);
        }
        path
    }

    /// One forward jeu de taquin slide of the box: entries to the right or
    /// below slide into the hole (the smaller one; the one below on ties).
    pub fn slide_box_forward(&mut self) -> Vec<Cell> {
        self.slide_box_forward_while(|_| true)
    }

    /// Forward slide restricted to moves pulling a value accepted by `keep`.
    pub fn slide_box_forward_while<F: Fn(usize) -> bool>(&mut self, keep: F) -> Vec<Cell> {
        let mut path = vec![self.box_cell()];
        loop {
            let b = self.box_cell();
            let right = self.get(Cell::new(b.row, b.col + 1));
            let below = self.get(Cell::new(b.row + 1, b.col));
            let from = match (right, below) {
                (None, None) => break,
                (Some(_), None) => Cell::new(b.row, b.col + 1),
                (None, Some(_)) => Cell::new(b.row + 1, b.col),
                (Some(r), Some(d)) => {
                    if d <= r {
                        Cell::new(b.row + 1, b.col)
                    } else {
                        Cell::new(b.row, b.col + 1)
                    }
                }
            };
            if !keep(self.get(from).unwrap()) {
                break;
            }
            self.swap_box(from).unwrap();
            path.push(from);
        }
        path
    }
}

impl fmt::Display for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.values.iter().any(|&v| v >= 10);
        let mut rows = Vec::new();
        for r in 1..=self.shape.outer().len() {
            let (lo, hi) = self.shape.row_bounds(r);
            let mut row: Vec<String> = vec![".".into(); lo];
            for c in lo + 1..=hi {
                let i = self.index_of(Cell::new(r, c)).unwrap();
                row.push(match self.values[i] {
                    0 => "X".into(),
                    v => v.to_string(),
                });
            }
            rows.push(row);
        }
        write!(f, "{}", render_rows(&rows, wide))
    }
}

impl FromStr for PuncturedTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (shape, values) = parse_grid(s, true)?;
        let values: Vec<usize> = values.into_iter().map(|v| v.unwrap_or(0)).collect();
        PuncturedTableau::new(shape, values).map_err(|e| Error::ParseError(e.to_string()))
    }
}
