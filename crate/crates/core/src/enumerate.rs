//! Backtracking enumeration of fillings with prescribed content.
//!
//! Cells are filled in reverse reading order (top row first, right to left
//! within a row), so the reading word grows from its last letter backward and
//! suffix-ballot violations prune immediately. An optional hole cell is
//! skipped; comparisons jump across it and its neighbors are clamped by the
//! hole bounds, which is exactly the membership condition for the
//! intermediate sets of the factorization.

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::shape::SkewShape;

/// Ballot discipline applied to the growing suffix.
#[derive(Debug, Clone, Copy)]
pub(crate) enum BallotMode {
    /// Every suffix must be ballot.
    Strict,
    /// Suffixes may fall short by one for the pair `(extra-1, extra)`; used
    /// when enumerating contents with one repeated letter.
    Relaxed { extra: usize },
}

pub(crate) struct FillSpec<'a> {
    pub shape: &'a SkewShape,
    /// Skipped cell, with bounds: in-shape neighbors left/above it must be
    /// `< after_min`... strictly, `<= before_max`; right/below `>= after_min`.
    pub hole: Option<(Cell, usize, usize)>, // (cell, before_max, after_min)
    /// Target counts: `content[v-1]` copies of `v`.
    pub content: &'a [usize],
    pub ballot: BallotMode,
    /// Abort with `LimitExceeded` when more results would be produced.
    pub limit: Option<usize>,
}

struct Search<'a> {
    spec: &'a FillSpec<'a>,
    /// Cells in fill order with the hole removed.
    order: Vec<Cell>,
    grid: std::collections::HashMap<Cell, usize>,
    counts: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn value_ok(&self, v: usize) -> bool {
        if v < 2 {
            return true;
        }
        let slack = match self.spec.ballot {
            BallotMode::Strict => 0,
            BallotMode::Relaxed { extra } => usize::from(v == extra),
        };
        // counts are pre-increment: placing v must keep the pair in balance
        self.counts[v - 1] < self.counts[v - 2] + slack
    }

    /// Effective right neighbor value and upper clamp for `cell`, looking
    /// across the hole.
    fn upper_bound(&self, cell: Cell) -> usize {
        let mut hi = self.spec.content.len();
        let right = Cell::new(cell.row, cell.col + 1);
        match self.spec.hole {
            Some((h, before_max, _)) if h == right => {
                hi = hi.min(before_max);
                let across = Cell::new(cell.row, cell.col + 2);
                if let Some(&v) = self.grid.get(&across) {
                    hi = hi.min(v);
                }
            }
            _ => {
                if let Some(&v) = self.grid.get(&right) {
                    hi = hi.min(v);
                }
            }
        }
        if let Some((h, before_max, _)) = self.spec.hole {
            // cell directly above the hole must respect the upper clamp
            if h == Cell::new(cell.row + 1, cell.col) {
                hi = hi.min(before_max);
            }
        }
        hi
    }

    /// Effective lower bound from the cell above, looking across the hole.
    fn lower_bound(&self, cell: Cell) -> usize {
        let mut lo = 1usize;
        if cell.row > 1 {
            let above = Cell::new(cell.row - 1, cell.col);
            match self.spec.hole {
                Some((h, _, after_min)) if h == above => {
                    lo = lo.max(after_min);
                    if cell.row > 2 {
                        if let Some(&v) = self.grid.get(&Cell::new(cell.row - 2, cell.col)) {
                            lo = lo.max(v + 1);
                        }
                    }
                }
                _ => {
                    if let Some(&v) = self.grid.get(&above) {
                        lo = lo.max(v + 1);
                    }
                }
            }
        }
        if let Some((h, _, after_min)) = self.spec.hole {
            // cell directly right of the hole
            if cell.col > 1 && h == Cell::new(cell.row, cell.col - 1) {
                lo = lo.max(after_min);
            }
        }
        lo
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        if depth == self.order.len() {
            if self
                .counts
                .iter()
                .zip(self.spec.content.iter())
                .all(|(a, b)| a == b)
            {
                if let Some(limit) = self.spec.limit {
                    if self.out.len() >= limit {
                        return Err(Error::LimitExceeded(format!(
                            "more than {limit} fillings"
                        )));
                    }
                }
                let values = self
                    .spec
                    .shape
                    .cells()
                    .into_iter()
                    .map(|c| self.grid.get(&c).copied().unwrap_or(0))
                    .collect();
                self.out.push(values);
            }
            return Ok(());
        }
        let cell = self.order[depth];
        let lo = self.lower_bound(cell);
        let hi = self.upper_bound(cell);
        for v in lo..=hi.min(self.spec.content.len()) {
            if self.counts[v - 1] >= self.spec.content[v - 1] || !self.value_ok(v) {
                continue;
            }
            self.counts[v - 1] += 1;
            self.grid.insert(cell, v);
            let res = self.run(depth + 1);
            self.grid.remove(&cell);
            self.counts[v - 1] -= 1;
            res?;
        }
        Ok(())
    }
}

/// Enumerates all fillings matching `spec`, as row-major value vectors with
/// 0 at the hole. Results come out in a deterministic order.
pub(crate) fn enumerate_fillings(spec: &FillSpec<'_>) -> Result<Vec<Vec<usize>>> {
    let total: usize = spec.content.iter().sum();
    let holes = usize::from(spec.hole.is_some());
    if total + holes != spec.shape.num_cells() {
        return Ok(Vec::new());
    }
    // reverse reading order: top row first, right to left
    let mut order: Vec<Cell> = Vec::with_capacity(total);
    for r in 1..=spec.shape.outer().len() {
        let (lo, hi) = spec.shape.row_bounds(r);
        for c in (lo + 1..=hi).rev() {
            order.push(Cell::new(r, c));
        }
    }
    if let Some((h, _, _)) = spec.hole {
        order.retain(|&c| c != h);
    }
    let mut search = Search {
        spec,
        order,
        grid: std::collections::HashMap::new(),
        counts: vec![0; spec.content.len()],
        out: Vec::new(),
    };
    search.run(0)?;
    Ok(search.out)
}
