//! Words, semistandard skew tableaux and the shared textual notation.
//!
//! A tableau prints as its rows from top to bottom separated by `/`, with `.`
//! for cells of the inner shape. Entries are juxtaposed unless some entry is
//! 10 or larger, in which case all tokens are space-separated. The empty
//! tableau prints as `-`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::shape::SkewShape;

/// A word in the alphabet of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    /// Ballot (Yamanouchi / lattice): every suffix contains at least as many
    /// `i`'s as `(i+1)`'s, for all `i`. Checked with incremental counters
    /// scanning from the right.
    pub fn is_ballot(&self) -> bool {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max + 1];
        for &v in self.0.iter().rev() {
            counts[v - 1] += 1;
            if v >= 2 && counts[v - 1] > counts[v - 2] {
                return false;
            }
        }
        true
    }

    /// Counts per value: `content()[v-1]` is the number of `v`'s.
    pub fn content(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for &v in &self.0 {
            counts[v - 1] += 1;
        }
        counts
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", strings.join(","))
    }
}

/// A semistandard filling of a skew shape: rows weakly increase left to
/// right, columns strictly increase top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    /// Entries in row-major order over `shape.cells()`.
    entries: Vec<usize>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != shape.num_cells() {
            return Err(Error::InvalidInput(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.num_cells()
            )));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidInput("entries must be positive".into()));
        }
        let t = SkewTableau { shape, entries };
        t.check_semistandard()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        SkewTableau {
            shape: SkewShape::empty(),
            entries: Vec::new(),
        }
    }

    /// The straight tableau with row `i` filled with `i`'s.
    pub fn superstandard(shape: &Partition) -> Self {
        let mut entries = Vec::with_capacity(shape.size());
        for r in 1..=shape.len() {
            entries.extend(std::iter::repeat_n(r, shape.part(r)));
        }
        SkewTableau {
            shape: SkewShape::straight(shape.clone()),
            entries,
        }
    }

    fn check_semistandard(&self) -> Result<()> {
        for cell in self.shape.cells() {
            let v = self.get(cell).unwrap();
            if let Some(right) = self.get(Cell::new(cell.row, cell.col + 1)) {
                if v > right {
                    return Err(Error::InvalidInput(format!(
                        "row {} decreases at column {}",
                        cell.row, cell.col
                    )));
                }
            }
            if let Some(below) = self.get(Cell::new(cell.row + 1, cell.col)) {
                if v >= below {
                    return Err(Error::InvalidInput(format!(
                        "column {} does not strictly increase at row {}",
                        cell.col, cell.row
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn num_cells(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn index_of(&self, cell: Cell) -> Option<usize> {
        if !self.shape.contains(cell) {
            return None;
        }
        let mut idx = 0;
        for r in 1..=cell.row - 1 {
            let (lo, hi) = self.shape.row_bounds(r);
            idx += hi - lo;
        }
        let (lo, _) = self.shape.row_bounds(cell.row);
        Some(idx + (cell.col - lo - 1))
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.index_of(cell).map(|i| self.entries[i])
    }

    /// Reading word: rows bottom to top, left to right within a row.
    pub fn reading_word(&self) -> Word {
        Word(
            self.shape
                .reading_cells()
                .into_iter()
                .map(|c| self.get(c).unwrap())
                .collect(),
        )
    }

    pub fn content(&self) -> Vec<usize> {
        self.reading_word().content()
    }

    /// The content as a partition; fails when counts are not weakly
    /// decreasing.
    pub fn content_partition(&self) -> Result<Partition> {
        Partition::new(self.content())
            .map_err(|_| Error::InvalidInput("content is not a partition".into()))
    }

    pub fn is_ballot(&self) -> bool {
        self.reading_word().is_ballot()
    }

    /// Map of cell -> entry, for the sliding engines.
    pub(crate) fn cell_map(&self) -> std::collections::BTreeMap<Cell, usize> {
        self.shape
            .cells()
            .into_iter()
            .map(|c| (c, self.get(c).unwrap()))
            .collect()
    }
}

/// Renders rows of tokens. In the wide form (some entry at least 10) tokens
/// are space-separated and rows joined with " / ", so the printed string
/// always carries whitespace and parses unambiguously.
pub(crate) fn render_rows(rows: &[Vec<String>], wide: bool) -> String {
    let (token_sep, row_sep) = if wide { (" ", " / ") } else { ("", "/") };
    rows.iter()
        .map(|row| row.join(token_sep))
        .collect::<Vec<_>>()
        .join(row_sep)
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let wide = self.entries.iter().any(|&v| v >= 10);
        let mut rows = Vec::new();
        for r in 1..=self.shape.outer().len() {
            let (lo, hi) = self.shape.row_bounds(r);
            let mut row: Vec<String> = vec![".".into(); lo];
            for c in lo + 1..=hi {
                row.push(self.get(Cell::new(r, c)).unwrap().to_string());
            }
            rows.push(row);
        }
        write!(f, "{}", render_rows(&rows, wide))
    }
}

/// Splits one textual row into tokens. `wide` selects the space-separated
/// form; it is a property of the whole tableau string, not of one row.
/// `allow_box` admits the `X` token. A juxtaposed row containing a `0` is
/// re-lexed with maximal digit runs, so a printed value like `10` survives
/// even without spaces; a space-free single-cell tableau whose entry is 11
/// or more without a zero digit reads as juxtaposed single digits.
pub(crate) fn tokenize_row(row: &str, wide: bool, allow_box: bool) -> Result<Vec<String>> {
    let tokens: Vec<String> = if wide {
        row.split_whitespace().map(|t| t.to_string()).collect()
    } else if row.contains('0') {
        let mut out = Vec::new();
        let mut digits = String::new();
        for c in row.chars() {
            if c.is_ascii_digit() {
                digits.push(c);
            } else {
                if !digits.is_empty() {
                    out.push(std::mem::take(&mut digits));
                }
                out.push(c.to_string());
            }
        }
        if !digits.is_empty() {
            out.push(digits);
        }
        out
    } else {
        row.chars().map(|c| c.to_string()).collect()
    };
    for t in &tokens {
        let ok = t == "." || (allow_box && t == "X") || t.chars().all(|c| c.is_ascii_digit());
        if !ok {
            return Err(Error::ParseError(format!("bad token {t:?} in row {row:?}")));
        }
    }
    Ok(tokens)
}

/// Parses rows of tokens into (outer, inner, entries) where entries carry an
/// optional box marker as `None`.
pub(crate) fn parse_grid(s: &str, allow_box: bool) -> Result<(SkewShape, Vec<Option<usize>>)> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok((SkewShape::empty(), Vec::new()));
    }
    let wide = s.contains(char::is_whitespace);
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut values = Vec::new();
    for row in s.split('/') {
        let tokens = tokenize_row(row.trim(), wide, allow_box)?;
        let dots = tokens.iter().take_while(|t| *t == ".").count();
        if tokens[dots..].iter().any(|t| t == ".") {
            return Err(Error::ParseError(format!(
                "inner-shape dots must be a prefix in row {row:?}"
            )));
        }
        inner.push(dots);
        outer.push(tokens.len());
        for t in &tokens[dots..] {
            if t == "X" {
                values.push(None);
            } else {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::ParseError(format!("bad entry {t:?}")))?;
                if v == 0 {
                    return Err(Error::ParseError("entries must be positive".into()));
                }
                values.push(Some(v));
            }
        }
    }
    let outer = Partition::new(outer).map_err(|e| Error::ParseError(e.to_string()))?;
    let inner = Partition::new(inner).map_err(|e| Error::ParseError(e.to_string()))?;
    let shape = SkewShape::new(outer, inner).map_err(|e| Error::ParseError(e.to_string()))?;
    Ok((shape, values))
}

impl FromStr for SkewTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (shape, values) = parse_grid(s, false)?;
        let entries = values.into_iter().map(|v| v.unwrap()).collect();
        SkewTableau::new(shape, entries).map_err(|e| Error::ParseError(e.to_string()))
    }
}

/// A nested pair of tableaux: the shape of `second` extends the shape of
/// `first`, so the pair can be shuffled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauPair {
    pub first: SkewTableau,
    pub second: SkewTableau,
}

impl TableauPair {
    pub fn new(first: SkewTableau, second: SkewTableau) -> Result<Self> {
        if !first.shape().is_extended_by(second.shape()) {
            return Err(Error::ShapeMismatch(format!(
                "shape {} does not extend shape {}",
                second.shape(),
                first.shape()
            )));
        }
        Ok(TableauPair { first, second })
    }
}
