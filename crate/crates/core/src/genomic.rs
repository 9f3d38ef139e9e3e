//! Ballot genomic tableaux and the two path-gap bijections.
//!
//! A genomic tableau is a semistandard filling whose content is the target
//! content plus one extra letter `i`, together with a marked pair of
//! non-adjacent `i`-cells that are consecutive among the `i`'s in reading
//! order and whose deletion (either one) leaves a ballot word. The jumps of
//! the evacu-shuffle path produce exactly these, once each per phase.

use std::collections::BTreeMap;
use std::fmt;

use crate::enumerate::{enumerate_fillings, BallotMode, FillSpec};
use crate::error::{Error, Result};
use crate::localesh::EvacPath;
use crate::monodromy::ProblemInstance;
use crate::partition::Cell;
use crate::punctured::PuncturedTableau;
use crate::tableau::{render_rows, SkewTableau, Word};

/// A tableau with one repeated marked letter, counted by the K-theoretic
/// coefficient of the problem.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenomicTableau {
    tableau: SkewTableau,
    marked: (Cell, Cell),
    extra: usize,
}

impl GenomicTableau {
    /// Validates the full criterion and builds the tableau. The marked pair
    /// is stored in row-major order.
    pub fn new(tableau: SkewTableau, pair: (Cell, Cell)) -> Result<Self> {
        if !is_genomic(&tableau, pair)? {
            return Err(Error::InvalidInput(format!(
                "cells {} and {} do not mark a genomic tableau in {tableau}",
                pair.0, pair.1
            )));
        }
        let extra = tableau.get(pair.0).unwrap();
        let marked = if pair.0 <= pair.1 {
            (pair.0, pair.1)
        } else {
            (pair.1, pair.0)
        };
        Ok(GenomicTableau {
            tableau,
            marked,
            extra,
        })
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn marked(&self) -> (Cell, Cell) {
        self.marked
    }

    /// The repeated letter.
    pub fn extra_entry(&self) -> usize {
        self.extra
    }

    /// Sort key used for canonical output order: reading word, then marked
    /// cells.
    pub fn canonical_key(&self) -> (Word, (Cell, Cell)) {
        (self.tableau.reading_word(), self.marked)
    }
}

impl fmt::Display for GenomicTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shape = self.tableau.shape();
        let wide = self.tableau.entries().iter().any(|&v| v >= 10);
        let mut rows = Vec::new();
        for r in 1..=shape.outer().len() {
            let (lo, hi) = shape.row_bounds(r);
            let mut row: Vec<String> = vec![".".into(); lo];
            for c in lo + 1..=hi {
                let cell = Cell::new(r, c);
                let v = self.tableau.get(cell).unwrap();
                if cell == self.marked.0 || cell == self.marked.1 {
                    row.push(format!("[{v}]"));
                } else {
                    row.push(v.to_string());
                }
            }
            rows.push(row);
        }
        write!(f, "{}", render_rows(&rows, wide))
    }
}

/// The ballot-genomic criterion for a marked pair: the cells are
/// non-adjacent and hold the same letter, no further copy of that letter
/// lies between them in reading order, and deleting either one from the
/// reading word leaves a ballot word.
pub fn is_genomic(t: &SkewTableau, pair: (Cell, Cell)) -> Result<bool> {
    for cell in [pair.0, pair.1] {
        if t.get(cell).is_none() {
            return Err(Error::InvalidCell(format!(
                "marked cell {cell} outside shape {}",
                t.shape()
            )));
        }
    }
    let (a, b) = pair;
    if a == b || a.is_adjacent(&b) {
        return Ok(false);
    }
    let va = t.get(a).unwrap();
    if va != t.get(b).unwrap() {
        return Ok(false);
    }
    let reading = t.shape().reading_cells();
    let pos_a = reading.iter().position(|&c| c == a).unwrap();
    let pos_b = reading.iter().position(|&c| c == b).unwrap();
    let (lo, hi) = if pos_a < pos_b {
        (pos_a, pos_b)
    } else {
        (pos_b, pos_a)
    };
    if reading[lo + 1..hi]
        .iter()
        .any(|&c| t.get(c).unwrap() == va)
    {
        return Ok(false);
    }
    for skip in [lo, hi] {
        let word = Word(
            reading
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &c)| t.get(c).unwrap())
                .collect(),
        );
        if !word.is_ballot() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set `K` of a problem, refined by extra entry.
#[derive(Debug, Clone, Default)]
pub struct GenomicSet {
    by_extra: BTreeMap<usize, Vec<GenomicTableau>>,
}

impl GenomicSet {
    pub fn total(&self) -> usize {
        self.by_extra.values().map(|v| v.len()).sum()
    }

    pub fn with_extra(&self, i: usize) -> &[GenomicTableau] {
        self.by_extra.get(&i).map_or(&[], |v| v.as_slice())
    }

    pub fn groups(&self) -> impl Iterator<Item = (usize, &[GenomicTableau])> {
        self.by_extra.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &GenomicTableau> {
        self.by_extra.values().flatten()
    }

    fn insert(&mut self, g: GenomicTableau) {
        self.by_extra.entry(g.extra).or_default().push(g);
    }
}

/// Enumerates all ballot genomic tableaux of the instance's shape and
/// content, grouped by extra entry and canonically ordered.
pub fn enumerate_genomic(instance: &ProblemInstance) -> Result<GenomicSet> {
    enumerate_genomic_limited(instance, None)
}

pub fn enumerate_genomic_limited(
    instance: &ProblemInstance,
    limit: Option<usize>,
) -> Result<GenomicSet> {
    let mut set = GenomicSet::default();
    let Some(shape) = instance.total_shape() else {
        return Ok(set);
    };
    let beta = instance.beta();
    for i in 1..=beta.len() {
        let mut content: Vec<usize> = beta.parts().to_vec();
        content[i - 1] += 1;
        let spec = FillSpec {
            shape: &shape,
            hole: None,
            content: &content,
            ballot: BallotMode::Relaxed { extra: i },
            limit,
        };
        for values in enumerate_fillings(&spec)? {
            let t = SkewTableau::new(shape.clone(), values)?;
            // marked pairs are consecutive i-cells in reading order
            let i_cells: Vec<Cell> = shape
                .reading_cells()
                .into_iter()
                .filter(|&c| t.get(c) == Some(i))
                .collect();
            for w in i_cells.windows(2) {
                if !w[0].is_adjacent(&w[1]) && is_genomic(&t, (w[0], w[1]))? {
                    set.insert(GenomicTableau::new(t.clone(), (w[0], w[1]))?);
                }
            }
        }
    }
    for group in set.by_extra.values_mut() {
        group.sort_by_key(|g| g.canonical_key());
    }
    Ok(set)
}

fn path_genomics(
    path: &EvacPath,
    p: &PuncturedTableau,
    want_phase1: bool,
) -> Result<Vec<GenomicTableau>> {
    if path.start != p.box_cell() {
        return Err(Error::InvalidInput(
            "path does not start at the box of the given tableau".into(),
        ));
    }
    let mut cur = p.clone();
    let mut out = Vec::new();
    for step in &path.steps {
        if cur.box_cell() != step.from {
            return Err(Error::InvalidInput(format!(
                "path step at {} does not match the current box position",
                step.from
            )));
        }
        if step.kind.is_jump() && step.kind.is_phase1() == want_phase1 {
            let filled = cur.fill_box(step.value).map_err(|_| {
                Error::InvariantViolation("jump tableau is not semistandard".into())
            })?;
            out.push(GenomicTableau::new(filled, (step.from, step.to)).map_err(|_| {
                Error::InvariantViolation(format!(
                    "jump {} does not produce a genomic tableau",
                    step
                ))
            })?);
        }
        let moved = cur.swap_box(step.to)?;
        if moved != step.value {
            return Err(Error::InvalidInput(format!(
                "path step {step} exchanged {moved}"
            )));
        }
    }
    Ok(out)
}

/// Genomic tableaux generated by the Phase 1 jumps of a path: for each such
/// jump, the pre-step tableau with the box replaced by the exchanged letter,
/// marked at the two cells of the jump.
pub fn phi1(path: &EvacPath, p: &PuncturedTableau) -> Result<Vec<GenomicTableau>> {
    path_genomics(path, p, true)
}

/// Genomic tableaux generated by the Phase 2 jumps of a path.
pub fn phi2(path: &EvacPath, p: &PuncturedTableau) -> Result<Vec<GenomicTableau>> {
    path_genomics(path, p, false)
}

/// All moves of the path are edge moves, so the box path is connected.
pub fn path_is_connected(path: &EvacPath) -> bool {
    path.steps.iter().all(|s| !s.kind.is_jump())
}
