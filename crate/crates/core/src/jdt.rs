//! Jeu de taquin: elementary slides, shuffles, rectification, and
//! evacuation-shuffling computed through rectification.
//!
//! Slides use the standard semistandard rules. Inward slide: of the hole's
//! right and below neighbors, the smaller moves in; on ties the one below
//! moves (the only choice that keeps columns strict). Outward slide: of the
//! above and left neighbors, the larger moves in; on ties the one above.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::punctured::PuncturedTableau;
use crate::shape::SkewShape;
use crate::tableau::SkewTableau;

type CellMap = BTreeMap<Cell, usize>;

/// Direction of an elementary slide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlideDirection {
    Inward,
    Outward,
}

/// Migrates a hole through `map` toward the outer boundary, moving entries
/// up/left. Returns the cell where the hole exits.
pub(crate) fn slide_hole_inward(map: &mut CellMap, hole: Cell) -> Cell {
    let mut h = hole;
    loop {
        let right = Cell::new(h.row, h.col + 1);
        let below = Cell::new(h.row + 1, h.col);
        let rv = map.get(&right).copied();
        let bv = map.get(&below).copied();
        let from = match (rv, bv) {
            (None, None) => return h,
            (Some(_), None) => right,
            (None, Some(_)) => below,
            (Some(r), Some(b)) => {
                if b <= r {
                    below
                } else {
                    right
                }
            }
        };
        let v = map.remove(&from).unwrap();
        map.insert(h, v);
        h = from;
    }
}

/// Migrates a hole through `map` toward the inner boundary, moving entries
/// down/right. Returns the cell where the hole exits.
pub(crate) fn slide_hole_outward(map: &mut CellMap, hole: Cell) -> Cell {
    let mut h = hole;
    loop {
        let above = if h.row > 1 {
            Some(Cell::new(h.row - 1, h.col))
        } else {
            None
        };
        let left = if h.col > 1 {
            Some(Cell::new(h.row, h.col - 1))
        } else {
            None
        };
        let av = above.and_then(|c| map.get(&c).copied());
        let lv = left.and_then(|c| map.get(&c).copied());
        let from = match (av, lv) {
            (None, None) => return h,
            (Some(_), None) => above.unwrap(),
            (None, Some(_)) => left.unwrap(),
            (Some(a), Some(l)) => {
                if a >= l {
                    above.unwrap()
                } else {
                    left.unwrap()
                }
            }
        };
        let v = map.remove(&from).unwrap();
        map.insert(h, v);
        h = from;
    }
}

fn tableau_from_map(map: &CellMap) -> Result<SkewTableau> {
    let cells: BTreeSet<Cell> = map.keys().copied().collect();
    let shape = SkewShape::from_cells(&cells)?;
    let entries = shape.cells().into_iter().map(|c| map[&c]).collect();
    SkewTableau::new(shape, entries)
}

/// Processing order for the inward half of a shuffle: entries of `s` in
/// descending order, equal entries right to left.
fn descending_order_map(map: &CellMap) -> Vec<Cell> {
    let mut cells: Vec<Cell> = map.keys().copied().collect();
    cells.sort_by(|a, b| {
        let va = map[a];
        let vb = map[b];
        vb.cmp(&va).then(b.col.cmp(&a.col)).then(a.row.cmp(&b.row))
    });
    cells
}

fn descending_order(s: &SkewTableau) -> Vec<Cell> {
    descending_order_map(&s.cell_map())
}

/// Processing order for the outward half: entries of `t` in ascending order,
/// equal entries left to right.
fn ascending_order(t: &SkewTableau) -> Vec<Cell> {
    let mut cells = t.shape().cells();
    cells.sort_by(|a, b| {
        let va = t.get(*a).unwrap();
        let vb = t.get(*b).unwrap();
        va.cmp(&vb).then(a.col.cmp(&b.col)).then(a.row.cmp(&b.row))
    });
    cells
}

fn check_extends(s: &SkewTableau, t: &SkewTableau) -> Result<()> {
    if !s.shape().is_extended_by(t.shape()) {
        return Err(Error::ShapeMismatch(format!(
            "shape {} does not extend shape {}",
            t.shape(),
            s.shape()
        )));
    }
    Ok(())
}

pub(crate) fn shuffle_maps(
    mut s_map: CellMap,
    mut t_map: CellMap,
    order: Vec<Cell>,
) -> (CellMap, CellMap) {
    for cell in order {
        let v = s_map.remove(&cell).expect("ordered cell holds an entry");
        let exit = slide_hole_inward(&mut t_map, cell);
        s_map.insert(exit, v);
    }
    (t_map, s_map)
}

/// The jeu de taquin shuffle of a nested pair: `t` slides inward through the
/// cells of `s` while `s` migrates outward, giving `(t', s')` with the shape
/// of `s'` extending the shape of `t'`. Contents and the union of cells are
/// preserved.
pub fn shuffle(s: &SkewTableau, t: &SkewTableau) -> Result<(SkewTableau, SkewTableau)> {
    check_extends(s, t)?;
    let (t_map, s_map) = shuffle_maps(s.cell_map(), t.cell_map(), descending_order(s));
    Ok((tableau_from_map(&t_map)?, tableau_from_map(&s_map)?))
}

/// The same shuffle computed by the dual procedure: outward slides on `s`
/// through the cells of `t` in ascending order. Exposed so tests can check
/// the two formulations agree.
pub fn shuffle_by_outward_slides(
    s: &SkewTableau,
    t: &SkewTableau,
) -> Result<(SkewTableau, SkewTableau)> {
    check_extends(s, t)?;
    let mut s_map = s.cell_map();
    let mut t_map = t.cell_map();
    for cell in ascending_order(t) {
        let v = t_map.remove(&cell).expect("ordered cell holds an entry");
        let exit = slide_hole_outward(&mut s_map, cell);
        t_map.insert(exit, v);
    }
    Ok((tableau_from_map(&t_map)?, tableau_from_map(&s_map)?))
}

/// One elementary slide. Inward: `hole` must be a removable corner of the
/// inner shape. Outward: `hole` must be an addable cell of the outer shape.
pub fn slide(t: &SkewTableau, hole: Cell, direction: SlideDirection) -> Result<SkewTableau> {
    match direction {
        SlideDirection::Inward => {
            if !t.shape().inner().corners().contains(&hole) {
                return Err(Error::InvalidCell(format!(
                    "{hole} is not a legal hole for an inward slide of {}",
                    t.shape()
                )));
            }
        }
        SlideDirection::Outward => {
            if !t.shape().outer().can_add(hole) {
                return Err(Error::InvalidCell(format!(
                    "{hole} is not a legal hole for an outward slide of {}",
                    t.shape()
                )));
            }
        }
    }
    let mut map = t.cell_map();
    match direction {
        SlideDirection::Inward => slide_hole_inward(&mut map, hole),
        SlideDirection::Outward => slide_hole_outward(&mut map, hole),
    };
    tableau_from_map(&map)
}

/// Rectifies `t` by shuffling with a companion straight tableau filling the
/// inner shape. The result is independent of the companion.
pub fn rectify(t: &SkewTableau) -> Result<SkewTableau> {
    let companion = SkewTableau::superstandard(t.shape().inner());
    Ok(shuffle(&companion, t)?.0)
}

/// Rectification with an explicit companion, returning both halves.
pub fn rectify_with(
    companion: &SkewTableau,
    t: &SkewTableau,
) -> Result<(SkewTableau, SkewTableau)> {
    shuffle(companion, t)
}

/// Evacuation-shuffling computed by its definition: rectify with the box as
/// a zero entry, delete the zero and promote (rectify the rest, writing
/// `l(beta)+1` in the vacated corner), then un-rectify with the companion
/// produced by the first step and put the box back.
pub fn esh_via_rectification(p: &PuncturedTableau) -> Result<PuncturedTableau> {
    if !p.is_lr_start() {
        return Err(Error::InvalidInput(format!(
            "not an element of LR(alpha, box, beta, gamma): {p}"
        )));
    }
    let top = p.max_value();
    let companion = SkewTableau::superstandard(p.shape().inner());

    // Rectification, with the box as a 0 entry of the sliding tableau.
    let mut boxed_map: CellMap = CellMap::new();
    for cell in p.shape().cells() {
        boxed_map.insert(cell, p.get(cell).unwrap_or(0));
    }
    let (mut rectified, companion_out) =
        shuffle_maps(companion.cell_map(), boxed_map, descending_order(&companion));

    // Promotion: delete the 0, close the gap, relabel the vacated corner.
    let zero_cell = *rectified
        .iter()
        .find(|(_, &v)| v == 0)
        .map(|(c, _)| c)
        .ok_or_else(|| Error::InvariantViolation("rectified tableau lost its box".into()))?;
    if zero_cell != Cell::new(1, 1) {
        return Err(Error::InvariantViolation(format!(
            "zero entry rectified to {zero_cell}, expected (1,1)"
        )));
    }
    rectified.remove(&zero_cell);
    let vacated = slide_hole_inward(&mut rectified, zero_cell);
    rectified.insert(vacated, top + 1);

    // Un-rectification: shuffle the promoted tableau back out past the
    // companion's image. The companion must return to its straight shape.
    let order = descending_order_map(&rectified);
    let (companion_back, unrectified) = shuffle_maps(rectified, companion_out, order);
    if companion_back != companion.cell_map() {
        return Err(Error::InvariantViolation(
            "companion did not return to its straight shape under un-rectification".into(),
        ));
    }

    // Replace the top+1 entry by the box and rebuild on the original shape.
    let box_cell = *unrectified
        .iter()
        .find(|(_, &v)| v == top + 1)
        .map(|(c, _)| c)
        .ok_or_else(|| Error::InvariantViolation("promoted entry lost".into()))?;
    let expected: BTreeSet<Cell> = p.shape().cells().into_iter().collect();
    let got: BTreeSet<Cell> = unrectified.keys().copied().collect();
    if expected != got {
        return Err(Error::InvariantViolation(
            "un-rectification did not return to the original shape".into(),
        ));
    }
    let values = p
        .shape()
        .cells()
        .into_iter()
        .map(|c| if c == box_cell { 0 } else { unrectified[&c] })
        .collect();
    let out = PuncturedTableau::new(p.shape().clone(), values)?;
    if !out.is_lr_end() {
        return Err(Error::InvariantViolation(format!(
            "evacuation-shuffle output is not in LR(alpha, beta, box, gamma): {out}"
        )));
    }
    Ok(out)
}
