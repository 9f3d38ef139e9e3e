//! Local evacuation-shuffling.
//!
//! The box is walked through the tableau in two phases, one value at a time,
//! without rectifying. Phase 1 (while some `i` precedes the box in reading
//! order): swap the box with the nearest `i` prior to it, once per value.
//! Phase 2 (once the box precedes all `i`'s): swap the box with the nearest
//! `i` after it until the suffix from the box is tied for `(i, i+1)`. The
//! algorithm halts after value `l(beta)`; its output agrees with
//! evacuation-shuffling computed through rectification.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::punctured::{PuncturedTableau, SuffixStatus};

/// Geometric classification of one box move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    /// Phase 1, strictly down one row in the same column.
    VerticalSlide,
    /// Phase 1, down and to the left.
    PieriJump,
    /// Phase 2, one step right in the same row.
    HorizontalSlide,
    /// Phase 2, up and to the right.
    ConjugatePieriJump,
}

impl MoveKind {
    pub fn is_phase1(&self) -> bool {
        matches!(self, MoveKind::VerticalSlide | MoveKind::PieriJump)
    }

    /// A jump spans non-adjacent cells; slides are always edge moves.
    pub fn is_jump(&self) -> bool {
        matches!(self, MoveKind::PieriJump | MoveKind::ConjugatePieriJump)
    }

    fn label(&self) -> &'static str {
        match self {
            MoveKind::VerticalSlide => "Vert",
            MoveKind::PieriJump => "Pieri",
            MoveKind::HorizontalSlide => "Horiz",
            MoveKind::ConjugatePieriJump => "CPieri",
        }
    }
}

/// One movement of the box: the value it exchanged with and the two cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveTag {
    pub kind: MoveKind,
    pub value: usize,
    pub from: Cell,
    pub to: Cell,
}

impl fmt::Display for MoveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{} {}->{}",
            self.kind.label(),
            self.value,
            self.from,
            self.to
        )
    }
}

/// The evacu-shuffle path: starting cell, tagged moves, and the value at
/// which the algorithm switched to Phase 2 (`l(beta)+1` when it never did).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvacPath {
    pub start: Cell,
    pub steps: Vec<MoveTag>,
    pub transition_step: usize,
}

impl EvacPath {
    pub fn phase1_steps(&self) -> impl Iterator<Item = &MoveTag> {
        self.steps.iter().filter(|m| m.kind.is_phase1())
    }

    pub fn phase2_steps(&self) -> impl Iterator<Item = &MoveTag> {
        self.steps.iter().filter(|m| !m.kind.is_phase1())
    }
}

/// The two strips traced by the box, split at the phase boundary. The cell
/// where Phase 2 begins closes the Phase 1 list and opens the Phase 2 list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseStrips {
    pub phase1: Vec<Cell>,
    pub phase2: Vec<Cell>,
}

/// Validity of an intermediate state: semistandard with the box omitted and
/// ballot reading word. Holds after every step of `local_esh` on valid input.
pub fn step_validity(p: &PuncturedTableau) -> bool {
    p.is_valid_state()
}

fn classify_phase1(from: Cell, to: Cell, value: usize) -> Result<MoveKind> {
    if to.col == from.col && to.row == from.row + 1 {
        Ok(MoveKind::VerticalSlide)
    } else if to.row > from.row && to.col < from.col {
        Ok(MoveKind::PieriJump)
    } else {
        Err(Error::InvariantViolation(format!(
            "illegal Phase 1 move {from}->{to} exchanging {value}"
        )))
    }
}

fn classify_phase2(from: Cell, to: Cell, value: usize) -> Result<MoveKind> {
    if to.row == from.row && to.col == from.col + 1 {
        Ok(MoveKind::HorizontalSlide)
    } else if to.row < from.row && to.col > from.col {
        Ok(MoveKind::ConjugatePieriJump)
    } else {
        Err(Error::InvariantViolation(format!(
            "illegal Phase 2 move {from}->{to} exchanging {value}"
        )))
    }
}

fn check_state(p: &PuncturedTableau, context: &str) -> Result<()> {
    if !p.is_valid_state() {
        return Err(Error::InvariantViolation(format!(
            "state invalid after {context}: {p}"
        )));
    }
    Ok(())
}

/// Runs local evacuation-shuffling, returning the output element of
/// `LR(alpha, beta, box, gamma)` together with the full path.
pub fn local_esh(p: &PuncturedTableau) -> Result<(PuncturedTableau, EvacPath)> {
    if !p.is_lr_start() {
        return Err(Error::InvalidInput(format!(
            "not an element of LR(alpha, box, beta, gamma): {p}"
        )));
    }
    let top = p.max_value();
    let mut cur = p.clone();
    let mut steps = Vec::new();
    let mut transition = top + 1;
    let mut in_phase2 = false;
    let mut i = 1;
    while i <= top {
        if !in_phase2 {
            if cur.box_precedes_all(i) {
                in_phase2 = true;
                transition = i;
                continue;
            }
            let target = cur
                .nearest_prior(i)
                .ok_or_else(|| Error::InvariantViolation(format!("no {i} prior to the box")))?;
            let from = cur.box_cell();
            let value = cur.swap_box(target)?;
            let kind = classify_phase1(from, target, value)?;
            steps.push(MoveTag {
                kind,
                value,
                from,
                to: target,
            });
            check_state(&cur, &format!("Phase 1 step {i}"))?;
            i += 1;
        } else {
            match cur.suffix_tie_status(i) {
                SuffixStatus::Tied => {
                    i += 1;
                }
                SuffixStatus::Violating => {
                    return Err(Error::InvariantViolation(format!(
                        "suffix from the box violates ballotness for ({i},{})",
                        i + 1
                    )));
                }
                SuffixStatus::BallotStrict => {
                    let target = cur.nearest_after(i).ok_or_else(|| {
                        Error::InvariantViolation(format!("no {i} after the box"))
                    })?;
                    let from = cur.box_cell();
                    let value = cur.swap_box(target)?;
                    let kind = classify_phase2(from, target, value)?;
                    steps.push(MoveTag {
                        kind,
                        value,
                        from,
                        to: target,
                    });
                    check_state(&cur, &format!("Phase 2 step {i}"))?;
                }
            }
        }
    }
    if !cur.is_lr_end() {
        return Err(Error::InvariantViolation(format!(
            "output is not in LR(alpha, beta, box, gamma): {cur}"
        )));
    }
    let path = EvacPath {
        start: p.box_cell(),
        steps,
        transition_step: transition,
    };
    debug_assert!(path.steps.windows(2).all(|w| w[0].value <= w[1].value));
    Ok((cur, path))
}

/// The one-row case: exchange the box with the nearest 1 prior to it in
/// reading order, or with the last 1 in reading order when no 1 precedes it
/// (the special jump).
pub fn pieri_esh(p: &PuncturedTableau) -> Result<PuncturedTableau> {
    if !p.is_lr_start() {
        return Err(Error::InvalidInput(format!(
            "not an element of LR(alpha, box, beta, gamma): {p}"
        )));
    }
    let content = p.content();
    if content.len() != 1 {
        return Err(Error::DomainError(format!(
            "the Pieri rule needs a one-row content, got {content:?}"
        )));
    }
    let target = match p.nearest_prior(1) {
        Some(c) => c,
        None => p
            .last_in_reading(1)
            .ok_or_else(|| Error::InvariantViolation("no 1 in the tableau".into()))?,
    };
    let mut out = p.clone();
    out.swap_box(target)?;
    if !out.is_lr_end() {
        return Err(Error::InvariantViolation(format!(
            "Pieri output is not in LR(alpha, beta, box, gamma): {out}"
        )));
    }
    Ok(out)
}

/// Splits the visited cells by phase and checks the strip properties: no two
/// Phase 1 cells share a row, no two Phase 2 cells share a column.
pub fn phase_strips(path: &EvacPath) -> Result<PhaseStrips> {
    let mut phase1 = vec![path.start];
    let mut phase2 = Vec::new();
    for step in &path.steps {
        if step.kind.is_phase1() {
            if !phase2.is_empty() {
                return Err(Error::InvariantViolation(
                    "Phase 1 move after a Phase 2 move".into(),
                ));
            }
            phase1.push(step.to);
        } else {
            if phase2.is_empty() {
                phase2.push(step.from);
            }
            phase2.push(step.to);
        }
    }
    let mut rows: Vec<usize> = phase1.iter().map(|c| c.row).collect();
    rows.sort_unstable();
    rows.dedup();
    if rows.len() != phase1.len() {
        return Err(Error::InvariantViolation(format!(
            "Phase 1 cells do not form a vertical strip: {phase1:?}"
        )));
    }
    let mut cols: Vec<usize> = phase2.iter().map(|c| c.col).collect();
    cols.sort_unstable();
    cols.dedup();
    if cols.len() != phase2.len() {
        return Err(Error::InvariantViolation(format!(
            "Phase 2 cells do not form a horizontal strip: {phase2:?}"
        )));
    }
    Ok(PhaseStrips { phase1, phase2 })
}

/// Renders the step-by-step trace: one diagram per state with the move tag
/// on an indented arrow line between consecutive diagrams, then the
/// transition step. The format is stable and covered by golden tests.
pub fn render_trace(p: &PuncturedTableau, path: &EvacPath) -> Result<String> {
    let mut cur = p.clone();
    let mut out = String::new();
    out.push_str(&cur.to_string());
    out.push('\n');
    for step in &path.steps {
        if cur.box_cell() != step.from {
            return Err(Error::InvalidInput(format!(
                "path does not match tableau at {}",
                step.from
            )));
        }
        cur.swap_box(step.to)?;
        out.push_str(&format!("  --{step}-->\n"));
        out.push_str(&cur.to_string());
        out.push('\n');
    }
    out.push_str(&format!("transition step: {}\n", path.transition_step));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::esh_via_rectification;

    fn p(s: &str) -> PuncturedTableau {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_trace() {
        let start = p("..X11/..122/..3/..4/23");
        let (out, path) = local_esh(&start).unwrap();
        assert_eq!(out.to_string(), "..111/..222/..3/..X/34");
        assert_eq!(path.transition_step, 3);
        let kinds: Vec<MoveKind> = path.steps.iter().map(|s| s.kind).collect();
        assert_eq!(
            kinds,
            vec![
                MoveKind::VerticalSlide,
                MoveKind::PieriJump,
                MoveKind::HorizontalSlide,
                MoveKind::ConjugatePieriJump
            ]
        );
        let values: Vec<usize> = path.steps.iter().map(|s| s.value).collect();
        assert_eq!(values, vec![1, 2, 3, 4]);
    }

    #[test]
    fn one_row_phase1_slide() {
        // the nearest prior 1 sits directly below: a vertical slide
        let (out, path) = local_esh(&p("..X11/.11/1")).unwrap();
        assert_eq!(out.to_string(), "..111/.1X/1");
        assert_eq!(path.steps.len(), 1);
        assert_eq!(path.steps[0].kind, MoveKind::VerticalSlide);
    }

    #[test]
    fn single_box_horizontal() {
        let (out, path) = local_esh(&p("X1")).unwrap();
        assert_eq!(out.to_string(), "1X");
        assert_eq!(path.transition_step, 1);
        assert_eq!(path.steps[0].kind, MoveKind::HorizontalSlide);
    }

    #[test]
    fn agrees_with_rectification_on_examples() {
        for s in [
            "..X11/..122/..3/..4/23",
            "..X11/.11/1",
            "...X11/.11/1",
            "...111/.11/X",
            "X1",
        ] {
            let start = p(s);
            let (local, _) = local_esh(&start).unwrap();
            let oracle = esh_via_rectification(&start).unwrap();
            assert_eq!(local, oracle, "disagreement on {s}");
        }
    }

    #[test]
    fn pieri_matches_local_and_handles_special_jump() {
        for s in ["...X11/.11/1", "...111/.11/X", "X1"] {
            let start = p(s);
            let via_pieri = pieri_esh(&start).unwrap();
            let (via_local, _) = local_esh(&start).unwrap();
            assert_eq!(via_pieri, via_local, "on {s}");
        }
        assert_eq!(pieri_esh(&p("...111/.11/X")).unwrap().to_string(), "...11X/.11/1");
        // two-row content is outside the Pieri case
        assert!(matches!(
            pieri_esh(&p("X1/2")),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn strips_of_worked_example() {
        let start = p("..X11/..122/..3/..4/23");
        let (_, path) = local_esh(&start).unwrap();
        let strips = phase_strips(&path).unwrap();
        assert_eq!(
            strips.phase1,
            vec![Cell::new(1, 3), Cell::new(2, 3), Cell::new(5, 1)]
        );
        assert_eq!(
            strips.phase2,
            vec![Cell::new(5, 1), Cell::new(5, 2), Cell::new(4, 3)]
        );
    }

    #[test]
    fn strips_of_single_step_path() {
        let (_, path) = local_esh(&p("X1")).unwrap();
        let strips = phase_strips(&path).unwrap();
        assert_eq!(strips.phase1, vec![Cell::new(1, 1)]);
        assert_eq!(strips.phase2, vec![Cell::new(1, 1), Cell::new(1, 2)]);
    }

    #[test]
    fn step_validity_examples() {
        assert!(step_validity(&p("..X11/..122/..3/..4/23")));
        // column repeat: two 1's stacked in column 2
        let corrupted = PuncturedTableau::new(
            crate::shape::SkewShape::new(
                crate::partition::Partition::new(vec![2, 2]).unwrap(),
                crate::partition::Partition::empty(),
            )
            .unwrap(),
            vec![0, 1, 1, 1],
        )
        .unwrap();
        assert!(!step_validity(&corrupted));
    }

    #[test]
    fn trace_rendering() {
        let start = p("..X11/..122/..3/..4/23");
        let (_, path) = local_esh(&start).unwrap();
        let trace = render_trace(&start, &path).unwrap();
        let expected = "\
..X11/..122/..3/..4/23
  --Vert_1 (1,3)->(2,3)-->
..111/..X22/..3/..4/23
  --Pieri_2 (2,3)->(5,1)-->
..111/..222/..3/..4/X3
  --Horiz_3 (5,1)->(5,2)-->
..111/..222/..3/..4/3X
  --CPieri_4 (5,2)->(4,3)-->
..111/..222/..3/..X/34
transition step: 3
";
        assert_eq!(trace, expected);
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(matches!(local_esh(&p("1X")), Err(Error::InvalidInput(_))));
    }
}
