//! Factorization of the monodromy operator through per-value steps.
//!
//! `X_i` consists of the valid punctured tableaux whose box sits between the
//! `(i-1)`-st and `i`-th horizontal strips. The step `ell_i` applies the
//! moves of local evacuation-shuffling that exchange the box with `i`'s; the
//! step `s_i` is the portion of the backward slide that pulls `i`'s past the
//! box. Conjugating `s_i . ell_i` back to the first set factors `omega`, and
//! each factor's orbit excess equals the number of genomic tableaux with
//! that extra entry.

use std::collections::BTreeSet;

use crate::enumerate::{enumerate_fillings, BallotMode, FillSpec};
use crate::error::{Error, Result};
use crate::genomic::enumerate_genomic;
use crate::localesh::{MoveKind, MoveTag};
use crate::par::map_collect;
use crate::punctured::{PuncturedTableau, SuffixStatus};

use super::{enumerate_lr, enumerate_lr_after, omega, ProblemInstance};

/// Enumerates `X_i` for `i` in `1 ..= l(beta)+1`. `X_1` is the starting
/// fiber and `X_{l(beta)+1}` the ending one.
pub fn enumerate_x(instance: &ProblemInstance, i: usize) -> Result<Vec<PuncturedTableau>> {
    if i == 0 || i > instance.beta().len() + 1 {
        return Err(Error::DomainError(format!(
            "strip index {i} out of range 1..={}",
            instance.beta().len() + 1
        )));
    }
    let Some(shape) = instance.total_shape() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for hole in shape.cells() {
        let spec = FillSpec {
            shape: &shape,
            hole: Some((hole, i - 1, i)),
            content: instance.beta().parts(),
            ballot: BallotMode::Strict,
            limit: None,
        };
        for values in enumerate_fillings(&spec)? {
            out.push(PuncturedTableau::new(shape.clone(), values)?);
        }
    }
    super::canonical_sort(&mut out);
    Ok(out)
}

/// The moves of local evacuation-shuffling that exchange the box with `i`'s,
/// as a standalone map on `X_i`.
///
/// The backward branch applies when the state would be reached with the main
/// algorithm still in its first phase at value `i`: some `i` precedes the box
/// and the `(i-1, i)` suffix is not yet tied. Otherwise the state behaves as
/// a second-phase state and the forward tie-loop applies. The tie condition
/// matters: a state whose previous pair is already balanced arises mid-run
/// after the forward moves of value `i-1`, even when an `i` precedes the box.
pub fn ell(i: usize, p: &PuncturedTableau) -> Result<(PuncturedTableau, Vec<MoveTag>)> {
    let mut cur = p.clone();
    let mut moves = Vec::new();
    let backward = !cur.box_precedes_all(i)
        && (i == 1 || cur.suffix_tie_status(i - 1) != SuffixStatus::Tied);
    if backward {
        let target = cur
            .nearest_prior(i)
            .ok_or_else(|| Error::InvariantViolation(format!("no {i} prior to the box")))?;
        let from = cur.box_cell();
        let value = cur.swap_box(target)?;
        let kind = if target.col == from.col && target.row == from.row + 1 {
            MoveKind::VerticalSlide
        } else if target.row > from.row && target.col < from.col {
            MoveKind::PieriJump
        } else {
            return Err(Error::InvariantViolation(format!(
                "illegal backward move {from}->{target}"
            )));
        };
        moves.push(MoveTag {
            kind,
            value,
            from,
            to: target,
        });
    } else {
        loop {
            match cur.suffix_tie_status(i) {
                SuffixStatus::Tied => break,
                SuffixStatus::Violating => {
                    return Err(Error::InvariantViolation(format!(
                        "suffix violates ballotness for ({i},{})",
                        i + 1
                    )));
                }
                SuffixStatus::BallotStrict => {
                    let target = cur.nearest_after(i).ok_or_else(|| {
                        Error::InvariantViolation(format!("no {i} after the box"))
                    })?;
                    let from = cur.box_cell();
                    let value = cur.swap_box(target)?;
                    let kind = if target.row == from.row && target.col == from.col + 1 {
                        MoveKind::HorizontalSlide
                    } else if target.row < from.row && target.col > from.col {
                        MoveKind::ConjugatePieriJump
                    } else {
                        return Err(Error::InvariantViolation(format!(
                            "illegal forward move {from}->{target}"
                        )));
                    };
                    moves.push(MoveTag {
                        kind,
                        value,
                        from,
                        to: target,
                    });
                }
            }
        }
    }
    if !cur.is_valid_state() {
        return Err(Error::InvariantViolation(format!(
            "state invalid after the {i}-step: {cur}"
        )));
    }
    Ok((cur, moves))
}

/// The backward one-box slide restricted to `i`'s: `X_{i+1} -> X_i`.
pub fn s_back(i: usize, p: &PuncturedTableau) -> PuncturedTableau {
    let mut q = p.clone();
    q.slide_box_back_while(|v| v == i);
    q
}

/// Inverse of [`s_back`]: the forward slide restricted to `i`'s.
pub fn s_forward(i: usize, p: &PuncturedTableau) -> PuncturedTableau {
    let mut q = p.clone();
    q.slide_box_forward_while(|v| v == i);
    q
}

/// All intermediate sets of an instance, with the factored operators.
#[derive(Debug, Clone)]
pub struct FactorSystem {
    instance: ProblemInstance,
    /// `x[i-1]` is `X_i`, for `i` in `1..=l(beta)+1`.
    pub x: Vec<Vec<PuncturedTableau>>,
}

/// Enumerates every `X_i` of the instance.
pub fn factor_operators(instance: &ProblemInstance) -> Result<FactorSystem> {
    let t = instance.beta().len();
    let indices: Vec<usize> = (1..=t + 1).collect();
    let x = map_collect(&indices, |&i| enumerate_x(instance, i))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorSystem {
        instance: instance.clone(),
        x,
    })
}

impl FactorSystem {
    pub fn instance(&self) -> &ProblemInstance {
        &self.instance
    }

    /// The conjugated factor `omega_i` acting on the starting fiber.
    pub fn omega_factor(&self, i: usize, p: &PuncturedTableau) -> Result<PuncturedTableau> {
        let mut cur = p.clone();
        for j in 1..i {
            cur = s_forward(j, &cur);
        }
        let (next, _) = ell(i, &cur)?;
        cur = s_back(i, &next);
        for j in (1..i).rev() {
            cur = s_back(j, &cur);
        }
        Ok(cur)
    }

    /// Checks the whole factorization on every element: the boundary sets
    /// match the fibers, each step lands in the next set and is a bijection,
    /// the forward and backward slides invert each other, and both factored
    /// compositions reproduce `omega`.
    pub fn verify(&self) -> Result<()> {
        let t = self.instance.beta().len();
        let start = enumerate_lr(&self.instance)?;
        let end = enumerate_lr_after(&self.instance)?;
        if self.x[0] != start {
            return Err(Error::InvariantViolation(
                "X_1 differs from the starting fiber".into(),
            ));
        }
        if self.x[t] != end {
            return Err(Error::InvariantViolation(
                "X_{t+1} differs from the ending fiber".into(),
            ));
        }
        for i in 1..=t {
            let from: BTreeSet<_> = self.x[i - 1].iter().cloned().collect();
            let to: BTreeSet<_> = self.x[i].iter().cloned().collect();
            let mut image = BTreeSet::new();
            for p in &self.x[i - 1] {
                let (q, _) = ell(i, p)?;
                if !q.is_between_strips(i + 1) || !to.contains(&q) {
                    return Err(Error::InvariantViolation(format!(
                        "ell_{i} leaves X_{}",
                        i + 1
                    )));
                }
                image.insert(q);
            }
            if image != to {
                return Err(Error::InvariantViolation(format!(
                    "ell_{i} is not onto X_{}",
                    i + 1
                )));
            }
            let mut s_image = BTreeSet::new();
            for q in &self.x[i] {
                let p = s_back(i, q);
                if !p.is_between_strips(i) || !from.contains(&p) {
                    return Err(Error::InvariantViolation(format!(
                        "s_{i} leaves X_{i}"
                    )));
                }
                if s_forward(i, &p) != *q {
                    return Err(Error::InvariantViolation(format!(
                        "forward slide does not invert s_{i}"
                    )));
                }
                s_image.insert(p);
            }
            if s_image != from {
                return Err(Error::InvariantViolation(format!(
                    "s_{i} is not onto X_{i}"
                )));
            }
        }
        for p in &start {
            let expected = omega(p)?;
            let mut cur = p.clone();
            for i in 1..=t {
                cur = ell(i, &cur)?.0;
            }
            for i in (1..=t).rev() {
                cur = s_back(i, &cur);
            }
            if cur != expected {
                return Err(Error::InvariantViolation(format!(
                    "s_1..s_t . ell_t..ell_1 differs from omega at {p}"
                )));
            }
            let mut via_factors = p.clone();
            for i in 1..=t {
                via_factors = self.omega_factor(i, &via_factors)?;
            }
            if via_factors != expected {
                return Err(Error::InvariantViolation(format!(
                    "omega_t..omega_1 differs from omega at {p}"
                )));
            }
        }
        Ok(())
    }
}

/// Per-value orbit data for the factored operators.
#[derive(Debug, Clone)]
pub struct FactorOrbitRow {
    pub i: usize,
    pub x_size: usize,
    pub orbit_sizes: Vec<usize>,
    /// Sum of (orbit size - 1) over the orbits of `s_i . ell_i`.
    pub excess: usize,
    /// Number of genomic tableaux with extra entry `i`.
    pub k_i: usize,
}

/// Computes the orbits of each `s_i . ell_i` on `X_i` and checks that the
/// orbit excess equals the count of genomic tableaux with extra entry `i`,
/// and that the fixed points are exactly the elements whose `i`-step is a
/// lone vertical slide or consists of horizontal slides only.
pub fn factor_orbit_check(instance: &ProblemInstance) -> Result<Vec<FactorOrbitRow>> {
    let t = instance.beta().len();
    let genomic = enumerate_genomic(instance)?;
    let indices: Vec<usize> = (1..=t).collect();
    let rows = map_collect(&indices, |&i| -> Result<FactorOrbitRow> {
        let x = enumerate_x(instance, i)?;
        let index: std::collections::BTreeMap<&PuncturedTableau, usize> =
            x.iter().enumerate().map(|(j, p)| (p, j)).collect();
        let mut next = Vec::with_capacity(x.len());
        for p in &x {
            let (q, moves) = ell(i, p)?;
            let back = s_back(i, &q);
            let j = *index.get(&back).ok_or_else(|| {
                Error::InvariantViolation(format!("s_{i} . ell_{i} escapes X_{i}"))
            })?;
            let predicted_fixed = match moves.as_slice() {
                [] => true,
                [m] if m.kind == MoveKind::VerticalSlide => true,
                ms => ms.iter().all(|m| m.kind == MoveKind::HorizontalSlide),
            };
            let actually_fixed = back == *p;
            if predicted_fixed != actually_fixed {
                return Err(Error::InvariantViolation(format!(
                    "fixed-point pattern mismatch for i={i} at {p}"
                )));
            }
            next.push(j);
        }
        let mut visited = vec![false; x.len()];
        let mut orbit_sizes = Vec::new();
        for s in 0..x.len() {
            if visited[s] {
                continue;
            }
            let mut len = 0;
            let mut cur = s;
            loop {
                visited[cur] = true;
                len += 1;
                cur = next[cur];
                if cur == s {
                    break;
                }
            }
            orbit_sizes.push(len);
        }
        let excess: usize = orbit_sizes.iter().map(|&s| s - 1).sum();
        let k_i = genomic.with_extra(i).len();
        if excess != k_i {
            return Err(Error::InvariantViolation(format!(
                "orbit excess {excess} != genomic count {k_i} for i={i}"
            )));
        }
        Ok(FactorOrbitRow {
            i,
            x_size: x.len(),
            orbit_sizes,
            excess,
            k_i,
        })
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::partition::Rectangle;

    fn inst(alpha: &str, beta: &str, gamma: &str, rect: &str) -> ProblemInstance {
        ProblemInstance::new(
            alpha.parse().unwrap(),
            beta.parse().unwrap(),
            gamma.parse().unwrap(),
            rect.parse().unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn boundary_sets_match_fibers() {
        let i = inst("2,2,1", "3,1,1", "3,2", "4x4");
        let sys = factor_operators(&i).unwrap();
        assert_eq!(sys.x[0], enumerate_lr(&i).unwrap());
        assert_eq!(sys.x[3], enumerate_lr_after(&i).unwrap());
    }

    #[test]
    fn factorization_verifies_on_small_instances() {
        for (a, b, g, r) in [
            ("2,2,1", "3,1,1", "3,2", "4x4"),
            ("1", "2,1", "2,1,1", "3x3"),
            ("-", "2,1", "2", "2x3"),
            ("-", "1", "-", "1x2"),
        ] {
            let i = inst(a, b, g, r);
            factor_operators(&i).unwrap().verify().unwrap();
            factor_orbit_check(&i).unwrap();
        }
    }

    #[test]
    fn one_row_content_gives_single_factor() {
        let i = ProblemInstance::new(
            Partition::empty(),
            Partition::new(vec![2]).unwrap(),
            Partition::empty(),
            Rectangle::new(1, 3).unwrap(),
        )
        .unwrap();
        let sys = factor_operators(&i).unwrap();
        assert_eq!(sys.x.len(), 2);
        for p in &sys.x[0] {
            assert_eq!(sys.omega_factor(1, p).unwrap(), omega(p).unwrap());
        }
    }

    #[test]
    fn strip_index_bounds() {
        let i = inst("-", "1", "-", "1x2");
        assert!(enumerate_x(&i, 0).is_err());
        assert!(enumerate_x(&i, 3).is_err());
        assert_eq!(enumerate_x(&i, 1).unwrap().len(), 1);
        assert_eq!(enumerate_x(&i, 2).unwrap().len(), 1);
    }
}
