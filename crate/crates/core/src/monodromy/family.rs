//! Two parameterized families with extremal orbit behavior.

use crate::error::{Error, Result};
use crate::genomic::enumerate_genomic;
use crate::partition::{Partition, Rectangle};

use super::{enumerate_lr, omega, orbit_decomposition, OrbitReport, ProblemInstance};

/// The staircase-ribbon family: inside a `(t+1) x (t+2)` rectangle, both
/// outer partitions are the staircase `(t, t-1, ..., 1)` and the content is
/// `(t+1, 2, 1^(t-2))`. The operator has a single orbit.
pub fn family_staircase(t: usize) -> Result<ProblemInstance> {
    if t < 2 {
        return Err(Error::DomainError(format!("t must be at least 2, got {t}")));
    }
    let rect = Rectangle::new(t + 1, t + 2)?;
    let staircase = Partition::new((1..=t).rev().collect())?;
    let mut beta = vec![t + 1, 2];
    beta.extend(std::iter::repeat_n(1, t - 2));
    let beta = Partition::new(beta)?;
    ProblemInstance::new(staircase.clone(), beta, staircase, rect)
}

/// The split family: inside a `(t+1) x (t+1)` rectangle with inner partition
/// `(t, ..., 2)` and content `(t, 1, 1)`, the complement of the third
/// partition is `(t+1, t, ..., 3, 2, 2)`. The operator is the identity on a
/// fiber of `t-1` elements.
pub fn family_components(t: usize) -> Result<ProblemInstance> {
    if t < 2 {
        return Err(Error::DomainError(format!("t must be at least 2, got {t}")));
    }
    let rect = Rectangle::new(t + 1, t + 1)?;
    let alpha = Partition::new((2..=t).rev().collect())?;
    let beta = Partition::new(vec![t, 1, 1])?;
    let mut gamma_complement: Vec<usize> = (3..=t + 1).rev().collect();
    gamma_complement.push(2);
    gamma_complement.push(2);
    let gamma = Partition::new(gamma_complement)?.complement(&rect)?;
    ProblemInstance::new(alpha, beta, gamma, rect)
}

/// Verified orbit data for a staircase instance.
#[derive(Debug, Clone)]
pub struct StaircaseReport {
    pub t: usize,
    pub report: OrbitReport,
    /// `(t-1)(t-2)`, which must equal `1 - chi`.
    pub genus: usize,
}

/// Runs the pipeline on the staircase instance and checks the single-orbit
/// and genus claims.
pub fn verify_staircase(t: usize) -> Result<StaircaseReport> {
    let instance = family_staircase(t)?;
    let report = orbit_decomposition(&instance)?;
    if report.eta != 1 {
        return Err(Error::InvariantViolation(format!(
            "staircase t={t} has {} orbits, expected one",
            report.eta
        )));
    }
    let genus = (t - 1) * (t - 2);
    if report.chi != 1 - genus as i64 {
        return Err(Error::InvariantViolation(format!(
            "staircase t={t} has chi={}, expected {}",
            report.chi,
            1 - genus as i64
        )));
    }
    Ok(StaircaseReport { t, report, genus })
}

/// Verified data for a split instance.
#[derive(Debug, Clone)]
pub struct ComponentsReport {
    pub t: usize,
    pub elements: usize,
    pub k_count: usize,
}

/// Checks that the split instance has a fiber of `t-1` fixed points and no
/// genomic tableaux.
pub fn verify_components(t: usize) -> Result<ComponentsReport> {
    let instance = family_components(t)?;
    let elements = enumerate_lr(&instance)?;
    if elements.len() + 1 != t {
        return Err(Error::InvariantViolation(format!(
            "split family t={t} has {} elements, expected {}",
            elements.len(),
            t - 1
        )));
    }
    for p in &elements {
        if omega(p)? != *p {
            return Err(Error::InvariantViolation(format!(
                "split family t={t} is not fixed at {p}"
            )));
        }
    }
    let k_count = enumerate_genomic(&instance)?.total();
    if k_count != 0 {
        return Err(Error::InvariantViolation(format!(
            "split family t={t} has {k_count} genomic tableaux, expected none"
        )));
    }
    Ok(ComponentsReport {
        t,
        elements: elements.len(),
        k_count,
    })
}
