//! Instance-set builders and the relation suites run over them.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::genomic::{enumerate_genomic, GenomicTableau};
use crate::jdt::esh_via_rectification;
use crate::localesh::{local_esh, phase_strips, pieri_esh};
use crate::monodromy::{
    collect_phase_outputs, enumerate_lr, enumerate_lr_after, factor_operators, factor_orbit_check,
    fixed_point_check, orbit_bound_report, orbit_decomposition, ProblemInstance,
};
use crate::par::map_collect;
use crate::partition::{Partition, Rectangle};

/// All instances in a given rectangle: every triple of partitions fitting
/// the rectangle whose sizes satisfy the size equation.
pub fn instances_for_rect(rect: &Rectangle) -> Vec<ProblemInstance> {
    let all = Partition::all_in_rect(rect);
    let target = rect.num_cells() - 1;
    let mut out = Vec::new();
    for alpha in &all {
        for beta in &all {
            let rest = target as i64 - alpha.size() as i64 - beta.size() as i64;
            if rest < 0 {
                continue;
            }
            for gamma in &all {
                if gamma.size() as i64 == rest {
                    out.push(
                        ProblemInstance::new(
                            alpha.clone(),
                            beta.clone(),
                            gamma.clone(),
                            *rect,
                        )
                        .expect("size equation holds by construction"),
                    );
                }
            }
        }
    }
    out
}

/// All instances over every rectangle with at most `max_rows` rows and
/// `max_cols` columns.
pub fn exhaustive_instances(max_rows: usize, max_cols: usize) -> Vec<ProblemInstance> {
    let mut out = Vec::new();
    for rows in 1..=max_rows {
        for cols in 1..=max_cols {
            out.extend(instances_for_rect(&Rectangle::new(rows, cols).unwrap()));
        }
    }
    out
}

/// A deterministic sample of distinct instances in a rectangle, drawn by
/// rejection so large rectangles need not materialize every triple.
pub fn sample_instances(rect: &Rectangle, seed: u64, count: usize) -> Vec<ProblemInstance> {
    let pool = Partition::all_in_rect(rect);
    let max_size = rect.num_cells();
    let mut by_size: Vec<Vec<&Partition>> = vec![Vec::new(); max_size + 1];
    for p in &pool {
        by_size[p.size()].push(p);
    }
    let target = max_size - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < count.saturating_mul(1000) {
        attempts += 1;
        let alpha = pool.choose(&mut rng).unwrap();
        let beta = pool.choose(&mut rng).unwrap();
        let used = alpha.size() + beta.size();
        if used > target {
            continue;
        }
        let candidates = &by_size[target - used];
        let Some(&gamma) = candidates.choose(&mut rng) else {
            continue;
        };
        let key = (alpha.clone(), beta.clone(), gamma.clone());
        if seen.insert(key) {
            out.push(
                ProblemInstance::new(alpha.clone(), beta.clone(), gamma.clone(), *rect)
                    .expect("size equation holds by construction"),
            );
        }
    }
    out
}

/// Outcome of the relation suites on one instance.
#[derive(Debug, Clone)]
pub struct InstanceCheck {
    pub instance: ProblemInstance,
    pub lr_count: usize,
    pub k_count: usize,
    /// Elements where local evacuation-shuffling differs from the
    /// rectification route.
    pub esh_disagreements: usize,
    /// Elements checked against the one-row rule, when applicable.
    pub pieri_checked: usize,
    /// Orbit-bound rows violating the conjectural inequality.
    pub bound_violations: usize,
}

/// Runs every suite on one instance: fiber sizes, the equality of the two
/// evacuation-shuffle routes, the factorization and its orbit counts, the
/// phase-output bijections, the fixed-point equivalence, the counting
/// relations, and the conjectural orbit bound (reported, not asserted).
pub fn check_instance(instance: &ProblemInstance) -> Result<InstanceCheck> {
    let elements = enumerate_lr(instance)?;
    let after = enumerate_lr_after(instance)?;
    if elements.len() != after.len() {
        return Err(Error::InvariantViolation(format!(
            "fiber sizes differ on {instance}: {} vs {}",
            elements.len(),
            after.len()
        )));
    }

    let mut esh_disagreements = 0;
    let mut pieri_checked = 0;
    let mut outputs = Vec::with_capacity(elements.len());
    let one_row = instance.beta().len() == 1;
    for p in &elements {
        let (local, path) = local_esh(p)?;
        phase_strips(&path)?;
        let oracle = esh_via_rectification(p)?;
        if local != oracle {
            esh_disagreements += 1;
        }
        if one_row {
            if pieri_esh(p)? != local {
                return Err(Error::InvariantViolation(format!(
                    "one-row rule disagrees with the local algorithm at {p}"
                )));
            }
            pieri_checked += 1;
        }
        fixed_point_check(p)?;
        outputs.push(local);
    }

    // The shuffle image must fill the ending fiber exactly once each.
    outputs.sort_by(|a, b| {
        a.reading_word()
            .cmp(&b.reading_word())
            .then(a.box_cell().cmp(&b.box_cell()))
    });
    outputs.dedup();
    if outputs != after {
        return Err(Error::InvariantViolation(format!(
            "shuffle image differs from the ending fiber on {instance}"
        )));
    }

    let report = orbit_decomposition(instance)?;
    factor_operators(instance)?.verify()?;
    factor_orbit_check(instance)?;

    // Each phase's outputs over all elements must hit the genomic set
    // exactly once each.
    let genomic = enumerate_genomic(instance)?;
    let expected: std::collections::BTreeSet<GenomicTableau> =
        genomic.iter().cloned().collect();
    for phase1 in [true, false] {
        let produced = collect_phase_outputs(&report, phase1);
        let total: usize = report
            .orbits
            .iter()
            .map(|o| if phase1 { o.k1.len() } else { o.k2.len() })
            .sum();
        if produced.len() != total {
            return Err(Error::InvariantViolation(format!(
                "duplicate phase outputs across orbits on {instance}"
            )));
        }
        if produced != expected {
            return Err(Error::InvariantViolation(format!(
                "phase outputs differ from the genomic set on {instance}"
            )));
        }
    }

    let bound_violations = orbit_bound_report(&report)
        .iter()
        .filter(|r| !r.phase1_ok || !r.phase2_ok)
        .count();

    Ok(InstanceCheck {
        instance: instance.clone(),
        lr_count: elements.len(),
        k_count: genomic.total(),
        esh_disagreements,
        pieri_checked,
        bound_violations,
    })
}

/// Runs [`check_instance`] over many instances, in parallel when enabled.
pub fn check_many(instances: &[ProblemInstance]) -> Result<Vec<InstanceCheck>> {
    map_collect(instances, check_instance).into_iter().collect()
}
