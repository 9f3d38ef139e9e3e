//! The monodromy operator and its orbit structure.
//!
//! `omega` composes local evacuation-shuffling with the backward jeu de
//! taquin slide of the box, permuting the set of marked tableaux that index
//! the fiber. Orbit counts, signs and reflection lengths tie into the
//! genomic tableau counts through the relations checked in
//! [`orbit_decomposition`] and the factorization in [`factor`].

mod factor;
mod family;

pub use factor::{enumerate_x, factor_operators, factor_orbit_check, FactorOrbitRow, FactorSystem};
pub use family::{
    family_components, family_staircase, verify_components, verify_staircase, ComponentsReport,
    StaircaseReport,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::enumerate::{enumerate_fillings, BallotMode, FillSpec};
use crate::error::{Error, Result};
use crate::genomic::{enumerate_genomic_limited, phi1, phi2, GenomicTableau};
use crate::localesh::{local_esh, phase_strips};
use crate::par::map_collect;
use crate::partition::{Partition, Rectangle};
use crate::punctured::PuncturedTableau;
use crate::shape::SkewShape;

/// A problem instance: three partitions and the ambient rectangle, with
/// sizes summing to one less than the rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    rect: Rectangle,
}

impl ProblemInstance {
    pub fn new(
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
        rect: Rectangle,
    ) -> Result<Self> {
        for (name, p) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            if !p.fits(&rect) {
                return Err(Error::InvalidProblem(format!(
                    "{name}={p} does not fit in {rect}"
                )));
            }
        }
        let total = alpha.size() + beta.size() + gamma.size();
        if total + 1 != rect.num_cells() {
            return Err(Error::InvalidProblem(format!(
                "sizes sum to {total}, expected {}",
                rect.num_cells() - 1
            )));
        }
        Ok(ProblemInstance {
            alpha,
            beta,
            gamma,
            rect,
        })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn rect(&self) -> &Rectangle {
        &self.rect
    }

    pub fn gamma_complement(&self) -> Partition {
        self.gamma
            .complement(&self.rect)
            .expect("gamma fits by construction")
    }

    /// The ambient skew shape of all fillings, or `None` when the inner
    /// partition pokes out of the complement (an empty problem).
    pub fn total_shape(&self) -> Option<SkewShape> {
        SkewShape::new(self.gamma_complement(), self.alpha.clone()).ok()
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} beta={} gamma={} rect={}",
            self.alpha, self.beta, self.gamma, self.rect
        )
    }
}

fn canonical_sort(elements: &mut Vec<PuncturedTableau>) {
    elements.sort_by(|a, b| {
        a.reading_word()
            .cmp(&b.reading_word())
            .then(a.box_cell().cmp(&b.box_cell()))
    });
    elements.dedup();
}

fn enumerate_with_bounds(
    instance: &ProblemInstance,
    before_max: usize,
    after_min: usize,
    limit: Option<usize>,
) -> Result<Vec<PuncturedTableau>> {
    let Some(shape) = instance.total_shape() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for hole in shape.cells() {
        let spec = FillSpec {
            shape: &shape,
            hole: Some((hole, before_max, after_min)),
            content: instance.beta.parts(),
            ballot: BallotMode::Strict,
            limit,
        };
        for values in enumerate_fillings(&spec)? {
            out.push(PuncturedTableau::new(shape.clone(), values)?);
            if let Some(l) = limit {
                if out.len() > l {
                    return Err(Error::LimitExceeded(format!("more than {l} elements")));
                }
            }
        }
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// The fiber `LR(alpha, box, beta, gamma)`: ballot fillings of content beta
/// with the box extending the inner shape.
pub fn enumerate_lr(instance: &ProblemInstance) -> Result<Vec<PuncturedTableau>> {
    enumerate_lr_limited(instance, None)
}

pub fn enumerate_lr_limited(
    instance: &ProblemInstance,
    limit: Option<usize>,
) -> Result<Vec<PuncturedTableau>> {
    enumerate_with_bounds(instance, 0, 1, limit)
}

/// The fiber `LR(alpha, beta, box, gamma)`: the box sits at an outer corner.
pub fn enumerate_lr_after(instance: &ProblemInstance) -> Result<Vec<PuncturedTableau>> {
    enumerate_lr_after_limited(instance, None)
}

pub fn enumerate_lr_after_limited(
    instance: &ProblemInstance,
    limit: Option<usize>,
) -> Result<Vec<PuncturedTableau>> {
    let t = instance.beta.len();
    enumerate_with_bounds(instance, t, t + 1, limit)
}

/// The monodromy operator: local evacuation-shuffling followed by the
/// backward slide of the box.
pub fn omega(p: &PuncturedTableau) -> Result<PuncturedTableau> {
    let (mut q, _) = local_esh(p)?;
    q.slide_box_back();
    if !q.is_lr_start() {
        return Err(Error::InvariantViolation(format!(
            "omega output is not in LR(alpha, box, beta, gamma): {q}"
        )));
    }
    Ok(q)
}

/// One orbit of `omega`, listed from its canonically minimal element, with
/// the genomic tableaux generated by each phase over the orbit.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub elements: Vec<PuncturedTableau>,
    pub k1: Vec<GenomicTableau>,
    pub k2: Vec<GenomicTableau>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Orbit structure of an instance together with the numeric relations.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub instance: ProblemInstance,
    pub orbits: Vec<Orbit>,
    pub lr_count: usize,
    pub k_count: usize,
    /// `lr_count - k_count`.
    pub chi: i64,
    /// Number of orbits.
    pub eta: usize,
    /// Sign of the permutation, 0 or 1.
    pub sign: u8,
    /// `k_count`, an upper bound for the reflection length.
    pub rlength_bound: usize,
}

impl OrbitReport {
    /// Reflection length of the permutation: sum of cycle lengths minus one.
    pub fn rlength(&self) -> usize {
        self.lr_count - self.eta
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "instance": {
                "alpha": self.instance.alpha.to_string(),
                "beta": self.instance.beta.to_string(),
                "gamma": self.instance.gamma.to_string(),
                "rect": self.instance.rect.to_string(),
            },
            "lr_count": self.lr_count,
            "k_count": self.k_count,
            "chi": self.chi,
            "eta": self.eta,
            "sign": self.sign,
            "rlength_bound": self.rlength_bound,
            "orbits": self.orbits.iter().map(|o| serde_json::json!({
                "size": o.size(),
                "k1": o.k1.len(),
                "k2": o.k2.len(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Plain-text table, one row per orbit.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.instance));
        out.push_str("orbit   size     K1     K2\n");
        for (i, o) in self.orbits.iter().enumerate() {
            out.push_str(&format!(
                "{:>5} {:>6} {:>6} {:>6}\n",
                i + 1,
                o.size(),
                o.k1.len(),
                o.k2.len()
            ));
        }
        out.push_str(&format!(
            "lr_count={} k_count={} chi={} eta={} sign={} rlength_bound={}\n",
            self.lr_count, self.k_count, self.chi, self.eta, self.sign, self.rlength_bound
        ));
        out
    }
}

/// Computes the full orbit structure and checks the counting relations:
/// the genomic count bounds the reflection length and matches its parity,
/// and the orbit count dominates and matches the parity of `chi`.
pub fn orbit_decomposition(instance: &ProblemInstance) -> Result<OrbitReport> {
    orbit_decomposition_limited(instance, None)
}

pub fn orbit_decomposition_limited(
    instance: &ProblemInstance,
    limit: Option<usize>,
) -> Result<OrbitReport> {
    let elements = enumerate_lr_limited(instance, limit)?;
    let lr_count = elements.len();

    struct ElementPass {
        next: PuncturedTableau,
        k1: Vec<GenomicTableau>,
        k2: Vec<GenomicTableau>,
    }

    // One pass per element: the next element under omega plus the genomic
    // tableaux its path generates, checked for the strip properties.
    let images: Vec<Result<ElementPass>> = map_collect(&elements, |p| {
        let (mut out, path) = local_esh(p)?;
        phase_strips(&path)?;
        let k1 = phi1(&path, p)?;
        let k2 = phi2(&path, p)?;
        out.slide_box_back();
        Ok(ElementPass { next: out, k1, k2 })
    });

    let index: BTreeMap<&PuncturedTableau, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut next = Vec::with_capacity(lr_count);
    let mut gen1 = Vec::with_capacity(lr_count);
    let mut gen2 = Vec::with_capacity(lr_count);
    for r in images {
        let pass = r?;
        let j = *index.get(&pass.next).ok_or_else(|| {
            Error::InvariantViolation(format!("omega image escapes the fiber: {}", pass.next))
        })?;
        next.push(j);
        gen1.push(pass.k1);
        gen2.push(pass.k2);
    }
    {
        let mut seen = vec![false; lr_count];
        for &j in &next {
            if seen[j] {
                return Err(Error::InvariantViolation(
                    "omega is not injective on the fiber".into(),
                ));
            }
            seen[j] = true;
        }
    }

    let mut visited = vec![false; lr_count];
    let mut orbits = Vec::new();
    for start in 0..lr_count {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k1 = Vec::new();
        let mut k2 = Vec::new();
        let mut cur = start;
        loop {
            visited[cur] = true;
            cycle.push(elements[cur].clone());
            k1.extend(gen1[cur].iter().cloned());
            k2.extend(gen2[cur].iter().cloned());
            cur = next[cur];
            if cur == start {
                break;
            }
        }
        for ks in [&mut k1, &mut k2] {
            let before = ks.len();
            ks.sort_by(|a: &GenomicTableau, b: &GenomicTableau| {
                a.canonical_key().cmp(&b.canonical_key())
            });
            ks.dedup();
            if ks.len() != before {
                return Err(Error::InvariantViolation(
                    "duplicate genomic tableau within an orbit".into(),
                ));
            }
        }
        orbits.push(Orbit {
            elements: cycle,
            k1,
            k2,
        });
    }

    let k_count = enumerate_genomic_limited(instance, limit)?.total();
    let eta = orbits.len();
    let chi = lr_count as i64 - k_count as i64;
    let rlength = lr_count - eta;
    let sign = (rlength % 2) as u8;

    if k_count < rlength || (k_count - rlength) % 2 != 0 {
        return Err(Error::InvariantViolation(format!(
            "genomic count {k_count} does not bound/match the reflection length {rlength}"
        )));
    }
    if (eta as i64) < chi || (eta as i64 - chi).rem_euclid(2) != 0 {
        return Err(Error::InvariantViolation(format!(
            "orbit count {eta} incompatible with chi {chi}"
        )));
    }
    if sign != (k_count % 2) as u8 {
        return Err(Error::InvariantViolation(format!(
            "sign {sign} does not match genomic parity {}",
            k_count % 2
        )));
    }

    Ok(OrbitReport {
        instance: instance.clone(),
        orbits,
        lr_count,
        k_count,
        chi,
        eta,
        sign,
        rlength_bound: k_count,
    })
}

/// The three equivalent fixed-point criteria, computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedPointCheck {
    pub is_fixed: bool,
    pub path_connected: bool,
    pub genomic_free: bool,
}

/// Checks one element: fixed under `omega`, connected evacu-shuffle path,
/// and no genomic tableaux generated. The three must agree.
pub fn fixed_point_check(p: &PuncturedTableau) -> Result<FixedPointCheck> {
    let (out, path) = local_esh(p)?;
    let mut q = out;
    q.slide_box_back();
    let is_fixed = &q == p;
    let path_connected = crate::genomic::path_is_connected(&path);
    let genomic_free = phi1(&path, p)?.is_empty() && phi2(&path, p)?.is_empty();
    if is_fixed != path_connected || path_connected != genomic_free {
        return Err(Error::InvariantViolation(format!(
            "fixed-point criteria disagree on {p}: fixed={is_fixed} connected={path_connected} free={genomic_free}"
        )));
    }
    Ok(FixedPointCheck {
        is_fixed,
        path_connected,
        genomic_free,
    })
}

/// One row of the orbit-by-orbit lower bound report.
#[derive(Debug, Clone, Copy)]
pub struct OrbitBound {
    pub orbit_size: usize,
    pub k1: usize,
    pub k2: usize,
    pub phase1_ok: bool,
    pub phase2_ok: bool,
}

/// Per-orbit check of the conjectural bound `|K_i(O)| >= |O| - 1`. Never
/// fails; violations are findings to surface, not errors.
pub fn orbit_bound_report(report: &OrbitReport) -> Vec<OrbitBound> {
    report
        .orbits
        .iter()
        .map(|o| OrbitBound {
            orbit_size: o.size(),
            k1: o.k1.len(),
            k2: o.k2.len(),
            phase1_ok: o.k1.len() + 1 >= o.size(),
            phase2_ok: o.k2.len() + 1 >= o.size(),
        })
        .collect()
}

/// Genomic tableaux gathered in one phase across a whole report, for
/// bijectivity checks.
pub fn collect_phase_outputs(report: &OrbitReport, phase1: bool) -> BTreeSet<GenomicTableau> {
    let mut out = BTreeSet::new();
    for orbit in &report.orbits {
        let source = if phase1 { &orbit.k1 } else { &orbit.k2 };
        for g in source {
            out.insert(g.clone());
        }
    }
    out
}
