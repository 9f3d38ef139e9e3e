//! Combinatorics of Schubert curves.
//!
//! The crate provides jeu de taquin machinery (slides, shuffles,
//! rectification), the local evacuation-shuffling algorithm with full path
//! metadata, ballot genomic tableaux, and the monodromy operator `omega`
//! together with its orbit structure, factorization and the numeric
//! relations tying the orbit counts to genomic tableau counts.
//!
//! All values are immutable and all operations are pure functions, so
//! everything can be shared freely across threads. With the default
//! `parallel` feature the bulk operations (orbit maps, enumerations,
//! verification sweeps) fan out over rayon; without it they run
//! sequentially with identical, canonically ordered results.

pub mod error;
pub mod genomic;
pub mod jdt;
pub mod localesh;
pub mod monodromy;
pub mod partition;
pub mod punctured;
pub mod shape;
pub mod tableau;
pub mod verify;

mod enumerate;
mod par;

pub use error::{Error, Result};
pub use genomic::{
    enumerate_genomic, enumerate_genomic_limited, is_genomic, phi1, phi2, GenomicSet,
    GenomicTableau,
};
pub use jdt::{esh_via_rectification, rectify, rectify_with, shuffle, slide, SlideDirection};
pub use localesh::{
    local_esh, phase_strips, pieri_esh, render_trace, step_validity, EvacPath, MoveKind, MoveTag,
    PhaseStrips,
};
pub use monodromy::{
    enumerate_lr, enumerate_lr_after, factor_operators, factor_orbit_check, family_components,
    family_staircase, fixed_point_check, omega, orbit_bound_report, orbit_decomposition,
    verify_components, verify_staircase, Orbit, OrbitReport, ProblemInstance,
};
pub use partition::{Cell, Partition, Rectangle};
pub use punctured::{PuncturedTableau, SuffixStatus};
pub use shape::{CornerSets, SkewShape};
pub use tableau::{SkewTableau, TableauPair, Word};
