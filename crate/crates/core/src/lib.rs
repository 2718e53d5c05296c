//! Decomposition-based multi-objective optimization workbench.
//!
//! The crate bundles the pieces needed to study MOEA/D under two ways of
//! reporting a result:
//!
//! * the *final population* framework, where the last population is the
//!   answer, and
//! * the *solution selection* framework, where every evaluated solution is
//!   streamed into an unbounded non-dominated [`archive`] and a fixed number
//!   of well-spread members is picked afterwards by distance-based
//!   [`subset`] selection.
//!
//! The [`moead`] engine supports four scalarizing functions and a reference
//! point that moves linearly from an initial to a final offset over the run.
//! [`tuner`] is a small binary GA that searches over those settings, and
//! [`harness`] drives grid studies, statistics and persistence for the CLI.

pub mod archive;
pub mod error;
pub mod formats;
pub mod harness;
pub mod indicators;
pub mod moead;
pub mod problems;
pub mod scalarize;
pub mod subset;
pub mod tuner;

pub use archive::{dominates, Archive, ArchiveSnapshot, OfferOutcome};
pub use error::{Error, Result};
pub use indicators::{build_dynamic_reference, igd, ReferenceSet, ReferenceProvenance};
pub use moead::{
    Framework, MutationParams, NormalizationState, RefPointSchedule, RunConfig, RunResult,
    SbxParams, Solution,
};
pub use problems::{ProblemId, ProblemInstance};
pub use scalarize::{das_dennis_weights, scalarize, ScalarizerKind, ScalarizerSpec, WeightSet};
pub use subset::{dss_select, SelectionRequest};
pub use tuner::{Genome, TunerConfig};
