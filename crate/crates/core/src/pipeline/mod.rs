//! The constructive search pipeline: dominance classification, nice sets,
//! the shrink and refinement steps, the auxiliary digraph on representative
//! vertices, the one-edge-per-color dense subgraph, and the recursive
//! driver that ties them together.
//!
//! Every branch that the underlying argument closes by contradiction is a
//! success branch here: it returns the rainbow cycle whose existence created
//! the contradiction. In strict mode every intermediate inequality is
//! asserted and a violation is an error; in relaxed mode violations are
//! logged and recorded in the trace while the run continues best-effort.

mod dominance;
mod driver;
mod nice;
mod refine;
mod trace;

pub use dominance::{build_dominance, DominanceTable};
pub use driver::{find_short_rainbow_cycle, DriverOutcome};
pub use nice::{
    build_aux_digraph, build_nice_set, is_nice, shrink_nice_set, NiceOutcome, NiceSet,
    NiceViolation, RemovalRule, ShrinkOutcome, ShrinkStep, SubInstance,
};
pub use refine::{
    build_dense_witness, greedy_stable_set, refine_nice_set, DenseWitness, RefinementResult,
};
pub use trace::{AssertionRecord, Trace, TraceStep};

use thiserror::Error;

use crate::rainbow::{CaseSearchError, SearchError};
use crate::witness::WitnessError;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("strict mode: hypotheses not satisfied: {0}")]
    Hypotheses(String),
    #[error("assertion `{name}` failed: {detail}")]
    Assertion { name: String, detail: String },
    #[error("no rainbow cycle of length at most ceil(n/k) found (relaxed mode)")]
    NotFound,
    #[error(transparent)]
    Budget(#[from] SearchError),
    #[error("witness check failed: {0}")]
    Witness(#[from] WitnessError),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl From<CaseSearchError> for PipelineError {
    fn from(e: CaseSearchError) -> Self {
        match e {
            CaseSearchError::Budget(b) => PipelineError::Budget(b),
            CaseSearchError::NotFound => PipelineError::NotFound,
            CaseSearchError::ClassTooSmall { color, size } => PipelineError::Precondition(format!(
                "color {color} has class size {size} < 2"
            )),
        }
    }
}

/// Records an assertion outcome and, in strict mode, turns a failure into an
/// error. Relaxed mode logs and keeps going.
pub(crate) fn gate(
    strict: bool,
    records: &mut Vec<AssertionRecord>,
    name: &str,
    ok: bool,
    detail: String,
) -> Result<(), PipelineError> {
    records.push(AssertionRecord {
        name: name.to_string(),
        ok,
        detail: detail.clone(),
    });
    if ok {
        return Ok(());
    }
    if strict {
        Err(PipelineError::Assertion {
            name: name.to_string(),
            detail,
        })
    } else {
        log::warn!("relaxed mode: {name} does not hold: {detail}");
        Ok(())
    }
}
