//! Ideal generation: the constructive tactics behind the simplicity
//! arguments, basis generation from `∂_t`, and truncated saturation.

mod closure;
mod experiment;
mod lemma2;
mod obstruction;
mod tactics;
mod trace;

pub use closure::{
    closure_saturate, closure_saturate_with, AlgebraBracket, ClosureConfig, ClosureReport, LieBracket,
    ZeroBracket,
};
pub use experiment::{abelian_control, simplicity_experiment, ExperimentSummary};
pub use lemma2::{lemma2_generate, Lemma2Pattern, Lemma2Trace};
pub use obstruction::{
    annihilated, class_functional, coverage_bound, functional_vector, has_obstructions, residue,
    unreachable_keys,
};
pub use tactics::{
    drive_to_grade_zero, reduce_precondition, tactic_positivize, tactic_reduce_components,
    tactic_strip_exponentials, StripTarget, DEFAULT_SEARCH_BOUND,
};
pub use trace::{Finding, Stats, Tactic, Trace, TraceStep};
