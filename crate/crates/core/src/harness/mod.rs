//! Verification studies: refinement tables, critical-point order probes,
//! weight-ratio propositions, the quadratic form nullspace, scale
//! independence and relative cost.

pub mod convergence;
pub mod nullspace;
pub mod probe;
pub mod props;
pub mod scale;
pub mod timing;

pub use convergence::{
    convergence_study, convergence_study_from, ConvergenceReport, ConvergenceRow, DYADIC_LADDER,
};
pub use nullspace::{quadratic_form_nullspace, NullspaceResult, NullspaceTargets};
pub use probe::{acp_order_probe, OrderProbeResult, ProbeQuantity};
pub use props::{proposition_check, PropositionTally};
pub use scale::{scale_independence_check, ScaleCheck, ScaleMode};
pub use timing::{relative_timing, TimingRow, TIMING_STEPS};
