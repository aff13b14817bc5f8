//! Method-of-lines solvers for scalar advection and the Euler equations.

pub mod advance;
pub mod cases;
pub mod euler;
pub mod field;
pub mod line;
pub mod norms;
pub mod reconstruct;
pub mod time;

pub use advance::{advance, advance_steps, run_case, transpose_2d, RunOutcome, RunStats, StepRecord};
pub use cases::{CaseConfig, CaseTag, TimeStep};
pub use euler::{Average, Gas, Primitive};
pub use field::{initial_state, Field1D, Field2D, FieldState};
pub use norms::{error_norms, ErrorNorms};
pub use reconstruct::{reconstruct_interface, Wind};
pub use time::Integrator;
