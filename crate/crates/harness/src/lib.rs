//! Test-case registry, CSV output and run drivers for the shear shallow
//! water solvers in `ssw-core`.

// Negated comparisons are used so that NaN fails every parameter check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cases;
pub mod csv;
pub mod reference;
pub mod run;
pub mod verify;

pub use cases::{all_cases, builtin_cases, derived_cases, find_case, CaseSpec};
pub use csv::{convergence_csv, parse_profile, ErrorRow, Profile};
pub use run::{exact_solution, run_convergence, run_exact, run_fv, simulate, HarnessError, RunConfig, Simulation};
pub use verify::{verify_case, CaseReport};
