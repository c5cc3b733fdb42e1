//! Exact solution of the Riemann problem under the linear path.
//!
//! The star region is found by solving `f_L(z_L) = f_R(z_R)` (equal total
//! pressure) and `g_-(z_L) = g_+(z_R)` (equal normal velocity) with a damped
//! Newton iteration. The transverse variables then follow from the jump
//! conditions across shocks, the invariants across rarefactions, and the
//! shear and contact invariants inside the star region.

mod newton;
mod solution;
mod verify;

pub use newton::{solve_star, star_residual, NewtonConfig, StarRoots};
pub use solution::{
    build_solution, sample, single_shock_right_state, solve_riemann, transverse_star_state,
    vacuum_solution, StarSolution, WaveSpeeds, NO_WAVE_THRESHOLD,
};
pub use verify::{jump_residual, verify_solution, Verification};
pub(crate) use solution::{double_star, transverse_solve};
