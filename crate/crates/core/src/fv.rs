//! Path-conservative finite volume schemes on a uniform 1-D grid.
//!
//! Each interface contributes a pair of fluctuations `(D-, D+)` whose sum is
//! the path integral of the quasi-linear operator from the left to the right
//! state. With [`PathMode::Linear`] the path is the straight segment between
//! the two states; with [`PathMode::PerWave`] it runs straight across each wave
//! of the approximate fan, so that every wave obeys its own jump conditions.
//! The approximate Riemann solvers differ in how many waves they resolve.

mod fluctuation;
mod scheme;
mod speeds;

pub use fluctuation::{
    fluctuation, hll_fluctuation, hllc_fluctuation, piecewise_path_integral, wave_fan, Fluctuation, PathMode, SolverConfig,
    SolverKind, WaveFan,
};
pub use scheme::{
    advance, l1_error, stable_dt, step_first_order, step_muscl_hancock, total_energy, Boundary,
    Grid, Limiter, Order, RunStats, SchemeConfig,
};
pub use speeds::{estimate_speeds, SpeedMode};
