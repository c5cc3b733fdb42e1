use std::thread;

use ssw_core::exact::{sample, solve_riemann, NewtonConfig, StarSolution};
use ssw_core::fv::{advance, l1_error, total_energy, Grid, Limiter, Order, PathMode, SchemeConfig, SolverKind, SpeedMode};

use crate::cases::CaseSpec;
use crate::csv::{ErrorRow, Profile};

/// Root tolerance used whenever the harness needs an exact solution.
pub const EXACT_TOL: f64 = 1e-12;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("unknown case '{0}'")]
    UnknownCase(String),
    #[error("invalid run configuration: {0}")]
    Config(&'static str),
    #[error("case '{case}': {source}")]
    Solver {
        case: &'static str,
        #[source]
        source: ssw_core::Error,
    },
}

pub type Result<T> = std::result::Result<T, HarnessError>;

fn ctx<T>(case: &CaseSpec, r: ssw_core::Result<T>) -> Result<T> {
    r.map_err(|source| HarnessError::Solver { case: case.name, source })
}

/// Options of a numerical run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub cells: usize,
    pub order: Order,
    pub solver: SolverKind,
    pub cfl: f64,
    pub speeds: SpeedMode,
    pub path: PathMode,
    pub limiter: Limiter,
    /// Final time; the case default when `None`.
    pub time: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let s = SchemeConfig::default();
        Self {
            cells: 200,
            order: s.order,
            solver: s.solver,
            cfl: s.cfl,
            speeds: s.speeds,
            path: s.path,
            limiter: s.limiter,
            time: None,
        }
    }
}

impl RunConfig {
    pub const MIN_CELLS: usize = 10;

    pub fn scheme(&self) -> SchemeConfig {
        SchemeConfig {
            solver: self.solver,
            speeds: self.speeds,
            path: self.path,
            order: self.order,
            cfl: self.cfl,
            limiter: self.limiter,
            ..SchemeConfig::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.cells < Self::MIN_CELLS {
            return Err(HarnessError::Config("at least 10 cells are required"));
        }
        if !(self.cfl > 0.0 && self.cfl < 1.0) {
            return Err(HarnessError::Config("CFL number must lie in (0, 1)"));
        }
        if self.time.is_some_and(|t| !(t > 0.0)) {
            return Err(HarnessError::Config("final time must be positive"));
        }
        Ok(())
    }
}

pub fn exact_solution(case: &CaseSpec) -> Result<StarSolution> {
    ctx(case, solve_riemann(&case.left, &case.right, &case.params(), &NewtonConfig::with_tol(EXACT_TOL)))
}

/// Exact solution at time `t` on `samples` equispaced points spanning the
/// domain, end points included.
pub fn run_exact(case: &CaseSpec, samples: usize, t: f64) -> Result<Profile> {
    if samples < 2 {
        return Err(HarnessError::Config("at least 2 samples are required"));
    }
    if !(t > 0.0) {
        return Err(HarnessError::Config("final time must be positive"));
    }
    let sol = exact_solution(case)?;
    let (a, b) = case.domain;
    let x: Vec<f64> = (0..samples).map(|i| a + (b - a) * i as f64 / (samples - 1) as f64).collect();
    let states = x.iter().map(|&x| sample(&sol, (x - case.x0) / t)).collect();
    Ok(Profile { x, states })
}

/// Result of a numerical run.
#[derive(Debug, Clone)]
pub struct Simulation {
    pub grid: Grid,
    pub steps: usize,
    pub time: f64,
    pub energy_initial: f64,
    pub energy_final: f64,
}

impl Simulation {
    pub fn profile(&self) -> Result<Profile> {
        let states = self.grid.primitives().map_err(|source| HarnessError::Solver { case: "", source })?;
        let x = (0..self.grid.cells.len()).map(|j| self.grid.center(j)).collect();
        Ok(Profile { x, states })
    }

    /// Relative drop of the total energy between the initial and final grid.
    pub fn energy_drop(&self) -> f64 {
        (self.energy_initial - self.energy_final) / self.energy_initial
    }
}

pub fn simulate(case: &CaseSpec, cfg: &RunConfig) -> Result<Simulation> {
    cfg.validate()?;
    let params = case.params();
    let (a, b) = case.domain;
    let mut grid = ctx(case, Grid::riemann(a, b, cfg.cells, case.x0, case.left, case.right))?;
    let energy_initial = ctx(case, total_energy(&grid, &params))?;
    let t = cfg.time.unwrap_or(case.t_final);
    let stats = ctx(case, advance(&mut grid, &params, &cfg.scheme(), t))?;
    let energy_final = ctx(case, total_energy(&grid, &params))?;
    Ok(Simulation { grid, steps: stats.steps, time: stats.time, energy_initial, energy_final })
}

pub fn run_fv(case: &CaseSpec, cfg: &RunConfig) -> Result<Profile> {
    let sim = simulate(case, cfg)?;
    sim.profile().map_err(|e| match e {
        HarnessError::Solver { source, .. } => HarnessError::Solver { case: case.name, source },
        e => e,
    })
}

/// L1 errors against the exact solution for each grid size; the runs are
/// independent and execute on separate threads.
pub fn run_convergence(case: &CaseSpec, cfg: &RunConfig, cells: &[usize]) -> Result<Vec<ErrorRow>> {
    let sol = exact_solution(case)?;
    let t = cfg.time.unwrap_or(case.t_final);
    thread::scope(|s| {
        let handles: Vec<_> = cells
            .iter()
            .map(|&n| {
                let cfg = RunConfig { cells: n, ..*cfg };
                let sol = &sol;
                s.spawn(move || {
                    let sim = simulate(case, &cfg)?;
                    Ok(ErrorRow { cells: n, errors: l1_error(&sim.grid, sol, t, case.x0) })
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("convergence worker panicked")).collect()
    })
}
