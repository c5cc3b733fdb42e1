use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{sample, StarSolution};
use crate::math::abs;
use crate::model::{
    cons_to_prim, extreme_speeds, flux_prim, noncons_term, prim_to_cons, ConservedState,
    ModelParams, PrimitiveState,
};

use super::fluctuation::{fluctuation, Fluctuation, PathMode, SolverConfig, SolverKind};
use super::speeds::SpeedMode;

/// Uniform grid of cell averages in conserved variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub dx: f64,
    pub cells: Vec<ConservedState>,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize) -> Result<Self> {
        if n_cells == 0 || !(x_max > x_min) {
            return Err(Error::InvalidParameter("grid needs x_max > x_min and at least one cell"));
        }
        let dx = (x_max - x_min) / n_cells as f64;
        Ok(Self { x_min, x_max, dx, cells: alloc::vec![ConservedState::default(); n_cells] })
    }

    /// Grid with cell averages approximated by the value at each centre.
    pub fn from_fn(x_min: f64, x_max: f64, n_cells: usize, f: impl Fn(f64) -> PrimitiveState) -> Result<Self> {
        let mut g = Self::new(x_min, x_max, n_cells)?;
        for j in 0..n_cells {
            g.cells[j] = prim_to_cons(&f(g.center(j)));
        }
        Ok(g)
    }

    /// Riemann initial data with the discontinuity at `x0`.
    pub fn riemann(x_min: f64, x_max: f64, n_cells: usize, x0: f64, l: PrimitiveState, r: PrimitiveState) -> Result<Self> {
        Self::from_fn(x_min, x_max, n_cells, |x| if x < x0 { l } else { r })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn center(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.dx
    }

    pub fn primitives(&self) -> Result<Vec<PrimitiveState>> {
        self.cells
            .iter()
            .enumerate()
            .map(|(cell, u)| cons_to_prim(u).map_err(|_| Error::StateInvalid { cell }))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Boundary {
    /// Zero-gradient ghost cells.
    #[default]
    Outflow,
    Periodic,
}

/// Slope limiter of the piecewise linear reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Limiter {
    #[default]
    Minmod,
    VanLeer,
    /// Monotonized central.
    Mc,
    /// Zero slopes; the scheme reduces to first order.
    None,
}

impl Limiter {
    pub fn slope(self, a: f64, b: f64) -> f64 {
        if a * b <= 0.0 {
            return 0.0;
        }
        let sgn = if a > 0.0 { 1.0 } else { -1.0 };
        let (a, b) = (abs(a), abs(b));
        sgn * match self {
            Limiter::Minmod => a.min(b),
            Limiter::VanLeer => 2.0 * a * b / (a + b),
            Limiter::Mc => (2.0 * a).min(2.0 * b).min(0.5 * (a + b)),
            Limiter::None => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Order {
    First,
    #[default]
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    pub solver: SolverKind,
    pub speeds: SpeedMode,
    pub path: PathMode,
    pub order: Order,
    pub cfl: f64,
    pub limiter: Limiter,
    pub boundary: Boundary,
}

impl Default for SchemeConfig {
    fn default() -> Self {
        Self {
            solver: SolverKind::Hllc5,
            speeds: SpeedMode::Approximate,
            path: PathMode::PerWave,
            order: Order::Second,
            cfl: 0.45,
            limiter: Limiter::Minmod,
            boundary: Boundary::Outflow,
        }
    }
}

impl SchemeConfig {
    pub fn solver_config(&self) -> SolverConfig {
        SolverConfig { kind: self.solver, speeds: self.speeds, path: self.path }
    }

    fn validate(&self) -> Result<()> {
        if self.cfl > 0.0 && self.cfl < 1.0 {
            Ok(())
        } else {
            Err(Error::InvalidParameter("CFL number must lie in (0, 1)"))
        }
    }
}

/// `cfl * dx / max |u ± a|` over all cells.
pub fn stable_dt(prims: &[PrimitiveState], dx: f64, cfl: f64, params: &ModelParams) -> f64 {
    let smax = prims.iter().fold(0.0f64, |m, q| {
        let (a, b) = extreme_speeds(q, params);
        m.max(abs(a)).max(abs(b))
    });
    cfl * dx / smax
}

fn ghost(prims: &[PrimitiveState], i: isize, boundary: Boundary) -> PrimitiveState {
    let n = prims.len() as isize;
    let j = match boundary {
        Boundary::Outflow => i.clamp(0, n - 1),
        Boundary::Periodic => i.rem_euclid(n),
    };
    prims[j as usize]
}

fn interface_fluctuations(
    left_faces: impl Fn(usize) -> PrimitiveState,
    right_faces: impl Fn(usize) -> PrimitiveState,
    n: usize,
    params: &ModelParams,
    cfg: &SchemeConfig,
) -> Result<Vec<Fluctuation>> {
    let solver = cfg.solver_config();
    // Interface i separates cell i - 1 from cell i.
    (0..=n).map(|i| fluctuation(&left_faces(i), &right_faces(i), params, &solver)).collect()
}

fn apply(grid: &mut Grid, fl: &[Fluctuation], internal: Option<&[[f64; 6]]>, dt: f64) -> Result<()> {
    let lambda = dt / grid.dx;
    for j in 0..grid.cells.len() {
        let mut u = grid.cells[j].to_array();
        for k in 0..6 {
            let mut d = fl[j].d_plus[k] + fl[j + 1].d_minus[k];
            if let Some(int) = internal {
                d += int[j][k];
            }
            u[k] -= lambda * d;
        }
        let next = ConservedState::from_array(u);
        cons_to_prim(&next).map_err(|_| Error::StateInvalid { cell: j })?;
        grid.cells[j] = next;
    }
    Ok(())
}

fn time_step(prims: &[PrimitiveState], grid: &Grid, params: &ModelParams, cfg: &SchemeConfig, dt_cap: f64) -> f64 {
    stable_dt(prims, grid.dx, cfg.cfl, params).min(dt_cap)
}

/// One first-order step; returns the step size used, at most `dt_cap`.
pub fn step_first_order(grid: &mut Grid, params: &ModelParams, cfg: &SchemeConfig, dt_cap: f64) -> Result<f64> {
    cfg.validate()?;
    let prims = grid.primitives()?;
    let dt = time_step(&prims, grid, params, cfg, dt_cap);
    let n = prims.len();
    let fl = interface_fluctuations(
        |i| ghost(&prims, i as isize - 1, cfg.boundary),
        |i| ghost(&prims, i as isize, cfg.boundary),
        n,
        params,
        cfg,
    )?;
    apply(grid, &fl, None, dt)?;
    Ok(dt)
}

/// Path integral of the quasi-linear operator across a cell, between its
/// two face states.
fn cell_integral(minus: &PrimitiveState, plus: &PrimitiveState, params: &ModelParams) -> [f64; 6] {
    let fm = flux_prim(minus, params);
    let fp = flux_prim(plus, params);
    let m = (0.5 * (minus.h * minus.u + plus.h * plus.u), 0.5 * (minus.h * minus.v + plus.h * plus.v));
    let b = noncons_term(m, plus.h - minus.h, params);
    core::array::from_fn(|k| fp[k] - fm[k] + b[k])
}

fn faces(q: &PrimitiveState, slope: &[f64; 6]) -> (PrimitiveState, PrimitiveState) {
    let a = q.to_array();
    let minus = PrimitiveState::from_array(core::array::from_fn(|k| a[k] - 0.5 * slope[k]));
    let plus = PrimitiveState::from_array(core::array::from_fn(|k| a[k] + 0.5 * slope[k]));
    (minus, plus)
}

/// One MUSCL-Hancock step: limited linear reconstruction in primitive
/// variables, a half-step predictor of the face values driven by the cell's
/// own path integral, then fluctuations between the evolved faces.
pub fn step_muscl_hancock(grid: &mut Grid, params: &ModelParams, cfg: &SchemeConfig, dt_cap: f64) -> Result<f64> {
    cfg.validate()?;
    let prims = grid.primitives()?;
    let dt = time_step(&prims, grid, params, cfg, dt_cap);
    let n = prims.len();
    let half = 0.5 * dt / grid.dx;

    let mut minus = Vec::with_capacity(n);
    let mut plus = Vec::with_capacity(n);
    for j in 0..n {
        let q = prims[j];
        let qm = ghost(&prims, j as isize - 1, cfg.boundary).to_array();
        let qp = ghost(&prims, j as isize + 1, cfg.boundary).to_array();
        let a = q.to_array();
        let slope: [f64; 6] = core::array::from_fn(|k| cfg.limiter.slope(a[k] - qm[k], qp[k] - a[k]));
        let (mut fm, mut fp) = faces(&q, &slope);
        if fm.validate().is_err() || fp.validate().is_err() {
            (fm, fp) = (q, q);
        }
        let int = cell_integral(&fm, &fp, params);
        let um = prim_to_cons(&fm).to_array();
        let up = prim_to_cons(&fp).to_array();
        let em = ConservedState::from_array(core::array::from_fn(|k| um[k] - half * int[k]));
        let ep = ConservedState::from_array(core::array::from_fn(|k| up[k] - half * int[k]));
        match (cons_to_prim(&em), cons_to_prim(&ep)) {
            (Ok(a), Ok(b)) => {
                minus.push(a);
                plus.push(b);
            }
            _ => {
                minus.push(q);
                plus.push(q);
            }
        }
    }

    let fl = interface_fluctuations(
        |i| ghost(&plus, i as isize - 1, cfg.boundary),
        |i| ghost(&minus, i as isize, cfg.boundary),
        n,
        params,
        cfg,
    )?;
    let internal: Vec<[f64; 6]> = (0..n).map(|j| cell_integral(&minus[j], &plus[j], params)).collect();
    apply(grid, &fl, Some(&internal), dt)?;
    Ok(dt)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunStats {
    pub steps: usize,
    pub time: f64,
}

/// Advances `grid` from `t = 0` to `t_final`, landing exactly on it.
pub fn advance(grid: &mut Grid, params: &ModelParams, cfg: &SchemeConfig, t_final: f64) -> Result<RunStats> {
    let mut t = 0.0;
    let mut steps = 0;
    while t < t_final {
        let cap = t_final - t;
        let dt = match cfg.order {
            Order::First => step_first_order(grid, params, cfg, cap)?,
            Order::Second => step_muscl_hancock(grid, params, cfg, cap)?,
        };
        t = if dt >= cap { t_final } else { t + dt };
        steps += 1;
    }
    Ok(RunStats { steps, time: t })
}

/// Per-component L1 distance between the cell averages and the exact
/// solution sampled at cell centres, `sum_j |U_j - U(x_j, t)| dx`, with the
/// initial discontinuity at `x0`.
pub fn l1_error(grid: &Grid, exact: &StarSolution, t: f64, x0: f64) -> [f64; 6] {
    let mut err = [0.0; 6];
    for (j, u) in grid.cells.iter().enumerate() {
        let q = sample(exact, (grid.center(j) - x0) / t);
        let e = prim_to_cons(&q).to_array();
        let u = u.to_array();
        for k in 0..6 {
            err[k] += abs(u[k] - e[k]) * grid.dx;
        }
    }
    err
}

/// Domain integral of the total energy density.
pub fn total_energy(grid: &Grid, params: &ModelParams) -> Result<f64> {
    let prims = grid.primitives()?;
    Ok(prims.iter().map(|q| crate::model::total_energy(q, params)).sum::<f64>() * grid.dx)
}
