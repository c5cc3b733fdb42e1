use crate::error::{Error, Result};
use crate::linalg;
use crate::math::abs;
use crate::model::{ModelParams, PrimitiveState};
use crate::waves::{
    afun, f_total_pressure, f_total_pressure_dz, g_velocity, g_velocity_dz, Family, SideData,
};

/// Settings of the damped Newton iteration for `(z_L, z_R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonConfig {
    /// Absolute tolerance on both residuals.
    pub tol: f64,
    pub max_iter: usize,
    pub z0: (f64, f64),
}

impl Default for NewtonConfig {
    fn default() -> Self {
        Self { tol: 1e-6, max_iter: 100, z0: (1.0, 1.0) }
    }
}

impl NewtonConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        let inside = |z: f64| z > 0.0 && z < 2.0;
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParameter("Newton tolerance must be positive"));
        }
        if !inside(self.z0.0) || !inside(self.z0.1) {
            return Err(Error::InvalidParameter("Newton initial guess must lie in (0, 2)"));
        }
        Ok(())
    }
}

/// Depth ratios of the star region and the common velocity and pressure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarRoots {
    pub zl: f64,
    pub zr: f64,
    pub u_star: f64,
    pub pi_star: f64,
    pub iterations: usize,
}

/// `(F, G) = (f_L(z_L) - f_R(z_R), g_-(z_L) - g_+(z_R))`.
pub fn star_residual(zl: f64, zr: f64, l: &SideData, r: &SideData, params: &ModelParams) -> Result<(f64, f64)> {
    let f = f_total_pressure(zl, l, params)? - f_total_pressure(zr, r, params)?;
    let g = g_velocity(zl, l, params, Family::One)? - g_velocity(zr, r, params, Family::Six)?;
    Ok((f, g))
}

fn derivatives(z: f64, side: &SideData, params: &ModelParams, family: Family) -> Result<(f64, f64)> {
    if abs(2.0 - z) < 1e-6 {
        // The closed forms blow up like (2 - z)^-2 here; a one-sided
        // difference keeps the evaluation inside the domain.
        let h = 1e-7;
        let df = (f_total_pressure(z, side, params)? - f_total_pressure(z - h, side, params)?) / h;
        let dg = (g_velocity(z, side, params, family)? - g_velocity(z - h, side, params, family)?) / h;
        return Ok((df, dg));
    }
    Ok((f_total_pressure_dz(z, side, params)?, g_velocity_dz(z, side, params, family)?))
}

/// Damped Newton step: componentwise halving until the iterate stays in `(0, 2)`.
fn damp(z: f64, dz: f64) -> f64 {
    let mut step = dz;
    for _ in 0..64 {
        let next = z + step;
        if next > 0.0 && next < 2.0 {
            return next;
        }
        step *= 0.5;
    }
    z
}

pub(crate) fn newton_step(zl: f64, zr: f64, l: &SideData, r: &SideData, params: &ModelParams) -> Result<(f64, f64)> {
    let (f, g) = star_residual(zl, zr, l, r, params)?;
    let (dfl, dgl) = derivatives(zl, l, params, Family::One)?;
    let (dfr, dgr) = derivatives(zr, r, params, Family::Six)?;
    let jac = [[dfl, -dfr], [dgl, -dgr]];
    let d = linalg::solve(jac, [-f, -g]).ok_or(Error::SingularSystem)?;
    Ok((damp(zl, d[0]), damp(zr, d[1])))
}

/// `u_R - u_L < a(h_L, c_L) + a(h_R, c_R)`: the data admit a wet star region.
pub(crate) fn wet_star_exists(left: &PrimitiveState, right: &PrimitiveState, params: &ModelParams) -> bool {
    let l = SideData::from_prim(left);
    let r = SideData::from_prim(right);
    right.u - left.u < afun(l.h, l.c, params) + afun(r.h, r.c, params)
}

fn finish(zl: f64, zr: f64, l: &SideData, r: &SideData, params: &ModelParams, iterations: usize) -> Result<StarRoots> {
    let u_star = 0.5
        * (g_velocity(zl, l, params, Family::One)? + g_velocity(zr, r, params, Family::Six)?);
    let pi_star = 0.5 * (f_total_pressure(zl, l, params)? + f_total_pressure(zr, r, params)?);
    Ok(StarRoots { zl, zr, u_star, pi_star, iterations })
}

/// Solves for the star-region depth ratios starting from `cfg.z0`.
pub fn solve_star(
    left: &PrimitiveState,
    right: &PrimitiveState,
    params: &ModelParams,
    cfg: &NewtonConfig,
) -> Result<StarRoots> {
    cfg.validate()?;
    left.validate()?;
    right.validate()?;
    if !wet_star_exists(left, right, params) {
        return Err(Error::VacuumFormation);
    }
    let l = SideData::from_prim(left);
    let r = SideData::from_prim(right);
    let (mut zl, mut zr) = cfg.z0;
    for it in 0..=cfg.max_iter {
        let (f, g) = star_residual(zl, zr, &l, &r, params)?;
        if abs(f) < cfg.tol && abs(g) < cfg.tol {
            return finish(zl, zr, &l, &r, params, it);
        }
        if it == cfg.max_iter {
            break;
        }
        (zl, zr) = newton_step(zl, zr, &l, &r, params)?;
    }
    Err(Error::NoConvergence { iterations: cfg.max_iter })
}

/// Continues Newton from converged roots while the scaled residual keeps
/// decreasing, so that jump conditions downstream hold to round-off.
pub(crate) fn polish(
    roots: StarRoots,
    left: &PrimitiveState,
    right: &PrimitiveState,
    params: &ModelParams,
) -> Result<StarRoots> {
    let l = SideData::from_prim(left);
    let r = SideData::from_prim(right);
    let p_scale = l.total_pressure(params) + r.total_pressure(params);
    let u_scale = left.a(params) + right.a(params);
    let norm = |zl: f64, zr: f64| -> Result<f64> {
        let (f, g) = star_residual(zl, zr, &l, &r, params)?;
        Ok((abs(f) / p_scale).max(abs(g) / u_scale))
    };
    let (mut zl, mut zr) = (roots.zl, roots.zr);
    let mut best = norm(zl, zr)?;
    let mut extra = 0;
    while best > 0.0 && extra < 10 {
        let (nl, nr) = newton_step(zl, zr, &l, &r, params)?;
        let next = norm(nl, nr)?;
        if next >= best {
            break;
        }
        (zl, zr, best) = (nl, nr, next);
        extra += 1;
    }
    finish(zl, zr, &l, &r, params, roots.iterations + extra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::total_pressure;

    const G: ModelParams = ModelParams { g: 9.81 };

    fn dambreak() -> (PrimitiveState, PrimitiveState) {
        (
            PrimitiveState::new(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4),
            PrimitiveState::new(0.01, 0.0, 0.0, 1e-4, 0.0, 1e-4),
        )
    }

    #[test]
    fn dambreak_roots() {
        let (l, r) = dambreak();
        let roots = solve_star(&l, &r, &G, &NewtonConfig::with_tol(1e-12)).unwrap();
        assert!((roots.zl / 0.731428410320821 - 1.0).abs() < 1e-9);
        assert!((roots.zr / 1.4177231168358784 - 1.0).abs() < 1e-9);
        assert!(roots.iterations < 20);
        let loose = solve_star(&l, &r, &G, &NewtonConfig::default()).unwrap();
        let (f, g) = star_residual(loose.zl, loose.zr, &SideData::from_prim(&l), &SideData::from_prim(&r), &G).unwrap();
        assert!(f.abs() < 1e-6 && g.abs() < 1e-6);
    }

    #[test]
    fn identical_states() {
        let q = PrimitiveState::new(0.3, 0.2, -0.1, 0.1, 0.01, 0.2);
        let roots = solve_star(&q, &q, &G, &NewtonConfig::default()).unwrap();
        assert_eq!((roots.zl, roots.zr), (1.0, 1.0));
        assert_eq!(roots.u_star, q.u);
        assert_eq!(roots.pi_star, total_pressure(&q, &G));
        assert_eq!(roots.iterations, 0);
    }

    #[test]
    fn mirror_symmetry() {
        let l = PrimitiveState::new(0.05, 0.3, 0.1, 2e-3, 1e-4, 3e-3);
        let r = PrimitiveState::new(0.02, -0.1, -0.2, 1e-3, -2e-4, 1e-3);
        let cfg = NewtonConfig::with_tol(1e-13);
        let a = solve_star(&l, &r, &G, &cfg).unwrap();
        let b = solve_star(&r.reflect(), &l.reflect(), &G, &cfg).unwrap();
        assert!((a.zl - b.zr).abs() < 1e-10 && (a.zr - b.zl).abs() < 1e-10);
        assert!((a.u_star + b.u_star).abs() < 1e-10);
    }

    #[test]
    fn vacuum_detected() {
        let l = PrimitiveState::new(0.01, -2.0, 0.0, 1e-4, 0.0, 1e-4);
        let r = PrimitiveState::new(0.01, 2.0, 0.0, 1e-4, 0.0, 1e-4);
        assert_eq!(solve_star(&l, &r, &G, &NewtonConfig::default()), Err(Error::VacuumFormation));
    }

    #[test]
    fn bad_config() {
        let (l, r) = dambreak();
        let cfg = NewtonConfig { z0: (2.0, 1.0), ..NewtonConfig::default() };
        assert!(matches!(solve_star(&l, &r, &G, &cfg), Err(Error::InvalidParameter(_))));
        let cfg = NewtonConfig { max_iter: 0, tol: 1e-12, ..NewtonConfig::default() };
        assert_eq!(solve_star(&l, &r, &G, &cfg), Err(Error::NoConvergence { iterations: 0 }));
    }

    #[test]
    fn damping_keeps_iterate_inside() {
        assert_eq!(damp(1.5, 0.25), 1.75);
        assert_eq!(damp(1.5, 1.0), 1.75);
        assert_eq!(damp(0.5, -2.0), 0.25);
    }
}
