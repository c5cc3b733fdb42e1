use crate::error::{Error, Result};
use crate::linalg;
use crate::math::abs;
use crate::model::{ModelParams, PrimitiveState};
use crate::waves::{
    afun, g_velocity, hugoniot_r11, rarefaction_h_of_xi, rarefaction_state, shock_speed, Family,
    FanEdge, SideData, WaveFamily,
};

use super::newton::{polish, solve_star, wet_star_exists, NewtonConfig};

/// Depth ratios within this distance of one produce no nonlinear wave.
pub const NO_WAVE_THRESHOLD: f64 = 1e-12;

/// Wave positions in similarity coordinates. A nonlinear wave occupies the
/// interval `(lo, hi)`; for a shock, or when the wave is absent, both ends
/// coincide.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSpeeds {
    pub left: (f64, f64),
    pub shear_left: f64,
    pub contact: f64,
    pub shear_right: f64,
    pub right: (f64, f64),
}

impl WaveSpeeds {
    pub fn slowest(&self) -> f64 {
        self.left.0
    }

    pub fn fastest(&self) -> f64 {
        self.right.1
    }
}

/// Complete self-similar solution of a Riemann problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StarSolution {
    pub zl: f64,
    pub zr: f64,
    pub u_star: f64,
    pub pi_star: f64,
    /// `None` when the corresponding nonlinear wave has zero strength.
    pub left_wave: Option<WaveFamily>,
    pub right_wave: Option<WaveFamily>,
    /// `[U_L, U_*L, U_**L, U_**R, U_*R, U_R]`.
    pub states: [PrimitiveState; 6],
    pub speeds: WaveSpeeds,
    /// Set when the solution contains a dry region; the four intermediate
    /// states are then all [`PrimitiveState::VACUUM`].
    pub vacuum: bool,
    pub params: ModelParams,
}

impl StarSolution {
    pub fn left(&self) -> &PrimitiveState {
        &self.states[0]
    }

    pub fn right(&self) -> &PrimitiveState {
        &self.states[5]
    }
}

/// Transverse variables `(v, R12, R22)` behind a shock of depth ratio `z`
/// moving at `s` into the outer state `outer`, from the jump conditions of the
/// transverse momentum and of `E12`, `E22`. The same equations hold for
/// either orientation of the shock.
pub fn transverse_star_state(
    outer: &PrimitiveState,
    z: f64,
    u_star: f64,
    s: f64,
    params: &ModelParams,
) -> Result<(f64, f64, f64)> {
    let side = SideData::from_prim(outer);
    let r11s = hugoniot_r11(z, &side, params)?;
    transverse_solve(outer, z * outer.h, u_star, r11s, s, params).ok_or(Error::SingularSystem)
}

/// Core of [`transverse_star_state`] for arbitrary star depth, velocity and
/// `R11`; also used by the approximate five-wave solver.
pub(crate) fn transverse_solve(
    outer: &PrimitiveState,
    hs: f64,
    u_star: f64,
    r11s: f64,
    s: f64,
    params: &ModelParams,
) -> Option<(f64, f64, f64)> {
    let g = params.g;
    let (ho, uo, vo) = (outer.h, outer.u, outer.v);
    let (r11o, r12o) = (outer.r11(), outer.r12());
    let e12o = 0.5 * r12o + 0.5 * ho * uo * vo;
    let e22o = 0.5 * outer.r22() + 0.5 * ho * vo * vo;
    let dh = hs - ho;

    let a11 = hs * (u_star - s);
    let a21 = 0.5 * r11s + 0.5 * hs * u_star * (u_star - s) + 0.25 * g * hs * dh;
    let a22 = u_star - 0.5 * s;
    let b1 = ho * (uo - s) * vo + r12o;
    let b2 = (uo - s) * e12o + 0.5 * (r11o * vo + r12o * uo) - 0.25 * g * ho * vo * dh;
    let x = linalg::solve([[a11, 1.0], [a21, a22]], [b1, b2])?;
    let (vs, r12s) = (x[0], x[1]);
    let e22s = ((uo - s) * e22o + r12o * vo - r12s * vs) / (u_star - s);
    let r22s = 2.0 * e22s - hs * vs * vs;
    Some((vs, r12s, r22s))
}

/// Determinant of the 2x2 transverse system; equals the total pressure of
/// the outer state on the Hugoniot locus.
#[cfg(test)]
pub(crate) fn transverse_determinant(outer: &PrimitiveState, z: f64, u_star: f64, s: f64, params: &ModelParams) -> Result<f64> {
    let side = SideData::from_prim(outer);
    let hs = z * outer.h;
    let r11s = hugoniot_r11(z, &side, params)?;
    let d = u_star - s;
    Ok(0.5 * hs * d * d - 0.5 * r11s - 0.25 * params.g * hs * (hs - outer.h))
}

/// Right state connected to `left` by a single 1-shock of depth ratio `z`,
/// together with the shock speed.
pub fn single_shock_right_state(left: &PrimitiveState, z: f64, params: &ModelParams) -> Result<(PrimitiveState, f64)> {
    left.validate()?;
    let side = SideData::from_prim(left);
    let s = shock_speed(&side, z, params, Family::One)?;
    let u = g_velocity(z, &side, params, Family::One)?;
    let h = z * left.h;
    let r11 = hugoniot_r11(z, &side, params)?;
    let (v, r12, r22) = transverse_star_state(left, z, u, s, params)?;
    Ok((PrimitiveState::new(h, u, v, r11 / h, r12 / h, r22 / h), s))
}

struct Side {
    wave: Option<WaveFamily>,
    star: PrimitiveState,
    span: (f64, f64),
}

fn star_side(outer: &PrimitiveState, z: f64, u_star: f64, params: &ModelParams, family: Family) -> Result<Side> {
    let side = SideData::from_prim(outer);
    let sgn = family.sign();
    if abs(z - 1.0) < NO_WAVE_THRESHOLD {
        let edge = outer.u + sgn * outer.a(params);
        return Ok(Side { wave: None, star: PrimitiveState { u: u_star, ..*outer }, span: (edge, edge) });
    }
    if z <= 1.0 {
        let star = PrimitiveState { u: u_star, ..rarefaction_state(&side, family, z * outer.h, params) };
        let head = outer.u + sgn * outer.a(params);
        let tail = star.u + sgn * star.a(params);
        let (wave, span) = match family {
            Family::One => (WaveFamily::Rarefaction1, (head, tail)),
            Family::Six => (WaveFamily::Rarefaction6, (tail, head)),
        };
        return Ok(Side { wave: Some(wave), star, span });
    }
    let s = shock_speed(&side, z, params, family)?;
    let h = z * outer.h;
    let r11 = hugoniot_r11(z, &side, params)?;
    let (v, r12, r22) = transverse_star_state(outer, z, u_star, s, params)?;
    let wave = match family {
        Family::One => WaveFamily::Shock1,
        Family::Six => WaveFamily::Shock6,
    };
    Ok(Side {
        wave: Some(wave),
        star: PrimitiveState::new(h, u_star, v, r11 / h, r12 / h, r22 / h),
        span: (s, s),
    })
}

/// Double-star states across the shear waves: `v` and `R12` are shared by
/// both, `h`, `u`, `P11` and `det P` are inherited from the star states.
pub(crate) fn double_star(sl: &PrimitiveState, sr: &PrimitiveState) -> (PrimitiveState, PrimitiveState) {
    let (bl, br) = (sl.b(), sr.b());
    let alpha_l = sl.v * bl + sl.p12;
    let alpha_r = sr.v * br - sr.p12;
    let denom = sl.h * bl + sr.h * br;
    let (v, r12) = if denom > 0.0 {
        let v = (sr.h * alpha_r + sl.h * alpha_l) / denom;
        (v, sl.h * (alpha_l - v * bl))
    } else {
        // Both shear speeds collapse onto the contact.
        (0.5 * (sl.v + sr.v), 0.5 * (sl.r12() + sr.r12()))
    };
    let across = |q: &PrimitiveState| {
        let p12 = r12 / q.h;
        PrimitiveState { v, p12, p22: (q.det_p() + p12 * p12) / q.p11, ..*q }
    };
    (across(sl), across(sr))
}

/// Builds the full wave structure for wet data.
pub fn build_solution(
    left: &PrimitiveState,
    right: &PrimitiveState,
    params: &ModelParams,
    cfg: &NewtonConfig,
) -> Result<StarSolution> {
    let roots = solve_star(left, right, params, cfg)?;
    let roots = polish(roots, left, right, params)?;
    let l = star_side(left, roots.zl, roots.u_star, params, Family::One)?;
    let r = star_side(right, roots.zr, roots.u_star, params, Family::Six)?;
    let (dl, dr) = double_star(&l.star, &r.star);
    let speeds = WaveSpeeds {
        left: l.span,
        shear_left: roots.u_star - l.star.b(),
        contact: roots.u_star,
        shear_right: roots.u_star + r.star.b(),
        right: r.span,
    };
    Ok(StarSolution {
        zl: roots.zl,
        zr: roots.zr,
        u_star: roots.u_star,
        pi_star: roots.pi_star,
        left_wave: l.wave,
        right_wave: r.wave,
        states: [*left, l.star, dl, dr, r.star, *right],
        speeds,
        vacuum: false,
        params: *params,
    })
}

/// Solution containing a dry region: one or two rarefactions adjacent to
/// vacuum. Applies when one side is dry or when the wet-star condition fails.
pub fn vacuum_solution(left: &PrimitiveState, right: &PrimitiveState, params: &ModelParams) -> StarSolution {
    let wet_l = left.h > 0.0;
    let wet_r = right.h > 0.0;
    let vac = PrimitiveState::VACUUM;
    let lout = if wet_l { *left } else { vac };
    let rout = if wet_r { *right } else { vac };
    let l_span = wet_l.then(|| {
        let c = left.p11 / (left.h * left.h);
        (left.u - left.a(params), left.u + afun(left.h, c, params))
    });
    let r_span = wet_r.then(|| {
        let c = right.p11 / (right.h * right.h);
        (right.u - afun(right.h, c, params), right.u + right.a(params))
    });
    let (left_span, right_span) = match (l_span, r_span) {
        (Some(a), Some(b)) => (a, b),
        (Some(a), None) => (a, (a.1, a.1)),
        (None, Some(b)) => ((b.0, b.0), b),
        (None, None) => ((0.0, 0.0), (0.0, 0.0)),
    };
    let mid = 0.5 * (left_span.1 + right_span.0);
    StarSolution {
        zl: if wet_l { 0.0 } else { 1.0 },
        zr: if wet_r { 0.0 } else { 1.0 },
        u_star: 0.0,
        pi_star: 0.0,
        left_wave: wet_l.then_some(WaveFamily::Rarefaction1),
        right_wave: wet_r.then_some(WaveFamily::Rarefaction6),
        states: [lout, vac, vac, vac, vac, rout],
        speeds: WaveSpeeds {
            left: left_span,
            shear_left: mid,
            contact: mid,
            shear_right: mid,
            right: right_span,
        },
        vacuum: true,
        params: *params,
    }
}

/// Dispatches to [`vacuum_solution`] for dry data and to [`build_solution`]
/// otherwise.
pub fn solve_riemann(
    left: &PrimitiveState,
    right: &PrimitiveState,
    params: &ModelParams,
    cfg: &NewtonConfig,
) -> Result<StarSolution> {
    if left.h == 0.0 || right.h == 0.0 {
        for q in [left, right] {
            if q.h != 0.0 {
                q.validate()?;
            }
        }
        return Ok(vacuum_solution(left, right, params));
    }
    left.validate()?;
    right.validate()?;
    if !wet_star_exists(left, right, params) {
        return Ok(vacuum_solution(left, right, params));
    }
    build_solution(left, right, params, cfg)
}

fn fan(outer: &PrimitiveState, family: Family, span: (f64, f64), tail_h: f64, xi: f64, params: &ModelParams) -> PrimitiveState {
    let side = SideData::from_prim(outer);
    let (head, tail) = match family {
        Family::One => (FanEdge { xi: span.0, h: outer.h }, FanEdge { xi: span.1, h: tail_h }),
        Family::Six => (FanEdge { xi: span.1, h: outer.h }, FanEdge { xi: span.0, h: tail_h }),
    };
    let xi = xi.clamp(span.0, span.1);
    match rarefaction_h_of_xi(xi, head, tail, side.c, params, family) {
        Ok(h) => rarefaction_state(&side, family, h, params),
        Err(_) => *outer,
    }
}

/// Solution at similarity coordinate `xi = x / t`. At a discontinuity the
/// state on its right is returned.
pub fn sample(sol: &StarSolution, xi: f64) -> PrimitiveState {
    let sp = &sol.speeds;
    let p = &sol.params;
    let [l, sl, dl, dr, sr, r] = &sol.states;
    if xi < sp.left.0 {
        return *l;
    }
    if xi < sp.left.1 {
        let tail_h = if sol.vacuum { 0.0 } else { sl.h };
        return fan(l, Family::One, sp.left, tail_h, xi, p);
    }
    if sol.vacuum {
        if xi < sp.right.0 {
            return PrimitiveState::VACUUM;
        }
        if xi < sp.right.1 {
            return fan(r, Family::Six, sp.right, 0.0, xi, p);
        }
        return *r;
    }
    if xi < sp.shear_left {
        return *sl;
    }
    if xi < sp.contact {
        return *dl;
    }
    if xi < sp.shear_right {
        return *dr;
    }
    if xi < sp.right.0 {
        return *sr;
    }
    if xi < sp.right.1 {
        return fan(r, Family::Six, sp.right, sr.h, xi, p);
    }
    *r
}
