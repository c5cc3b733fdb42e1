//! Residual checks of an exact solution against the generalized jump
//! conditions and the Riemann invariants of each family.

use crate::math::abs;
use crate::model::{
    path_fluctuation, prim_to_cons, total_energy, total_energy_flux, total_pressure, ModelParams,
    PrimitiveState,
};
use crate::waves::{rarefaction_invariants, rarefaction_state, Family, SideData, WaveFamily};

use super::solution::StarSolution;

/// Largest relative residuals found in a solution.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Verification {
    /// Generalized jump conditions across every discontinuity.
    pub jump: f64,
    /// Total-energy jump identity across every discontinuity.
    pub energy: f64,
    /// Drift of the five invariants along sampled fan interiors.
    pub fan_invariants: f64,
    /// Spread of `u` and `Pi` over the four intermediate states.
    pub star_spread: f64,
    /// Whether every shock satisfies the strict Lax inequalities.
    pub lax: bool,
    /// Whether wave speeds are ordered left to right.
    pub ordered: bool,
}

fn rel(res: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        abs(res) / scale
    } else {
        abs(res)
    }
}

/// Relative residuals of the six jump conditions and of the total-energy
/// identity for a discontinuity of speed `s` between `l` and `r`. Each
/// residual is scaled by the sum of magnitudes of the terms entering it.
pub fn jump_residual(l: &PrimitiveState, r: &PrimitiveState, s: f64, params: &ModelParams) -> ([f64; 6], f64) {
    let d = path_fluctuation(l, r, params);
    let ul = prim_to_cons(l).to_array();
    let ur = prim_to_cons(r).to_array();
    let fl = crate::model::flux_prim(l, params);
    let fr = crate::model::flux_prim(r, params);
    let mut out = [0.0; 6];
    for k in 0..6 {
        let scale = abs(fl[k]) + abs(fr[k]) + abs(s) * (abs(ul[k]) + abs(ur[k]));
        out[k] = rel(d[k] - s * (ur[k] - ul[k]), scale);
    }
    let (el, er) = (total_energy(l, params), total_energy(r, params));
    let (gl, gr) = (total_energy_flux(l, params), total_energy_flux(r, params));
    let scale = abs(gl) + abs(gr) + abs(s) * (abs(el) + abs(er));
    let energy = rel(gr - gl - s * (er - el), scale);
    (out, energy)
}

fn fan_drift(sol: &StarSolution, family: Family, samples: usize) -> f64 {
    let (outer, span, tail) = match family {
        Family::One => (sol.states[0], sol.speeds.left, sol.states[1]),
        Family::Six => (sol.states[5], sol.speeds.right, sol.states[4]),
    };
    let p = &sol.params;
    let base = rarefaction_invariants(&outer, family, p);
    let side = SideData::from_prim(&outer);
    let mut worst: f64 = 0.0;
    for k in 1..=samples {
        let xi = span.0 + (span.1 - span.0) * k as f64 / (samples + 1) as f64;
        let q = super::sample(sol, xi);
        if q.h <= 0.0 {
            continue;
        }
        let inv = rarefaction_invariants(&q, family, p);
        for i in 0..5 {
            let scale = abs(base[i]).max(abs(inv[i]));
            worst = worst.max(rel(inv[i] - base[i], scale));
        }
    }
    // The star end of the fan must carry the same invariants.
    if !sol.vacuum {
        let end = rarefaction_state(&side, family, tail.h, p);
        let inv = rarefaction_invariants(&PrimitiveState { u: tail.u, ..end }, family, p);
        for i in 0..5 {
            worst = worst.max(rel(inv[i] - base[i], abs(base[i]).max(abs(inv[i]))));
        }
    }
    worst
}

/// Checks every wave of `sol`. `fan_samples` interior points are taken in
/// each rarefaction.
pub fn verify_solution(sol: &StarSolution, fan_samples: usize) -> Verification {
    let p = &sol.params;
    let st = &sol.states;
    let sp = &sol.speeds;
    let mut v = Verification { lax: true, ordered: true, ..Verification::default() };

    let mut discontinuities: [Option<(usize, f64)>; 5] = [None; 5];
    if !sol.vacuum {
        if sol.left_wave == Some(WaveFamily::Shock1) {
            discontinuities[0] = Some((0, sp.left.0));
        }
        discontinuities[1] = Some((1, sp.shear_left));
        discontinuities[2] = Some((2, sp.contact));
        discontinuities[3] = Some((3, sp.shear_right));
        if sol.right_wave == Some(WaveFamily::Shock6) {
            discontinuities[4] = Some((4, sp.right.0));
        }
    }
    for (i, s) in discontinuities.into_iter().flatten() {
        let (res, e) = jump_residual(&st[i], &st[i + 1], s, p);
        for r in res {
            v.jump = v.jump.max(r);
        }
        v.energy = v.energy.max(e);
    }

    if !sol.vacuum {
        if sol.left_wave == Some(WaveFamily::Shock1) {
            v.lax &= crate::waves::lax_admissible_shock(&st[0], &st[1], sp.left.0, Family::One, p);
        }
        if sol.right_wave == Some(WaveFamily::Shock6) {
            v.lax &= crate::waves::lax_admissible_shock(&st[4], &st[5], sp.right.0, Family::Six, p);
        }
        let us: [f64; 4] = core::array::from_fn(|i| st[i + 1].u);
        let pis: [f64; 4] = core::array::from_fn(|i| total_pressure(&st[i + 1], p));
        let spread = |x: [f64; 4], scale: f64| {
            let (lo, hi) = x.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &y| (a.min(y), b.max(y)));
            (hi - lo) / scale
        };
        let u_scale = st[0].a(p) + st[5].a(p) + abs(sol.u_star);
        v.star_spread = spread(us, u_scale).max(spread(pis, sol.pi_star));
    }

    if sol.left_wave == Some(WaveFamily::Rarefaction1) {
        v.fan_invariants = v.fan_invariants.max(fan_drift(sol, Family::One, fan_samples));
    }
    if sol.right_wave == Some(WaveFamily::Rarefaction6) {
        v.fan_invariants = v.fan_invariants.max(fan_drift(sol, Family::Six, fan_samples));
    }

    let seq = [sp.left.0, sp.left.1, sp.shear_left, sp.contact, sp.shear_right, sp.right.0, sp.right.1];
    v.ordered = seq.windows(2).all(|w| w[0] <= w[1]);
    v
}
