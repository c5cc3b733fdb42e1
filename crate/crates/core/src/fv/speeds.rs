use crate::error::Result;
use crate::exact::{solve_riemann, NewtonConfig};
use crate::model::{extreme_speeds, ModelParams, PrimitiveState};

/// How the outermost wave speeds of an interface problem are estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SpeedMode {
    /// Extremes of `u ∓ a` over the left, right and averaged states.
    #[default]
    Approximate,
    /// Left speed from the left and averaged states only, right speed from
    /// the right and averaged states only. Can under-estimate.
    OneSided,
    /// Slowest and fastest speeds of the exact Riemann solution.
    ExactFromRiemann,
}

/// Average of `(h, v, R)` with `P = R / h` recovered from the averaged depth.
fn averaged(l: &PrimitiveState, r: &PrimitiveState) -> PrimitiveState {
    let h = 0.5 * (l.h + r.h);
    PrimitiveState::new(
        h,
        0.5 * (l.u + r.u),
        0.5 * (l.v + r.v),
        0.5 * (l.r11() + r.r11()) / h,
        0.5 * (l.r12() + r.r12()) / h,
        0.5 * (l.r22() + r.r22()) / h,
    )
}

pub fn estimate_speeds(
    l: &PrimitiveState,
    r: &PrimitiveState,
    params: &ModelParams,
    mode: SpeedMode,
) -> Result<(f64, f64)> {
    match mode {
        SpeedMode::Approximate | SpeedMode::OneSided => {
            let (l1, l6) = extreme_speeds(l, params);
            let (r1, r6) = extreme_speeds(r, params);
            let (m1, m6) = extreme_speeds(&averaged(l, r), params);
            if mode == SpeedMode::Approximate {
                Ok((l1.min(r1).min(m1), l6.max(r6).max(m6)))
            } else {
                Ok((l1.min(m1), r6.max(m6)))
            }
        }
        SpeedMode::ExactFromRiemann => {
            let sol = solve_riemann(l, r, params, &NewtonConfig::with_tol(1e-12))?;
            Ok((sol.speeds.slowest(), sol.speeds.fastest()))
        }
    }
}
