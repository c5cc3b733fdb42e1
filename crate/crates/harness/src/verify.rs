use ssw_core::exact::{verify_solution, Verification};

use crate::cases::CaseSpec;
use crate::run::{exact_solution, Result};

/// Largest admissible relative jump-condition residual.
pub const JUMP_TOL: f64 = 1e-10;
/// Largest admissible relative drift of the fan invariants.
pub const FAN_TOL: f64 = 1e-8;
/// Interior samples per rarefaction fan.
pub const FAN_SAMPLES: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseReport {
    pub name: &'static str,
    pub verification: Verification,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        let v = &self.verification;
        v.jump <= JUMP_TOL && v.energy <= JUMP_TOL && v.fan_invariants <= FAN_TOL && v.lax && v.ordered
    }
}

pub fn verify_case(case: &CaseSpec) -> Result<CaseReport> {
    let sol = exact_solution(case)?;
    Ok(CaseReport { name: case.name, verification: verify_solution(&sol, FAN_SAMPLES) })
}
