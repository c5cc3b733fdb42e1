use ssw_core::{ModelParams, PrimitiveState};

use crate::reference::*;

/// A Riemann problem on a finite domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseSpec {
    pub name: &'static str,
    pub description: &'static str,
    pub left: PrimitiveState,
    pub right: PrimitiveState,
    pub x0: f64,
    pub domain: (f64, f64),
    pub t_final: f64,
    pub g: f64,
}

impl CaseSpec {
    pub fn params(&self) -> ModelParams {
        ModelParams { g: self.g }
    }

    pub fn with_g(self, g: f64) -> Self {
        Self { g, ..self }
    }
}

const G: f64 = 9.81;

fn q(h: f64, u: f64, v: f64, p11: f64, p12: f64, p22: f64) -> PrimitiveState {
    PrimitiveState::new(h, u, v, p11, p12, p22)
}

fn case(name: &'static str, description: &'static str, left: PrimitiveState, right: PrimitiveState, t_final: f64) -> CaseSpec {
    CaseSpec { name, description, left, right, x0: 0.5, domain: (0.0, 1.0), t_final, g: G }
}

/// The published test problems.
pub fn builtin_cases() -> Vec<CaseSpec> {
    vec![
        case(
            "dambreak",
            "depth jump, fluid at rest, small isotropic stress",
            q(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4),
            q(0.01, 0.0, 0.0, 1e-4, 0.0, 1e-4),
            0.5,
        ),
        case(
            "modified",
            "dam break with P11 = P22 = 4e-2",
            q(0.02, 0.0, 0.0, 4e-2, 0.0, 4e-2),
            q(0.01, 0.0, 0.0, 4e-2, 0.0, 4e-2),
            0.5,
        ),
        case(
            "modified-p22",
            "modified dam break with P22 = 1e-8",
            q(0.02, 0.0, 0.0, 4e-2, 0.0, 1e-8),
            q(0.01, 0.0, 0.0, 4e-2, 0.0, 1e-8),
            0.5,
        ),
        case(
            "modified-p12",
            "modified dam break with P12 = 1e-8",
            q(0.02, 0.0, 0.0, 4e-2, 1e-8, 4e-2),
            q(0.01, 0.0, 0.0, 4e-2, 1e-8, 4e-2),
            0.5,
        ),
        case(
            "five-wave",
            "dam break with normal flow and opposite shear",
            q(0.01, 0.1, 0.2, 4e-2, 1e-8, 4e-2),
            q(0.02, 0.1, -0.2, 4e-2, 1e-8, 4e-2),
            0.5,
        ),
        case(
            "shear",
            "opposite transverse velocities, two shear waves",
            q(0.01, 0.0, 0.2, 1e-4, 0.0, 1e-4),
            q(0.01, 0.0, -0.2, 1e-4, 0.0, 1e-4),
            10.0,
        ),
        case(
            "shock-moving",
            "single left-moving 1-shock",
            q(0.02, 0.0, 0.0, 1e-4, 0.0, 1e-4),
            q(0.03, SINGLE_SHOCK_U_R, 0.0, SINGLE_SHOCK_P11_R, 0.0, 1e-4),
            0.5,
        ),
        case(
            "shock-stationary",
            "single 1-shock at rest",
            q(0.02, STATIONARY_SHOCK_U_L, 0.0, 1e-4, 0.0, 1e-4),
            q(0.03, STATIONARY_SHOCK_U_R, 0.0, SINGLE_SHOCK_P11_R, 0.0, 1e-4),
            0.5,
        ),
        case(
            "contact",
            "single-contact data as printed",
            q(0.02, 0.1, 0.0, 1e-4, 0.0, 1e-4),
            q(0.01, 0.1, 0.0, CONTACT_P11_R, 0.0, 2e-4),
            2.5,
        ),
    ]
}

/// Cases derived from the published ones.
pub fn derived_cases() -> Vec<CaseSpec> {
    vec![case(
        "contact-balanced",
        "single-contact data with equal total pressure on both sides",
        q(0.02, 0.1, 0.0, 1e-4, 0.0, 1e-4),
        q(0.01, 0.1, 0.0, CONTACT_BALANCED_P11_R, 0.0, 2e-4),
        2.5,
    )]
}

pub fn all_cases() -> Vec<CaseSpec> {
    let mut v = builtin_cases();
    v.extend(derived_cases());
    v
}

pub fn find_case(name: &str) -> Option<CaseSpec> {
    all_cases().into_iter().find(|c| c.name == name)
}
