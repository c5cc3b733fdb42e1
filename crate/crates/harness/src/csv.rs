use std::fmt::Write as _;

use ssw_core::PrimitiveState;

pub const PROFILE_HEADER: &str = "x,h,u,v,P11,P12,P22";
pub const CONVERGENCE_HEADER: &str = "cells,err_h,err_hu,err_hv,err_E11,err_E12,err_E22";

/// Primitive states at a set of abscissae.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub x: Vec<f64>,
    pub states: Vec<PrimitiveState>,
}

/// One row of a convergence table: cell count and L1 errors of the six
/// conserved variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRow {
    pub cells: usize,
    pub errors: [f64; 6],
}

fn push_values(out: &mut String, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        // 17 significant digits.
        let _ = write!(out, "{v:.16e}");
    }
    out.push('\n');
}

impl Profile {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(128 * (self.x.len() + 1));
        out.push_str(PROFILE_HEADER);
        out.push('\n');
        for (x, q) in self.x.iter().zip(&self.states) {
            push_values(&mut out, &[*x, q.h, q.u, q.v, q.p11, q.p12, q.p22]);
        }
        out
    }
}

pub fn convergence_csv(rows: &[ErrorRow]) -> String {
    let mut out = String::from(CONVERGENCE_HEADER);
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{},", row.cells);
        push_values(&mut out, &row.errors);
    }
    out
}

/// Parses a profile written by [`Profile::to_csv`].
pub fn parse_profile(text: &str) -> Option<Profile> {
    let mut lines = text.lines();
    if lines.next()? != PROFILE_HEADER {
        return None;
    }
    let mut profile = Profile { x: Vec::new(), states: Vec::new() };
    for line in lines {
        let v: Vec<f64> = line.split(',').map(str::parse).collect::<Result<_, _>>().ok()?;
        if v.len() != 7 {
            return None;
        }
        profile.x.push(v[0]);
        profile.states.push(PrimitiveState::new(v[1], v[2], v[3], v[4], v[5], v[6]));
    }
    Some(profile)
}
