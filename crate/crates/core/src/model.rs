//! States, fluxes and the characteristic structure of the 1-D system.

use core::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::math::sqrt;

/// Below this value of `P11` the shear and acoustic eigenvalues merge with
/// the contact speed and the eigenvector basis degenerates.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// Physical constants of the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Gravitational acceleration.
    pub g: f64,
}

impl ModelParams {
    pub fn new(g: f64) -> Result<Self> {
        if g > 0.0 && g.is_finite() {
            Ok(Self { g })
        } else {
            Err(Error::InvalidParameter("gravity must be positive and finite"))
        }
    }
}

impl Default for ModelParams {
    fn default() -> Self {
        Self { g: 9.81 }
    }
}

/// Primitive variables `(h, u, v, P11, P12, P22)`, with `u` the velocity
/// normal to the interface and `v` the transverse one.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PrimitiveState {
    pub h: f64,
    pub u: f64,
    pub v: f64,
    pub p11: f64,
    pub p12: f64,
    pub p22: f64,
}

impl PrimitiveState {
    /// The dry state. Velocities and stresses are not defined there and are
    /// stored as zero.
    pub const VACUUM: Self = Self { h: 0.0, u: 0.0, v: 0.0, p11: 0.0, p12: 0.0, p22: 0.0 };

    pub const fn new(h: f64, u: f64, v: f64, p11: f64, p12: f64, p22: f64) -> Self {
        Self { h, u, v, p11, p12, p22 }
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        Self::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> [f64; 6] {
        [self.h, self.u, self.v, self.p11, self.p12, self.p22]
    }

    pub fn is_vacuum(&self) -> bool {
        self.h == 0.0
    }

    pub fn det_p(&self) -> f64 {
        self.p11 * self.p22 - self.p12 * self.p12
    }

    /// Checks `h > 0` and positive definiteness of `P`.
    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0) || !self.h.is_finite() {
            return Err(Error::NonPositiveDepth { h: self.h });
        }
        let finite = [self.u, self.v, self.p11, self.p12, self.p22].iter().all(|x| x.is_finite());
        if !finite || !(self.p11 > 0.0) || !(self.p22 > 0.0) || !(self.det_p() > 0.0) {
            return Err(Error::NonSpdStress);
        }
        Ok(())
    }

    pub fn r11(&self) -> f64 {
        self.h * self.p11
    }

    pub fn r12(&self) -> f64 {
        self.h * self.p12
    }

    pub fn r22(&self) -> f64 {
        self.h * self.p22
    }

    /// Acoustic speed `a = sqrt(g h + 3 P11)`.
    pub fn a(&self, params: &ModelParams) -> f64 {
        sqrt(params.g * self.h + 3.0 * self.p11)
    }

    /// Shear speed `b = sqrt(P11)`.
    pub fn b(&self) -> f64 {
        sqrt(self.p11)
    }

    /// Mirror image under `x -> -x`: the normal velocity and the off-diagonal
    /// stress change sign.
    pub fn reflect(self) -> Self {
        Self { u: -self.u, p12: -self.p12, ..self }
    }
}

/// Conserved variables `(h, h u, h v, E11, E12, E22)` where
/// `E_ij = R_ij / 2 + h v_i v_j / 2` and `R = h P`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConservedState {
    pub h: f64,
    pub m1: f64,
    pub m2: f64,
    pub e11: f64,
    pub e12: f64,
    pub e22: f64,
}

impl ConservedState {
    pub const fn new(h: f64, m1: f64, m2: f64, e11: f64, e12: f64, e22: f64) -> Self {
        Self { h, m1, m2, e11, e12, e22 }
    }

    pub fn from_array(a: [f64; 6]) -> Self {
        Self::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn to_array(self) -> [f64; 6] {
        [self.h, self.m1, self.m2, self.e11, self.e12, self.e22]
    }
}

impl Add for ConservedState {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.h + o.h,
            self.m1 + o.m1,
            self.m2 + o.m2,
            self.e11 + o.e11,
            self.e12 + o.e12,
            self.e22 + o.e22,
        )
    }
}

impl Sub for ConservedState {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.h - o.h,
            self.m1 - o.m1,
            self.m2 - o.m2,
            self.e11 - o.e11,
            self.e12 - o.e12,
            self.e22 - o.e22,
        )
    }
}

impl Mul<ConservedState> for f64 {
    type Output = ConservedState;
    fn mul(self, o: ConservedState) -> ConservedState {
        ConservedState::new(
            self * o.h,
            self * o.m1,
            self * o.m2,
            self * o.e11,
            self * o.e12,
            self * o.e22,
        )
    }
}

pub fn prim_to_cons(q: &PrimitiveState) -> ConservedState {
    let h = q.h;
    ConservedState {
        h,
        m1: h * q.u,
        m2: h * q.v,
        e11: 0.5 * h * q.p11 + 0.5 * h * q.u * q.u,
        e12: 0.5 * h * q.p12 + 0.5 * h * q.u * q.v,
        e22: 0.5 * h * q.p22 + 0.5 * h * q.v * q.v,
    }
}

pub fn cons_to_prim(w: &ConservedState) -> Result<PrimitiveState> {
    if !(w.h > 0.0) || !w.h.is_finite() {
        return Err(Error::NonPositiveDepth { h: w.h });
    }
    let h = w.h;
    let u = w.m1 / h;
    let v = w.m2 / h;
    let q = PrimitiveState {
        h,
        u,
        v,
        p11: (2.0 * w.e11 - w.m1 * u) / h,
        p12: (2.0 * w.e12 - w.m1 * v) / h,
        p22: (2.0 * w.e22 - w.m2 * v) / h,
    };
    q.validate()?;
    Ok(q)
}

/// Conservative part of the flux, evaluated from primitive variables.
pub fn flux_prim(q: &PrimitiveState, params: &ModelParams) -> [f64; 6] {
    let (h, u, v) = (q.h, q.u, q.v);
    let (r11, r12, r22) = (q.r11(), q.r12(), q.r22());
    let e11 = 0.5 * r11 + 0.5 * h * u * u;
    let e12 = 0.5 * r12 + 0.5 * h * u * v;
    let e22 = 0.5 * r22 + 0.5 * h * v * v;
    [
        h * u,
        r11 + h * u * u + 0.5 * params.g * h * h,
        r12 + h * u * v,
        (e11 + r11) * u,
        e12 * u + 0.5 * (r11 * v + r12 * u),
        e22 * u + r12 * v,
    ]
}

pub fn physical_flux(w: &ConservedState, params: &ModelParams) -> Result<[f64; 6]> {
    Ok(flux_prim(&cons_to_prim(w)?, params))
}

/// `B(m) dh` for the average momentum `m = (m1, m2)`. Since `B` is linear in
/// the momenta, integrating it along the straight segment between two states
/// gives exactly this value with `m` the arithmetic mean.
pub fn noncons_term(m_avg: (f64, f64), dh: f64, params: &ModelParams) -> [f64; 6] {
    let g = params.g;
    [0.0, 0.0, 0.0, g * m_avg.0 * dh, 0.5 * g * m_avg.1 * dh, 0.0]
}

/// Path integral of the quasi-linear operator between two states along the
/// linear path: `F(U_R) - F(U_L) + B(m_avg) (h_R - h_L)`.
pub fn path_fluctuation(l: &PrimitiveState, r: &PrimitiveState, params: &ModelParams) -> [f64; 6] {
    let fl = flux_prim(l, params);
    let fr = flux_prim(r, params);
    let m = (0.5 * (l.h * l.u + r.h * r.u), 0.5 * (l.h * l.v + r.h * r.v));
    let b = noncons_term(m, r.h - l.h, params);
    core::array::from_fn(|k| fr[k] - fl[k] + b[k])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenDecomposition {
    /// `u - a, u - b, u, u, u + b, u + a`.
    pub lambdas: [f64; 6],
    /// Right eigenvectors in primitive components, one per eigenvalue.
    pub rvecs: [[f64; 6]; 6],
    /// Set when `P11` is below [`DEGENERACY_THRESHOLD`].
    pub degenerate: bool,
}

pub fn eigensystem(q: &PrimitiveState, params: &ModelParams) -> EigenDecomposition {
    let a = q.a(params);
    let b = q.b();
    let (h, u, p11, p12) = (q.h, q.u, q.p11, q.p12);
    let a2 = a * a;
    let b2 = b * b;
    let d = a2 - b2;
    let r1 = [h * d, -a * d, -2.0 * a * p12, 2.0 * b2 * d, (a2 + b2) * p12, 4.0 * p12 * p12];
    let r6 = [h * d, a * d, 2.0 * a * p12, 2.0 * b2 * d, (a2 + b2) * p12, 4.0 * p12 * p12];
    let r2 = [0.0, 0.0, -b, 0.0, b2, 2.0 * p12];
    let r5 = [0.0, 0.0, b, 0.0, b2, 2.0 * p12];
    let r3 = [0.0, 0.0, 0.0, 0.0, 0.0, 1.0];
    let r4 = [-h, 0.0, 0.0, params.g * h + p11, p12, 0.0];
    EigenDecomposition {
        lambdas: [u - a, u - b, u, u, u + b, u + a],
        rvecs: [r1, r2, r3, r4, r5, r6],
        degenerate: p11 < DEGENERACY_THRESHOLD,
    }
}

/// Slowest and fastest characteristic speeds, `u - a` and `u + a`.
pub fn extreme_speeds(q: &PrimitiveState, params: &ModelParams) -> (f64, f64) {
    let a = q.a(params);
    (q.u - a, q.u + a)
}

/// `Pi = g h^2 / 2 + R11`, continuous across contact and shear waves.
pub fn total_pressure(q: &PrimitiveState, params: &ModelParams) -> f64 {
    0.5 * params.g * q.h * q.h + q.r11()
}

/// Total energy density on a flat bottom.
pub fn total_energy(q: &PrimitiveState, params: &ModelParams) -> f64 {
    0.5 * (q.r11() + q.r22())
        + 0.5 * q.h * (q.u * q.u + q.v * q.v)
        + 0.5 * params.g * q.h * q.h
}

/// Flux of the total energy, `(E + R11 + g h^2 / 2) u + R12 v`.
pub fn total_energy_flux(q: &PrimitiveState, params: &ModelParams) -> f64 {
    (total_energy(q, params) + q.r11() + 0.5 * params.g * q.h * q.h) * q.u + q.r12() * q.v
}

/// `det(P) / h^2`.
pub fn specific_entropy(q: &PrimitiveState) -> f64 {
    q.det_p() / (q.h * q.h)
}
