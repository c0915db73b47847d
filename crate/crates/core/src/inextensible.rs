//! The a-priori inextensible formulation and why it needs a corrected work
//! expression.
//!
//! Imposing `w = -v'` before the variation removes the membrane energy and
//! with it the interaction term `U01`. A Ritz analysis that then keeps the
//! extensible load work `W1` gives wrong buckling loads. The classical loads
//! come back only with the corrected work `W̄1 = W1 - U01`.

use serde::Serialize;

use crate::analytic;
use crate::energy::{self, Order};
use crate::error::{Error, Result};
use crate::kinematics::{FieldSample, HarmonicField, RitzMode};
use crate::quadrature::QuadratureRule;
use crate::ring::{LoadCase, LoadState, Ring};

/// Pointwise tolerance on `w + v'`, relative to the field amplitude.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-10;

/// Largest `|w + v'|` over the nodes.
pub fn constraint_residual(field: &HarmonicField, rule: &QuadratureRule) -> f64 {
    rule.max_abs(|t| field.sample(t).stretch())
}

/// Corrected work `W̄1` of a field satisfying `w = -v'`.
pub fn inextensible_work(load: LoadCase, field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> Result<f64> {
    let residual = constraint_residual(field, rule);
    if residual > CONSTRAINT_TOLERANCE * field.amplitude_norm().max(1.0) {
        return Err(Error::NotInextensible { residual });
    }
    let half_p = 0.5 * state.pressure();
    let integral = |g: &dyn Fn(&FieldSample) -> f64| rule.integrate(|t| g(&field.sample(t)));
    let dead = half_p * integral(&|s| s.tilt() * s.tilt() - s.w * s.stretch());
    Ok(match load {
        LoadCase::Dead => dead,
        LoadCase::Hydrostatic => dead - half_p * integral(&|s| s.v * s.tilt()),
        LoadCase::Central => dead - half_p * integral(&|s| s.v * s.v),
        LoadCase::InverseSquare => dead - half_p * integral(&|s| s.v * s.v - 2.0 * s.w * s.w),
    })
}

/// Unit ring and unit pressure; every multiplier below is a ratio of
/// quadratic forms and does not depend on either.
fn reference_state() -> LoadState {
    LoadState::from_pressure(Ring::default(), 1.0).expect("unit pressure is valid")
}

fn mode_bending(state: &LoadState, rule: &QuadratureRule) -> f64 {
    let mode = RitzMode::new(1.0).to_field();
    energy::bending_energy(&mode, state.ring(), Order::Second, rule)
}

fn ratio_to_lambda(state: &LoadState, stiffness: f64, work_per_pressure: f64) -> Option<f64> {
    let ring = state.ring();
    (work_per_pressure.abs() > 1e-12 * stiffness.abs())
        .then(|| ring.radius().powi(3) * stiffness / (ring.bending_stiffness() * work_per_pressure))
}

/// Ritz on `Π = U1(bending) - W1(extensible, second order)` with the
/// critical mode. `None` when the work vanishes.
pub fn naive_inextensible_lambda(load: LoadCase, rule: &QuadratureRule) -> Option<f64> {
    let state = reference_state();
    let mode = RitzMode::new(1.0).to_field();
    let work = energy::buckling_work(load, &mode, &state, Order::Second, rule) / state.pressure();
    ratio_to_lambda(&state, mode_bending(&state, rule), work)
}

/// Ritz on `Π = U1(bending) - W̄1` with the critical mode.
pub fn corrected_inextensible_lambda(load: LoadCase, rule: &QuadratureRule) -> f64 {
    let state = reference_state();
    let mode = RitzMode::new(1.0).to_field();
    let work = inextensible_work(load, &mode, &state, rule).expect("critical mode is inextensible") / state.pressure();
    ratio_to_lambda(&state, mode_bending(&state, rule), work).expect("corrected work is nonzero")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IdentityReport {
    pub u01: f64,
    pub w1: f64,
    pub w1_bar: f64,
    /// `U01 - (W1 - W̄1)`
    pub residual: f64,
}

/// `U01 = W1 - W̄1` on the critical mode of amplitude `c` at pressure `p`.
pub fn u01_identity_report(load: LoadCase, amplitude: f64, pressure: f64, rule: &QuadratureRule) -> Result<IdentityReport> {
    let state = LoadState::from_pressure(Ring::default(), pressure)?;
    let mode = RitzMode::new(amplitude).to_field();
    let u01 = energy::interaction_energy(&mode, &state, rule);
    let w1 = energy::buckling_work(load, &mode, &state, Order::Second, rule);
    let w1_bar = inextensible_work(load, &mode, &state, rule)?;
    Ok(IdentityReport {
        u01,
        w1,
        w1_bar,
        residual: u01 - (w1 - w1_bar),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InextensibleComparison {
    pub load: LoadCase,
    pub naive_lambda: Option<f64>,
    pub corrected_lambda: f64,
    pub extensible_lambda: f64,
    pub u01: f64,
    pub w1: f64,
    pub w1_bar: f64,
    pub identity_residual: f64,
}

/// Naive, corrected and extensible multipliers side by side, with the
/// identity evaluated at unit amplitude and pressure.
pub fn compare(load: LoadCase, rule: &QuadratureRule) -> InextensibleComparison {
    let id = u01_identity_report(load, 1.0, 1.0, rule).expect("unit inputs are valid");
    InextensibleComparison {
        load,
        naive_lambda: naive_inextensible_lambda(load, rule),
        corrected_lambda: corrected_inextensible_lambda(load, rule),
        extensible_lambda: analytic::critical(load).lambda_f64(),
        u01: id.u01,
        w1: id.w1,
        w1_bar: id.w1_bar,
        identity_residual: id.residual,
    }
}

/// `ε = (w + v')/R + (v - w')²/(2R²)`, the strain measure the inextensible
/// formulation constrains.
pub fn reduced_strain(field: &HarmonicField, radius: f64, theta: f64) -> f64 {
    let s = field.sample(theta);
    s.stretch() / radius + s.tilt() * s.tilt() / (2.0 * radius * radius)
}

pub fn max_reduced_strain(field: &HarmonicField, radius: f64, rule: &QuadratureRule) -> f64 {
    rule.max_abs(|t| reduced_strain(field, radius, t))
}
