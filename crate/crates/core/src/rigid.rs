//! Rigid translations and rotations of the ring and how the four load
//! behaviours react to them.
//!
//! A translation `(α1, α2)` and a small rotation `β` give
//! `v = -α1 sin θ + α2 cos θ + Rβ`, `w = α1 cos θ + α2 sin θ + Rβ²/2`.
//! The `β²` term in `w` is of second order. Energies of rigid fields use the
//! consistent second-order rule: functionals that are linear in the
//! displacements act on the whole field, quadratic ones on its first-order
//! part only.

use serde::Serialize;

use crate::analytic;
use crate::energy::{self, Order};
use crate::error::{Error, Result};
use crate::kinematics::{HarmonicField, RitzMode};
use crate::quadrature::QuadratureRule;
use crate::ring::{LoadCase, LoadState, Ring};

/// Largest rotation the truncated expansion accepts.
pub const MAX_ROTATION: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct RigidMotion {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MotionKind {
    None,
    Translation,
    Rotation,
    Mixed,
}

impl RigidMotion {
    /// A motion with `|β| <= 0.5`.
    pub fn new(alpha1: f64, alpha2: f64, beta: f64) -> Result<Self> {
        if !(beta.abs() <= MAX_ROTATION) {
            return Err(Error::RotationTooLarge(beta.abs()));
        }
        Ok(RigidMotion { alpha1, alpha2, beta })
    }

    /// Amplitudes per unit buckling amplitude `C`, so the actual rotation
    /// `Cβ` is small whatever `β` is.
    pub fn relative(alpha1: f64, alpha2: f64, beta: f64) -> Self {
        RigidMotion { alpha1, alpha2, beta }
    }

    pub fn translation(alpha1: f64, alpha2: f64) -> Self {
        RigidMotion { alpha1, alpha2, beta: 0.0 }
    }

    /// `α1² + α2²`
    pub fn translation_squared(&self) -> f64 {
        self.alpha1 * self.alpha1 + self.alpha2 * self.alpha2
    }

    pub fn kind(&self) -> MotionKind {
        match (self.translation_squared() > 0.0, self.beta != 0.0) {
            (false, false) => MotionKind::None,
            (true, false) => MotionKind::Translation,
            (false, true) => MotionKind::Rotation,
            (true, true) => MotionKind::Mixed,
        }
    }

    /// The part of [`rigid_field`] that is linear in the amplitudes.
    pub fn first_order_field(&self, radius: f64) -> HarmonicField {
        HarmonicField::zeros(1)
            .with_v(0, radius * self.beta, 0.0)
            .with_v(1, self.alpha2, -self.alpha1)
            .with_w(1, self.alpha1, self.alpha2)
    }

    /// The `Rβ²/2` radial shift.
    pub fn second_order_field(&self, radius: f64) -> HarmonicField {
        HarmonicField::zeros(1).with_w(0, 0.5 * radius * self.beta * self.beta, 0.0)
    }
}

pub fn rigid_field(motion: &RigidMotion, radius: f64) -> HarmonicField {
    motion.first_order_field(radius).added(&motion.second_order_field(radius))
}

/// `U01 - W1` at second order.
fn interaction_minus_work(load: LoadCase, field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> f64 {
    energy::interaction_energy(field, state, rule) - energy::buckling_work(load, field, state, Order::Second, rule)
}

/// Linear part of a functional that is linear plus quadratic.
fn odd_part(f: impl Fn(&HarmonicField) -> f64, field: &HarmonicField) -> f64 {
    0.5 * (f(field) - f(&field.scaled(-1.0)))
}

/// Quadratic part of a functional that is linear plus quadratic.
fn even_part(f: impl Fn(&HarmonicField) -> f64, field: &HarmonicField) -> f64 {
    0.5 * (f(field) + f(&field.scaled(-1.0)))
}

/// `F(f1 + f2)` to second order: linear part on the whole field, quadratic
/// part on the first-order field `f1`.
fn second_order_value(f: impl Fn(&HarmonicField) -> f64, first: &HarmonicField, second: &HarmonicField) -> f64 {
    odd_part(&f, &first.added(second)) + even_part(&f, first)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RigidBalance {
    pub load: LoadCase,
    /// `U01 - W_rm`
    pub value: f64,
    pub kind: MotionKind,
    /// Mixed translation and rotation: computed, but not one of the two
    /// separated cases with a closed form.
    pub outside_cases: bool,
}

/// `U01 - W_rm` of a rigid motion under the pre-buckling pressure.
pub fn rigid_energy_balance(load: LoadCase, motion: &RigidMotion, state: &LoadState, rule: &QuadratureRule) -> RigidBalance {
    let r = state.ring().radius();
    let value = second_order_value(
        |f| interaction_minus_work(load, f, state, rule),
        &motion.first_order_field(r),
        &motion.second_order_field(r),
    );
    let kind = motion.kind();
    RigidBalance {
        load,
        value,
        kind,
        outside_cases: kind == MotionKind::Mixed,
    }
}

/// Closed-form critical multiplier when the buckling mode carries the rigid
/// motion `motion` (amplitudes relative to `C`).
pub fn modified_multiplier(load: LoadCase, motion: &RigidMotion, radius: f64) -> Result<f64> {
    let a2 = motion.translation_squared();
    let br = motion.beta * radius;
    match load {
        LoadCase::Dead => Ok(4.0 / (1.0 + 2.0 * br * br / 9.0)),
        LoadCase::Hydrostatic => Ok(3.0),
        LoadCase::Central => {
            if a2 >= 8.0 {
                Err(Error::SingularTranslation(a2))
            } else {
                Ok(4.5 / (1.0 - a2 / 8.0))
            }
        }
        LoadCase::InverseSquare => Ok(2.25 / (1.0 + a2 / 16.0)),
    }
}

/// Oracle for [`modified_multiplier`]: Ritz quotient of the second-order
/// potential of the critical mode combined with `C` times the rigid motion.
pub fn ritz_multiplier(load: LoadCase, motion: &RigidMotion, radius: f64, rule: &QuadratureRule) -> Result<f64> {
    // H = 1e-4 ring with EI = 1; both fields are free of linear strain,
    // so the membrane stiffness does not enter
    let ring = Ring::new(radius, 1.0, 1e4 / (radius * radius), 1.0)?;
    let c = 1e-3 * radius;
    let scaled = RigidMotion::relative(c * motion.alpha1, c * motion.alpha2, c * motion.beta);
    let first = RitzMode::new(c).to_field().added(&scaled.first_order_field(radius));
    let second = scaled.second_order_field(radius);
    let potential = |p: f64| -> Result<f64> {
        let state = LoadState::from_pressure(ring, p)?;
        let strain =
            energy::membrane_energy(&first, &ring, Order::Second, rule) + energy::bending_energy(&first, &ring, Order::Second, rule);
        Ok(strain + second_order_value(|f| interaction_minus_work(load, f, &state, rule), &first, &second))
    };
    let stiffness = potential(0.0)?;
    let geometric = stiffness - potential(1.0)?;
    if !(geometric > 0.0) {
        return Err(Error::SingularTranslation(motion.translation_squared()));
    }
    Ok(radius.powi(3) * stiffness / (ring.bending_stiffness() * geometric))
}

/// True when the rigid motion leaves the critical multiplier unchanged.
pub fn leaves_critical_unchanged(load: LoadCase, motion: &RigidMotion) -> bool {
    match load {
        LoadCase::Dead => motion.beta == 0.0,
        LoadCase::Hydrostatic => true,
        LoadCase::Central | LoadCase::InverseSquare => motion.translation_squared() == 0.0,
    }
}

/// The unmodified critical multiplier, for comparison.
pub fn reference_multiplier(load: LoadCase) -> f64 {
    analytic::critical(load).lambda_f64()
}
