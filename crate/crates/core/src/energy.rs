//! Strain energy, interaction energy and load work of a buckling field
//! superposed on the uniformly contracted ring.
//!
//! The potential is `Π = U0 + U1 + U01 - W0 - W1`. `U0` and `W0` belong to
//! the pre-buckling contraction and are constants, `U1` is the strain energy
//! of the buckling field, `U01` couples it to the pre-buckling hoop force and
//! `W1` is the work the pressure does along the buckling displacement.

use std::f64::consts::PI;

use serde::Serialize;

use crate::kinematics::{second_order_strain, FieldSample, HarmonicField};
use crate::quadrature::QuadratureRule;
use crate::ring::{LoadCase, LoadState, Ring};

/// Truncation order of the energy expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    /// Quadratic in the displacements: the buckling (bifurcation) problem.
    Second,
    /// Quartic: what the one-mode post-buckling analysis needs.
    Fourth,
    /// Closed-form works for the central loads; identical to `Fourth` elsewhere.
    Exact,
}

impl Order {
    pub fn name(self) -> &'static str {
        match self {
            Order::Second => "second",
            Order::Fourth => "fourth",
            Order::Exact => "exact",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyBreakdown {
    pub u0: f64,
    pub u1: f64,
    pub u01: f64,
    pub w0: f64,
    pub w1: f64,
    pub order: Order,
}

impl EnergyBreakdown {
    /// `Π = U0 + U1 + U01 - W0 - W1`
    pub fn total(&self) -> f64 {
        self.u0 + self.u1 + self.u01 - self.w0 - self.w1
    }

    /// `Π - (U0 - W0)`, the part that depends on the buckling field.
    pub fn variable_part(&self) -> f64 {
        self.u1 + self.u01 - self.w1
    }
}

/// The pre-buckling constants in physical and dimensionless form.
///
/// Only differences of the potential enter any equilibrium or stability
/// statement, so the sign with which `W0` is combined never affects a load
/// multiplier. Both combinations are exposed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PrebucklingConstants {
    pub u0: f64,
    pub w0: f64,
    /// `κ(U0 - W0)`, consistent with `Π = U - W`.
    pub scaled_u0_minus_w0: f64,
    /// `κ(U0 + W0)`
    pub scaled_u0_plus_w0: f64,
}

fn samples<'a>(field: &'a HarmonicField, rule: &'a QuadratureRule) -> impl Iterator<Item = (f64, FieldSample)> + 'a {
    rule.nodes().map(move |t| (t, field.sample(t)))
}

fn integrate_samples<F: FnMut(&FieldSample) -> f64>(field: &HarmonicField, rule: &QuadratureRule, mut g: F) -> f64 {
    rule.integrate(|t| g(&field.sample(t)))
}

/// `(EA/2) R ∮ ε² dθ` with the linear strain at second order and the
/// quadratic (von Kármán type) strain otherwise.
pub fn membrane_energy(field: &HarmonicField, ring: &Ring, order: Order, rule: &QuadratureRule) -> f64 {
    let r = ring.radius();
    let integral = integrate_samples(field, rule, |s| {
        let eps = match order {
            Order::Second => s.stretch() / r,
            Order::Fourth | Order::Exact => second_order_strain(s, r),
        };
        eps * eps
    });
    0.5 * ring.axial_stiffness() * r * integral
}

/// `(EI/2) R ∮ χ² dθ`. Beyond second order the curvature carries the
/// rotation correction `χ = χ_lin (1 + φ²/2)`, kept to fourth order as
/// `χ² ≈ χ_lin² (1 + φ²)`.
pub fn bending_energy(field: &HarmonicField, ring: &Ring, order: Order, rule: &QuadratureRule) -> f64 {
    let r = ring.radius();
    let integral = integrate_samples(field, rule, |s| {
        let chi = s.bend() / (r * r);
        match order {
            Order::Second => chi * chi,
            Order::Fourth | Order::Exact => {
                let phi = s.tilt() / r;
                chi * chi * (1.0 + phi * phi)
            }
        }
    });
    0.5 * ring.bending_stiffness() * r * integral
}

/// `U0 = π R EA ε0² + π R EI χ0²`
pub fn prebuckling_strain_energy(state: &LoadState) -> f64 {
    let ring = state.ring();
    let eps0 = state.prestrain();
    let chi0 = state.precurvature();
    PI * ring.radius() * (ring.axial_stiffness() * eps0 * eps0 + ring.bending_stiffness() * chi0 * chi0)
}

/// `W0 = 2π p² R³ / EA`
pub fn prebuckling_work(state: &LoadState) -> f64 {
    let ring = state.ring();
    2.0 * PI * state.pressure().powi(2) * ring.radius().powi(3) / ring.axial_stiffness()
}

/// `U01 = EA ε0 R ∮ ε dθ + EI χ0 R ∮ χ dθ`, with the quadratic strain.
pub fn interaction_energy(field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> f64 {
    let (membrane, bending) = interaction_parts(field, state, rule);
    membrane + bending
}

/// The hoop-force and pre-curvature parts of [`interaction_energy`].
pub fn interaction_parts(field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> (f64, f64) {
    let ring = state.ring();
    let r = ring.radius();
    let strain = integrate_samples(field, rule, |s| second_order_strain(s, r));
    let curvature = integrate_samples(field, rule, |s| s.bend() / (r * r));
    (
        ring.axial_stiffness() * state.prestrain() * r * strain,
        ring.bending_stiffness() * state.precurvature() * r * curvature,
    )
}

/// `-(p/2) ∮ (w' - v)² dθ`, the interaction energy of a field with
/// `∮ w = 0` and no linear strain, as at the onset of buckling.
pub fn interaction_energy_at_onset(field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> f64 {
    -0.5 * state.pressure() * integrate_samples(field, rule, |s| s.tilt() * s.tilt())
}

/// `(U0, U1, U01)`
pub fn strain_energy_terms(field: &HarmonicField, state: &LoadState, order: Order, rule: &QuadratureRule) -> (f64, f64, f64) {
    let ring = state.ring();
    let u1 = membrane_energy(field, ring, order, rule) + bending_energy(field, ring, order, rule);
    (prebuckling_strain_energy(state), u1, interaction_energy(field, state, rule))
}

/// Work of the pressure along the buckling displacement.
///
/// Dead load: `-pR ∮ w` at every order. Hydrostatic: dead-load work minus
/// `(p/2)∮ v(v - w')` at second order, and the full enclosed-area change
/// otherwise. Central and inverse-square: the truncated series at second and
/// fourth order, the closed radial-distance forms at `Exact`.
pub fn buckling_work(load: LoadCase, field: &HarmonicField, state: &LoadState, order: Order, rule: &QuadratureRule) -> f64 {
    let p = state.pressure();
    let r = state.ring().radius();
    let dead = -p * r * integrate_samples(field, rule, |s| s.w);
    let correction = |g: &dyn Fn(&FieldSample) -> f64| -0.5 * p * integrate_samples(field, rule, g);
    match (load, order) {
        (LoadCase::Dead, _) => dead,
        (LoadCase::Hydrostatic, Order::Second) => dead + correction(&|s| s.v * s.tilt()),
        (LoadCase::Hydrostatic, _) => dead + correction(&|s| s.w * s.stretch() + s.v * s.tilt()),
        (LoadCase::Central, Order::Second) => dead + correction(&|s| s.v * s.v),
        (LoadCase::Central, Order::Fourth) => {
            dead + correction(&|s| {
                let (v, w) = (s.v / r, s.w / r);
                s.v * s.v * (1.0 - w + w * w - v * v / 4.0)
            })
        }
        (LoadCase::Central, Order::Exact) => p * r * integrate_samples(field, rule, |s| r - (r + s.w).hypot(s.v)),
        (LoadCase::InverseSquare, Order::Second) => dead + correction(&|s| s.v * s.v - 2.0 * s.w * s.w),
        (LoadCase::InverseSquare, Order::Fourth) => {
            dead + correction(&|s| {
                let (v, w) = (s.v / r, s.w / r);
                s.v * s.v * (1.0 - 3.0 * w + 6.0 * w * w - 0.75 * v * v) + 2.0 * s.w * s.w * (-1.0 + w - w * w)
            })
        }
        (LoadCase::InverseSquare, Order::Exact) => p * integrate_samples(field, rule, |s| r.powi(3) / (r + s.w).hypot(s.v) - r * r),
    }
}

pub fn energy_breakdown(load: LoadCase, field: &HarmonicField, state: &LoadState, order: Order, rule: &QuadratureRule) -> EnergyBreakdown {
    let (u0, u1, u01) = strain_energy_terms(field, state, order, rule);
    EnergyBreakdown {
        u0,
        u1,
        u01,
        w0: prebuckling_work(state),
        w1: buckling_work(load, field, state, order, rule),
        order,
    }
}

/// `Π = U0 + U1 + U01 - W0 - W1`
pub fn total_potential(load: LoadCase, field: &HarmonicField, state: &LoadState, order: Order, rule: &QuadratureRule) -> f64 {
    energy_breakdown(load, field, state, order, rule).total()
}

/// `Π̃ = κΠ` at second order, `κ = 2R³/EI`.
pub fn dimensionless_potential(load: LoadCase, field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> f64 {
    state.ring().kappa() * total_potential(load, field, state, Order::Second, rule)
}

pub fn prebuckling_constants(state: &LoadState) -> PrebucklingConstants {
    let u0 = prebuckling_strain_energy(state);
    let w0 = prebuckling_work(state);
    let kappa = state.ring().kappa();
    PrebucklingConstants {
        u0,
        w0,
        scaled_u0_minus_w0: kappa * (u0 - w0),
        scaled_u0_plus_w0: kappa * (u0 + w0),
    }
}

/// The pre-curvature part of `κU01`, `-2RHλ ∮ (v' - w'') dθ`. It vanishes
/// for every periodic field.
pub fn dead_load_curvature_term(field: &HarmonicField, state: &LoadState, rule: &QuadratureRule) -> f64 {
    let r = state.ring().radius();
    -2.0 * r * state.axial_strain_measure() * integrate_samples(field, rule, |s| s.bend())
}

/// Largest value of `|ε_lin|` over the quadrature nodes.
pub fn max_linear_strain(field: &HarmonicField, radius: f64, rule: &QuadratureRule) -> f64 {
    samples(field, rule).map(|(_, s)| (s.stretch() / radius).abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::RitzMode;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    fn state(h: f64, p: f64) -> LoadState {
        LoadState::from_pressure(Ring::with_slenderness(h).unwrap(), p).unwrap()
    }

    #[test]
    fn table_one_entries() {
        let rule = QuadratureRule::default();
        for &(c, p, h) in &[(0.01, 2.0, 1e-4), (0.05, 0.3, 5e-3), (0.1, 7.0, 1e-6)] {
            let st = state(h, p);
            let mode = RitzMode::new(c).to_field();
            let ea = st.ring().axial_stiffness();
            let r: f64 = st.ring().radius();
            let (u0, u1, u01) = strain_energy_terms(&mode, &st, Order::Fourth, &rule);
            let c2 = c * c;
            let c4 = c2 * c2;
            assert!(rel(u0, PI * p * p * r.powi(3) / ea * (1.0 + h)) < 1e-12);
            let u1_ref = 243.0 * PI * ea / (32.0 * r.powi(3)) * (c4 + 16.0 / 3.0 * h * (c4 + 4.0 * r * r * c2 / 9.0));
            assert!(rel(u1, u1_ref) < 1e-12);
            assert!(rel(u01, -4.5 * PI * c2 * p) < 1e-12);
            let w = |load| buckling_work(load, &mode, &st, Order::Fourth, &rule);
            assert!(w(LoadCase::Dead).abs() < 1e-15);
            assert!(rel(w(LoadCase::Hydrostatic), 1.5 * PI * c2 * p) < 1e-12);
            assert!(rel(w(LoadCase::Central), -0.5 * PI * (c2 + 13.0 * c4 / 16.0) * p) < 1e-12);
            assert!(rel(w(LoadCase::InverseSquare), 0.5 * PI * (7.0 * c2 + 297.0 * c4 / 16.0) * p) < 1e-12);
        }
    }

    #[test]
    fn second_order_bending_of_mode() {
        let st = state(1e-4, 1.0);
        let rule = QuadratureRule::default();
        let u1 = bending_energy(&RitzMode::new(0.2).to_field(), st.ring(), Order::Second, &rule);
        assert!(rel(u1, 18.0 * PI * 1e-4 * 0.04) < 1e-12);
    }

    #[test]
    fn prebuckling_work_examples() {
        let unit = Ring::new(1.0, 1.0, 1.0, 1e-3).unwrap();
        let w = |p| prebuckling_work(&LoadState::from_pressure(unit, p).unwrap());
        assert_eq!(w(0.0), 0.0);
        assert!(rel(w(1.0), 2.0 * PI) < 1e-15);
        assert!(rel(w(2.0), 4.0 * w(1.0)) < 1e-15);
    }

    #[test]
    fn zero_field() {
        let st = state(1e-4, 2.5);
        let rule = QuadratureRule::default();
        let zero = HarmonicField::zeros(4);
        for load in LoadCase::ALL {
            for order in [Order::Second, Order::Fourth, Order::Exact] {
                let e = energy_breakdown(load, &zero, &st, order, &rule);
                assert_eq!((e.u1, e.u01, e.w1), (0.0, 0.0, 0.0));
                assert_eq!(e.total(), e.u0 - e.w0);
            }
        }
    }

    #[test]
    fn mode_is_stationary_at_critical_load() {
        let rule = QuadratureRule::default();
        let mode = RitzMode::new(0.03).to_field();
        for (load, lambda) in [(LoadCase::Dead, 4.0), (LoadCase::Hydrostatic, 3.0)] {
            let st = LoadState::from_lambda(Ring::with_slenderness(1e-4).unwrap(), lambda).unwrap();
            let e = energy_breakdown(load, &mode, &st, Order::Second, &rule);
            assert!(e.variable_part().abs() < 1e-15);
        }
    }

    #[test]
    fn hydrostatic_dimensionless_example() {
        let rule = QuadratureRule::default();
        let c = 0.1;
        let mode = RitzMode::new(c).to_field();
        for lambda in [0.0, 1.0, 3.0, 5.5] {
            let st = LoadState::from_lambda(Ring::with_slenderness(1e-4).unwrap(), lambda).unwrap();
            let k = prebuckling_constants(&st);
            let var = dimensionless_potential(LoadCase::Hydrostatic, &mode, &st, &rule) - k.scaled_u0_minus_w0;
            let expected = 36.0 * PI * c * c - 12.0 * PI * c * c * lambda;
            assert!((var - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn onset_form_agrees_on_mode() {
        let rule = QuadratureRule::default();
        let st = state(1e-3, 1.7);
        let mode = RitzMode::new(0.04).to_field();
        let full = interaction_energy(&mode, &st, &rule);
        let onset = interaction_energy_at_onset(&mode, &st, &rule);
        assert!(rel(full, onset) < 1e-12);
    }

    #[test]
    fn exact_central_works_match_fourth_order_to_sixth() {
        let rule = QuadratureRule::default();
        let st = state(1e-4, 1.0);
        for load in [LoadCase::Central, LoadCase::InverseSquare] {
            let small = |c: f64| {
                let f = RitzMode::new(c).to_field();
                (buckling_work(load, &f, &st, Order::Exact, &rule) - buckling_work(load, &f, &st, Order::Fourth, &rule)).abs()
            };
            // O(C^6): halving C divides the gap by ~64
            let ratio = small(0.02) / small(0.01);
            assert!((ratio / 64.0 - 1.0).abs() < 0.05, "ratio {ratio}");
        }
    }
}
