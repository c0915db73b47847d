//! Displacement fields as finite trigonometric series and the strain,
//! rotation and curvature measures built from them.
//!
//! `v` is the tangential displacement (positive with increasing `θ`) and `w`
//! the radial one, with the sign convention carried by the energy
//! expressions: the linear strain is `(v' + w)/R`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Harmonic count used when none is requested.
pub const DEFAULT_MAX_HARMONIC: usize = 8;

/// Highest derivative order the formulation ever needs.
pub const MAX_DERIVATIVE_ORDER: u32 = 6;

/// `v(θ) = Σ v_cos[m] cos mθ + v_sin[m] sin mθ`, and likewise `w(θ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HarmonicField {
    v_cos: Vec<f64>,
    v_sin: Vec<f64>,
    w_cos: Vec<f64>,
    w_sin: Vec<f64>,
}

/// Values of `v, v', v''` and `w, w', w''` at one angle.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FieldSample {
    pub v: f64,
    pub dv: f64,
    pub d2v: f64,
    pub w: f64,
    pub dw: f64,
    pub d2w: f64,
}

impl FieldSample {
    /// `v' + w`
    pub fn stretch(&self) -> f64 {
        self.dv + self.w
    }

    /// `v - w'`
    pub fn tilt(&self) -> f64 {
        self.v - self.dw
    }

    /// `v' - w''`
    pub fn bend(&self) -> f64 {
        self.dv - self.d2w
    }
}

/// k-th derivative of `a cos mθ + b sin mθ`.
fn harmonic_derivative(a: f64, b: f64, m: usize, theta: f64, k: u32) -> f64 {
    if m == 0 {
        return if k == 0 { a } else { 0.0 };
    }
    let mf = m as f64;
    let (s, c) = (mf * theta).sin_cos();
    // d/dθ maps (cos, sin) -> (-sin, cos) scaled by m
    let (dc, ds) = match k % 4 {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    };
    mf.powi(k as i32) * (a * dc + b * ds)
}

impl HarmonicField {
    /// The zero field with room for harmonics `0..=max_harmonic`.
    pub fn zeros(max_harmonic: usize) -> Self {
        let n = max_harmonic + 1;
        HarmonicField {
            v_cos: vec![0.0; n],
            v_sin: vec![0.0; n],
            w_cos: vec![0.0; n],
            w_sin: vec![0.0; n],
        }
    }

    pub fn max_harmonic(&self) -> usize {
        self.v_cos.len() - 1
    }

    fn ensure(&mut self, m: usize) {
        if m > self.max_harmonic() {
            for part in [&mut self.v_cos, &mut self.v_sin, &mut self.w_cos, &mut self.w_sin] {
                part.resize(m + 1, 0.0);
            }
        }
    }

    /// Sets the cos/sin amplitudes of `v` at harmonic `m`, growing the field if needed.
    pub fn with_v(mut self, m: usize, cos: f64, sin: f64) -> Self {
        self.ensure(m);
        self.v_cos[m] = cos;
        self.v_sin[m] = sin;
        self
    }

    pub fn with_w(mut self, m: usize, cos: f64, sin: f64) -> Self {
        self.ensure(m);
        self.w_cos[m] = cos;
        self.w_sin[m] = sin;
        self
    }

    pub fn v_cos(&self) -> &[f64] {
        &self.v_cos
    }

    pub fn v_sin(&self) -> &[f64] {
        &self.v_sin
    }

    pub fn w_cos(&self) -> &[f64] {
        &self.w_cos
    }

    pub fn w_sin(&self) -> &[f64] {
        &self.w_sin
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let scale = |xs: &[f64]| xs.iter().map(|x| x * factor).collect::<Vec<_>>();
        HarmonicField {
            v_cos: scale(&self.v_cos),
            v_sin: scale(&self.v_sin),
            w_cos: scale(&self.w_cos),
            w_sin: scale(&self.w_sin),
        }
    }

    pub fn added(&self, other: &HarmonicField) -> Self {
        let mut out = self.clone();
        out.ensure(other.max_harmonic());
        for m in 0..=other.max_harmonic() {
            out.v_cos[m] += other.v_cos[m];
            out.v_sin[m] += other.v_sin[m];
            out.w_cos[m] += other.w_cos[m];
            out.w_sin[m] += other.w_sin[m];
        }
        out
    }

    /// Largest amplitude in the field.
    pub fn amplitude_norm(&self) -> f64 {
        [&self.v_cos, &self.v_sin, &self.w_cos, &self.w_sin]
            .iter()
            .flat_map(|xs| xs.iter())
            .fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    /// `d^k v/dθ^k`
    pub fn v_derivative(&self, theta: f64, k: u32) -> f64 {
        (0..self.v_cos.len())
            .map(|m| harmonic_derivative(self.v_cos[m], self.v_sin[m], m, theta, k))
            .sum()
    }

    /// `d^k w/dθ^k`
    pub fn w_derivative(&self, theta: f64, k: u32) -> f64 {
        (0..self.w_cos.len())
            .map(|m| harmonic_derivative(self.w_cos[m], self.w_sin[m], m, theta, k))
            .sum()
    }

    /// Values and first two derivatives of both components.
    pub fn sample(&self, theta: f64) -> FieldSample {
        let mut out = FieldSample::default();
        for m in 0..self.v_cos.len() {
            let (vc, vs, wc, ws) = (self.v_cos[m], self.v_sin[m], self.w_cos[m], self.w_sin[m]);
            if m == 0 {
                out.v += vc;
                out.w += wc;
                continue;
            }
            let mf = m as f64;
            let (s, c) = (mf * theta).sin_cos();
            out.v += vc * c + vs * s;
            out.dv += mf * (-vc * s + vs * c);
            out.d2v -= mf * mf * (vc * c + vs * s);
            out.w += wc * c + ws * s;
            out.dw += mf * (-wc * s + ws * c);
            out.d2w -= mf * mf * (wc * c + ws * s);
        }
        out
    }
}

/// Term-by-term derivative of order `derivative_order` of `(v, w)` at `θ`.
pub fn eval_field(field: &HarmonicField, theta: f64, derivative_order: u32) -> Result<(f64, f64)> {
    if derivative_order > MAX_DERIVATIVE_ORDER {
        return Err(Error::DerivativeOrder(derivative_order));
    }
    Ok((
        field.v_derivative(theta, derivative_order),
        field.w_derivative(theta, derivative_order),
    ))
}

/// The buckling shape `v = C cos 2θ`, `w = 2C sin 2θ` with amplitude `C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RitzMode {
    pub amplitude: f64,
}

impl RitzMode {
    pub fn new(amplitude: f64) -> Self {
        RitzMode { amplitude }
    }

    pub fn to_field(self) -> HarmonicField {
        HarmonicField::zeros(2)
            .with_v(2, self.amplitude, 0.0)
            .with_w(2, 0.0, 2.0 * self.amplitude)
    }
}

impl From<RitzMode> for HarmonicField {
    fn from(mode: RitzMode) -> Self {
        mode.to_field()
    }
}

/// `ε_lin = (v' + w)/R`
pub fn strain_linear(field: &HarmonicField, radius: f64, theta: f64) -> f64 {
    field.sample(theta).stretch() / radius
}

/// `ε = (v'+w)/R + [(v'+w)² + (v-w')²]/(2R²)`
pub fn strain_second_order(field: &HarmonicField, radius: f64, theta: f64) -> f64 {
    second_order_strain(&field.sample(theta), radius)
}

/// `φ = (v - w')/R`
pub fn rotation(field: &HarmonicField, radius: f64, theta: f64) -> f64 {
    field.sample(theta).tilt() / radius
}

/// `χ = (v' - w'')/R²`
pub fn curvature_change(field: &HarmonicField, radius: f64, theta: f64) -> f64 {
    field.sample(theta).bend() / (radius * radius)
}

pub(crate) fn second_order_strain(s: &FieldSample, radius: f64) -> f64 {
    let a = s.stretch();
    let b = s.tilt();
    a / radius + (a * a + b * b) / (2.0 * radius * radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, PI};

    fn translation(a1: f64, a2: f64) -> HarmonicField {
        HarmonicField::zeros(1).with_v(1, a2, -a1).with_w(1, a1, a2)
    }

    #[test]
    fn eval_examples() {
        let mode = RitzMode::new(1.0).to_field();
        assert_eq!(eval_field(&mode, 0.0, 0).unwrap(), (1.0, 0.0));
        let (dv, dw) = eval_field(&mode, 0.0, 1).unwrap();
        assert!(dv.abs() < 1e-15);
        assert!((dw - 4.0).abs() < 1e-15);
        let zero = HarmonicField::zeros(4);
        for k in 0..=6 {
            assert_eq!(eval_field(&zero, 1.3, k).unwrap(), (0.0, 0.0));
        }
        assert_eq!(eval_field(&zero, 0.0, 7), Err(Error::DerivativeOrder(7)));
    }

    #[test]
    fn sixth_derivative_of_cos2() {
        // d^6/dθ^6 cos 2θ = -64 cos 2θ
        let mode = RitzMode::new(1.0).to_field();
        let (v6, w6) = eval_field(&mode, 0.3, 6).unwrap();
        assert!((v6 + 64.0 * (0.6f64).cos()).abs() < 1e-12);
        assert!((w6 + 128.0 * (0.6f64).sin()).abs() < 1e-12);
    }

    #[test]
    fn sample_matches_generic_derivatives() {
        let f = HarmonicField::zeros(3)
            .with_v(0, 0.2, 0.0)
            .with_v(1, 0.3, -0.7)
            .with_v(3, -0.1, 0.4)
            .with_w(2, 0.5, 0.25)
            .with_w(0, -0.3, 0.0);
        for &t in &[0.0, 0.4, 2.0, 5.5] {
            let s = f.sample(t);
            assert!((s.v - f.v_derivative(t, 0)).abs() < 1e-14);
            assert!((s.dv - f.v_derivative(t, 1)).abs() < 1e-14);
            assert!((s.d2v - f.v_derivative(t, 2)).abs() < 1e-14);
            assert!((s.w - f.w_derivative(t, 0)).abs() < 1e-14);
            assert!((s.dw - f.w_derivative(t, 1)).abs() < 1e-14);
            assert!((s.d2w - f.w_derivative(t, 2)).abs() < 1e-14);
        }
    }

    #[test]
    fn strain_examples() {
        let c = 0.37;
        let mode = RitzMode::new(c).to_field();
        for k in 0..16 {
            let t = k as f64 * 0.4;
            assert!(strain_linear(&mode, 1.0, t).abs() < 1e-15);
        }
        let uniform = HarmonicField::zeros(0).with_w(0, 0.3, 0.0);
        assert!((strain_linear(&uniform, 2.0, 1.0) - 0.15).abs() < 1e-15);
        assert!(strain_linear(&translation(1.0, 0.0), 1.0, FRAC_PI_4).abs() < 1e-15);

        let unit = RitzMode::new(1.0).to_field();
        assert!((strain_second_order(&unit, 1.0, 0.0) - 4.5).abs() < 1e-14);
        assert_eq!(strain_second_order(&HarmonicField::zeros(2), 1.0, 0.3), 0.0);
        assert!(strain_second_order(&mode, 1.0, FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn rotation_and_curvature_examples() {
        let unit = RitzMode::new(1.0).to_field();
        assert!((rotation(&unit, 1.0, 0.0) + 3.0).abs() < 1e-15);
        assert_eq!(rotation(&HarmonicField::zeros(1), 1.0, 0.2), 0.0);
        let beta = 0.2;
        let r = 3.0;
        let spin = HarmonicField::zeros(0)
            .with_v(0, r * beta, 0.0)
            .with_w(0, r * beta * beta / 2.0, 0.0);
        assert!((rotation(&spin, r, 1.1) - beta).abs() < 1e-15);

        assert!((curvature_change(&unit, 1.0, FRAC_PI_4) - 6.0).abs() < 1e-14);
        assert_eq!(curvature_change(&HarmonicField::zeros(3), 1.0, 0.5), 0.0);
        for k in 0..8 {
            let t = PI * k as f64 / 4.0 + 0.1;
            assert!(curvature_change(&translation(0.7, -1.2), 1.5, t).abs() < 1e-15);
        }
    }

    #[test]
    fn field_algebra() {
        let a = RitzMode::new(1.0).to_field();
        let b = translation(1.0, 2.0);
        let sum = a.added(&b);
        assert_eq!(sum.max_harmonic(), 2);
        let t = 0.77;
        assert!((sum.sample(t).v - a.sample(t).v - b.sample(t).v).abs() < 1e-15);
        assert_eq!(a.scaled(3.0).amplitude_norm(), 6.0);
    }
}
