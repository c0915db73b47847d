//! One-mode Rayleigh-Ritz analysis of the initial post-buckling path.
//!
//! The critical mode with amplitude `C` is substituted into the fourth-order
//! potential. Amplitudes are measured by `x = C/ρ`.
//!
//! [`ScaledRitz`] rewrites the potential in units `R = EI = 1`, where
//! `EA = 1/H`, `p = λ` and `C = x√H`, and divides by `H`. It becomes
//! `Π̂(x; λ) = S(x) - λ L(x)` with polynomial `S` and `L` whose coefficients
//! are powers of `H`, so the limit `H → 0` can be taken exactly.

use serde::Serialize;

use crate::analytic;
use crate::energy::{self, Order};
use crate::error::{Error, Result};
use crate::kinematics::RitzMode;
use crate::quadrature::QuadratureRule;
use crate::ring::{check_slenderness, LoadCase, LoadState, Ring};

/// Amplitude beyond which the one-mode expansion is flagged.
pub const AMPLITUDE_GUARD: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RitzValue {
    pub value: f64,
    /// `|C| > 0.2R`: the value is returned but lies outside the asymptotic range.
    pub outside_guard: bool,
}

/// `Π(C)` from the fourth-order energy terms of the critical mode.
pub fn ritz_potential(load: LoadCase, amplitude: f64, state: &LoadState, rule: &QuadratureRule) -> RitzValue {
    let field = RitzMode::new(amplitude).to_field();
    RitzValue {
        value: energy::total_potential(load, &field, state, Order::Fourth, rule),
        outside_guard: amplitude.abs() > AMPLITUDE_GUARD * state.ring().radius(),
    }
}

/// Odd and even coefficients `[c1, c2, c3, c4]` of a quartic with `F(0) = 0`,
/// recovered from its values at `±1, ±2`.
fn quartic_coefficients(f: impl Fn(f64) -> f64) -> [f64; 4] {
    let (p1, m1, p2, m2) = (f(1.0), f(-1.0), f(2.0), f(-2.0));
    let (e1, e2) = (0.5 * (p1 + m1), 0.5 * (p2 + m2));
    let (o1, o2) = (0.5 * (p1 - m1), 0.5 * (p2 - m2));
    [
        (8.0 * o1 - o2) / 6.0,
        (16.0 * e1 - e2) / 12.0,
        (o2 - 2.0 * o1) / 6.0,
        (e2 - 4.0 * e1) / 12.0,
    ]
}

/// Taylor coefficients of the energy components of the critical mode in
/// unit radius, `EA = EI = p = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeCoefficients {
    pub membrane: [f64; 4],
    pub bending: [f64; 4],
    pub hoop_interaction: [f64; 4],
    pub curvature_interaction: [f64; 4],
    pub work: [f64; 4],
}

pub fn mode_coefficients(load: LoadCase, rule: &QuadratureRule) -> ModeCoefficients {
    // any thin ring with R = E = A = 1 will do; EI is divided out below
    let ring = Ring::with_slenderness(1e-4).expect("valid reference ring");
    let state = LoadState::from_pressure(ring, 1.0).expect("unit pressure");
    let ei = ring.bending_stiffness();
    let field = |c: f64| RitzMode::new(c).to_field();
    ModeCoefficients {
        membrane: quartic_coefficients(|c| energy::membrane_energy(&field(c), &ring, Order::Fourth, rule)),
        bending: quartic_coefficients(|c| energy::bending_energy(&field(c), &ring, Order::Fourth, rule) / ei),
        hoop_interaction: quartic_coefficients(|c| energy::interaction_parts(&field(c), &state, rule).0),
        curvature_interaction: quartic_coefficients(|c| energy::interaction_parts(&field(c), &state, rule).1 / ei),
        work: quartic_coefficients(|c| energy::buckling_work(load, &field(c), &state, Order::Fourth, rule)),
    }
}

/// `Π̂(x; λ) = S(x) - λ L(x)` with `S = Σ s_k x^k`, `L = Σ l_k x^k`, `k = 1..4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaledRitz {
    pub load: LoadCase,
    pub slenderness: f64,
    pub stiffness: [f64; 4],
    pub load_factor: [f64; 4],
}

impl ScaledRitz {
    /// Builds the scaled potential for `0 <= H < 0.01`. At `H = 0` any term
    /// that would carry a negative power of `H` must vanish.
    pub fn new(load: LoadCase, slenderness: f64, rule: &QuadratureRule) -> Result<Self> {
        let h = check_slenderness(slenderness, true)?;
        let c = mode_coefficients(load, rule);
        let scale = [c.membrane, c.bending, c.hoop_interaction, c.work]
            .iter()
            .flat_map(|a| a.iter())
            .fold(0.0_f64, |m, x| m.max(x.abs()));
        let tiny = 1e-12 * scale;
        let term = |coef: f64, k: usize, shift: f64| -> Result<f64> {
            let exponent = k as f64 / 2.0 + shift;
            if coef.abs() <= tiny {
                Ok(0.0)
            } else if h == 0.0 {
                if exponent < 0.0 {
                    Err(Error::NotQuasiInextensible {
                        degree: k,
                        coefficient: coef,
                    })
                } else if exponent == 0.0 {
                    Ok(coef)
                } else {
                    Ok(0.0)
                }
            } else {
                Ok(coef * h.powf(exponent))
            }
        };
        let mut stiffness = [0.0; 4];
        let mut load_factor = [0.0; 4];
        for i in 0..4 {
            let k = i + 1;
            stiffness[i] = term(c.membrane[i], k, -2.0)? + term(c.bending[i], k, -1.0)?;
            load_factor[i] = -term(c.hoop_interaction[i], k, -1.0)? - term(c.curvature_interaction[i], k, 0.0)? + term(c.work[i], k, -1.0)?;
        }
        Ok(ScaledRitz {
            load,
            slenderness: h,
            stiffness,
            load_factor,
        })
    }

    fn poly(c: &[f64; 4], x: f64) -> f64 {
        x * (c[0] + x * (c[1] + x * (c[2] + x * c[3])))
    }

    fn poly_derivative(c: &[f64; 4], x: f64) -> f64 {
        c[0] + x * (2.0 * c[1] + x * (3.0 * c[2] + x * 4.0 * c[3]))
    }

    pub fn value(&self, x: f64, lambda: f64) -> f64 {
        Self::poly(&self.stiffness, x) - lambda * Self::poly(&self.load_factor, x)
    }

    /// `∂Π̂/∂x` by central differences with step `1e-7`.
    pub fn slope(&self, x: f64, lambda: f64) -> f64 {
        let d = 1e-7;
        (self.value(x + d, lambda) - self.value(x - d, lambda)) / (2.0 * d)
    }

    /// `∂²Π̂/∂x²` by central differences with step `1e-6`.
    pub fn curvature(&self, x: f64, lambda: f64) -> f64 {
        let d = 1e-6;
        (self.value(x + d, lambda) - 2.0 * self.value(x, lambda) + self.value(x - d, lambda)) / (d * d)
    }

    /// `λ` solving `S'(x) = λ L'(x)` in closed form.
    pub fn stationary_lambda_exact(&self, x: f64) -> f64 {
        Self::poly_derivative(&self.stiffness, x) / Self::poly_derivative(&self.load_factor, x)
    }
}

fn bisect_lambda(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Option<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let mut flo = f(lo);
    if (flo > 0.0) == (f(hi) > 0.0) {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi.abs() {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Oracle: `λ` at which `∂Π/∂C = 0` at amplitude `x = C/ρ`, found by
/// bisection on the central-difference slope of the scaled potential.
pub fn stationarity_lambda(load: LoadCase, c_over_rho: f64, slenderness: f64, rule: &QuadratureRule) -> Result<f64> {
    let ritz = ScaledRitz::new(load, slenderness, rule)?;
    bisect_lambda(|l| ritz.slope(c_over_rho, l), 0.0, 50.0)
        .ok_or_else(|| Error::Invalid(format!("no stationary point for {load} at C/ρ = {c_over_rho}")))
}

/// Oracle: `λ` at which `Π(C) = Π(0)`, the secant (energy-balance) condition.
pub fn energy_balance_lambda(load: LoadCase, c_over_rho: f64, slenderness: f64, rule: &QuadratureRule) -> Result<f64> {
    let ritz = ScaledRitz::new(load, slenderness, rule)?;
    bisect_lambda(|l| ritz.value(c_over_rho, l), 0.0, 50.0)
        .ok_or_else(|| Error::Invalid(format!("no energy balance for {load} at C/ρ = {c_over_rho}")))
}

/// Closed-form path coefficients: `λ = (λ̄ + a (1 + 16H/3) x²) / (1 + d x² H)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathCoefficients {
    pub lambda_bar: f64,
    pub amplitude: f64,
    pub denominator: f64,
}

pub fn path_coefficients(load: LoadCase) -> PathCoefficients {
    let (lambda_bar, amplitude, denominator) = match load {
        LoadCase::Dead => (4.0, 27.0 / 16.0, 0.0),
        LoadCase::Hydrostatic => (3.0, 81.0 / 64.0, 0.0),
        LoadCase::Central => (4.5, 243.0 / 128.0, -13.0 / 128.0),
        LoadCase::InverseSquare => (2.25, 243.0 / 256.0, 321.0 / 256.0),
    };
    PathCoefficients {
        lambda_bar,
        amplitude,
        denominator,
    }
}

/// Closed-form equilibrium multiplier at `x = C/ρ`; `C²/R² = x² H`.
pub fn equilibrium_lambda(load: LoadCase, c_over_rho: f64, slenderness: f64) -> f64 {
    let k = path_coefficients(load);
    let x2 = c_over_rho * c_over_rho;
    (k.lambda_bar + k.amplitude * (1.0 + 16.0 * slenderness / 3.0) * x2) / (1.0 + k.denominator * x2 * slenderness)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    Unstable,
    Neutral,
}

impl Stability {
    pub fn name(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Neutral => "neutral",
        }
    }
}

fn classify(ritz: &ScaledRitz, x: f64) -> Stability {
    let lambda = equilibrium_lambda(ritz.load, x, ritz.slenderness);
    let f2 = ritz.curvature(x, lambda);
    let scale = 2.0 * (ritz.stiffness[1].abs() + lambda * ritz.load_factor[1].abs());
    if f2.abs() < 1e-12 * scale.max(1.0) {
        Stability::Neutral
    } else if f2 > 0.0 {
        Stability::Stable
    } else {
        Stability::Unstable
    }
}

/// Sign of `∂²Π/∂C²` at the path point `(x, λ(x))`.
pub fn stability(load: LoadCase, c_over_rho: f64, slenderness: f64, rule: &QuadratureRule) -> Result<Stability> {
    Ok(classify(&ScaledRitz::new(load, slenderness, rule)?, c_over_rho))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PathSample {
    pub c_over_rho: f64,
    pub lambda: f64,
    pub stability: Stability,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumPath {
    pub load: LoadCase,
    pub slenderness: f64,
    pub samples: Vec<PathSample>,
}

/// `n_samples` evenly spaced points `x ∈ [0, x_max]`.
pub fn path_sweep(load: LoadCase, slenderness: f64, c_max: f64, n_samples: usize, rule: &QuadratureRule) -> Result<EquilibriumPath> {
    if n_samples < 2 {
        return Err(Error::Invalid(format!("need at least 2 samples, got {n_samples}")));
    }
    if !(c_max > 0.0) || !c_max.is_finite() {
        return Err(Error::Invalid(format!("C_max/ρ must be positive, got {c_max}")));
    }
    let ritz = ScaledRitz::new(load, slenderness, rule)?;
    let samples = (0..n_samples)
        .map(|i| {
            let x = c_max * i as f64 / (n_samples - 1) as f64;
            PathSample {
                c_over_rho: x,
                lambda: equilibrium_lambda(load, x, slenderness),
                stability: classify(&ritz, x),
            }
        })
        .collect();
    Ok(EquilibriumPath {
        load,
        slenderness,
        samples,
    })
}

/// The bifurcation multiplier `λ̄` the path starts from.
pub fn path_origin(load: LoadCase) -> f64 {
    analytic::critical(load).lambda_f64()
}
