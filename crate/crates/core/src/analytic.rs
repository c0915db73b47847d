//! Closed-form bifurcation loads of the closed ring.
//!
//! Periodicity of the Euler-Lagrange solutions selects integer wave numbers.
//! For each load case the admissible loads form one or two families in a
//! natural index `n`. Values are exact rationals.

use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;

use crate::kinematics::RitzMode;
use crate::ring::LoadCase;

/// Why a family value is or is not a buckling load.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Admissibility {
    Admissible,
    /// `n = 0`: uniform contraction, no bifurcation.
    Uniform,
    /// `n = 1` for the central loads: a rigid translation at zero load.
    RigidTranslation,
    /// The dead-load root `λ = 1`, whose mode leaves the ring circular.
    Unbuckled,
    /// Negative or zero multiplier.
    NonPositive,
}

impl Admissibility {
    pub fn is_admissible(self) -> bool {
        self == Admissibility::Admissible
    }
}

/// One family of characteristic roots, `λ(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenFamily {
    pub load: LoadCase,
    pub index: usize,
    pub formula: &'static str,
    /// Smallest `n` that gives an admissible value.
    pub min_n: u32,
}

/// A single family value with its wave number and admissibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyValue {
    pub load: LoadCase,
    pub family: usize,
    pub n: u32,
    /// Number of circumferential waves of the mode.
    pub harmonic: u32,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub lambda: Rational64,
    pub admissibility: Admissibility,
}

impl FamilyValue {
    pub fn lambda_f64(&self) -> f64 {
        to_f64(self.lambda)
    }
}

pub fn to_f64(q: Rational64) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

impl EigenFamily {
    pub fn value(&self, n: u32) -> FamilyValue {
        let k = n as i64;
        let (lambda, harmonic) = match (self.load, self.index) {
            (LoadCase::Dead, 0) => (r(4 * k * k), 2 * n),
            (LoadCase::Dead, _) => (r((1 + 2 * k) * (1 + 2 * k)), 2 * n + 1),
            (LoadCase::Hydrostatic, 0) => (r(4 * k * k - 1), 2 * n),
            (LoadCase::Hydrostatic, _) => (r(4 * k * (1 + k)), 2 * n + 1),
            (LoadCase::Central, _) => (Rational64::new((k * k - 1).pow(2), k * k - 2), n),
            (LoadCase::InverseSquare, _) => {
                if n == 0 {
                    // (n²-1)²/n² has no finite value at n = 0
                    (r(0), 0)
                } else {
                    (Rational64::new((k * k - 1).pow(2), k * k), n)
                }
            }
        };
        let central = matches!(self.load, LoadCase::Central | LoadCase::InverseSquare);
        let admissibility = if n == 0 && !(self.load == LoadCase::Dead && self.index == 1) {
            Admissibility::Uniform
        } else if self.load == LoadCase::Dead && lambda == r(1) {
            Admissibility::Unbuckled
        } else if central && n == 1 {
            Admissibility::RigidTranslation
        } else if lambda <= r(0) {
            Admissibility::NonPositive
        } else {
            Admissibility::Admissible
        };
        FamilyValue {
            load: self.load,
            family: self.index,
            n,
            harmonic,
            lambda,
            admissibility,
        }
    }
}

/// The root families of a load case.
pub fn families(load: LoadCase) -> Vec<EigenFamily> {
    let f = |index, formula, min_n| EigenFamily {
        load,
        index,
        formula,
        min_n,
    };
    match load {
        LoadCase::Dead => vec![f(0, "4n^2", 1), f(1, "(1+2n)^2", 1)],
        LoadCase::Hydrostatic => vec![f(0, "4n^2-1", 1), f(1, "4n(1+n)", 1)],
        LoadCase::Central => vec![f(0, "(n^2-1)^2/(n^2-2)", 2)],
        LoadCase::InverseSquare => vec![f(0, "(n^2-1)^2/n^2", 2)],
    }
}

/// All family values at index `n`, admissible or not.
pub fn eigenvalue_families(load: LoadCase, n: u32) -> Vec<FamilyValue> {
    families(load).iter().map(|f| f.value(n)).collect()
}

/// The family value whose mode has `m` waves.
pub fn harmonic_value(load: LoadCase, m: u32) -> FamilyValue {
    let fams = families(load);
    match load {
        LoadCase::Dead | LoadCase::Hydrostatic => fams[(m % 2) as usize].value(m / 2),
        LoadCase::Central | LoadCase::InverseSquare => fams[0].value(m),
    }
}

/// Smallest admissible family value over `n <= n_max`.
pub fn admissible_minimum(load: LoadCase, n_max: u32) -> Option<FamilyValue> {
    (0..=n_max)
        .flat_map(|n| eigenvalue_families(load, n))
        .filter(|v| v.admissibility.is_admissible())
        .min_by(|a, b| a.lambda.cmp(&b.lambda))
}

/// Roots of the characteristic equation of the buckling ODE at multiplier `λ`.
pub fn characteristic_exponents(load: LoadCase, lambda: f64) -> Vec<Complex64> {
    let c = |x: f64| Complex64::new(x, 0.0);
    let pm = |z: Complex64| [z, -z];
    match load {
        LoadCase::Dead => {
            let i = Complex64::i();
            let s = c(-lambda).sqrt();
            vec![i, -i, s, -s]
        }
        LoadCase::Hydrostatic => pm(c(-1.0 - lambda).sqrt()).to_vec(),
        LoadCase::Central | LoadCase::InverseSquare => {
            let shift = if load == LoadCase::Central { -1.0 } else { 1.0 };
            let inner = c(lambda * (lambda / 4.0 + shift)).sqrt();
            let base = c(-(1.0 + lambda / 2.0));
            let a = (base + inner).sqrt();
            let b = (base - inner).sqrt();
            vec![a, -a, b, -b]
        }
    }
}

/// The lowest significant bifurcation load and its mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalResult {
    pub load: LoadCase,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub lambda: Rational64,
    pub harmonic: u32,
    pub mode: &'static str,
}

impl CriticalResult {
    pub fn lambda_f64(&self) -> f64 {
        to_f64(self.lambda)
    }

    /// The mode with amplitude `c`.
    pub fn mode_shape(&self, c: f64) -> RitzMode {
        RitzMode::new(c)
    }
}

pub const CRITICAL_MODE: &str = "v = C cos 2θ, w = 2C sin 2θ";

pub fn critical(load: LoadCase) -> CriticalResult {
    let lambda = match load {
        LoadCase::Dead => r(4),
        LoadCase::Hydrostatic => r(3),
        LoadCase::Central => Rational64::new(9, 2),
        LoadCase::InverseSquare => Rational64::new(9, 4),
    };
    CriticalResult {
        load,
        lambda,
        harmonic: 2,
        mode: CRITICAL_MODE,
    }
}
