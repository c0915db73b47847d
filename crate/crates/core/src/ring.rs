//! Ring geometry, load behaviours and the pressure/multiplier scaling.
//!
//! The load multiplier is `λ = R³p/(EI)`. The companion quantity
//! `Hλ = Rp/(EA)` is the uniform axial contraction of the centre line, with
//! `H = (ρ/R)²` and `ρ = sqrt(I/A)` the radius of gyration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Upper bound on the slenderness `H` accepted by the thin-ring formulation.
pub const MAX_SLENDERNESS: f64 = 0.01;

/// A thin circular ring: radius, Young's modulus, section area and inertia.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ring {
    radius: f64,
    youngs_modulus: f64,
    area: f64,
    inertia: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Checks `0 <= H < 0.01` (or `0 < H` when `allow_zero` is false).
pub fn check_slenderness(h: f64, allow_zero: bool) -> Result<f64> {
    let lower_ok = if allow_zero { h >= 0.0 } else { h > 0.0 };
    if h.is_finite() && lower_ok && h < MAX_SLENDERNESS {
        Ok(h)
    } else {
        Err(Error::ThickRing { slenderness: h })
    }
}

impl Ring {
    pub fn new(radius: f64, youngs_modulus: f64, area: f64, inertia: f64) -> Result<Self> {
        let ring = Ring {
            radius: positive("radius", radius)?,
            youngs_modulus: positive("youngs_modulus", youngs_modulus)?,
            area: positive("area", area)?,
            inertia: positive("inertia", inertia)?,
        };
        check_slenderness(ring.slenderness(), false)?;
        Ok(ring)
    }

    /// Unit radius, modulus and area with `I = H`, so the slenderness is `H`.
    pub fn with_slenderness(h: f64) -> Result<Self> {
        Ring::new(1.0, 1.0, 1.0, h)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn youngs_modulus(&self) -> f64 {
        self.youngs_modulus
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn inertia(&self) -> f64 {
        self.inertia
    }

    /// `EA`
    pub fn axial_stiffness(&self) -> f64 {
        self.youngs_modulus * self.area
    }

    /// `EI`
    pub fn bending_stiffness(&self) -> f64 {
        self.youngs_modulus * self.inertia
    }

    /// `ρ = sqrt(I/A)`
    pub fn gyration_radius(&self) -> f64 {
        (self.inertia / self.area).sqrt()
    }

    /// `H = (ρ/R)²`, computed as `I/(A R²)`.
    pub fn slenderness(&self) -> f64 {
        self.inertia / (self.area * self.radius * self.radius)
    }

    /// `κ = 2R³/EI`, the factor making the potential dimensionless.
    pub fn kappa(&self) -> f64 {
        2.0 * self.radius.powi(3) / self.bending_stiffness()
    }
}

impl Default for Ring {
    /// `R = 1, E = 1, A = 1, I = 1e-4`, so `H = 1e-4`.
    fn default() -> Self {
        Ring {
            radius: 1.0,
            youngs_modulus: 1.0,
            area: 1.0,
            inertia: 1e-4,
        }
    }
}

/// How the external pressure behaves as the ring deforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LoadCase {
    /// Fixed direction and magnitude per unit initial length.
    Dead,
    /// Stays normal to the deflected axis (fluid pressure).
    Hydrostatic,
    /// Always aimed at the original centre, constant magnitude.
    Central,
    /// Aimed at the original centre, magnitude ∝ 1/distance².
    InverseSquare,
}

impl LoadCase {
    pub const ALL: [LoadCase; 4] = [LoadCase::Dead, LoadCase::Hydrostatic, LoadCase::Central, LoadCase::InverseSquare];

    /// Short tag: `d`, `h`, `c`, `is`.
    pub fn tag(self) -> &'static str {
        match self {
            LoadCase::Dead => "d",
            LoadCase::Hydrostatic => "h",
            LoadCase::Central => "c",
            LoadCase::InverseSquare => "is",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LoadCase::Dead => "dead",
            LoadCase::Hydrostatic => "hydrostatic",
            LoadCase::Central => "central",
            LoadCase::InverseSquare => "inverse_square",
        }
    }
}

impl fmt::Display for LoadCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LoadCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "d" | "dead" => Ok(LoadCase::Dead),
            "h" | "hydrostatic" => Ok(LoadCase::Hydrostatic),
            "c" | "central" => Ok(LoadCase::Central),
            "is" | "inverse_square" | "inversesquare" => Ok(LoadCase::InverseSquare),
            other => Err(Error::Invalid(format!("unknown load case `{other}`"))),
        }
    }
}

/// `λ = R³p/(EI)`.
pub fn lambda_from_pressure(ring: &Ring, pressure: f64) -> Result<f64> {
    if !(pressure >= 0.0) || !pressure.is_finite() {
        return Err(Error::NegativeLoad {
            quantity: "pressure",
            value: pressure,
        });
    }
    Ok(ring.radius.powi(3) * pressure / ring.bending_stiffness())
}

/// `p = λ EI / R³`.
pub fn pressure_from_lambda(ring: &Ring, lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::NegativeLoad {
            quantity: "load multiplier",
            value: lambda,
        });
    }
    Ok(lambda * ring.bending_stiffness() / ring.radius.powi(3))
}

/// A ring under a given inward pressure, with the uniform pre-buckling state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LoadState {
    ring: Ring,
    pressure: f64,
}

impl LoadState {
    pub fn from_pressure(ring: Ring, pressure: f64) -> Result<Self> {
        lambda_from_pressure(&ring, pressure)?;
        Ok(LoadState { ring, pressure })
    }

    pub fn from_lambda(ring: Ring, lambda: f64) -> Result<Self> {
        let pressure = pressure_from_lambda(&ring, lambda)?;
        Ok(LoadState { ring, pressure })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn pressure(&self) -> f64 {
        self.pressure
    }

    pub fn lambda(&self) -> f64 {
        self.ring.radius.powi(3) * self.pressure / self.ring.bending_stiffness()
    }

    /// `Hλ = Rp/(EA)`
    pub fn axial_strain_measure(&self) -> f64 {
        self.ring.radius * self.pressure / self.ring.axial_stiffness()
    }

    /// `N₀ = -pR`
    pub fn hoop_force(&self) -> f64 {
        -self.pressure * self.ring.radius
    }

    /// `ε₀ = N₀/(EA)`
    pub fn prestrain(&self) -> f64 {
        self.hoop_force() / self.ring.axial_stiffness()
    }

    /// `w₀ = R N₀/(EA)`; negative under inward pressure.
    pub fn prebuckling_radial_displacement(&self) -> f64 {
        self.ring.radius * self.prestrain()
    }

    /// `χ₀ = w₀/R²`
    pub fn precurvature(&self) -> f64 {
        self.prebuckling_radial_displacement() / (self.ring.radius * self.ring.radius)
    }
}
