use thiserror::Error;

/// Errors raised by the ring analyses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A ring parameter was zero, negative or not finite.
    #[error("ring parameter `{name}` must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    /// The ring is too thick for the thin-ring formulation.
    #[error("slenderness H = {slenderness} is outside the thin-ring range [0, 0.01)")]
    ThickRing { slenderness: f64 },

    /// A pressure or load multiplier was negative.
    #[error("{quantity} must be non-negative, got {value}")]
    NegativeLoad { quantity: &'static str, value: f64 },

    /// Quadrature rule with too few nodes.
    #[error("quadrature needs at least 4 nodes, got {0}")]
    TooFewNodes(usize),

    /// A derivative order beyond what the formulation uses.
    #[error("derivative order {0} exceeds the supported maximum of 6")]
    DerivativeOrder(u32),

    /// Harmonic index outside the accepted range.
    #[error("harmonic m = {m} is not accepted here (need m >= {min})")]
    Harmonic { m: u32, min: u32 },

    /// All polynomial coefficients vanished.
    #[error("characteristic polynomial is degenerate for m = {0}")]
    DegeneratePolynomial(u32),

    /// The field violates the a-priori inextensibility constraint w = -v'.
    #[error("field violates w = -v' (max residual {residual:e})")]
    NotInextensible { residual: f64 },

    /// A Ritz shape carries membrane strain where the scaled potential needs none.
    #[error("Ritz shape is not quasi-inextensible (coefficient {coefficient:e} at degree {degree})")]
    NotQuasiInextensible { degree: usize, coefficient: f64 },

    /// Rigid rotation too large for the o(β³) expansion.
    #[error("rigid rotation |β| = {0} exceeds 0.5")]
    RotationTooLarge(f64),

    /// The central-load multiplier of the rigid-motion estimate is singular.
    #[error("central-load estimate singular: α1² + α2² = {0} >= 8")]
    SingularTranslation(f64),

    /// Generic invalid argument.
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// Serialization failure in the report writers.
    #[error("serialization failed: {0}")]
    Serialize(String),
}

pub type Result<T> = std::result::Result<T, Error>;
