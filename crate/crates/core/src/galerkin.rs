//! Per-harmonic Galerkin reduction of the quadratic buckling potential.
//!
//! With `v = a cos mθ`, `w = b sin mθ` the dimensionless second-order
//! potential (unit radius) reduces to `π [a b](K - λG)[a b]ᵀ`, where the
//! membrane coefficient `(1 - Hλ)/H` is split into `1/H` in `K` and `-1` in
//! `G`. The blocks are assembled by quadrature of the integrands, so they
//! give an oracle independent of the closed-form families.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{FieldSample, HarmonicField};
use crate::quadrature::QuadratureRule;
use crate::ring::{check_slenderness, LoadCase};

/// Symmetric 2×2 matrix `[[xx, xy], [xy, yy]]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Sym2 {
    pub xx: f64,
    pub xy: f64,
    pub yy: f64,
}

impl Sym2 {
    pub fn det(&self) -> f64 {
        self.xx * self.yy - self.xy * self.xy
    }

    pub fn scaled(&self, s: f64) -> Sym2 {
        Sym2 {
            xx: self.xx * s,
            xy: self.xy * s,
            yy: self.yy * s,
        }
    }

    pub fn plus(&self, o: &Sym2) -> Sym2 {
        Sym2 {
            xx: self.xx + o.xx,
            xy: self.xy + o.xy,
            yy: self.yy + o.yy,
        }
    }

    /// `xᵀ S x`
    pub fn quad(&self, x: [f64; 2]) -> f64 {
        self.xx * x[0] * x[0] + 2.0 * self.xy * x[0] * x[1] + self.yy * x[1] * x[1]
    }

    /// The mixed determinant: `det(P + tQ) = det P + t·mixed(P, Q) + t² det Q`.
    pub fn mixed(&self, o: &Sym2) -> f64 {
        self.xx * o.yy + self.yy * o.xx - 2.0 * self.xy * o.xy
    }
}

/// The pieces of the reduced potential, each divided by `π`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HarmonicPencil {
    pub load: LoadCase,
    pub m: u32,
    pub slenderness: f64,
    /// `∮ (w + v')²`
    pub membrane: Sym2,
    /// `∮ (v' - w'')²`
    pub bending: Sym2,
    /// `∮ (v - w')²`
    pub tilt: Sym2,
    /// The load-specific term added with `+λ`.
    pub load_term: Sym2,
}

fn basis(m: u32, a: f64, b: f64) -> HarmonicField {
    let m = m as usize;
    HarmonicField::zeros(m).with_v(m, a, 0.0).with_w(m, 0.0, b)
}

fn load_integrand(load: LoadCase, s: &FieldSample) -> f64 {
    match load {
        LoadCase::Dead => 0.0,
        LoadCase::Hydrostatic => s.v * s.tilt(),
        LoadCase::Central => s.v * s.v,
        LoadCase::InverseSquare => s.v * s.v - 2.0 * s.w * s.w,
    }
}

/// Matrix of the quadratic form `x ↦ ∮ g(field(x)) / π` by polarization.
fn form_matrix(m: u32, rule: &QuadratureRule, g: impl Fn(&FieldSample) -> f64) -> Sym2 {
    let q = |a: f64, b: f64| {
        let f = basis(m, a, b);
        rule.integrate(|t| g(&f.sample(t))) / PI
    };
    let xx = q(1.0, 0.0);
    let yy = q(0.0, 1.0);
    let xy = 0.5 * (q(1.0, 1.0) - xx - yy);
    Sym2 { xx, xy, yy }
}

fn rule_for(m: u32) -> QuadratureRule {
    let n = (4 * m as usize + 8).max(crate::quadrature::DEFAULT_NODES);
    QuadratureRule::new(n).expect("node count is at least 4")
}

/// Builds the pencil for harmonic `m >= 1` and slenderness `0 < H < 0.01`.
pub fn assemble_pencil(load: LoadCase, m: u32, slenderness: f64) -> Result<HarmonicPencil> {
    if m == 0 {
        return Err(Error::Harmonic { m, min: 1 });
    }
    check_slenderness(slenderness, false)?;
    let rule = rule_for(m);
    Ok(HarmonicPencil {
        load,
        m,
        slenderness,
        membrane: form_matrix(m, &rule, |s| s.stretch() * s.stretch()),
        bending: form_matrix(m, &rule, |s| s.bend() * s.bend()),
        tilt: form_matrix(m, &rule, |s| s.tilt() * s.tilt()),
        load_term: form_matrix(m, &rule, |s| load_integrand(load, s)),
    })
}

impl HarmonicPencil {
    /// `K = membrane/H + bending`
    pub fn stiffness(&self) -> Sym2 {
        self.membrane.scaled(1.0 / self.slenderness).plus(&self.bending)
    }

    /// `G = membrane + tilt - load_term`
    pub fn geometric(&self) -> Sym2 {
        self.membrane.plus(&self.tilt).plus(&self.load_term.scaled(-1.0))
    }

    /// `(Π̃ - Π̃0)/π` at `(a, b)` and multiplier `λ`.
    pub fn reduced_potential(&self, x: [f64; 2], lambda: f64) -> f64 {
        self.stiffness().quad(x) - lambda * self.geometric().quad(x)
    }

    /// `det(K - λG)` as `c0 + c1 λ + c2 λ²`.
    ///
    /// The coefficients are expanded piecewise so the `1/H²` parts of
    /// `det K` cancel analytically rather than in floating point.
    pub fn determinant_coefficients(&self) -> [f64; 3] {
        let h = self.slenderness;
        let (mem, bend, g) = (self.membrane, self.bending, self.geometric());
        let c0 = mem.det() / (h * h) + mem.mixed(&bend) / h + bend.det();
        let c1 = -(mem.mixed(&g) / h + bend.mixed(&g));
        let c2 = g.det();
        [c0, c1, c2]
    }

    /// `det(((1 - Hλ)/H) membrane + bending - λ(tilt - load_term))`.
    pub fn exact_determinant(&self, lambda: f64) -> f64 {
        let h = self.slenderness;
        let a = self.membrane.scaled((1.0 - h * lambda) / h);
        let rest = self.tilt.plus(&self.load_term.scaled(-1.0)).scaled(-lambda);
        a.plus(&self.bending).plus(&rest).det()
    }

    /// Unit null vector of `K - λG`, sign fixed by `a >= 0`.
    pub fn null_vector(&self, lambda: f64) -> [f64; 2] {
        let (k, g) = (self.stiffness(), self.geometric());
        let p = k.xx - lambda * g.xx;
        let q = k.xy - lambda * g.xy;
        let s = k.yy - lambda * g.yy;
        let (x, y) = if p.abs() + q.abs() >= q.abs() + s.abs() { (q, -p) } else { (s, -q) };
        let n = x.hypot(y);
        let (x, y) = if x < 0.0 { (-x / n, -y / n) } else { (x / n, y / n) };
        [x, y]
    }
}

/// Roots of `c0 + c1 x + c2 x²`, real ones only, ascending.
pub fn real_quadratic_roots(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    let scale = c0.abs().max(c1.abs()).max(c2.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    let mut roots = if c2.abs() <= 1e-14 * scale {
        if c1 == 0.0 {
            Vec::new()
        } else {
            vec![-c0 / c1]
        }
    } else {
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc < 0.0 {
            Vec::new()
        } else {
            let sign = if c1 >= 0.0 { 1.0 } else { -1.0 };
            let q = -0.5 * (c1 + sign * disc.sqrt());
            if q == 0.0 {
                vec![0.0, 0.0]
            } else {
                vec![q / c2, c0 / q]
            }
        }
    };
    roots.sort_by(f64::total_cmp);
    roots
}

/// How the bifurcation multiplier is extracted from the pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMode {
    /// Quadratic formula on `det(K - λG) = 0`.
    Linear,
    /// Bisection on the unsplit determinant over `(0, 50)`.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HarmonicOutcome {
    Bifurcation {
        lambda: f64,
        eigenvector: [f64; 2],
    },
    /// `m = 1`: rigid translation, never a buckling load.
    Rigid,
    NoBifurcation,
}

impl HarmonicOutcome {
    pub fn lambda(&self) -> Option<f64> {
        match self {
            HarmonicOutcome::Bifurcation { lambda, .. } => Some(*lambda),
            _ => None,
        }
    }
}

const BRACKET_MAX: f64 = 50.0;

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-12 * hi.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest positive bifurcation multiplier of harmonic `m`.
pub fn lambda_of_harmonic(load: LoadCase, m: u32, slenderness: f64, mode: SolveMode) -> Result<HarmonicOutcome> {
    let pencil = assemble_pencil(load, m, slenderness)?;
    if m == 1 {
        return Ok(HarmonicOutcome::Rigid);
    }
    let lambda = match mode {
        SolveMode::Linear => {
            let [c0, c1, c2] = pencil.determinant_coefficients();
            real_quadratic_roots(c0, c1, c2).into_iter().find(|&l| l > 0.0)
        }
        SolveMode::Exact => {
            let f = |l: f64| pencil.exact_determinant(l);
            let steps = 5000;
            let dx = BRACKET_MAX / steps as f64;
            (0..steps).find_map(|i| {
                let (a, b) = (i as f64 * dx, (i + 1) as f64 * dx);
                let (fa, fb) = (f(a.max(1e-12)), f(b));
                ((fa > 0.0) != (fb > 0.0)).then(|| bisect(f, a.max(1e-12), b))
            })
        }
    };
    Ok(match lambda {
        Some(lambda) => HarmonicOutcome::Bifurcation {
            lambda,
            eigenvector: pencil.null_vector(lambda),
        },
        None => HarmonicOutcome::NoBifurcation,
    })
}

/// Slenderness values used for the `H → 0` extrapolation of harmonic `m`.
pub fn extrapolation_slenderness(m: u32) -> Vec<f64> {
    let h0 = 1e-4 / (m as f64 * m as f64);
    (0..5).map(|k| h0 / 2f64.powi(k)).collect()
}

/// Neville extrapolation of samples `(x_i, y_i)` to `x = 0`.
pub fn extrapolate_to_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = xs.len();
    for level in 1..n {
        for i in 0..n - level {
            let (xi, xj) = (xs[i], xs[i + level]);
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
    }
    p[0]
}

/// `lim_{H→0} λ(m, H)` by polynomial extrapolation in `H`.
pub fn lambda_limit(load: LoadCase, m: u32) -> Result<Option<f64>> {
    let hs = extrapolation_slenderness(m);
    let mut ys = Vec::with_capacity(hs.len());
    for &h in &hs {
        match lambda_of_harmonic(load, m, h, SolveMode::Linear)?.lambda() {
            Some(l) => ys.push(l),
            None => return Ok(None),
        }
    }
    Ok(Some(extrapolate_to_zero(&hs, &ys)))
}

/// Characteristic polynomial of the extensible buckling equations for
/// `v ∝ e^{imθ}`, as coefficients `[c0, c1, c2]` in `λ`, with the rational
/// `1/(1 - Hλ)` factors cleared.
pub fn extensible_polynomial(load: LoadCase, m: u32, slenderness: f64) -> Result<[f64; 3]> {
    if m < 2 {
        return Err(Error::Harmonic { m, min: 2 });
    }
    check_slenderness(slenderness, true)?;
    let h = slenderness;
    let m2 = (m as f64).powi(2);
    let k = m2 - 1.0;
    let coeffs = match load {
        LoadCase::Dead => [-m2 * k * k, k * k, 0.0],
        LoadCase::Hydrostatic => [-k * k, k + h * k * k - h, -h * k],
        LoadCase::Central => [-k * k, h * m2 * m2 + m2 - 2.0, h * (17.0 / 4.0 - m2)],
        LoadCase::InverseSquare => [-k * k, h * m2 * m2 - 3.0 * h * m2 + m2 + 3.0 * h, h * (1.0 - m2)],
    };
    if coeffs.iter().all(|c| c.abs() < 1e-300) {
        return Err(Error::DegeneratePolynomial(m));
    }
    Ok(coeffs)
}

/// Real roots of [`extensible_polynomial`], ascending.
pub fn extensible_characteristic_roots(load: LoadCase, m: u32, slenderness: f64) -> Result<Vec<f64>> {
    let [c0, c1, c2] = extensible_polynomial(load, m, slenderness)?;
    Ok(real_quadratic_roots(c0, c1, c2))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub m: u32,
    pub outcome: HarmonicOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BucklingSpectrum {
    pub load: LoadCase,
    pub slenderness: f64,
    pub entries: Vec<SpectrumEntry>,
    pub min_m: u32,
    pub min_lambda: f64,
}

/// `λ(m)` for `m = 1..=m_max` and the smallest bifurcation load.
pub fn critical_numeric(load: LoadCase, slenderness: f64, m_max: u32) -> Result<BucklingSpectrum> {
    if m_max < 4 {
        return Err(Error::Invalid(format!("m_max must be at least 4, got {m_max}")));
    }
    let mut entries = Vec::with_capacity(m_max as usize);
    for m in 1..=m_max {
        entries.push(SpectrumEntry {
            m,
            outcome: lambda_of_harmonic(load, m, slenderness, SolveMode::Linear)?,
        });
    }
    let (min_m, min_lambda) = entries
        .iter()
        .filter_map(|e| e.outcome.lambda().map(|l| (e.m, l)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| Error::Invalid(format!("no bifurcation for {load} up to m = {m_max}")))?;
    Ok(BucklingSpectrum {
        load,
        slenderness,
        entries,
        min_m,
        min_lambda,
    })
}

/// `∮ (w + v')² dθ` of `v = a cos mθ`, `w = b sin mθ`.
pub fn membrane_measure(m: u32, eigenvector: [f64; 2]) -> f64 {
    let f = basis(m, eigenvector[0], eigenvector[1]);
    rule_for(m).integrate(|t| f.sample(t).stretch().powi(2))
}
