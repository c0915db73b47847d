//! Self-check suite run by `ringbuckle verify`.
//!
//! Each check measures an error against a tolerance. Scaling all tolerances
//! by zero makes every check fail, which is useful to see the failure output.

use std::f64::consts::PI;

use num_rational::Rational64;
use serde::Serialize;

use crate::analytic;
use crate::energy::{self, Order};
use crate::galerkin::{self, HarmonicOutcome, SolveMode};
use crate::inextensible;
use crate::kinematics::{HarmonicField, RitzMode};
use crate::postbuckling::{self, Stability};
use crate::quadrature::QuadratureRule;
use crate::report;
use crate::rigid::{self, RigidMotion};
use crate::ring::{self, LoadCase, LoadState, Ring};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub criterion: u8,
    pub description: &'static str,
    pub passed: bool,
    pub error: f64,
    pub tolerance: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

struct Suite {
    scale: f64,
    checks: Vec<CheckResult>,
}

impl Suite {
    fn push(&mut self, id: &'static str, criterion: u8, description: &'static str, error: f64, tolerance: f64, detail: String) {
        let tolerance = tolerance * self.scale;
        self.checks.push(CheckResult {
            id,
            criterion,
            description,
            passed: error < tolerance,
            error,
            tolerance,
            detail,
        });
    }

    /// Exact checks count mismatches against a tolerance of one half.
    fn exact(&mut self, id: &'static str, criterion: u8, description: &'static str, mismatches: usize, detail: String) {
        self.push(id, criterion, description, mismatches as f64, 0.5, detail);
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}

/// Deterministic pseudo-random numbers in `[0, 1)`.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Runs every check with tolerances multiplied by `tolerance_scale`.
pub fn run(tolerance_scale: f64, rule: &QuadratureRule) -> VerifyReport {
    let mut s = Suite {
        scale: tolerance_scale,
        checks: Vec::new(),
    };
    critical_checks(&mut s);
    family_checks(&mut s);
    energy_checks(&mut s, rule);
    path_checks(&mut s, rule);
    rigid_checks(&mut s, rule);
    inextensible_checks(&mut s, rule);
    eigenvector_checks(&mut s);
    property_checks(&mut s, rule);
    let passed = s.checks.iter().filter(|c| c.passed).count();
    VerifyReport {
        passed,
        failed: s.checks.len() - passed,
        checks: s.checks,
    }
}

fn critical_checks(s: &mut Suite) {
    let expected = [
        Rational64::from_integer(4),
        Rational64::from_integer(3),
        Rational64::new(9, 2),
        Rational64::new(9, 4),
    ];
    let got: Vec<_> = LoadCase::ALL.iter().map(|&l| analytic::critical(l).lambda).collect();
    let mismatches = got.iter().zip(&expected).filter(|(a, b)| a != b).count();
    let shown: Vec<_> = got.iter().map(|q| report::format_fraction(*q)).collect();
    s.exact(
        "critical-analytic",
        1,
        "closed-form critical multipliers are 4, 3, 9/2, 9/4",
        mismatches,
        shown.join(", "),
    );

    let errs: Vec<f64> = LoadCase::ALL
        .iter()
        .map(|&l| {
            let num = galerkin::lambda_of_harmonic(l, 2, 1e-6, SolveMode::Linear)
                .ok()
                .and_then(|o| o.lambda());
            num.map_or(f64::INFINITY, |x| rel(x, analytic::critical(l).lambda_f64()))
        })
        .collect();
    s.push(
        "critical-galerkin",
        1,
        "Galerkin pencil at H = 1e-6 matches the critical multipliers",
        max_of(errs),
        1e-4,
        String::new(),
    );

    let errs: Vec<f64> = LoadCase::ALL
        .iter()
        .map(|&l| {
            galerkin::lambda_limit(l, 2)
                .ok()
                .flatten()
                .map_or(f64::INFINITY, |x| rel(x, analytic::critical(l).lambda_f64()))
        })
        .collect();
    s.push(
        "critical-extrapolated",
        1,
        "H → 0 extrapolation matches the critical multipliers",
        max_of(errs),
        1e-9,
        String::new(),
    );
}

fn family_checks(s: &mut Suite) {
    let mut errs = Vec::new();
    for load in LoadCase::ALL {
        for n in 0..=6 {
            for v in analytic::eigenvalue_families(load, n) {
                if !v.admissibility.is_admissible() {
                    continue;
                }
                let num = galerkin::lambda_limit(load, v.harmonic).ok().flatten();
                errs.push(num.map_or(f64::INFINITY, |x| rel(x, v.lambda_f64())));
            }
        }
    }
    let count = errs.len();
    let error = if count >= 20 { max_of(errs) } else { f64::INFINITY };
    s.push(
        "families-vs-galerkin",
        2,
        "admissible family values n ≤ 6 match the extrapolated pencil",
        error,
        1e-9,
        format!("{count} comparisons"),
    );
}

fn energy_checks(s: &mut Suite, rule: &QuadratureRule) {
    let mut rng = Lcg(0x5eed);
    let mut errs = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    for _ in 0..5 {
        let c = 0.1 * (0.05 + 0.95 * rng.next());
        let p = 0.1 + 5.0 * rng.next();
        let h = 1e-6 + 9e-3 * rng.next();
        let ring = Ring::new(1.0, 1.0, 1.0, h).expect("thin ring");
        let st = LoadState::from_pressure(ring, p).expect("positive pressure");
        let mode = RitzMode::new(c).to_field();
        let e = |load| energy::energy_breakdown(load, &mode, &st, Order::Fourth, rule);
        let (c2, c4) = (c * c, c.powi(4));
        let d = e(LoadCase::Dead);
        errs[0].push(rel(d.u0, PI * p * p * (1.0 + h)));
        errs[1].push(rel(d.u1, 243.0 * PI / 32.0 * (c4 + 16.0 / 3.0 * h * (c4 + 4.0 * c2 / 9.0))));
        errs[2].push(rel(d.u01, -4.5 * PI * c2 * p));
        errs[3].push(d.w1.abs() / (c2 * p));
        errs[3].push(rel(e(LoadCase::Hydrostatic).w1, 1.5 * PI * c2 * p));
        errs[3].push(rel(e(LoadCase::Central).w1, -0.5 * PI * (c2 + 13.0 / 16.0 * c4) * p));
        errs[3].push(rel(e(LoadCase::InverseSquare).w1, 0.5 * PI * (7.0 * c2 + 297.0 / 16.0 * c4) * p));
    }
    let [u0, u1, u01, w1] = errs;
    s.push(
        "energy-u0",
        3,
        "pre-buckling strain energy of the contracted ring",
        max_of(u0),
        1e-10,
        String::new(),
    );
    s.push(
        "energy-u1",
        3,
        "fourth-order strain energy of the critical mode",
        max_of(u1),
        1e-10,
        String::new(),
    );
    s.push(
        "energy-u01",
        3,
        "interaction energy of the critical mode",
        max_of(u01),
        1e-10,
        String::new(),
    );
    s.push(
        "energy-w1",
        3,
        "fourth-order load work of the critical mode, all loads",
        max_of(w1),
        1e-10,
        String::new(),
    );
}

fn path_checks(s: &mut Suite, rule: &QuadratureRule) {
    let spot = postbuckling::equilibrium_lambda(LoadCase::Hydrostatic, 0.2, 0.0);
    s.push(
        "path-spot",
        4,
        "hydrostatic path at H = 0, C/ρ = 0.2 is 3.050625",
        (spot - 3.050625).abs(),
        1e-12,
        report::format_sig(spot),
    );

    let mut worst = (0.0, String::new());
    for load in LoadCase::ALL {
        for h in [0.0, 1e-4, 1e-3] {
            for x in [0.05, 0.1, 0.2] {
                let closed = postbuckling::equilibrium_lambda(load, x, h);
                let err = postbuckling::stationarity_lambda(load, x, h, rule).map_or(f64::INFINITY, |o| rel(closed, o));
                if err > worst.0 {
                    worst = (err, format!("worst at {load}, H = {h}, C/ρ = {x}"));
                }
            }
        }
    }
    s.push(
        "path-vs-stationarity",
        4,
        "closed-form paths solve ∂Π/∂C = 0 of the Ritz potential",
        worst.0,
        1e-8,
        worst.1,
    );

    let mut unstable = Vec::new();
    for load in LoadCase::ALL {
        for i in 0..=18 {
            let x = 0.02 + 0.01 * i as f64;
            if postbuckling::stability(load, x, 1e-4, rule) != Ok(Stability::Stable) {
                unstable.push(format!("{load}@{x:.2}"));
            }
        }
    }
    s.exact(
        "path-stability",
        5,
        "all four paths are stable for C/ρ in [0.02, 0.2]",
        unstable.len(),
        unstable.join(" "),
    );
}

fn rigid_checks(s: &mut Suite, rule: &QuadratureRule) {
    let st = LoadState::from_pressure(Ring::with_slenderness(1e-4).expect("thin"), 1.0).expect("unit pressure");
    let t = RigidMotion::translation(0.6, -0.8);
    let a2 = t.translation_squared();
    let b = |load, m: &RigidMotion| rigid::rigid_energy_balance(load, m, &st, rule).value;
    let zero_err = max_of([b(LoadCase::Dead, &t).abs(), b(LoadCase::Hydrostatic, &t).abs()]);
    let nonzero_err = max_of([
        rel(b(LoadCase::Central, &t), 0.5 * PI * a2),
        rel(b(LoadCase::InverseSquare, &t), -0.5 * PI * a2),
    ]);
    s.push(
        "rigid-translation-zero",
        6,
        "translations cost nothing under dead and hydrostatic loads",
        zero_err,
        1e-12,
        String::new(),
    );
    s.push(
        "rigid-translation-central",
        6,
        "translations under the central loads give ±π p α²/2",
        nonzero_err,
        1e-10,
        String::new(),
    );

    let beta = 0.1;
    let rot = RigidMotion::new(0.0, 0.0, beta).expect("small rotation");
    let rot_zero = max_of([LoadCase::Hydrostatic, LoadCase::Central, LoadCase::InverseSquare].map(|l| b(l, &rot).abs()));
    s.push(
        "rigid-rotation-zero",
        6,
        "rotations cost nothing under hydrostatic and central loads",
        rot_zero,
        1e-12,
        String::new(),
    );
    let dead = b(LoadCase::Dead, &rot);
    let expected = -2.0 * PI * beta * beta;
    s.push(
        "rigid-rotation-dead",
        6,
        "dead-load rotation balance equals -2π β² p R²",
        rel(dead, expected),
        1e-10,
        format!("computed {}, expected {}", report::format_sig(dead), report::format_sig(expected)),
    );

    let rotated = rigid::modified_multiplier(LoadCase::Dead, &RigidMotion::relative(0.0, 0.0, 1.0), 1.0).unwrap_or(f64::NAN);
    s.push(
        "rigid-rotated-mode",
        6,
        "dead load with β = 1/R gives 36/11, within 0.01% of 3.273",
        rel(rotated, 3.273),
        1e-4,
        report::format_sig(rotated),
    );

    let mut errs = Vec::new();
    for m in [
        RigidMotion::relative(1.0, 0.0, 0.0),
        RigidMotion::relative(0.0, -0.7, 0.0),
        RigidMotion::relative(0.0, 0.0, 0.5),
    ] {
        for load in LoadCase::ALL {
            let closed = rigid::modified_multiplier(load, &m, 1.0).unwrap_or(f64::NAN);
            let ritz = rigid::ritz_multiplier(load, &m, 1.0, rule).unwrap_or(f64::NAN);
            errs.push(if closed.is_finite() && ritz.is_finite() {
                rel(ritz, closed)
            } else {
                f64::INFINITY
            });
        }
    }
    s.push(
        "rigid-ritz",
        6,
        "modified multipliers match the Ritz quotient with rigid fields",
        max_of(errs),
        1e-8,
        String::new(),
    );
}

fn inextensible_checks(s: &mut Suite, rule: &QuadratureRule) {
    let naive: Vec<Option<f64>> = LoadCase::ALL
        .iter()
        .map(|&l| inextensible::naive_inextensible_lambda(l, rule))
        .collect();
    let expected = [None, Some(12.0), Some(-36.0), Some(36.0 / 7.0)];
    let err = naive
        .iter()
        .zip(expected)
        .map(|(a, b)| match (a, b) {
            (None, None) => 0.0,
            (Some(x), Some(y)) => rel(*x, y),
            _ => f64::INFINITY,
        })
        .fold(0.0, f64::max);
    let shown: Vec<String> = naive.iter().map(|x| x.map_or("none".to_string(), report::format_sig)).collect();
    s.push(
        "inextensible-naive",
        7,
        "naive inextensible Ritz gives none, 12, -36, 36/7",
        err,
        1e-10,
        shown.join(", "),
    );

    let err = max_of(LoadCase::ALL.map(|l| {
        rel(
            inextensible::corrected_inextensible_lambda(l, rule),
            analytic::critical(l).lambda_f64(),
        )
    }));
    s.push(
        "inextensible-corrected",
        7,
        "corrected inextensible work recovers 4, 3, 9/2, 9/4",
        err,
        1e-10,
        String::new(),
    );

    let err = max_of(LoadCase::ALL.map(|l| {
        inextensible::u01_identity_report(l, 0.05, 1.7, rule).map_or(f64::INFINITY, |r| r.residual.abs() / r.u01.abs().max(r.w1.abs()))
    }));
    s.push(
        "inextensible-identity",
        7,
        "U01 = W1 - W̄1 on the critical mode",
        err,
        1e-10,
        String::new(),
    );

    let (c, r) = (0.05, 1.0);
    let mode = RitzMode::new(c).to_field();
    let err = (inextensible::max_reduced_strain(&mode, r, rule) - 4.5 * c * c / (r * r)).abs() + energy::max_linear_strain(&mode, r, rule);
    s.push(
        "inextensible-strain",
        7,
        "reduced strain of the mode peaks at 9C²/(2R²) while ε_lin ≡ 0",
        err,
        1e-12,
        String::new(),
    );
}

fn eigenvector_checks(s: &mut Suite) {
    let mut worst: f64 = 0.0;
    for h in [1e-5, 1e-4] {
        for load in LoadCase::ALL {
            let ratio = match galerkin::lambda_of_harmonic(load, 2, h, SolveMode::Linear) {
                Ok(HarmonicOutcome::Bifurcation { eigenvector, .. }) => galerkin::membrane_measure(2, eigenvector) / h,
                _ => f64::INFINITY,
            };
            worst = worst.max(ratio);
        }
    }
    s.push(
        "eigenvector-membrane",
        8,
        "membrane measure of critical eigenvectors is at most 10 H",
        worst,
        10.0,
        format!("max measure/H = {}", report::format_sig(worst)),
    );
}

fn property_checks(s: &mut Suite, rule: &QuadratureRule) {
    let n = 32;
    let small = QuadratureRule::new(n).expect("n >= 4");
    let err = max_of((0..n).map(|k| {
        let exact = if k == 0 { 2.0 * PI } else { 0.0 };
        (small.integrate(|t| (k as f64 * t).cos()) - exact).abs()
    }));
    s.push(
        "quadrature-exactness",
        9,
        "trapezoid rule is exact for cos kθ, k < N",
        err,
        1e-13,
        String::new(),
    );

    let st = LoadState::from_lambda(Ring::with_slenderness(1e-4).expect("thin"), 2.0).expect("valid");
    let err = max_of(LoadCase::ALL.iter().flat_map(|&l| {
        [0.01, 0.1].map(|c| {
            rel(
                postbuckling::ritz_potential(l, c, &st, rule).value,
                postbuckling::ritz_potential(l, -c, &st, rule).value,
            )
        })
    }));
    s.push("potential-evenness", 9, "Ritz potential is even in C", err, 1e-12, String::new());

    let ring = Ring::new(2.0, 10.0, 1e3, 0.5).expect("thin");
    let err = max_of([0.0, 0.3, 1.6, 9.0].map(|p| {
        let back = ring::lambda_from_pressure(&ring, p)
            .and_then(|l| ring::pressure_from_lambda(&ring, l))
            .unwrap_or(f64::NAN);
        if back.is_nan() {
            f64::INFINITY
        } else {
            (back - p).abs() / p.max(1.0)
        }
    }));
    s.push("round-trip", 9, "λ → p → λ round trip", err, 1e-14, String::new());

    let sweep = || {
        postbuckling::path_sweep(LoadCase::InverseSquare, 1e-4, 0.2, 21, rule)
            .and_then(|p| report::to_json(&p))
            .unwrap_or_default()
    };
    let (a, b) = (sweep(), sweep());
    s.exact(
        "determinism",
        9,
        "repeated path sweeps serialize identically",
        usize::from(a != b || a.is_empty()),
        String::new(),
    );

    // unit radius: κΠ - κ(U0 - W0) against the integrands written out
    let field = HarmonicField::zeros(3)
        .with_v(3, 0.1, -0.2)
        .with_w(2, 0.05, 0.3)
        .with_v(0, 0.02, 0.0);
    let (h, lambda) = (st.ring().slenderness(), st.lambda());
    let scaled =
        energy::dimensionless_potential(LoadCase::Central, &field, &st, rule) - energy::prebuckling_constants(&st).scaled_u0_minus_w0;
    let direct = rule.integrate(|t| {
        let f = field.sample(t);
        (1.0 / h - lambda) * f.stretch().powi(2) + f.bend().powi(2) - lambda * f.tilt().powi(2) + lambda * f.v * f.v
            - 2.0 * h * lambda * f.bend()
    });
    s.push(
        "dimensionless-potential",
        9,
        "dimensionless potential equals the expanded quadratic form",
        rel(scaled, direct),
        1e-10,
        String::new(),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_size_and_known_failures() {
        let report = run(1.0, &QuadratureRule::default());
        assert!(report.checks.len() >= 20);
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.id).collect();
        assert_eq!(failed, vec!["path-vs-stationarity", "rigid-rotation-dead"]);
    }

    #[test]
    fn zero_tolerance_fails_everything() {
        let report = run(0.0, &QuadratureRule::default());
        assert_eq!(report.passed, 0);
    }
}
