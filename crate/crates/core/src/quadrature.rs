//! Uniform trapezoid quadrature on `[0, 2π)`.
//!
//! For a 2π-periodic integrand the trapezoid sum with `N` nodes integrates
//! every trigonometric polynomial of degree below `N` exactly, so all the
//! energy integrals of finite harmonic fields are computed to rounding.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Node count used when nothing else is requested.
pub const DEFAULT_NODES: usize = 256;

/// Environment variable that overrides the node count in the CLI.
pub const NODES_ENV: &str = "RINGBUCKLE_QUAD_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureRule {
    nodes: usize,
}

impl QuadratureRule {
    pub fn new(nodes: usize) -> Result<Self> {
        if nodes < 4 {
            return Err(Error::TooFewNodes(nodes));
        }
        Ok(QuadratureRule { nodes })
    }

    /// Reads [`NODES_ENV`], falling back to [`DEFAULT_NODES`] when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(NODES_ENV) {
            Ok(raw) => {
                let n = raw
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Invalid(format!("{NODES_ENV} must be a positive integer, got `{raw}`")))?;
                QuadratureRule::new(n)
            }
            Err(_) => Ok(QuadratureRule::default()),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn weight(&self) -> f64 {
        TAU / self.nodes as f64
    }

    pub fn node(&self, k: usize) -> f64 {
        TAU * k as f64 / self.nodes as f64
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.nodes).map(|k| self.node(k))
    }

    /// `∮ g(θ) dθ`
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut g: F) -> f64 {
        let mut sum = NeumaierSum::default();
        for theta in self.nodes() {
            sum.add(g(theta));
        }
        sum.value() * self.weight()
    }

    /// Largest value of `|g|` over the nodes.
    pub fn max_abs<F: FnMut(f64) -> f64>(&self, mut g: F) -> f64 {
        self.nodes().map(|t| g(t).abs()).fold(0.0, f64::max)
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        QuadratureRule { nodes: DEFAULT_NODES }
    }
}

/// `∮ g dθ` with the given rule.
pub fn integrate_periodic<F: FnMut(f64) -> f64>(g: F, rule: &QuadratureRule) -> f64 {
    rule.integrate(g)
}

/// Compensated summation (Neumaier's variant of Kahan).
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn examples() {
        let rule64 = QuadratureRule::new(64).unwrap();
        let c2 = rule64.integrate(|t| (2.0 * t).cos().powi(2));
        assert!((c2 - PI).abs() < 1e-13 * PI);
        let one = QuadratureRule::new(8).unwrap().integrate(|_| 1.0);
        assert!((one - TAU).abs() < 1e-14);
        let orth = rule64.integrate(|t| (2.0 * t).sin() * (2.0 * t).cos());
        assert!(orth.abs() < 1e-14);
    }

    #[test]
    fn too_few_nodes() {
        assert_eq!(QuadratureRule::new(3), Err(Error::TooFewNodes(3)));
        assert!(QuadratureRule::new(4).is_ok());
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = NeumaierSum::default();
        s.add(1.0);
        s.add(1e100);
        s.add(1.0);
        s.add(-1e100);
        assert_eq!(s.value(), 2.0);
    }
}
