//! The measure `δ_s ∗ δ_t` on `[-1, 1]` written as a density.
//!
//! For `s, t ∈ (-1, 1)` it has density `1 / (π √(c² − (st − r)²))` on
//! `[st − c, st + c]`, `c = √((1 − s²)(1 − t²))`. Integrals use the
//! substitution `r = st − c cos θ`, which cancels the square-root
//! singularities at both ends.

use super::quadrature::GaussLegendre;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMeasure {
    pub s: f64,
    pub t: f64,
    center: f64,
    radius: f64,
}

impl DensityMeasure {
    pub(crate) fn new(s: f64, t: f64) -> Self {
        let radius = ((1.0 - s * s) * (1.0 - t * t)).sqrt();
        DensityMeasure { s, t, center: s * t, radius }
    }

    /// `[st − c, st + c]`.
    pub fn support(&self) -> (f64, f64) {
        (self.center - self.radius, self.center + self.radius)
    }

    /// The Dirac location when `s` or `t` is `±1`.
    pub fn atom(&self) -> Option<f64> {
        (self.radius == 0.0).then_some(self.center)
    }

    /// Mass of the atom at `r` (1 or 0).
    pub fn atom_at(&self, r: f64) -> f64 {
        match self.atom() {
            Some(a) if a == r => 1.0,
            _ => 0.0,
        }
    }

    /// Density at `r`; 0 outside the open support and for Dirac measures.
    pub fn density(&self, r: f64) -> f64 {
        let d = self.radius * self.radius - (self.center - r).powi(2);
        if self.radius == 0.0 || d <= 0.0 {
            0.0
        } else {
            1.0 / (PI * d.sqrt())
        }
    }

    /// `∫ f d(δ_s ∗ δ_t)`, atoms included.
    pub fn integrate(&self, rule: &GaussLegendre, f: impl Fn(f64) -> f64) -> f64 {
        if let Some(a) = self.atom() {
            return f(a);
        }
        rule.integrate_on(0.0, PI, |theta| {
            let r = self.center - self.radius * theta.cos();
            f(r) * self.density(r) * self.radius * theta.sin()
        })
    }

    /// Total mass (atom plus absolutely continuous part).
    pub fn mass(&self, rule: &GaussLegendre) -> f64 {
        self.integrate(rule, |_| 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcsine_law_at_origin() {
        let m = DensityMeasure::new(0.0, 0.0);
        assert_eq!(m.support(), (-1.0, 1.0));
        for r in [-0.9, 0.0, 0.4] {
            assert!((m.density(r) - 1.0 / (PI * (1.0 - r * r).sqrt())).abs() < 1e-15);
        }
        assert_eq!(m.density(1.0), 0.0);
    }

    #[test]
    fn mass_is_one() {
        let rule = GaussLegendre::new(64);
        for (s, t) in [(0.0, 0.0), (0.3, -0.8), (0.99, 0.99), (-0.5, 0.2)] {
            assert!((DensityMeasure::new(s, t).mass(&rule) - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn endpoints_degenerate_to_atoms() {
        let m = DensityMeasure::new(1.0, 0.4);
        assert_eq!(m.atom(), Some(0.4));
        assert_eq!(m.atom_at(0.4), 1.0);
        assert_eq!(m.density(0.4), 0.0);
        let m = DensityMeasure::new(-1.0, 0.4);
        assert_eq!(m.atom(), Some(-0.4));
        assert_eq!(DensityMeasure::new(0.5, 0.5).atom(), None);
    }
}
