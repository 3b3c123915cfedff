//! The interval hypergroup `SO(3)//SO(2) ≅ [-1, 1]`.
//!
//! A point `t` stands for the double coset of rotations by `arccos t`. The
//! convolution is
//!
//! ```text
//! (δ_s ∗ δ_t)(f) = (1/2π) ∫₀^{2π} f(st − √((1 − s²)(1 − t²)) cos θ) dθ,
//! ```
//!
//! evaluated with the periodic trapezoid rule on `N` nodes. Haar measure is
//! Lebesgue measure divided by 2, the involution is trivial, and the
//! characters are the Legendre polynomials `P_n` with hyperdimension `2n + 1`.

mod density;
mod quadrature;

pub use density::DensityMeasure;
pub use quadrature::{legendre, legendre_all, GaussLegendre};

use std::f64::consts::PI;

use thiserror::Error;

use crate::par::{self, Execution};

pub const DEFAULT_THETA_COUNT: usize = 512;
pub const DEFAULT_QUAD_ORDER: usize = 64;
pub const DEFAULT_GRID_SIZE: usize = 21;
/// Largest Legendre degree accepted by the character checks.
pub const MAX_DEGREE: usize = 12;
/// Highest monomial degree used as a test function for Haar invariance.
pub const HAAR_TEST_DEGREE: usize = 5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ContinuousError {
    #[error("argument {0} lies outside [-1, 1]")]
    OutOfDomain(f64),
    #[error("degree {n} exceeds the supported maximum {max}")]
    DegreeTooHigh { n: usize, max: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Sample grid, Gauss–Legendre rule and angular resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalHypergroup {
    grid: Vec<f64>,
    rule: GaussLegendre,
    cosines: Vec<f64>,
}

impl Default for IntervalHypergroup {
    fn default() -> Self {
        Self::new(DEFAULT_GRID_SIZE, DEFAULT_QUAD_ORDER, DEFAULT_THETA_COUNT).expect("default configuration")
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
struct Neumaier {
    sum: f64,
    carry: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

fn mean(values: impl Iterator<Item = f64>, n: usize) -> f64 {
    let mut acc = Neumaier::default();
    values.for_each(|v| acc.add(v));
    acc.total() / n as f64
}

fn check_domain(x: f64) -> Result<(), ContinuousError> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(ContinuousError::OutOfDomain(x))
    }
}

fn check_degree(n: usize) -> Result<(), ContinuousError> {
    if n > MAX_DEGREE {
        return Err(ContinuousError::DegreeTooHigh { n, max: MAX_DEGREE });
    }
    Ok(())
}

impl IntervalHypergroup {
    /// `grid_size` equispaced points on `[-1, 1]` (endpoints included), a
    /// `quad_order`-point Gauss–Legendre rule and `theta_count` angles.
    pub fn new(grid_size: usize, quad_order: usize, theta_count: usize) -> Result<Self, ContinuousError> {
        if grid_size < 2 {
            return Err(ContinuousError::InvalidConfig(format!("grid needs at least 2 points, got {grid_size}")));
        }
        if quad_order == 0 || theta_count == 0 {
            return Err(ContinuousError::InvalidConfig("quadrature orders must be positive".into()));
        }
        let step = 2.0 / (grid_size - 1) as f64;
        let mut grid: Vec<f64> = (0..grid_size).map(|i| -1.0 + step * i as f64).collect();
        grid[grid_size - 1] = 1.0;
        let cosines = (0..theta_count).map(|j| (2.0 * PI * j as f64 / theta_count as f64).cos()).collect();
        Ok(IntervalHypergroup { grid, rule: GaussLegendre::new(quad_order), cosines })
    }

    /// Same grid and rule with a different angular resolution.
    pub fn with_theta_count(&self, theta_count: usize) -> Result<Self, ContinuousError> {
        Self::new(self.grid.len(), self.rule.len(), theta_count)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn rule(&self) -> &GaussLegendre {
        &self.rule
    }

    pub fn theta_count(&self) -> usize {
        self.cosines.len()
    }

    /// The points `st − c cos θ_j` sampled by the trapezoid rule.
    fn nodes(&self, s: f64, t: f64) -> impl Iterator<Item = f64> + '_ {
        let (center, radius) = (s * t, ((1.0 - s * s) * (1.0 - t * t)).sqrt());
        self.cosines.iter().map(move |c| (center - radius * c).clamp(-1.0, 1.0))
    }

    fn conv_unchecked(&self, s: f64, t: f64, f: &impl Fn(f64) -> f64) -> f64 {
        if s.abs() == 1.0 || t.abs() == 1.0 {
            return f(s * t);
        }
        mean(self.nodes(s, t).map(f), self.theta_count())
    }

    /// `(δ_s ∗ δ_t)(f)`.
    pub fn conv_apply(&self, s: f64, t: f64, f: impl Fn(f64) -> f64) -> Result<f64, ContinuousError> {
        check_domain(s)?;
        check_domain(t)?;
        Ok(self.conv_unchecked(s, t, &f))
    }

    /// `(δ_s ∗ δ_t)(P_n)` for all `n ≤ n_max` at once.
    fn conv_legendre(&self, s: f64, t: f64, n_max: usize) -> Vec<f64> {
        let mut acc = vec![Neumaier::default(); n_max + 1];
        let mut p = Vec::with_capacity(n_max + 1);
        for r in self.nodes(s, t) {
            quadrature::legendre_into(r, n_max, &mut p);
            acc.iter_mut().zip(&p).for_each(|(a, &v)| a.add(v));
        }
        let n = self.theta_count() as f64;
        acc.iter().map(|a| a.total() / n).collect()
    }

    /// `δ_s ∗ δ_t` as a density measure (a Dirac mass when `s` or `t` is `±1`).
    pub fn density(&self, s: f64, t: f64) -> Result<DensityMeasure, ContinuousError> {
        check_domain(s)?;
        check_domain(t)?;
        Ok(DensityMeasure::new(s, t))
    }

    /// For `n = 0..=n_max`: `max_{s,t ∈ grid} |(δ_s ∗ δ_t)(P_n) − P_n(s) P_n(t)|`.
    pub fn character_check(&self, n_max: usize) -> Result<Vec<f64>, ContinuousError> {
        self.character_check_with(Execution::Auto, n_max)
    }

    pub fn character_check_with(&self, exec: Execution, n_max: usize) -> Result<Vec<f64>, ContinuousError> {
        check_degree(n_max)?;
        let m = self.grid.len();
        let rows = par::map_range(exec, m, |i| {
            let s = self.grid[i];
            let ps = legendre_all(n_max, s);
            let mut worst = vec![0.0_f64; n_max + 1];
            for &t in &self.grid {
                let pt = legendre_all(n_max, t);
                for (n, v) in self.conv_legendre(s, t, n_max).into_iter().enumerate() {
                    worst[n] = par::nan_max(worst[n], (v - ps[n] * pt[n]).abs());
                }
            }
            worst
        });
        Ok(rows.into_iter().fold(vec![0.0; n_max + 1], |acc, row| {
            acc.into_iter().zip(row).map(|(a, b)| par::nan_max(a, b)).collect()
        }))
    }

    /// `1 / ∫ P_n² dμ` with `μ` = Lebesgue / 2.
    pub fn hyperdim_continuous(&self, n: usize) -> Result<f64, ContinuousError> {
        check_degree(n)?;
        Ok(1.0 / (0.5 * self.rule.integrate(|x| legendre(n, x).powi(2))))
    }

    /// Both sides of `∫ f(y ∗ x) g(x) dμ(x) = ∫ f(x) g(y ∗ x) dμ(x)`.
    pub fn haar_sides(
        &self,
        y: f64,
        f: impl Fn(f64) -> f64,
        g: impl Fn(f64) -> f64,
    ) -> Result<(f64, f64), ContinuousError> {
        check_domain(y)?;
        let lhs = 0.5 * self.rule.integrate(|x| self.conv_unchecked(y, x, &f) * g(x));
        let rhs = 0.5 * self.rule.integrate(|x| f(x) * self.conv_unchecked(y, x, &g));
        Ok((lhs, rhs))
    }

    /// Largest gap between the two sides of [`Self::haar_sides`] over
    /// `y ∈ grid` and all pairs of monomials of degree `≤ HAAR_TEST_DEGREE`.
    pub fn verify_haar_lebesgue(&self) -> f64 {
        self.verify_haar_lebesgue_with(Execution::Auto)
    }

    pub fn verify_haar_lebesgue_with(&self, exec: Execution) -> f64 {
        let d = HAAR_TEST_DEGREE;
        let nodes = &self.rule.nodes;
        let weights = &self.rule.weights;
        let powers: Vec<Vec<f64>> = nodes.iter().map(|&x| (0..=d).map(|k| x.powi(k as i32)).collect()).collect();
        par::max_range(exec, self.grid.len(), |i| {
            let y = self.grid[i];
            // conv[node][k] = (δ_y ∗ δ_x)(x^k)
            let conv: Vec<Vec<f64>> = nodes
                .iter()
                .map(|&x| {
                    let mut acc = vec![0.0; d + 1];
                    for r in self.nodes(y, x) {
                        let mut p = 1.0;
                        for a in acc.iter_mut() {
                            *a += p;
                            p *= r;
                        }
                    }
                    acc.iter().map(|a| a / self.theta_count() as f64).collect()
                })
                .collect();
            let mut worst = 0.0_f64;
            for a in 0..=d {
                for b in 0..=d {
                    let (mut lhs, mut rhs) = (0.0, 0.0);
                    for q in 0..nodes.len() {
                        lhs += weights[q] * conv[q][a] * powers[q][b];
                        rhs += weights[q] * powers[q][a] * conv[q][b];
                    }
                    worst = par::nan_max(worst, 0.5 * (lhs - rhs).abs());
                }
            }
            worst
        })
    }

    /// Atom of `δ_t ∗ δ_{t♯}` at the identity point `1`.
    pub fn identity_atom(&self, t: f64) -> Result<f64, ContinuousError> {
        Ok(self.density(t, t)?.atom_at(1.0))
    }

    /// `true` when `δ_t ∗ δ_{t♯}` has no atom at the identity, i.e. the
    /// weight of `t` and the associated index are infinite.
    pub fn infinite_index(&self, t: f64) -> Result<bool, ContinuousError> {
        Ok(self.identity_atom(t)? == 0.0)
    }

    /// `((δ_s ∗ δ_t) ∗ δ_u)(f)` and `(δ_s ∗ (δ_t ∗ δ_u))(f)` by iterated
    /// trapezoid rules.
    pub fn associativity_sides(
        &self,
        s: f64,
        t: f64,
        u: f64,
        f: impl Fn(f64) -> f64,
    ) -> Result<(f64, f64), ContinuousError> {
        for x in [s, t, u] {
            check_domain(x)?;
        }
        let lhs = self.conv_unchecked(s, t, &|r| self.conv_unchecked(r, u, &f));
        let rhs = self.conv_unchecked(t, u, &|r| self.conv_unchecked(s, r, &f));
        Ok((lhs, rhs))
    }

    pub fn associativity_check(&self, s: f64, t: f64, u: f64, f: impl Fn(f64) -> f64) -> Result<f64, ContinuousError> {
        let (lhs, rhs) = self.associativity_sides(s, t, u, f)?;
        Ok((lhs - rhs).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conv_apply_examples() {
        let k = IntervalHypergroup::default();
        assert_eq!(k.conv_apply(1.0, 0.3, f64::exp).unwrap(), 0.3f64.exp());
        assert_eq!(k.conv_apply(-1.0, 0.3, f64::exp).unwrap(), (-0.3f64).exp());
        assert!((k.conv_apply(0.4, -0.6, |x| x).unwrap() + 0.24).abs() < 1e-15);
        let p2 = k.conv_apply(0.5, 0.5, |x| legendre(2, x)).unwrap();
        assert!((p2 - 0.015625).abs() < 1e-15);
        assert_eq!(k.conv_apply(0.1, 0.7, |_| 1.0).unwrap(), 1.0);
        assert!(matches!(k.conv_apply(1.5, 0.0, |x| x), Err(ContinuousError::OutOfDomain(_))));
    }

    #[test]
    fn commutative_in_arguments() {
        let k = IntervalHypergroup::default();
        for &s in k.grid() {
            for &t in k.grid() {
                assert_eq!(k.conv_apply(s, t, f64::exp).unwrap(), k.conv_apply(t, s, f64::exp).unwrap());
            }
        }
    }

    #[test]
    fn density_agrees_with_trapezoid() {
        let k = IntervalHypergroup::default();
        for (s, t) in [(0.2, 0.9), (-0.4, 0.0), (0.5, 0.5)] {
            let d = k.density(s, t).unwrap().integrate(k.rule(), f64::exp);
            assert!((d - k.conv_apply(s, t, f64::exp).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn legendre_characters_and_hyperdims() {
        let k = IntervalHypergroup::default();
        let res = k.character_check(5).unwrap();
        assert_eq!(res[0], 0.0);
        assert!(res[1] <= 1e-12);
        assert!(res[5] <= 1e-10);
        assert!((k.hyperdim_continuous(0).unwrap() - 1.0).abs() < 1e-14);
        assert!((k.hyperdim_continuous(1).unwrap() - 3.0).abs() < 1e-10);
        assert!((k.hyperdim_continuous(4).unwrap() - 9.0).abs() < 1e-8);
        assert!(k.character_check(13).is_err());
    }

    #[test]
    fn haar_examples() {
        let k = IntervalHypergroup::default();
        let (l, r) = k.haar_sides(0.3, |_| 1.0, |_| 1.0).unwrap();
        assert!((l - 1.0).abs() < 1e-14 && (r - 1.0).abs() < 1e-14);
        let (l, r) = k.haar_sides(0.3, |x| legendre(2, x), |x| legendre(3, x)).unwrap();
        assert!(l.abs() < 1e-14 && r.abs() < 1e-14);
        for n in 0..5 {
            let want = legendre(n, 0.3) / (2 * n + 1) as f64;
            let (l, r) = k.haar_sides(0.3, |x| legendre(n, x), |x| legendre(n, x)).unwrap();
            assert!((l - want).abs() < 1e-13 && (r - want).abs() < 1e-13);
        }
        assert!(k.verify_haar_lebesgue() < 1e-12);
    }

    #[test]
    fn identity_atoms() {
        let k = IntervalHypergroup::default();
        assert_eq!(k.identity_atom(1.0).unwrap(), 1.0);
        assert_eq!(k.identity_atom(-1.0).unwrap(), 1.0);
        assert_eq!(k.identity_atom(0.5).unwrap(), 0.0);
        assert!(k.infinite_index(0.0).unwrap());
        assert!(!k.infinite_index(-1.0).unwrap());
    }

    #[test]
    fn associativity() {
        let k = IntervalHypergroup::new(5, 16, 128).unwrap();
        assert_eq!(k.associativity_check(0.3, -0.2, 1.0, f64::exp).unwrap(), 0.0);
        let (l, _) = k.associativity_sides(0.2, -0.7, 0.5, |x| legendre(3, x)).unwrap();
        let want = legendre(3, 0.2) * legendre(3, -0.7) * legendre(3, 0.5);
        assert!((l - want).abs() < 1e-12);
        assert!(k.associativity_check(0.2, -0.7, 0.5, |x| legendre(3, x)).unwrap() < 1e-9);
    }

    #[test]
    fn sequential_matches_parallel() {
        let k = IntervalHypergroup::new(7, 16, 64).unwrap();
        assert_eq!(
            k.character_check_with(Execution::Sequential, 6).unwrap(),
            k.character_check_with(Execution::Parallel, 6).unwrap()
        );
    }
}
