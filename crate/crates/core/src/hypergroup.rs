//! Finite hypergroups given by structure constants.
//!
//! `n[x][y][z]` is the coefficient of `δ_z` in `δ_x ∗ δ_y`. Elements keep
//! their input order; the identity may sit at any index.

use thiserror::Error;

use crate::axioms::{self, Axiom};
use crate::linalg::Echelon;
use crate::measure::{Measure, MeasureKind};
use crate::scalar::{NumericMode, Scalar, DEFAULT_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HypergroupError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("{axiom} axiom violated: {detail}")]
    Structural { axiom: Axiom, detail: String },
    #[error("no Haar measure: {0}")]
    NoHaarMeasure(String),
    #[error("element {element} has infinite weight")]
    InfiniteWeight { element: String },
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteHypergroup<S> {
    labels: Vec<String>,
    identity: usize,
    involution: Vec<usize>,
    constants: Vec<S>,
    supports: Vec<Vec<usize>>,
    tol: f64,
}

impl<S: Scalar> FiniteHypergroup<S> {
    /// Builds a hypergroup and checks the structural axioms: nonnegativity,
    /// normalization, involution and identity laws. Associativity and the
    /// Haar conditions are left to [`FiniteHypergroup::verify_axioms`].
    pub fn new(
        labels: Vec<String>,
        identity: usize,
        involution: Vec<usize>,
        constants: Vec<S>,
        tol: f64,
    ) -> Result<Self, HypergroupError> {
        let h = Self::from_raw(labels, identity, involution, constants, tol)?;
        axioms::check_structure(&h)?;
        Ok(h)
    }

    /// Builds a hypergroup checking only dimensions and index ranges.
    pub fn from_raw(
        labels: Vec<String>,
        identity: usize,
        involution: Vec<usize>,
        constants: Vec<S>,
        tol: f64,
    ) -> Result<Self, HypergroupError> {
        let k = labels.len();
        if involution.len() != k {
            return Err(HypergroupError::DimensionMismatch { expected: k, found: involution.len() });
        }
        if constants.len() != k * k * k {
            return Err(HypergroupError::DimensionMismatch {
                expected: k * k * k,
                found: constants.len(),
            });
        }
        if identity >= k {
            return Err(HypergroupError::IndexOutOfRange(identity));
        }
        if let Some(&bad) = involution.iter().find(|&&s| s >= k) {
            return Err(HypergroupError::IndexOutOfRange(bad));
        }
        let supports = (0..k * k)
            .map(|xy| (0..k).filter(|&z| !constants[xy * k + z].is_zero()).collect())
            .collect();
        Ok(FiniteHypergroup { labels, identity, involution, constants, supports, tol })
    }

    /// Builds from a coefficient function `(x, y, z) -> n[x][y][z]`.
    pub fn from_fn(
        labels: Vec<String>,
        identity: usize,
        involution: Vec<usize>,
        tol: f64,
        f: impl Fn(usize, usize, usize) -> S,
    ) -> Result<Self, HypergroupError> {
        let k = labels.len();
        let mut constants = Vec::with_capacity(k * k * k);
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    constants.push(f(x, y, z));
                }
            }
        }
        Self::new(labels, identity, involution, constants, tol)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn sharp(&self, x: usize) -> usize {
        self.involution[x]
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn mode(&self) -> NumericMode {
        S::mode(self.tol)
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn relabel(mut self, labels: Vec<String>) -> Result<Self, HypergroupError> {
        if labels.len() != self.len() {
            return Err(HypergroupError::DimensionMismatch { expected: self.len(), found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// `n[x][y][z]`.
    #[inline]
    pub fn constant(&self, x: usize, y: usize, z: usize) -> &S {
        let k = self.len();
        &self.constants[(x * k + y) * k + z]
    }

    pub fn constants(&self) -> &[S] {
        &self.constants
    }

    /// Nonzero entries of `δ_x ∗ δ_y` as `(z, coefficient)`.
    pub fn row(&self, x: usize, y: usize) -> impl Iterator<Item = (usize, &S)> + '_ {
        let k = self.len();
        self.supports[x * k + y].iter().map(move |&z| (z, self.constant(x, y, z)))
    }

    /// `δ_x ∗ δ_y` as a measure.
    pub fn convolve_dirac(&self, x: usize, y: usize) -> Measure<S> {
        let mut w = vec![S::zero(); self.len()];
        for (z, c) in self.row(x, y) {
            w[z] = c.clone();
        }
        Measure::with_kind_unchecked(w, MeasureKind::Probability)
    }

    /// Bilinear extension of the convolution to arbitrary measures.
    pub fn convolve(&self, mu: &Measure<S>, nu: &Measure<S>) -> Result<Measure<S>, HypergroupError> {
        self.check_len(mu)?;
        self.check_len(nu)?;
        let k = self.len();
        let mut out = vec![S::zero(); k];
        for (x, a) in mu.weights().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, b) in nu.weights().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (z, c) in self.row(x, y) {
                    out[z] = out[z].clone() + ab.clone() * c.clone();
                }
            }
        }
        let kind = match (mu.kind(), nu.kind()) {
            (MeasureKind::Probability, MeasureKind::Probability) => MeasureKind::Probability,
            (MeasureKind::Signed, _) | (_, MeasureKind::Signed) => MeasureKind::Signed,
            _ => MeasureKind::Positive,
        };
        Ok(Measure::with_kind_unchecked(out, kind))
    }

    /// Pushforward of `mu` under the involution.
    pub fn involute(&self, mu: &Measure<S>) -> Result<Measure<S>, HypergroupError> {
        self.check_len(mu)?;
        let mut out = vec![S::zero(); self.len()];
        for (x, w) in mu.weights().iter().enumerate() {
            out[self.involution[x]] = w.clone();
        }
        Ok(Measure::with_kind_unchecked(out, mu.kind()))
    }

    /// The unique probability measure absorbed by convolution on both sides.
    ///
    /// Solves `δ_x ∗ μ = μ = μ ∗ δ_x` for every `x`. A null space of
    /// dimension other than one, or a solution that is not strictly positive,
    /// means the input is not a hypergroup.
    pub fn haar(&self) -> Result<Measure<S>, HypergroupError> {
        let k = self.len();
        let mut rows = Vec::with_capacity(2 * k * k);
        for x in (0..k).filter(|&x| x != self.identity) {
            for z in 0..k {
                let left: Vec<S> = (0..k)
                    .map(|y| {
                        let c = self.constant(x, y, z).clone();
                        if y == z { c - S::one() } else { c }
                    })
                    .collect();
                let right: Vec<S> = (0..k)
                    .map(|y| {
                        let c = self.constant(y, x, z).clone();
                        if y == z { c - S::one() } else { c }
                    })
                    .collect();
                rows.push(left);
                rows.push(right);
            }
        }
        let echelon = Echelon::reduce(rows, k, self.tol);
        let null = echelon.nullspace();
        if null.len() != 1 {
            return Err(HypergroupError::NoHaarMeasure(format!(
                "invariant measures form a space of dimension {}",
                null.len()
            )));
        }
        let v = null.into_iter().next().expect("one null vector");
        let total = v.iter().cloned().fold(S::zero(), |a, b| a + b);
        if total.is_negligible(self.tol) {
            return Err(HypergroupError::NoHaarMeasure("invariant measure has zero mass".into()));
        }
        let weights: Vec<S> = v.into_iter().map(|w| w / total.clone()).collect();
        if let Some(i) = weights.iter().position(|w| !w.is_positive(self.tol)) {
            return Err(HypergroupError::NoHaarMeasure(format!(
                "invariant measure is not faithful at {}",
                self.labels[i]
            )));
        }
        Ok(Measure::with_kind_unchecked(weights, MeasureKind::Probability))
    }

    /// `w_x = 1 / (δ_{x♯} ∗ δ_x)({e})`.
    pub fn weight(&self, x: usize) -> Result<S, HypergroupError> {
        if x >= self.len() {
            return Err(HypergroupError::IndexOutOfRange(x));
        }
        let atom = self.constant(self.sharp(x), x, self.identity);
        if !atom.is_positive(self.tol) {
            return Err(HypergroupError::InfiniteWeight { element: self.labels[x].clone() });
        }
        Ok(S::one() / atom.clone())
    }

    /// `n[x][y][z] = n[y][x][z]` for all indices.
    pub fn is_commutative(&self) -> bool {
        let k = self.len();
        (0..k).all(|x| {
            (x + 1..k).all(|y| (0..k).all(|z| self.constant(x, y, z).approx_eq(self.constant(y, x, z), self.tol)))
        })
    }

    pub fn to_f64(&self) -> FiniteHypergroup<f64> {
        FiniteHypergroup {
            labels: self.labels.clone(),
            identity: self.identity,
            involution: self.involution.clone(),
            constants: self.constants.iter().map(Scalar::to_f64).collect(),
            supports: self.supports.clone(),
            tol: if S::EXACT { DEFAULT_TOL } else { self.tol },
        }
    }

    fn check_len(&self, mu: &Measure<S>) -> Result<(), HypergroupError> {
        if mu.len() != self.len() {
            return Err(HypergroupError::DimensionMismatch { expected: self.len(), found: mu.len() });
        }
        Ok(())
    }
}
