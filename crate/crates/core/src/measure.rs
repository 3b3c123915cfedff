//! Measures on a finite hypergroup, stored as one weight per element.

use crate::hypergroup::HypergroupError;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Probability,
    Positive,
    Signed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Measure<S> {
    weights: Vec<S>,
    kind: MeasureKind,
}

impl<S: Scalar> Measure<S> {
    /// Builds a measure, checking that the weights fit `kind`.
    pub fn new(weights: Vec<S>, kind: MeasureKind, tol: f64) -> Result<Self, HypergroupError> {
        match kind {
            MeasureKind::Signed => {}
            MeasureKind::Positive | MeasureKind::Probability => {
                if let Some(i) = weights.iter().position(|w| w.is_negative(tol)) {
                    return Err(HypergroupError::InvalidMeasure(format!(
                        "negative weight at element {i}"
                    )));
                }
                if kind == MeasureKind::Probability {
                    let total = weights.iter().cloned().fold(S::zero(), |a, b| a + b);
                    if !(total.clone() - S::one()).is_negligible(tol) {
                        return Err(HypergroupError::InvalidMeasure(format!(
                            "total mass {} is not 1",
                            total.render()
                        )));
                    }
                }
            }
        }
        Ok(Measure { weights, kind })
    }

    pub fn signed(weights: Vec<S>) -> Self {
        Measure { weights, kind: MeasureKind::Signed }
    }

    pub(crate) fn with_kind_unchecked(weights: Vec<S>, kind: MeasureKind) -> Self {
        Measure { weights, kind }
    }

    /// The Dirac measure at `x` on a `len`-element hypergroup.
    pub fn dirac(len: usize, x: usize) -> Self {
        let mut weights = vec![S::zero(); len];
        weights[x] = S::one();
        Measure { weights, kind: MeasureKind::Probability }
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total_mass(&self) -> S {
        self.weights.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| !self.weights[i].is_zero()).collect()
    }

    /// Largest componentwise difference, as a float.
    pub fn distance(&self, other: &Self) -> f64 {
        self.weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a.clone() - b.clone()).magnitude())
            .fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Measure<f64> {
        Measure {
            weights: self.weights.iter().map(Scalar::to_f64).collect(),
            kind: self.kind,
        }
    }
}

/// Minimal `d > 0` such that `d·μ₂ − μ₁` is a positive measure.
///
/// Returns `None` when the support of `mu1` is not contained in that of
/// `mu2`, or when `mu1` is the zero measure (no minimum exists).
pub fn dominated<S: Scalar>(mu1: &Measure<S>, mu2: &Measure<S>) -> Option<S> {
    if mu1.len() != mu2.len() {
        return None;
    }
    let mut best: Option<S> = None;
    for (a, b) in mu1.weights.iter().zip(&mu2.weights) {
        if a.is_zero() {
            continue;
        }
        if b.is_zero() {
            return None;
        }
        let ratio = a.clone() / b.clone();
        best = match best {
            Some(m) if !(ratio.clone() - m.clone()).is_positive(0.0) => Some(m),
            _ => Some(ratio),
        };
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn domination_examples() {
        let mu = Measure::new(vec![q(1, 3), q(2, 3)], MeasureKind::Probability, 0.0).unwrap();
        assert_eq!(dominated(&mu, &mu), Some(q(1, 1)));

        let e = Measure::<Rational>::dirac(2, 0);
        let half = Measure::new(vec![q(1, 2), q(1, 2)], MeasureKind::Probability, 0.0).unwrap();
        assert_eq!(dominated(&e, &half), Some(q(2, 1)));

        let k = Measure::<Rational>::dirac(2, 1);
        assert_eq!(dominated(&k, &e), None);
    }

    #[test]
    fn domination_takes_the_worst_ratio() {
        let a = Measure::signed(vec![q(1, 2), q(1, 4), q(1, 4)]);
        let b = Measure::signed(vec![q(1, 4), q(1, 2), q(1, 4)]);
        assert_eq!(dominated(&a, &b), Some(q(2, 1)));
        assert_eq!(dominated(&b, &a), Some(q(2, 1)));
    }

    #[test]
    fn kind_validation() {
        assert!(Measure::new(vec![0.5, 0.6], MeasureKind::Probability, 1e-9).is_err());
        assert!(Measure::new(vec![-0.5, 1.5], MeasureKind::Positive, 1e-9).is_err());
        assert!(Measure::new(vec![-0.5, 1.5], MeasureKind::Signed, 1e-9).is_ok());
    }
}
