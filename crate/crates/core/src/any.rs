//! A hypergroup in either numeric mode.

use crate::axioms::AxiomReport;
use crate::constructions::product;
use crate::hypergroup::FiniteHypergroup;
use crate::scalar::{NumericMode, Rational};

#[derive(Debug, Clone, PartialEq)]
pub enum AnyHypergroup {
    Exact(FiniteHypergroup<Rational>),
    Float(FiniteHypergroup<f64>),
}

/// Evaluates `$body` with `$h` bound to the inner hypergroup.
#[macro_export]
macro_rules! with_hypergroup {
    ($any:expr, $h:ident => $body:expr) => {
        match $any {
            $crate::AnyHypergroup::Exact($h) => $body,
            $crate::AnyHypergroup::Float($h) => $body,
        }
    };
}

impl AnyHypergroup {
    pub fn len(&self) -> usize {
        with_hypergroup!(self, h => h.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> &[String] {
        with_hypergroup!(self, h => h.labels())
    }

    pub fn mode(&self) -> NumericMode {
        with_hypergroup!(self, h => h.mode())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AnyHypergroup::Exact(_))
    }

    pub fn to_f64(&self) -> FiniteHypergroup<f64> {
        with_hypergroup!(self, h => h.to_f64())
    }

    pub fn with_tol(self, tol: f64) -> Self {
        match self {
            AnyHypergroup::Exact(h) => AnyHypergroup::Exact(h),
            AnyHypergroup::Float(h) => AnyHypergroup::Float(h.with_tol(tol)),
        }
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        with_hypergroup!(self, h => h.verify_axioms())
    }

    pub fn check_inverse_rule(&self) -> AxiomReport {
        with_hypergroup!(self, h => h.check_inverse_rule())
    }

    pub fn is_commutative(&self) -> bool {
        with_hypergroup!(self, h => h.is_commutative())
    }

    /// Direct product; exact only when both factors are exact.
    pub fn product(&self, other: &AnyHypergroup) -> AnyHypergroup {
        match (self, other) {
            (AnyHypergroup::Exact(a), AnyHypergroup::Exact(b)) => AnyHypergroup::Exact(product(a, b)),
            _ => AnyHypergroup::Float(product(&self.to_f64(), &other.to_f64())),
        }
    }
}

impl From<FiniteHypergroup<Rational>> for AnyHypergroup {
    fn from(h: FiniteHypergroup<Rational>) -> Self {
        AnyHypergroup::Exact(h)
    }
}

impl From<FiniteHypergroup<f64>> for AnyHypergroup {
    fn from(h: FiniteHypergroup<f64>) -> Self {
        AnyHypergroup::Float(h)
    }
}
