//! Numeric coefficients carried by hypergroups and measures.
//!
//! Two backends implement [`Scalar`]: [`Rational`] (arbitrary precision,
//! always in lowest terms with a positive denominator) and `f64`, which is
//! compared against an ambient tolerance.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational coefficient.
pub type Rational = BigRational;

/// Default tolerance for floating-point comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Whether a hypergroup's coefficients are exact or floating with tolerance `ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NumericMode {
    Exact,
    Float(f64),
}

impl NumericMode {
    pub fn is_exact(&self) -> bool {
        matches!(self, NumericMode::Exact)
    }
}

/// Field operations plus the tolerance-aware comparisons the algebra needs.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// `true` for exact arithmetic.
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_usize(n: usize) -> Self {
        Self::from_ratio(n as i64, 1)
    }

    fn to_f64(&self) -> f64;

    /// The value of a finite float (exactly, for rationals).
    fn from_f64(x: f64) -> Option<Self>;

    fn abs(&self) -> Self;

    /// `|self|` as a float, used for residual reporting.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }

    /// Exact: `self == 0`. Float: `|self| <= tol`.
    fn is_negligible(&self, tol: f64) -> bool;

    /// Exact: `self > 0`. Float: `self > tol`.
    fn is_positive(&self, tol: f64) -> bool;

    /// Exact: `self < 0`. Float: `self < -tol`.
    fn is_negative(&self, tol: f64) -> bool;

    /// Canonical text form: `p/q` (or `p`) for rationals, 17 significant
    /// digits for floats.
    fn render(&self) -> String;

    fn mode(tol: f64) -> NumericMode {
        if Self::EXACT {
            NumericMode::Exact
        } else {
            NumericMode::Float(tol)
        }
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.clone() - other.clone()).is_negligible(tol)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn is_positive(&self, _tol: f64) -> bool {
        Signed::is_positive(self)
    }

    fn is_negative(&self, _tol: f64) -> bool {
        Signed::is_negative(self)
    }

    fn render(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn is_negligible(&self, tol: f64) -> bool {
        f64::abs(*self) <= tol
    }

    fn is_positive(&self, tol: f64) -> bool {
        *self > tol
    }

    fn is_negative(&self, tol: f64) -> bool {
        *self < -tol
    }

    fn render(&self) -> String {
        fmt_f64(*self)
    }
}

/// Formats a float with 17 significant digits in scientific notation,
/// trimming trailing zeros of the mantissa. Parsing the result gives back
/// the same bits.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let s = format!("{:.16e}", x);
    let (mantissa, exp) = s.split_once('e').expect("scientific format");
    let mantissa = if mantissa.contains('.') {
        mantissa.trim_end_matches('0').trim_end_matches('.')
    } else {
        mantissa
    };
    if exp == "0" {
        mantissa.to_string()
    } else {
        format!("{mantissa}e{exp}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_lowest_terms_with_positive_denominator() {
        let q = Rational::from_ratio(6, -8);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
        assert_eq!(q.render(), "-3/4");
        assert_eq!(Rational::from_ratio(4, 2).render(), "2");
        assert_eq!(Rational::from_f64(0.375), Some(Rational::from_ratio(3, 8)));
        assert_eq!(<f64 as Scalar>::from_f64(f64::NAN), None);
    }

    #[test]
    fn float_comparisons_use_tolerance() {
        assert!(1e-10_f64.is_negligible(DEFAULT_TOL));
        assert!(!1e-8_f64.is_negligible(DEFAULT_TOL));
        assert!(!Scalar::is_positive(&1e-10_f64, DEFAULT_TOL));
        assert!(Scalar::is_negative(&-1e-8_f64, DEFAULT_TOL));
        assert!(Scalar::is_positive(&Rational::from_ratio(1, 1_000_000_000_000), DEFAULT_TOL));
    }

    #[test]
    fn fmt_f64_round_trips() {
        for x in [0.5, 1.0 / 3.0, 2.0 + 3f64.sqrt(), 1e-300, -7.25e12, 1.0] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(fmt_f64(0.5), "5e-1");
        assert_eq!(fmt_f64(1.0), "1");
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
    }
}
