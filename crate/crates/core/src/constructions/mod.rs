//! Hypergroups built from groups, double cosets, parameters and products.

mod double_coset;
mod gallery;
mod group;

pub use double_coset::{
    coset_haar, double_coset_hypergroup, double_cosets, representative_independent, CosetPartition,
    EXHAUSTIVE_CHECK_ORDER,
};
pub use gallery::{gallery, two_plus_sqrt3, GalleryEntry, GALLERY_NAMES};
pub use group::{FiniteGroup, Permutation, MAX_GROUP_ORDER};

use thiserror::Error;

use crate::hypergroup::{FiniteHypergroup, HypergroupError};
use crate::scalar::{Rational, Scalar, DEFAULT_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("not a subgroup: {0}")]
    HNotSubgroup(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group order exceeds the cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("two-element parameter must satisfy w >= 1, got {0}")]
    WeightBelowOne(String),
    #[error("unknown gallery name {0:?}")]
    UnknownGalleryName(String),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

fn delta<S: Scalar>(b: bool) -> S {
    if b { S::one() } else { S::zero() }
}

/// A finite group as a hypergroup: `δ_x ∗ δ_y = δ_{xy}`, `x♯ = x⁻¹`.
pub fn group_as_hypergroup(g: &FiniteGroup) -> FiniteHypergroup<Rational> {
    let involution = (0..g.order()).map(|a| g.inv(a)).collect();
    FiniteHypergroup::from_fn(g.labels().to_vec(), g.identity(), involution, 0.0, |x, y, z| {
        delta(g.mul(x, y) == z)
    })
    .expect("a valid group is a hypergroup")
}

/// The two-element family on `{e, k}` with
/// `δ_k ∗ δ_k = w⁻¹·δ_e + (1 − w⁻¹)·δ_k`.
///
/// `w = ∞` is accepted for floats and gives `δ_k ∗ δ_k = δ_k`.
pub fn two_element<S: Scalar>(w: S) -> Result<FiniteHypergroup<S>, ConstructionError> {
    two_element_labeled(w, "k")
}

pub(crate) fn two_element_labeled<S: Scalar>(w: S, label: &str) -> Result<FiniteHypergroup<S>, ConstructionError> {
    if (w.clone() - S::one()).is_negative(0.0) || w.to_f64().is_nan() {
        return Err(ConstructionError::WeightBelowOne(w.render()));
    }
    let inv = S::one() / w;
    let tol = if S::EXACT { 0.0 } else { DEFAULT_TOL };
    let labels = vec!["e".to_string(), label.to_string()];
    Ok(FiniteHypergroup::from_fn(labels, 0, vec![0, 1], tol, |x, y, z| match (x, y) {
        (1, 1) if z == 0 => inv.clone(),
        (1, 1) => S::one() - inv.clone(),
        _ => delta(x + y == z),
    })?)
}

/// The one-element hypergroup.
pub fn trivial<S: Scalar>() -> FiniteHypergroup<S> {
    FiniteHypergroup::new(vec!["e".into()], 0, vec![0], vec![S::one()], 0.0).expect("trivial hypergroup")
}

/// Direct product `K₁ × K₂` with
/// `δ_(x,y) ∗ δ_(z,t) = (δ_x ∗ δ_z) × (δ_y ∗ δ_t)`.
///
/// Elements are ordered row-major: `(x, y)` sits at `x·|K₂| + y`.
pub fn product<S: Scalar>(h1: &FiniteHypergroup<S>, h2: &FiniteHypergroup<S>) -> FiniteHypergroup<S> {
    let (k1, k2) = (h1.len(), h2.len());
    let k = k1 * k2;
    let mut constants = vec![S::zero(); k * k * k];
    for x1 in 0..k1 {
        for x2 in 0..k2 {
            let x = x1 * k2 + x2;
            for y1 in 0..k1 {
                for y2 in 0..k2 {
                    let y = y1 * k2 + y2;
                    for (z1, a) in h1.row(x1, y1) {
                        for (z2, b) in h2.row(x2, y2) {
                            constants[(x * k + y) * k + z1 * k2 + z2] = a.clone() * b.clone();
                        }
                    }
                }
            }
        }
    }
    let labels = h1
        .labels()
        .iter()
        .flat_map(|a| h2.labels().iter().map(move |b| format!("({a},{b})")))
        .collect();
    let involution = (0..k).map(|i| h1.sharp(i / k2) * k2 + h2.sharp(i % k2)).collect();
    let identity = h1.identity() * k2 + h2.identity();
    FiniteHypergroup::from_raw(labels, identity, involution, constants, h1.tol().max(h2.tol()))
        .expect("product dimensions are consistent")
}
