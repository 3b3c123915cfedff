//! Axiom verification for finite hypergroups.
//!
//! [`FiniteHypergroup::verify_axioms`] never fails on mathematical grounds;
//! it returns an [`AxiomReport`] listing each axiom with its worst residual
//! and a capped sample of violating index tuples.

use std::fmt;

use serde::Serialize;

use crate::hypergroup::{FiniteHypergroup, HypergroupError};
use crate::measure::Measure;
use crate::par::{self, Execution};
use crate::scalar::{NumericMode, Scalar};

/// Maximum number of violating tuples kept per axiom.
pub const VIOLATION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Nonnegativity,
    Normalization,
    Involution,
    Identity,
    Associativity,
    AntiHomomorphism,
    HaarExistence,
    HaarLeftAdjoint,
    HaarRightAdjoint,
    InverseRule,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Nonnegativity => "nonnegativity",
            Axiom::Normalization => "normalization",
            Axiom::Involution => "involution",
            Axiom::Identity => "identity",
            Axiom::Associativity => "associativity",
            Axiom::AntiHomomorphism => "anti_homomorphism",
            Axiom::HaarExistence => "haar_existence",
            Axiom::HaarLeftAdjoint => "haar_left_adjoint",
            Axiom::HaarRightAdjoint => "haar_right_adjoint",
            Axiom::InverseRule => "inverse_rule",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Largest violation magnitude; 0 when exact checks pass.
    pub worst_residual: f64,
    pub violation_count: usize,
    pub violations: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub mode: NumericMode,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn worst_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.worst_residual).fold(0.0, par::nan_max)
    }
}

/// Accumulates residuals and violations of one axiom.
#[derive(Debug, Default)]
struct Tally {
    worst: f64,
    count: usize,
    violations: Vec<Vec<usize>>,
}

impl Tally {
    fn record<S: Scalar>(&mut self, diff: &S, tol: f64, index: impl FnOnce() -> Vec<usize>) {
        let m = diff.magnitude();
        self.worst = par::nan_max(self.worst, m);
        if !diff.is_negligible(tol) || m.is_nan() {
            self.flag(index());
        }
    }

    fn flag(&mut self, index: Vec<usize>) {
        self.count += 1;
        if self.violations.len() < VIOLATION_CAP {
            self.violations.push(index);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.worst = par::nan_max(self.worst, other.worst);
        self.count += other.count;
        for v in other.violations {
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(v);
            }
        }
        self
    }

    fn finish(self, axiom: Axiom) -> AxiomCheck {
        AxiomCheck {
            axiom,
            passed: self.count == 0,
            worst_residual: self.worst,
            violation_count: self.count,
            violations: self.violations,
            note: None,
        }
    }
}

fn sweep(exec: Execution, k: usize, f: impl Fn(usize, &mut Tally) + Sync + Send) -> Tally {
    par::map_range(exec, k, |x| {
        let mut t = Tally::default();
        f(x, &mut t);
        t
    })
    .into_iter()
    .fold(Tally::default(), Tally::merge)
}

fn indicator<S: Scalar>(b: bool) -> S {
    if b { S::one() } else { S::zero() }
}

fn nonnegativity<S: Scalar>(h: &FiniteHypergroup<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let tol = h.tol();
    sweep(exec, k, |x, t| {
        for y in 0..k {
            for z in 0..k {
                let c = h.constant(x, y, z);
                if c.is_negative(tol) || c.magnitude().is_nan() {
                    t.worst = par::nan_max(t.worst, c.magnitude());
                    t.flag(vec![x, y, z]);
                }
            }
        }
    })
    .finish(Axiom::Nonnegativity)
}

fn normalization<S: Scalar>(h: &FiniteHypergroup<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let tol = h.tol();
    sweep(exec, k, |x, t| {
        for y in 0..k {
            let total = h.row(x, y).fold(S::zero(), |a, (_, c)| a + c.clone());
            t.record(&(total - S::one()), tol, || vec![x, y]);
        }
    })
    .finish(Axiom::Normalization)
}

fn involution<S: Scalar>(h: &FiniteHypergroup<S>) -> AxiomCheck {
    let mut t = Tally::default();
    let e = h.identity();
    if h.sharp(e) != e {
        t.worst = 1.0;
        t.flag(vec![e]);
    }
    for x in 0..h.len() {
        if h.sharp(h.sharp(x)) != x {
            t.worst = 1.0;
            t.flag(vec![x]);
        }
    }
    t.finish(Axiom::Involution)
}

fn identity_law<S: Scalar>(h: &FiniteHypergroup<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let e = h.identity();
    let tol = h.tol();
    sweep(exec, k, |x, t| {
        for z in 0..k {
            let left = h.constant(e, x, z).clone() - indicator::<S>(x == z);
            t.record(&left, tol, || vec![e, x, z]);
            let right = h.constant(x, e, z).clone() - indicator::<S>(x == z);
            t.record(&right, tol, || vec![x, e, z]);
        }
    })
    .finish(Axiom::Identity)
}

fn associativity<S: Scalar>(h: &FiniteHypergroup<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let tol = h.tol();
    sweep(exec, k, |x, t| {
        let mut lhs = vec![S::zero(); k];
        let mut rhs = vec![S::zero(); k];
        for y in 0..k {
            for z in 0..k {
                lhs.iter_mut().chain(rhs.iter_mut()).for_each(|v| *v = S::zero());
                // (δx∗δy)∗δz
                for (w, a) in h.row(x, y) {
                    for (v, b) in h.row(w, z) {
                        lhs[v] = lhs[v].clone() + a.clone() * b.clone();
                    }
                }
                // δx∗(δy∗δz)
                for (w, a) in h.row(y, z) {
                    for (v, b) in h.row(x, w) {
                        rhs[v] = rhs[v].clone() + a.clone() * b.clone();
                    }
                }
                for v in 0..k {
                    let d = lhs[v].clone() - rhs[v].clone();
                    t.record(&d, tol, || vec![x, y, z, v]);
                }
            }
        }
    })
    .finish(Axiom::Associativity)
}

fn anti_homomorphism<S: Scalar>(h: &FiniteHypergroup<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let tol = h.tol();
    sweep(exec, k, |x, t| {
        for y in 0..k {
            for z in 0..k {
                let d = h.constant(x, y, z).clone()
                    - h.constant(h.sharp(y), h.sharp(x), h.sharp(z)).clone();
                t.record(&d, tol, || vec![x, y, z]);
            }
        }
    })
    .finish(Axiom::AntiHomomorphism)
}

/// `μ(x)·n[y][x][z] = μ(z)·n[y♯][z][x]` for all `x, y, z`.
fn haar_left_adjoint<S: Scalar>(h: &FiniteHypergroup<S>, mu: &Measure<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let tol = h.tol();
    let m = mu.weights();
    sweep(exec, k, |y, t| {
        for x in 0..k {
            for z in 0..k {
                let d = m[x].clone() * h.constant(y, x, z).clone()
                    - m[z].clone() * h.constant(h.sharp(y), z, x).clone();
                t.record(&d, tol, || vec![x, y, z]);
            }
        }
    })
    .finish(Axiom::HaarLeftAdjoint)
}

/// `μ(x)·n[x][y][z] = μ(z)·n[z][y♯][x]` for all `x, y, z`.
fn haar_right_adjoint<S: Scalar>(h: &FiniteHypergroup<S>, mu: &Measure<S>, exec: Execution) -> AxiomCheck {
    let k = h.len();
    let tol = h.tol();
    let m = mu.weights();
    sweep(exec, k, |y, t| {
        for x in 0..k {
            for z in 0..k {
                let d = m[x].clone() * h.constant(x, y, z).clone()
                    - m[z].clone() * h.constant(z, h.sharp(y), x).clone();
                t.record(&d, tol, || vec![x, y, z]);
            }
        }
    })
    .finish(Axiom::HaarRightAdjoint)
}

fn skipped(axiom: Axiom, note: String) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: false,
        worst_residual: f64::INFINITY,
        violation_count: 1,
        violations: Vec::new(),
        note: Some(note),
    }
}

/// Runs the structural checks used by [`FiniteHypergroup::new`], returning
/// the first failure.
pub(crate) fn check_structure<S: Scalar>(h: &FiniteHypergroup<S>) -> Result<(), HypergroupError> {
    let exec = Execution::Sequential;
    let checks = [involution(h), nonnegativity(h, exec), normalization(h, exec), identity_law(h, exec)];
    match checks.into_iter().find(|c| !c.passed) {
        None => Ok(()),
        Some(c) if c.axiom == Axiom::Involution => Err(HypergroupError::InvalidInvolution(format!(
            "not an involution fixing the identity at {:?}",
            c.violations.first().cloned().unwrap_or_default()
        ))),
        Some(c) => Err(HypergroupError::Structural {
            axiom: c.axiom,
            detail: format!(
                "{} violation(s), first at {:?}, worst residual {:e}",
                c.violation_count,
                c.violations.first().cloned().unwrap_or_default(),
                c.worst_residual
            ),
        }),
    }
}

impl<S: Scalar> FiniteHypergroup<S> {
    pub fn verify_axioms(&self) -> AxiomReport {
        self.verify_axioms_with(Execution::Auto)
    }

    /// Checks every hypergroup axiom in finite form plus the existence of a
    /// Haar measure and both adjointness identities.
    pub fn verify_axioms_with(&self, exec: Execution) -> AxiomReport {
        let mut checks = vec![
            nonnegativity(self, exec),
            normalization(self, exec),
            involution(self),
            identity_law(self, exec),
            associativity(self, exec),
            anti_homomorphism(self, exec),
        ];
        match self.haar() {
            Ok(mu) => {
                checks.push(AxiomCheck {
                    axiom: Axiom::HaarExistence,
                    passed: true,
                    worst_residual: 0.0,
                    violation_count: 0,
                    violations: Vec::new(),
                    note: None,
                });
                checks.push(haar_left_adjoint(self, &mu, exec));
                checks.push(haar_right_adjoint(self, &mu, exec));
            }
            Err(e) => {
                checks.push(skipped(Axiom::HaarExistence, e.to_string()));
                checks.push(skipped(Axiom::HaarLeftAdjoint, "no Haar measure".into()));
                checks.push(skipped(Axiom::HaarRightAdjoint, "no Haar measure".into()));
            }
        }
        AxiomReport { mode: self.mode(), checks }
    }

    /// `n[x][y][e] > 0` exactly when `y = x♯`.
    pub fn check_inverse_rule(&self) -> AxiomReport {
        let k = self.len();
        let e = self.identity();
        let mut t = Tally::default();
        for x in 0..k {
            for y in 0..k {
                let atom = self.constant(x, y, e);
                let has_atom = atom.is_positive(self.tol());
                if has_atom != (y == self.sharp(x)) {
                    let r = if has_atom { atom.magnitude() } else { 1.0 };
                    t.worst = par::nan_max(t.worst, r);
                    t.flag(vec![x, y]);
                }
            }
        }
        AxiomReport { mode: self.mode(), checks: vec![t.finish(Axiom::InverseRule)] }
    }
}
