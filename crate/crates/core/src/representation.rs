//! Characters of commutative finite hypergroups.
//!
//! With Haar weights `μ`, the operators `(T_x f)(y) = f(y ∗ x)` become
//! normal matrices `M_x = D T_x D⁻¹` (`D = diag √μ`) with `M_xᵀ = M_{x♯}`.
//! The characters are their joint eigenvectors. We split the space with the
//! Hermitian parts `M_x + M_xᵀ` and `i(M_x − M_xᵀ)` one element at a time,
//! in element order, and read `χ(x)` off as the Rayleigh quotient of `M_x`.
//!
//! Normalizations: `f̂(χ) = Σ_x μ(x) f(x) conj χ(x)` and
//! `f(x) = Σ_i k_i f̂(χ_i) χ_i(x)`, so that Plancherel reads
//! `Σ μ|f|² = Σ k_i |f̂(χ_i)|²`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypergroup::{FiniteHypergroup, HypergroupError};
use crate::measure::Measure;
use crate::scalar::Scalar;

/// Eigenvalues closer than this are treated as one cluster.
const CLUSTER_TOL: f64 = 1e-7;
/// Grid used when ordering characters by their values.
const ORDER_GRID: f64 = 1e8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepresentationError {
    #[error("hypergroup is not commutative")]
    NotCommutative,
    #[error("joint eigenspace of dimension {dim} survived every convolution operator")]
    DegenerateSpectrum { dim: usize },
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    labels: Vec<String>,
    identity: usize,
    /// `values[i][x] = χ_i(x)`; row 0 is the trivial character.
    values: Vec<Vec<Complex64>>,
    haar: Measure<f64>,
    hyperdims: Vec<f64>,
}

/// Fourier coefficients aligned with the rows of a [`CharacterTable`].
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients(pub Vec<Complex64>);

/// Computes the full character table of a commutative hypergroup.
pub fn characters<S: Scalar>(h: &FiniteHypergroup<S>) -> Result<CharacterTable, RepresentationError> {
    if !h.is_commutative() {
        return Err(RepresentationError::NotCommutative);
    }
    let haar = h.haar()?.to_f64();
    let hf = h.to_f64();
    let k = hf.len();
    let mu = haar.weights();
    let sqrt_mu: Vec<f64> = mu.iter().map(|m| m.sqrt()).collect();

    let ops: Vec<DMatrix<Complex64>> = (0..k)
        .map(|x| {
            DMatrix::from_fn(k, k, |y, z| {
                Complex64::new(sqrt_mu[y] * hf.constant(y, x, z) / sqrt_mu[z], 0.0)
            })
        })
        .collect();

    let mut spaces = vec![DMatrix::<Complex64>::identity(k, k)];
    for x in (0..k).filter(|&x| x != hf.identity()) {
        if spaces.iter().all(|q| q.ncols() == 1) {
            break;
        }
        let m = &ops[x];
        let mt = m.transpose();
        let sym = m + &mt;
        let anti = (m - &mt) * Complex64::i();
        for op in [&sym, &anti] {
            spaces = spaces.into_iter().flat_map(|q| split(&q, op)).collect();
        }
    }
    if let Some(q) = spaces.iter().find(|q| q.ncols() > 1) {
        return Err(RepresentationError::DegenerateSpectrum { dim: q.ncols() });
    }

    let mut values: Vec<Vec<Complex64>> = spaces
        .iter()
        .map(|q| {
            let v = q.column(0);
            (0..k).map(|x| (v.adjoint() * &ops[x] * v)[(0, 0)]).collect()
        })
        .collect();
    let key = |row: &Vec<Complex64>| -> (bool, Vec<(i64, i64)>) {
        let trivial = row.iter().all(|c| (c - 1.0).norm() < 1e-8);
        let tuple = (0..k)
            .filter(|&x| x != hf.identity())
            .map(|x| ((row[x].re * ORDER_GRID).round() as i64, (row[x].im * ORDER_GRID).round() as i64))
            .collect();
        (!trivial, tuple)
    };
    values.sort_by_cached_key(key);

    let hyperdims = values
        .iter()
        .map(|row| 1.0 / row.iter().zip(mu).map(|(c, m)| m * c.norm_sqr()).sum::<f64>())
        .collect();
    Ok(CharacterTable {
        labels: hf.labels().to_vec(),
        identity: hf.identity(),
        values,
        haar,
        hyperdims,
    })
}

/// Splits the invariant subspace spanned by the orthonormal columns of `q`
/// into eigenspaces of the Hermitian operator `op`.
fn split(q: &DMatrix<Complex64>, op: &DMatrix<Complex64>) -> Vec<DMatrix<Complex64>> {
    if q.ncols() == 1 {
        return vec![q.clone()];
    }
    let c = q.adjoint() * op * q;
    let c = (&c + c.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(c);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match clusters.last_mut() {
            Some(cl) if (eig.eigenvalues[i] - eig.eigenvalues[*cl.last().unwrap()]).abs() <= CLUSTER_TOL => cl.push(i),
            _ => clusters.push(vec![i]),
        }
    }
    clusters
        .into_iter()
        .map(|cl| {
            let basis = DMatrix::from_fn(q.ncols(), cl.len(), |r, c| eig.eigenvectors[(r, cl[c])]);
            q * basis
        })
        .collect()
}

impl CharacterTable {
    /// Number of characters (equal to the number of elements).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn value(&self, i: usize, x: usize) -> Complex64 {
        self.values[i][x]
    }

    pub fn character(&self, i: usize) -> &[Complex64] {
        &self.values[i]
    }

    pub fn haar(&self) -> &Measure<f64> {
        &self.haar
    }

    pub fn hyperdims(&self) -> &[f64] {
        &self.hyperdims
    }

    /// `k_i = 1 / Σ_x μ(x) |χ_i(x)|²`.
    pub fn hyperdimension(&self, i: usize) -> f64 {
        self.hyperdims[i]
    }

    /// `Σ_i k_i`.
    pub fn hyperdimension_sum(&self) -> f64 {
        self.hyperdims.iter().sum()
    }

    /// `max_{i,j} |Σ_x μ(x) conj χ_i(x) χ_j(x) − δ_ij / k_i|`.
    pub fn orthogonality_residual(&self) -> f64 {
        let mu = self.haar.weights();
        let mut worst: f64 = 0.0;
        for (i, ci) in self.values.iter().enumerate() {
            for (j, cj) in self.values.iter().enumerate() {
                let ip: Complex64 = (0..mu.len()).map(|x| ci[x].conj() * cj[x] * mu[x]).sum();
                let expected = if i == j { 1.0 / self.hyperdims[i] } else { 0.0 };
                worst = worst.max((ip - expected).norm());
            }
        }
        worst
    }

    /// `max_{i,x,y} |Σ_z n[x][y][z] χ_i(z) − χ_i(x) χ_i(y)|`.
    pub fn multiplicativity_residual<S: Scalar>(&self, h: &FiniteHypergroup<S>) -> f64 {
        let k = h.len();
        let mut worst: f64 = 0.0;
        for chi in &self.values {
            for x in 0..k {
                for y in 0..k {
                    let lhs: Complex64 = h.row(x, y).map(|(z, c)| chi[z] * c.to_f64()).sum();
                    worst = worst.max((lhs - chi[x] * chi[y]).norm());
                }
            }
        }
        worst
    }

    /// `max |χ_i(x♯) − conj χ_i(x)|` together with `max |χ_i(e) − 1|`.
    pub fn involution_residual<S: Scalar>(&self, h: &FiniteHypergroup<S>) -> f64 {
        let mut worst: f64 = 0.0;
        for chi in &self.values {
            worst = worst.max((chi[self.identity] - 1.0).norm());
            for x in 0..h.len() {
                worst = worst.max((chi[h.sharp(x)] - chi[x].conj()).norm());
            }
        }
        worst
    }

    /// `f̂(χ_i) = Σ_x μ(x) f(x) conj χ_i(x)`.
    pub fn fourier(&self, f: &[Complex64]) -> Result<FourierCoefficients, RepresentationError> {
        self.check_len(f.len())?;
        let mu = self.haar.weights();
        Ok(FourierCoefficients(
            self.values
                .iter()
                .map(|chi| (0..f.len()).map(|x| f[x] * chi[x].conj() * mu[x]).sum())
                .collect(),
        ))
    }

    /// `f(x) = Σ_i k_i f̂(χ_i) χ_i(x)`.
    pub fn inverse_fourier(&self, coeffs: &FourierCoefficients) -> Result<Vec<Complex64>, RepresentationError> {
        self.check_len(coeffs.0.len())?;
        Ok((0..self.labels.len())
            .map(|x| {
                self.values
                    .iter()
                    .zip(&coeffs.0)
                    .zip(&self.hyperdims)
                    .map(|((chi, c), k)| chi[x] * c * *k)
                    .sum()
            })
            .collect())
    }

    /// `|Σ_x μ(x)|f(x)|² − Σ_i k_i |f̂(χ_i)|²|`.
    pub fn plancherel_residual(&self, f: &[Complex64]) -> Result<f64, RepresentationError> {
        let coeffs = self.fourier(f)?;
        let lhs: f64 = f.iter().zip(self.haar.weights()).map(|(v, m)| m * v.norm_sqr()).sum();
        let rhs: f64 = coeffs.0.iter().zip(&self.hyperdims).map(|(c, k)| k * c.norm_sqr()).sum();
        Ok((lhs - rhs).abs())
    }

    /// Worst Plancherel residual over `count` seeded random complex functions
    /// with entries uniform in the unit square `[-1, 1]²`.
    pub fn random_plancherel_residual(&self, count: usize, seed: u64) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = self.labels.len();
        (0..count)
            .map(|_| {
                let f: Vec<Complex64> = (0..k)
                    .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect();
                self.plancherel_residual(&f).expect("length matches")
            })
            .fold(0.0, f64::max)
    }

    fn check_len(&self, found: usize) -> Result<(), RepresentationError> {
        if found != self.labels.len() {
            return Err(RepresentationError::LengthMismatch { expected: self.labels.len(), found });
        }
        Ok(())
    }
}

/// Lower bound `b · w_x` on the dimension attached to `x`; `b` is 1 unless
/// the caller knows better (taking `b = 1` is itself a conjecture).
pub fn index_lower_bound<S: Scalar>(h: &FiniteHypergroup<S>, x: usize, b: S) -> Result<S, HypergroupError> {
    Ok(b * h.weight(x)?)
}
