//! Gaussian elimination over any [`Scalar`] backend.
//!
//! Exact rationals eliminate without loss; floats use partial pivoting and
//! treat entries of magnitude `<= tol` as zero.

use crate::scalar::Scalar;

/// Row-reduced echelon form of a dense matrix.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
    cols: usize,
}

impl<S: Scalar> Echelon<S> {
    /// Reduces `rows` (each of length `cols`) in place.
    pub fn reduce(mut rows: Vec<Vec<S>>, cols: usize, tol: f64) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_negligible(tol))
                .max_by(|&a, &b| rows[a][c].magnitude().total_cmp(&rows[b][c].magnitude()));
            let Some(p) = best else { continue };
            rows.swap(r, p);
            let inv = S::one() / rows[r][c].clone();
            for v in rows[r].iter_mut() {
                *v = v.clone() * inv.clone();
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v = v.clone() - factor.clone() * pv.clone();
                    }
                }
                row[c] = S::zero();
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Echelon { rows, pivots, cols }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }
}
