//! Brute-force oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hyplab::constructions::FiniteGroup;
use hyplab::Rational;
use num_traits::Zero;

/// The groups of the double-coset sweep.
pub fn group_zoo() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (1..=12).map(|n| (format!("Z{n}"), FiniteGroup::cyclic(n))).collect();
    out.push(("S3".into(), FiniteGroup::symmetric(3)));
    out.push(("S4".into(), FiniteGroup::symmetric(4)));
    out.push(("D4".into(), FiniteGroup::dihedral(4)));
    out.push(("Q8".into(), FiniteGroup::quaternion()));
    out.push(("A4".into(), FiniteGroup::alternating(4)));
    out
}

/// Closure of a generating set by repeated right multiplication.
fn closure(g: &FiniteGroup, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in gens {
                next.insert(g.mul(a, b));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// All subgroups generated by at most two elements. Every subgroup of the
/// groups in [`group_zoo`] is of this form.
pub fn subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            found.insert(closure(g, &[a, b]).into_iter().collect());
        }
    }
    found.into_iter().collect()
}

/// `H g H` for every `g`, deduplicated, as sorted element lists.
pub fn double_coset_blocks(g: &FiniteGroup, h: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..g.order() {
        let block: BTreeSet<usize> = h.iter().flat_map(|&a| h.iter().map(move |&b| (a, b))).map(|(a, b)| g.mul(g.mul(a, x), b)).collect();
        blocks.insert(block.into_iter().collect());
    }
    blocks.into_iter().collect()
}

/// Convolves the uniform probability measures on blocks `bx` and `by`
/// inside the group algebra and pushes the result to the blocks.
pub fn convolve_blocks(g: &FiniteGroup, blocks: &[Vec<usize>], bx: usize, by: usize) -> Vec<Rational> {
    let mut on_group = vec![Rational::zero(); g.order()];
    let unit = Rational::new((1).into(), ((blocks[bx].len() * blocks[by].len()) as i64).into());
    for &a in &blocks[bx] {
        for &b in &blocks[by] {
            on_group[g.mul(a, b)] += &unit;
        }
    }
    blocks.iter().map(|blk| blk.iter().fold(Rational::zero(), |acc, &x| acc + &on_group[x])).collect()
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `P_n(x)` from the explicit sum `2⁻ⁿ Σ_k (−1)^k C(n,k) C(2n−2k, n) x^{n−2k}`.
pub fn legendre_explicit(n: usize, x: f64) -> f64 {
    let n64 = n as u64;
    let s: f64 = (0..=n64 / 2)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * binomial(n64, k) * binomial(2 * n64 - 2 * k, n64) * x.powi((n64 - 2 * k) as i32)
        })
        .sum();
    s / 2f64.powi(n as i32)
}

/// Legendre coefficients of `exp` on `[-1, 1]`: `a_n = (2n+1) i_n(1)` with
/// the modified spherical Bessel function summed from its power series.
pub fn exp_legendre_coefficients(count: usize) -> Vec<f64> {
    (0..count)
        .map(|n| {
            let mut term = 1.0 / (1..=2 * n + 1).step_by(2).map(|k| k as f64).product::<f64>();
            let mut sum = term;
            for k in 1..40 {
                term *= 0.5 / (k as f64 * (2 * n + 2 * k + 1) as f64);
                sum += term;
            }
            (2 * n + 1) as f64 * sum
        })
        .collect()
}

/// `((δ_s ∗ δ_t) ∗ δ_u)(exp) = Σ a_n P_n(s) P_n(t) P_n(u)`.
pub fn triple_exp_oracle(s: f64, t: f64, u: f64) -> f64 {
    exp_legendre_coefficients(30)
        .iter()
        .enumerate()
        .map(|(n, a)| a * legendre_explicit(n, s) * legendre_explicit(n, t) * legendre_explicit(n, u))
        .sum()
}

pub fn fixtures_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}
