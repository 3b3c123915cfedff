//! Double coset hypergroups `G//H`.
//!
//! For representatives `x`, `y` the convolution is the pushforward of the
//! uniform measure on `H` under `z ↦ HxzyH`, so every structure constant is
//! a multiple of `1/|H|` and the construction stays exact.

use num_traits::Zero;

use crate::hypergroup::FiniteHypergroup;
use crate::measure::{Measure, MeasureKind};
use crate::scalar::{Rational, Scalar};

use super::group::FiniteGroup;
use super::ConstructionError;

/// Representative independence is re-checked on construction (debug builds)
/// up to this group order.
pub const EXHAUSTIVE_CHECK_ORDER: usize = 48;

/// Partition of a group into `H`-double cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    /// Blocks in output order: the identity coset first, the rest by
    /// smallest element index. Each block is sorted.
    pub blocks: Vec<Vec<usize>>,
    /// Block index of every group element.
    pub block_of: Vec<usize>,
    /// Smallest element index of each block.
    pub representatives: Vec<usize>,
    /// The subgroup, sorted.
    pub subgroup: Vec<usize>,
}

impl CosetPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Pushes a measure on `G` (one weight per element) down to the cosets.
    pub fn push_forward(&self, group_measure: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len()];
        for (g, w) in group_measure.iter().enumerate() {
            out[self.block_of[g]] += w;
        }
        out
    }

    /// Lifts a coset measure to `G`, spreading each block's mass uniformly.
    pub fn lift(&self, coset_measure: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.block_of.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            let share = coset_measure[b].clone() / Rational::from_usize(block.len());
            for &g in block {
                out[g] = share.clone();
            }
        }
        out
    }
}

/// Partitions `g` into double cosets `HxH`.
pub fn double_cosets(g: &FiniteGroup, subgroup: &[usize]) -> Result<CosetPartition, ConstructionError> {
    let h = g.check_subgroup(subgroup)?;
    let n = g.order();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let starts = std::iter::once(g.identity()).chain((0..n).filter(|&x| x != g.identity()));
    for x in starts {
        if block_of[x] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut block = Vec::new();
        for &a in &h {
            let ax = g.mul(a, x);
            for &b in &h {
                let y = g.mul(ax, b);
                if block_of[y] == usize::MAX {
                    block_of[y] = id;
                    block.push(y);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    let representatives = blocks.iter().map(|b| b[0]).collect();
    Ok(CosetPartition { blocks, block_of, representatives, subgroup: h })
}

/// Builds `G//H` together with its coset partition.
///
/// The identity coset carries the group's identity label; other cosets are
/// labelled `H<rep>H`, or by the group label when `H` is trivial.
pub fn double_coset_hypergroup(
    g: &FiniteGroup,
    subgroup: &[usize],
) -> Result<(FiniteHypergroup<Rational>, CosetPartition), ConstructionError> {
    let partition = double_cosets(g, subgroup)?;
    let m = partition.len();
    let h_order = partition.subgroup.len();
    let unit = Rational::from_ratio(1, h_order as i64);
    let mut constants = vec![Rational::from_usize(0); m * m * m];
    for (bx, &x) in partition.representatives.iter().enumerate() {
        for (by, &y) in partition.representatives.iter().enumerate() {
            for &z in &partition.subgroup {
                let bz = partition.block_of[g.mul(g.mul(x, z), y)];
                let slot = &mut constants[(bx * m + by) * m + bz];
                *slot = slot.clone() + unit.clone();
            }
        }
    }
    let involution = partition
        .representatives
        .iter()
        .map(|&x| partition.block_of[g.inv(x)])
        .collect();
    let labels = partition
        .representatives
        .iter()
        .enumerate()
        .map(|(b, &x)| {
            if b == 0 {
                g.label(g.identity()).to_string()
            } else if h_order == 1 {
                g.label(x).to_string()
            } else {
                format!("H{}H", g.label(x))
            }
        })
        .collect();
    let hyp = FiniteHypergroup::new(labels, 0, involution, constants, 0.0)?;
    debug_assert!(
        g.order() > EXHAUSTIVE_CHECK_ORDER || representative_independent(g, &partition, &hyp),
        "double coset constants depend on the representative"
    );
    Ok((hyp, partition))
}

/// Checks that every choice of representatives `x ∈ X`, `y ∈ Y` reproduces
/// the structure constants of `hyp`.
pub fn representative_independent(
    g: &FiniteGroup,
    partition: &CosetPartition,
    hyp: &FiniteHypergroup<Rational>,
) -> bool {
    let m = partition.len();
    let h_order = partition.subgroup.len();
    let unit = Rational::from_ratio(1, h_order as i64);
    for bx in 0..m {
        for by in 0..m {
            for &x in &partition.blocks[bx] {
                for &y in &partition.blocks[by] {
                    let mut counts = vec![0usize; m];
                    for &z in &partition.subgroup {
                        counts[partition.block_of[g.mul(g.mul(x, z), y)]] += 1;
                    }
                    for (bz, &c) in counts.iter().enumerate() {
                        if *hyp.constant(bx, by, bz) != Rational::from_usize(c) * unit.clone() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Haar measure of `G//H` as the pushforward of the uniform measure on `G`:
/// block sizes over `|G|`.
pub fn coset_haar(g: &FiniteGroup, partition: &CosetPartition) -> Measure<Rational> {
    let n = g.order() as i64;
    let w = partition.blocks.iter().map(|b| Rational::from_ratio(b.len() as i64, n)).collect();
    Measure::new(w, MeasureKind::Probability, 0.0).expect("block sizes sum to |G|")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::group_as_hypergroup;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn s3_mod_transposition() {
        let g = FiniteGroup::symmetric(3);
        let h = g.subgroup_from_labels(&["e", "(12)"]).unwrap();
        let p = double_cosets(&g, &h).unwrap();
        let labels = |b: &Vec<usize>| b.iter().map(|&i| g.label(i).to_string()).collect::<Vec<_>>();
        let mut first = labels(&p.blocks[0]);
        first.sort();
        assert_eq!(first, vec!["(12)", "e"]);
        let mut second = labels(&p.blocks[1]);
        second.sort();
        assert_eq!(second, vec!["(123)", "(13)", "(132)", "(23)"]);

        let (hyp, _) = double_coset_hypergroup(&g, &h).unwrap();
        assert_eq!(hyp.convolve_dirac(1, 1).weights(), &[q(1, 2), q(1, 2)]);
        assert_eq!(hyp.haar().unwrap().weights(), &[q(1, 3), q(2, 3)]);
        assert_eq!(coset_haar(&g, &p), hyp.haar().unwrap());
        assert!(representative_independent(&g, &p, &hyp));
    }

    #[test]
    fn trivial_and_full_subgroups() {
        let g = FiniteGroup::dihedral(4);
        let p = double_cosets(&g, &(0..g.order()).collect::<Vec<_>>()).unwrap();
        assert_eq!(p.len(), 1);

        let (hyp, p) = double_coset_hypergroup(&g, &[g.identity()]).unwrap();
        assert!(p.blocks.iter().all(|b| b.len() == 1));
        assert_eq!(hyp.constants(), group_as_hypergroup(&g).constants());
    }

    #[test]
    fn s4_mod_point_stabilizer_has_weight_three() {
        let g = FiniteGroup::symmetric(4);
        let stab: Vec<usize> = (0..g.order())
            .filter(|&i| g.permutations().unwrap()[i].apply(3) == 3)
            .collect();
        let (hyp, _) = double_coset_hypergroup(&g, &stab).unwrap();
        assert_eq!(hyp.len(), 2);
        assert_eq!(hyp.weight(1).unwrap(), q(3, 1));
    }

    #[test]
    fn lift_then_push_is_identity() {
        let g = FiniteGroup::alternating(4);
        let h = g.subgroup_closure(&[1]);
        let p = double_cosets(&g, &h).unwrap();
        let mu: Vec<Rational> = (0..p.len()).map(|i| q(i as i64 * 3 - 2, 7)).collect();
        assert_eq!(p.push_forward(&p.lift(&mu)), mu);
    }

    #[test]
    fn rejects_non_subgroups() {
        let g = FiniteGroup::symmetric(3);
        let e = g.index_of("e").unwrap();
        let c = g.index_of("(123)").unwrap();
        assert!(matches!(double_cosets(&g, &[e, c]), Err(ConstructionError::HNotSubgroup(_))));
        assert!(matches!(double_coset_hypergroup(&g, &[c]), Err(ConstructionError::HNotSubgroup(_))));
    }
}
