//! Finite groups stored as Cayley tables.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use super::ConstructionError;

/// Largest group accepted from permutation generators.
pub const MAX_GROUP_ORDER: usize = 10_000;

/// A permutation of `{0, …, degree-1}`, stored as its image vector.
///
/// Products compose left to right: `(a * b)(i) = b(a(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, ConstructionError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(ConstructionError::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, ConstructionError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (pos, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(ConstructionError::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(ConstructionError::InvalidPermutation(format!("point {p} repeated")));
                }
                let next = cycle[(pos + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn compose(&self, then: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| then.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Compact cycle notation: `e`, `(12)(34)`, or `(1,10)` when the degree
    /// exceeds 9.
    pub fn label(&self) -> String {
        if self.is_identity() {
            return "e".into();
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        let mut s = String::new();
        for c in self.cycles() {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            let _ = write!(s, "({})", pts.join(sep));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    permutations: Option<Vec<Permutation>>,
}

impl FiniteGroup {
    /// Validates a Cayley table: square, Latin, with a two-sided identity,
    /// inverses and associativity.
    pub fn from_cayley(labels: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        let n = labels.len();
        if n == 0 {
            return Err(ConstructionError::NotAGroup("empty table".into()));
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(ConstructionError::NotAGroup(format!("table is not {n}x{n}")));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(ConstructionError::NotAGroup(format!("entry {bad} out of range")));
        }
        let at = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| ConstructionError::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| ConstructionError::NotAGroup(format!("{} has no inverse", labels[x])))?;
            inverse[x] = y;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(ConstructionError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverse, permutations: None })
    }

    /// Closes `generators` into a permutation group by orbit enumeration.
    /// Elements are numbered in breadth-first order from the identity.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Self, ConstructionError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(ConstructionError::InvalidPermutation(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = elements[i].compose(g);
                if !index.contains_key(&p) {
                    if elements.len() == MAX_GROUP_ORDER {
                        return Err(ConstructionError::GroupTooLarge { cap: MAX_GROUP_ORDER });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.compose(b)]);
            }
        }
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let labels = elements.iter().map(Permutation::label).collect();
        Ok(FiniteGroup { labels, table, identity: 0, inverse, permutations: Some(elements) })
    }

    /// `Z_n` with elements `0, 1, …, n-1` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup { labels, table, identity: 0, inverse, permutations: None }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]]).expect("transposition"));
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()]).expect("long cycle"));
        }
        Self::from_permutations(n.max(1), &gens).expect("symmetric group")
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Permutation> = (3..=n)
            .map(|k| Permutation::from_cycles(n, &[vec![1, 2, k]]).expect("3-cycle"))
            .collect();
        Self::from_permutations(n.max(1), &gens).expect("alternating group")
    }

    /// Symmetries of a regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3, "dihedral group needs n >= 3");
        let rotation = Permutation::from_cycles(n, &[(1..=n).collect()]).expect("rotation");
        let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
        Self::from_permutations(n, &[rotation, reflection]).expect("dihedral group")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // element 2*u + s: unit u in (1, i, j, k), sign s (0 = +, 1 = -)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let names = ["1", "i", "j", "k"];
        let labels = (0..8)
            .map(|e| format!("{}{}", if e % 2 == 1 { "-" } else { "" }, names[e / 2]))
            .collect();
        let rows = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, s) = UNIT[a / 2][b / 2];
                        2 * u + ((s + a % 2 + b % 2) % 2)
                    })
                    .collect()
            })
            .collect();
        Self::from_cayley(labels, rows).expect("quaternion table")
    }

    pub fn klein_four() -> Self {
        let a = Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).expect("perm");
        let b = Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).expect("perm");
        Self::from_permutations(4, &[a, b]).expect("klein four-group")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The underlying permutations, for groups built from generators.
    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.permutations.as_deref()
    }

    pub fn index_of_permutation(&self, p: &Permutation) -> Option<usize> {
        self.permutations.as_ref()?.iter().position(|q| q == p)
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Smallest subgroup containing `generators`, sorted by index.
    pub fn subgroup_closure(&self, generators: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &g in generators {
                let p = self.mul(a, g);
                if !members[p] {
                    members[p] = true;
                    queue.push_back(p);
                }
            }
        }
        (0..self.order()).filter(|&i| members[i]).collect()
    }

    /// Validates that `elements` form a subgroup; returns them sorted and
    /// deduplicated.
    pub fn check_subgroup(&self, elements: &[usize]) -> Result<Vec<usize>, ConstructionError> {
        let n = self.order();
        if let Some(&bad) = elements.iter().find(|&&a| a >= n) {
            return Err(ConstructionError::HNotSubgroup(format!("element index {bad} out of range")));
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if !set.contains(&self.identity) {
            return Err(ConstructionError::HNotSubgroup("missing the identity".into()));
        }
        for &a in &set {
            if !set.contains(&self.inv(a)) {
                return Err(ConstructionError::HNotSubgroup(format!("not closed under inverse at {}", self.label(a))));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(ConstructionError::HNotSubgroup(format!(
                        "not closed: {} * {} = {}",
                        self.label(a),
                        self.label(b),
                        self.label(self.mul(a, b))
                    )));
                }
            }
        }
        Ok(set.into_iter().collect())
    }

    /// Looks up elements by label and validates the subgroup.
    pub fn subgroup_from_labels(&self, labels: &[&str]) -> Result<Vec<usize>, ConstructionError> {
        let idx = labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| ConstructionError::HNotSubgroup(format!("unknown element {l}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.check_subgroup(&idx)
    }

    /// Every subgroup, obtained by closing the cyclic subgroups under joins.
    /// Sorted by order, then lexicographically.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> =
            (0..self.order()).map(|a| self.subgroup_closure(&[a])).collect();
        let mut frontier: Vec<Vec<usize>> = found.iter().cloned().collect();
        while !frontier.is_empty() {
            let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
            let mut next = Vec::new();
            for a in &frontier {
                for b in &snapshot {
                    let gens: Vec<usize> = a.iter().chain(b).copied().collect();
                    let join = self.subgroup_closure(&gens);
                    if found.insert(join.clone()) {
                        next.push(join);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<Vec<usize>> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_labels_and_cycles() {
        let p = Permutation::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.label(), "(12)(34)");
        assert_eq!(p.compose(&p), Permutation::identity(4));
        let c = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.inverse().label(), "(132)");
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn standard_orders() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::quaternion().order(), 8);
        assert_eq!(FiniteGroup::klein_four().order(), 4);
        assert!(FiniteGroup::klein_four().is_abelian());
        assert!(!FiniteGroup::quaternion().is_abelian());
    }

    #[test]
    fn subgroup_counts() {
        // Known subgroup lattices.
        assert_eq!(FiniteGroup::symmetric(3).all_subgroups().len(), 6);
        assert_eq!(FiniteGroup::symmetric(4).all_subgroups().len(), 30);
        assert_eq!(FiniteGroup::alternating(4).all_subgroups().len(), 10);
        assert_eq!(FiniteGroup::dihedral(4).all_subgroups().len(), 10);
        assert_eq!(FiniteGroup::quaternion().all_subgroups().len(), 6);
        assert_eq!(FiniteGroup::cyclic(12).all_subgroups().len(), 6);
    }

    #[test]
    fn subgroup_validation() {
        let g = FiniteGroup::symmetric(3);
        assert!(g.subgroup_from_labels(&["e", "(12)"]).is_ok());
        assert!(matches!(g.subgroup_from_labels(&["e", "(123)"]), Err(ConstructionError::HNotSubgroup(_))));
        assert!(matches!(g.subgroup_from_labels(&["(12)"]), Err(ConstructionError::HNotSubgroup(_))));
    }

    #[test]
    fn cayley_validation() {
        let l = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
        assert!(FiniteGroup::from_cayley(l(2), vec![vec![0, 1], vec![1, 0]]).is_ok());
        // Latin square without associativity (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_cayley(l(5), loop5), Err(ConstructionError::NotAGroup(_))));
        assert!(FiniteGroup::from_cayley(l(2), vec![vec![0, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn generator_cap() {
        // S8 has order 40320 > cap.
        let gens = [
            Permutation::from_cycles(8, &[vec![1, 2]]).unwrap(),
            Permutation::from_cycles(8, &[(1..=8).collect()]).unwrap(),
        ];
        assert!(matches!(
            FiniteGroup::from_permutations(8, &gens),
            Err(ConstructionError::GroupTooLarge { .. })
        ));
    }
}
