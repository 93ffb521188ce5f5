//! Subgroup lattices and the statistics derived from them.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::config::{Limits, RankBudget};
use crate::error::{Error, Result};
use crate::group::{subgroup_rank, FiniteGroup};
use crate::subset::ElementSubset;

/// A conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Subgroup index of the lexicographically least member.
    pub representative: usize,
    /// Subgroup indices, ascending.
    pub members: Vec<usize>,
    /// `[G : H]` for any member.
    pub index: usize,
}

/// Every subgroup of a finite group, ordered by size and then
/// lexicographically by member list, with containment, conjugacy classes and
/// normalizers.
#[derive(Debug)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    subgroups: Vec<ElementSubset>,
    lookup: HashMap<ElementSubset, usize>,
    /// `below[k]` holds the indices of the subgroups contained in `k`.
    below: Vec<ElementSubset>,
    class_of: Vec<usize>,
    classes: Vec<SubgroupClass>,
    normalizers: Vec<ElementSubset>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

/// Enumerates all subgroups: cyclic subgroups first, then joins with cyclic
/// subgroups until nothing new appears. Every subgroup is a join of cyclic
/// subgroups, so the fixed point is the whole lattice.
pub fn enumerate_lattice(g: &FiniteGroup, limits: &Limits) -> Result<SubgroupLattice> {
    let n = g.order();
    if n > limits.lattice_max_order {
        return Err(Error::capacity("lattice group order", n, limits.lattice_max_order));
    }

    let mut cyclic: Vec<(ElementSubset, usize)> = Vec::new();
    let mut seen: HashMap<ElementSubset, Vec<usize>> = HashMap::new();
    seen.insert(ElementSubset::from_elements(n, [0]), vec![]);
    for a in 1..n {
        let c = g.closure_of(&[a]);
        if !seen.contains_key(&c) {
            seen.insert(c.clone(), vec![a]);
            cyclic.push((c, a));
        }
    }

    let mut work: Vec<(ElementSubset, Vec<usize>)> = seen.iter().map(|(s, gens)| (s.clone(), gens.clone())).collect();
    while let Some((h, gens)) = work.pop() {
        for (c, a) in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*a);
            let joined = g.closure_of(&joined_gens);
            if !seen.contains_key(&joined) {
                seen.insert(joined.clone(), joined_gens.clone());
                work.push((joined, joined_gens));
            }
        }
    }

    let mut subgroups: Vec<ElementSubset> = seen.into_keys().collect();
    subgroups.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp_lex(b)));
    Ok(SubgroupLattice::from_subgroups(g.clone(), subgroups))
}

impl SubgroupLattice {
    fn from_subgroups(group: FiniteGroup, subgroups: Vec<ElementSubset>) -> Self {
        let count = subgroups.len();
        let lookup: HashMap<ElementSubset, usize> =
            subgroups.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();

        let below = subgroups
            .iter()
            .map(|k| {
                ElementSubset::from_elements(
                    count,
                    subgroups
                        .iter()
                        .enumerate()
                        .filter(|(_, h)| k.len() % h.len() == 0 && h.is_subset(k))
                        .map(|(i, _)| i),
                )
            })
            .collect();

        let mut class_of = vec![usize::MAX; count];
        let mut classes = Vec::new();
        let mut normalizers = Vec::with_capacity(count);
        for (i, h) in subgroups.iter().enumerate() {
            let mut normalizer = ElementSubset::empty(group.order());
            let mut conjugates = Vec::new();
            for x in group.elements() {
                let c = lookup[&group.conjugate_subset(h, x)];
                if c == i {
                    normalizer.insert(x);
                }
                conjugates.push(c);
            }
            normalizers.push(normalizer);
            if class_of[i] == usize::MAX {
                conjugates.sort_unstable();
                conjugates.dedup();
                for &c in &conjugates {
                    class_of[c] = classes.len();
                }
                classes.push(SubgroupClass {
                    representative: i,
                    members: conjugates,
                    index: group.order() / h.len(),
                });
            }
        }

        SubgroupLattice {
            group,
            subgroups,
            lookup,
            below,
            class_of,
            classes,
            normalizers,
            mobius_rows: (0..count).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[ElementSubset] {
        &self.subgroups
    }

    pub fn subgroup(&self, h: usize) -> &ElementSubset {
        &self.subgroups[h]
    }

    pub fn index_of(&self, s: &ElementSubset) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        self.below[outer].contains(inner)
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_of(&self, h: usize) -> usize {
        self.class_of[h]
    }

    pub fn normalizer(&self, h: usize) -> &ElementSubset {
        &self.normalizers[h]
    }

    /// A subgroup is normal iff its conjugacy class is a singleton.
    pub fn is_normal(&self, h: usize) -> bool {
        self.classes[self.class_of[h]].members.len() == 1
    }

    /// Möbius function `μ(H, K)` of the subgroup lattice.
    pub fn mobius(&self, h: usize, k: usize) -> Result<i64> {
        if !self.contains(k, h) {
            return Err(Error::NotComparable(h, k));
        }
        Ok(self.mobius_row(h)[k])
    }

    /// `μ(H, K)` for every `K`, zero where `H ⊄ K`.
    pub fn mobius_row(&self, h: usize) -> &[i64] {
        self.mobius_rows[h].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            row[h] = 1;
            // subgroups are sorted by size, so every proper subgroup of K
            // comes before K
            for k in h + 1..self.len() {
                if !self.contains(k, h) {
                    continue;
                }
                let sum: i64 = self.below[k]
                    .iter()
                    .filter(|&l| l != k && self.contains(l, h))
                    .map(|l| row[l])
                    .sum();
                row[k] = -sum;
            }
            row
        })
    }

    /// Longest chain `1 = G_0 < … < G_ℓ = H` ending at each subgroup.
    pub fn chain_lengths(&self) -> Vec<usize> {
        let mut len = vec![0usize; self.len()];
        for k in 1..self.len() {
            len[k] = self.below[k]
                .iter()
                .filter(|&l| l != k)
                .map(|l| len[l] + 1)
                .max()
                .unwrap_or(0);
        }
        len
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&h| self.is_normal(h))
    }

    pub fn stats(&self, budget: &RankBudget) -> LatticeStats {
        lattice_stats(self, budget)
    }
}

/// Counts and invariants read off a complete lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeStats {
    pub order: usize,
    /// `r(G)`: number of conjugacy classes of subgroups.
    pub r: usize,
    /// `r_i(G)` keyed by the index `i`.
    pub r_by_index: BTreeMap<usize, usize>,
    /// Sum of `r_p` over the prime divisors `p` of `|G|`.
    pub r_p: usize,
    pub is_dedekind: bool,
    pub normal_count: usize,
    /// Longest subgroup chain.
    pub length: usize,
    /// Largest rank of a subgroup; `None` when a rank search ran out of budget.
    pub srank: Option<usize>,
}

impl LatticeStats {
    pub fn r_index(&self, i: usize) -> usize {
        self.r_by_index.get(&i).copied().unwrap_or(0)
    }

    pub fn r2(&self) -> usize {
        self.r_index(2)
    }
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn lattice_stats(l: &SubgroupLattice, budget: &RankBudget) -> LatticeStats {
    let order = l.group.order();
    let mut r_by_index = BTreeMap::new();
    for c in &l.classes {
        *r_by_index.entry(c.index).or_insert(0) += 1;
    }
    let r_p = prime_divisors(order)
        .into_iter()
        .map(|p| r_by_index.get(&p).copied().unwrap_or(0))
        .sum();
    let srank = l
        .classes
        .iter()
        .map(|c| subgroup_rank(&l.group, &l.subgroups[c.representative], budget).ok())
        .try_fold(0usize, |acc, r| r.map(|r| acc.max(r)));
    LatticeStats {
        order,
        r: l.classes.len(),
        r_by_index,
        r_p,
        is_dedekind: l.classes.iter().all(|c| c.members.len() == 1),
        normal_count: l.normal_subgroups().count(),
        length: l.chain_lengths()[l.whole()],
        srank,
    }
}
