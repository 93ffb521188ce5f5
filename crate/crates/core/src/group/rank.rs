//! Exact minimal generating set search.
//!
//! Two reductions keep the search exact while shrinking it:
//! - a generator can be swapped for any other generator of the same cyclic
//!   subgroup, so candidates are one element per cyclic subgroup;
//! - conjugating a generating set yields a generating set, so one member can
//!   be taken from a set of representatives of the conjugacy classes of
//!   cyclic subgroups.
//!
//! Sizes are tried in increasing order; within a size, first elements run over
//! class representatives and the remaining ones over increasing candidate
//! positions.

use std::collections::HashMap;

use super::FiniteGroup;
use crate::config::RankBudget;
use crate::error::{Error, Result};
use crate::subset::ElementSubset;

/// Rank of the whole group.
pub fn group_rank_bruteforce(g: &FiniteGroup, budget: &RankBudget) -> Result<usize> {
    subgroup_rank(g, &ElementSubset::full(g.order()), budget)
}

/// Minimal number of elements of `target` generating `target`, which must be
/// a subgroup of `g`. The trivial subgroup has rank 0.
pub fn subgroup_rank(g: &FiniteGroup, target: &ElementSubset, budget: &RankBudget) -> Result<usize> {
    if !g.is_subgroup(target) {
        return Err(Error::NotSubgroup);
    }
    let size = target.len();
    if size == 1 {
        return Ok(0);
    }
    if size > budget.max_order {
        return Err(Error::BudgetExceeded(format!(
            "subgroup of order {size} exceeds rank search limit {}",
            budget.max_order
        )));
    }

    // One element per cyclic subgroup, keyed by the subgroup.
    let mut cyclic: HashMap<ElementSubset, usize> = HashMap::new();
    let mut candidates = Vec::new();
    for a in target.iter().filter(|&a| a != 0) {
        let c = g.closure_of(&[a]);
        if c.len() == size {
            return Ok(1);
        }
        cyclic.entry(c).or_insert_with(|| {
            candidates.push(a);
            a
        });
    }

    // Representatives of cyclic subgroups up to conjugation inside `target`.
    let mut seen: Vec<bool> = vec![false; candidates.len()];
    let position: HashMap<usize, usize> = candidates.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let mut firsts = Vec::new();
    for (i, &a) in candidates.iter().enumerate() {
        if seen[i] {
            continue;
        }
        firsts.push(a);
        for t in target.iter() {
            let b = g.conjugate(a, t);
            let rep = cyclic[&g.closure_of(&[b])];
            seen[position[&rep]] = true;
        }
    }

    let mut search = Search {
        g,
        target_size: size,
        candidates: &candidates,
        closures: 0,
        budget,
    };
    for k in 2..=budget.max_size {
        for &first in &firsts {
            let mut gens = vec![first];
            let base = g.closure_of(&gens);
            if search.extend(&mut gens, &base, 0, k)? {
                return Ok(k);
            }
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no generating set of size <= {} found",
        budget.max_size
    )))
}

struct Search<'a> {
    g: &'a FiniteGroup,
    target_size: usize,
    candidates: &'a [usize],
    closures: u64,
    budget: &'a RankBudget,
}

impl Search<'_> {
    fn extend(&mut self, gens: &mut Vec<usize>, current: &ElementSubset, start: usize, k: usize) -> Result<bool> {
        if gens.len() == k {
            return Ok(current.len() == self.target_size);
        }
        let remaining = k - gens.len();
        for pos in start..self.candidates.len() {
            if self.candidates.len() - pos < remaining {
                break;
            }
            let c = self.candidates[pos];
            if current.contains(c) {
                continue;
            }
            self.closures += 1;
            if self.closures > self.budget.max_closures {
                return Err(Error::BudgetExceeded(format!(
                    "rank search exceeded {} closures",
                    self.budget.max_closures
                )));
            }
            gens.push(c);
            let next = self.g.closure_of(gens);
            let found = if gens.len() == k {
                next.len() == self.target_size
            } else {
                // Only a proper enlargement can be part of a minimal set.
                next.len() < self.target_size && self.extend(gens, &next, pos + 1, k)?
            };
            gens.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::direct_product;
    use crate::group::{construct_wreath, WreathSpec};
    use crate::config::Limits;

    fn rank(g: &FiniteGroup) -> usize {
        group_rank_bruteforce(g, &RankBudget::default()).unwrap()
    }

    /// Plain search over all subsets by increasing size, no reductions.
    fn naive_rank(g: &FiniteGroup) -> usize {
        use itertools::Itertools;
        if g.order() == 1 {
            return 0;
        }
        (1..=g.order())
            .find(|&k| {
                g.elements()
                    .combinations(k)
                    .any(|s| g.closure_of(&s).len() == g.order())
            })
            .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&FiniteGroup::cyclic(6)), 1);
        assert_eq!(rank(&FiniteGroup::quaternion()), 2);
        let klein = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(rank(&klein), 2);
        let w = construct_wreath(&WreathSpec::new(FiniteGroup::cyclic(2), 2), &Limits::default()).unwrap();
        assert_eq!(rank(&w), 2);
        assert_eq!(rank(&FiniteGroup::trivial()), 0);
    }

    #[test]
    fn elementary_abelian_ranks() {
        let c2 = FiniteGroup::cyclic(2);
        let mut g = c2.clone();
        for k in 2..=4 {
            g = direct_product(&g, &c2).unwrap();
            assert_eq!(rank(&g), k);
        }
    }

    #[test]
    fn reduced_search_agrees_with_naive() {
        let c2 = FiniteGroup::cyclic(2);
        let groups = [
            FiniteGroup::cyclic(8),
            FiniteGroup::dihedral(8).unwrap(),
            FiniteGroup::quaternion(),
            direct_product(&c2, &FiniteGroup::cyclic(4)).unwrap(),
            direct_product(&direct_product(&c2, &c2).unwrap(), &c2).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ];
        for g in &groups {
            assert_eq!(rank(g), naive_rank(g), "{}", g.label());
        }
    }

    #[test]
    fn budget_is_a_distinct_signal() {
        let c2 = FiniteGroup::cyclic(2);
        let g = direct_product(&direct_product(&c2, &c2).unwrap(), &c2).unwrap();
        let tight = RankBudget { max_size: 2, ..RankBudget::default() };
        assert!(matches!(group_rank_bruteforce(&g, &tight), Err(Error::BudgetExceeded(_))));
        let small = RankBudget { max_order: 4, ..RankBudget::default() };
        assert!(matches!(group_rank_bruteforce(&g, &small), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn subgroup_rank_of_klein_in_s4() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        // double transpositions plus the identity
        let v4: Vec<usize> = s4
            .elements()
            .filter(|&a| s4.element_order(a) <= 2 && s4.conjugacy_classes().iter().any(|c| c.len() == 3 && c.contains(&a)) || a == 0)
            .collect();
        let v4 = ElementSubset::from_elements(24, v4);
        assert_eq!(v4.len(), 4);
        assert_eq!(subgroup_rank(&s4, &v4, &RankBudget::default()).unwrap(), 2);
    }
}
