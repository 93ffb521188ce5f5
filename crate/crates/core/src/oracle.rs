//! Cellular automata on small full shifts, used as ground truth.
//!
//! A configuration `x: G → A` is stored as the base-`q` integer whose digit
//! `i` is `x(g_i)`. The shift action is `(g·x)(h) = x(g⁻¹h)` and a local rule
//! with memory set `S` acts by `τ(x)(g) = μ((g⁻¹·x)|_S)`; that convention is
//! used everywhere in the crate. With it, the rule with memory `{s}` and
//! `μ` the projection is `x ↦ (h ↦ x(hs))`, a right translation; on abelian
//! groups this is the shift by `s⁻¹`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::config::{MonoidBudget, RankBudget};
use crate::error::{Error, Result};
use crate::group::{group_rank_bruteforce, FiniteGroup};

/// A point of the full shift, as its base-`q` code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(pub u64);

/// The full shift `A^G` for a finite `G` and `|A| = q`, with the shift action
/// precomputed.
#[derive(Debug, Clone)]
pub struct FullShift {
    group: FiniteGroup,
    q: usize,
    size: u64,
    powers: Vec<u64>,
    /// `left_inverse[g][h]` is the index of `g⁻¹h`.
    left_inverse: Vec<Vec<usize>>,
}

impl FullShift {
    /// Fails when `q < 2` or when `q^|G|` does not fit in 64 bits.
    pub fn new(group: &FiniteGroup, q: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("alphabet size {q} must be at least 2")));
        }
        let n = group.order();
        let size = (q as u64)
            .checked_pow(n as u32)
            .filter(|_| n <= u32::MAX as usize)
            .ok_or_else(|| Error::capacity("configuration space", format!("{q}^{n}"), u64::MAX))?;
        let powers = (0..n).map(|i| (q as u64).pow(i as u32)).collect();
        let left_inverse = group
            .elements()
            .map(|g| group.elements().map(|h| group.mul(group.inv(g), h)).collect())
            .collect();
        Ok(FullShift {
            group: group.clone(),
            q,
            size,
            powers,
            left_inverse,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `q^|G|`.
    pub fn configuration_count(&self) -> u64 {
        self.size
    }

    pub fn digits(&self, x: Configuration) -> Vec<usize> {
        let mut code = x.0;
        (0..self.group.order())
            .map(|_| {
                let d = (code % self.q as u64) as usize;
                code /= self.q as u64;
                d
            })
            .collect()
    }

    pub fn encode(&self, digits: &[usize]) -> Configuration {
        Configuration(digits.iter().zip(&self.powers).map(|(&d, &p)| d as u64 * p).sum())
    }

    /// `(g·x)(h) = x(g⁻¹h)`.
    pub fn shift(&self, g: usize, x: Configuration) -> Configuration {
        let digits = self.digits(x);
        self.shift_digits(g, &digits)
    }

    pub(crate) fn shift_digits(&self, g: usize, digits: &[usize]) -> Configuration {
        Configuration(
            self.left_inverse[g]
                .iter()
                .zip(&self.powers)
                .map(|(&src, &p)| digits[src] as u64 * p)
                .sum(),
        )
    }

    /// Applies a local rule pointwise.
    pub fn apply_rule(&self, rule: &LocalRule, x: Configuration) -> Result<Configuration> {
        rule.check(self)?;
        let digits = self.digits(x);
        let q = self.q as u64;
        let out: u64 = self
            .group
            .elements()
            .zip(&self.powers)
            .map(|(g, &p)| {
                // (g⁻¹·x)(s) = x(g s)
                let pattern = rule
                    .memory
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &s| acc * q + digits[self.group.mul(g, s)] as u64);
                rule.outputs[pattern as usize] as u64 * p
            })
            .sum();
        Ok(Configuration(out))
    }

    /// The induced map of a local rule on all configurations.
    pub fn endomorphism(&self, rule: &LocalRule) -> Result<EndomorphismTable> {
        rule.check(self)?;
        self.table_budget()?;
        let map = (0..self.size)
            .map(|x| self.apply_rule(rule, Configuration(x)).map(|y| y.0 as u32))
            .collect::<Result<Vec<_>>>()?;
        let t = EndomorphismTable {
            degree: self.group.order(),
            q: self.q,
            map,
        };
        self.check_equivariant(&t)?;
        Ok(t)
    }

    /// The shift by `g` as a table.
    pub fn shift_table(&self, g: usize) -> Result<EndomorphismTable> {
        self.table_budget()?;
        Ok(EndomorphismTable {
            degree: self.group.order(),
            q: self.q,
            map: (0..self.size).map(|x| self.shift(g, Configuration(x)).0 as u32).collect(),
        })
    }

    pub fn identity_table(&self) -> Result<EndomorphismTable> {
        self.shift_table(0)
    }

    /// `τ(g·x) = g·τ(x)` for all `g` and `x`.
    pub fn check_equivariant(&self, t: &EndomorphismTable) -> Result<()> {
        self.check_context(t)?;
        for x in 0..self.size {
            let digits = self.digits(Configuration(x));
            let image = self.digits(Configuration(t.map[x as usize] as u64));
            for g in self.group.elements() {
                let lhs = t.map[self.shift_digits(g, &digits).0 as usize] as u64;
                if lhs != self.shift_digits(g, &image).0 {
                    return Err(Error::CrossCheck(format!(
                        "table does not commute with the shift by {g} at configuration {x}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_context(&self, t: &EndomorphismTable) -> Result<()> {
        if t.degree != self.group.order() || t.q != self.q {
            return Err(Error::ContextMismatch(format!(
                "table for |G|={}, q={} used with |G|={}, q={}",
                t.degree,
                t.q,
                self.group.order(),
                self.q
            )));
        }
        Ok(())
    }

    fn table_budget(&self) -> Result<()> {
        if self.size > u32::MAX as u64 || self.size > 1 << 26 {
            return Err(Error::capacity("endomorphism table", self.size, 1u64 << 26));
        }
        Ok(())
    }

    /// `q^(q^|G|)`, the number of local rules with memory set `G`.
    pub fn rule_count(&self) -> Option<u64> {
        (self.q as u64).checked_pow(u32::try_from(self.size).ok()?)
    }

    fn rule_enumerator(&self, budget: u64) -> Result<RuleEnumerator> {
        let total = self
            .rule_count()
            .filter(|&c| c <= budget)
            .ok_or_else(|| Error::capacity("local rule count", format!("{}^({}^{})", self.q, self.q, self.group.order()), budget))?;
        // pattern[g][x]: code of g⁻¹·x, which is the pattern (g⁻¹·x)|_G read
        // by a rule whose memory set is all of G
        let patterns = self
            .group
            .elements()
            .map(|g| {
                let gi = self.group.inv(g);
                (0..self.size)
                    .map(|x| self.shift(gi, Configuration(x)).0 as u32)
                    .collect()
            })
            .collect();
        Ok(RuleEnumerator {
            q: self.q,
            degree: self.group.order(),
            size: self.size as usize,
            total,
            powers: self.powers.clone(),
            patterns,
        })
    }

    /// Every endomorphism of the shift, once each, in rule-code order.
    ///
    /// Memory set `G` suffices for a finite group, so rules `μ: A^G → A` and
    /// endomorphisms are in bijection.
    pub fn enumerate_endomorphisms(&self, budget: u64) -> Result<impl Iterator<Item = EndomorphismTable> + '_> {
        let e = self.rule_enumerator(budget)?;
        Ok((0..e.total).map(move |code| {
            let t = e.table(code);
            debug_assert!(self.check_equivariant(&t).is_ok());
            t
        }))
    }

    /// Number of bijective endomorphisms, i.e. `|Aut(A^G)|`.
    pub fn count_automorphisms(&self, budget: u64) -> Result<u64> {
        let e = self.rule_enumerator(budget)?;
        Ok((0..e.total)
            .into_par_iter()
            .filter(|&code| e.table(code).is_bijective())
            .count() as u64)
    }

    /// All endomorphisms, collected.
    pub fn endomorphism_monoid(&self, budget: u64) -> Result<Vec<EndomorphismTable>> {
        Ok(self.enumerate_endomorphisms(budget)?.collect())
    }
}

struct RuleEnumerator {
    q: usize,
    degree: usize,
    size: usize,
    total: u64,
    powers: Vec<u64>,
    patterns: Vec<Vec<u32>>,
}

impl RuleEnumerator {
    fn table(&self, code: u64) -> EndomorphismTable {
        let q = self.q as u64;
        let mut outputs = vec![0u64; self.size];
        let mut c = code;
        for o in outputs.iter_mut() {
            *o = c % q;
            c /= q;
        }
        let map = (0..self.size)
            .map(|x| {
                self.patterns
                    .iter()
                    .zip(&self.powers)
                    .map(|(pat, &p)| outputs[pat[x] as usize] * p)
                    .sum::<u64>() as u32
            })
            .collect();
        EndomorphismTable {
            degree: self.degree,
            q: self.q,
            map,
        }
    }
}

/// A local rule `μ: A^S → A`. Patterns over `S` are encoded base `q` with the
/// digit for `memory[j]` at position `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRule {
    pub memory: Vec<usize>,
    pub outputs: Vec<u8>,
}

impl LocalRule {
    /// The projection onto the coordinate `s`.
    pub fn projection(s: usize, q: usize) -> Self {
        LocalRule {
            memory: vec![s],
            outputs: (0..q as u8).collect(),
        }
    }

    pub fn constant(a: u8, q: usize) -> Self {
        LocalRule {
            memory: vec![0],
            outputs: vec![a; q],
        }
    }

    fn check(&self, shift: &FullShift) -> Result<()> {
        let expected = (shift.q as u64).checked_pow(self.memory.len() as u32);
        if expected != Some(self.outputs.len() as u64) {
            return Err(Error::InvalidArgument(format!(
                "rule has {} outputs, expected q^|S| = {}^{}",
                self.outputs.len(),
                shift.q,
                self.memory.len()
            )));
        }
        if self.memory.iter().any(|&s| s >= shift.group.order()) {
            return Err(Error::InvalidArgument("memory set element out of range".into()));
        }
        if self.outputs.iter().any(|&a| a as usize >= shift.q) {
            return Err(Error::InvalidArgument("rule output outside the alphabet".into()));
        }
        Ok(())
    }
}

/// An endomorphism as its action on configuration codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EndomorphismTable {
    degree: usize,
    q: usize,
    map: Vec<u32>,
}

impl EndomorphismTable {
    pub fn map(&self) -> &[u32] {
        &self.map
    }

    pub fn apply(&self, x: Configuration) -> Configuration {
        Configuration(self.map[x.0 as usize] as u64)
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.map.len()];
        self.map.iter().all(|&y| !std::mem::replace(&mut hit[y as usize], true))
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }
}

/// `t1 ∘ t2`: apply `t2`, then `t1`.
pub fn compose(t1: &EndomorphismTable, t2: &EndomorphismTable) -> Result<EndomorphismTable> {
    if t1.degree != t2.degree || t1.q != t2.q {
        return Err(Error::ContextMismatch(format!(
            "cannot compose tables for (|G|={}, q={}) and (|G|={}, q={})",
            t1.degree, t1.q, t2.degree, t2.q
        )));
    }
    Ok(EndomorphismTable {
        degree: t1.degree,
        q: t1.q,
        map: t2.map.iter().map(|&y| t1.map[y as usize]).collect(),
    })
}

/// Ranks of a finite transformation monoid and of its group of units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidRank {
    pub size: usize,
    pub unit_count: usize,
    /// `Rank(M)`
    pub rank: usize,
    /// `Rank(U)` for the group of units `U`
    pub unit_rank: usize,
    /// `Rank(M:U)`, the fewest extra elements that generate `M` with `U`
    pub relative_rank: usize,
}

/// A finite monoid of tables with its multiplication table.
struct TableMonoid {
    elements: Vec<EndomorphismTable>,
    mul: Vec<Vec<usize>>,
    identity: usize,
}

impl TableMonoid {
    fn new(tables: &[EndomorphismTable]) -> Result<Self> {
        let mut index: HashMap<&EndomorphismTable, usize> = HashMap::new();
        let mut elements = Vec::new();
        for t in tables {
            if !index.contains_key(t) {
                index.insert(t, elements.len());
                elements.push(t.clone());
            }
        }
        let identity = elements
            .iter()
            .position(EndomorphismTable::is_identity)
            .ok_or_else(|| Error::InvalidArgument("monoid lacks the identity".into()))?;
        let mut mul = Vec::with_capacity(elements.len());
        for a in &elements {
            let row = elements
                .iter()
                .map(|b| {
                    let c = compose(a, b)?;
                    index
                        .get(&c)
                        .copied()
                        .ok_or_else(|| Error::InvalidArgument("table set is not closed under composition".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            mul.push(row);
        }
        Ok(TableMonoid { elements, mul, identity })
    }

    /// Submonoid generated by `gens`, as a membership vector.
    fn closure_size(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.elements.len()];
        seen[self.identity] = true;
        let mut stack = vec![self.identity];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul[x][s];
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Smallest `W ⊆ pool` with `⟨fixed ∪ W⟩ = M`.
    fn min_extension(&self, fixed: &[usize], pool: &[usize], budget: &MonoidBudget, closures: &mut u64) -> Result<usize> {
        let n = self.elements.len();
        for k in 0..=budget.max_size.min(pool.len()) {
            let mut found = false;
            let mut gens = fixed.to_vec();
            for combo in itertools::Itertools::combinations(pool.iter().copied(), k) {
                *closures += 1;
                if *closures > budget.max_closures {
                    return Err(Error::BudgetExceeded(format!(
                        "monoid rank search exceeded {} closures",
                        budget.max_closures
                    )));
                }
                gens.truncate(fixed.len());
                gens.extend(combo);
                if self.closure_size(&gens) == n {
                    found = true;
                    break;
                }
            }
            if found {
                return Ok(k);
            }
        }
        Err(Error::BudgetExceeded(format!(
            "no generating set of size <= {} found",
            budget.max_size
        )))
    }

    fn unit_group(&self, units: &[usize]) -> Result<FiniteGroup> {
        // identity first so it lands on index 0
        let mut order: Vec<usize> = vec![self.identity];
        order.extend(units.iter().copied().filter(|&u| u != self.identity));
        let position: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut table = Vec::with_capacity(order.len() * order.len());
        for &a in &order {
            for &b in &order {
                let c = self.mul[a][b];
                table.push(
                    *position
                        .get(&c)
                        .ok_or_else(|| Error::CrossCheck("units are not closed under composition".into()))?,
                );
            }
        }
        FiniteGroup::from_table("Units", order.len(), table)
    }
}

/// The group of units of a monoid of tables, as a Cayley-table group.
/// Building it checks closure, identity, inverses and associativity.
pub fn unit_group(tables: &[EndomorphismTable]) -> Result<FiniteGroup> {
    let m = TableMonoid::new(tables)?;
    let units: Vec<usize> = (0..m.elements.len()).filter(|&i| m.elements[i].is_bijective()).collect();
    m.unit_group(&units)
}

/// Exact `Rank(M)`, `Rank(U)` and `Rank(M:U)` by exhaustive search.
pub fn monoid_rank_bruteforce(
    tables: &[EndomorphismTable],
    budget: &MonoidBudget,
    rank_budget: &RankBudget,
) -> Result<MonoidRank> {
    let m = TableMonoid::new(tables)?;
    let size = m.elements.len();
    if size > budget.max_elements {
        return Err(Error::BudgetExceeded(format!(
            "monoid of {size} elements exceeds limit {}",
            budget.max_elements
        )));
    }
    let units: Vec<usize> = (0..size).filter(|&i| m.elements[i].is_bijective()).collect();
    let unit_group = m.unit_group(&units)?;
    let unit_rank = group_rank_bruteforce(&unit_group, rank_budget)?;

    let non_units: Vec<usize> = (0..size).filter(|i| !units.contains(i)).collect();
    let mut closures = 0u64;
    let relative_rank = m.min_extension(&units, &non_units, budget, &mut closures)?;
    let others: Vec<usize> = (0..size).filter(|&i| i != m.identity).collect();
    let rank = m.min_extension(&[], &others, budget, &mut closures)?;

    Ok(MonoidRank {
        size,
        unit_count: units.len(),
        rank,
        unit_rank,
        relative_rank,
    })
}
