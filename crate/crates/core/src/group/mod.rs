//! Finite groups given by their Cayley tables.
//!
//! Elements are the indices `0..order`, and index `0` is always the identity.
//! Every constructor funnels through [`FiniteGroup::from_table`], which checks
//! the identity row/column, the Latin-square property and associativity.

mod families;
mod iso;
mod rank;

use std::collections::VecDeque;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::subset::ElementSubset;

pub use families::{construct_wreath, direct_product, WreathSpec};
pub use iso::is_isomorphic;
pub use rank::{group_rank_bruteforce, subgroup_rank};

/// Hard ceiling imposed by the table's storage type.
pub const ORDER_CEILING: usize = u16::MAX as usize + 1;

/// Associativity is checked on every triple up to this order and on a fixed
/// pseudo-random sample above it.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 50_000;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    label: String,
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table, `table[i * n + j] = i·j`.
    pub fn from_table(label: impl Into<String>, order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Table("order must be positive".into()));
        }
        if order > ORDER_CEILING {
            return Err(Error::capacity("group order", order, ORDER_CEILING));
        }
        if table.len() != order * order {
            return Err(Error::Table(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::Table(format!("entry {bad} out of range")));
        }
        let table: Vec<u16> = table.into_iter().map(|x| x as u16).collect();
        let mut g = FiniteGroup {
            order,
            table,
            inverses: Vec::new(),
            label: label.into(),
        };
        g.validate()?;
        g.inverses = (0..order)
            .map(|a| (0..order).find(|&b| g.mul(a, b) == 0).unwrap() as u16)
            .collect();
        Ok(g)
    }

    pub(crate) fn from_fn(
        label: impl Into<String>,
        order: usize,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(op(a, b));
            }
        }
        Self::from_table(label, order, table)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(Error::Table("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let x = self.mul(i, j);
                if seen[x] == i {
                    return Err(Error::Table(format!("row {i} repeats entry {x}")));
                }
                seen[x] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let x = self.mul(i, j);
                if seen[x] == j {
                    return Err(Error::Table(format!("column {j} repeats entry {x}")));
                }
                seen[x] = j;
            }
        }
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::Table(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5EED_0FA5_50C0);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::Table(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ a g`
    #[inline]
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row-major copy of the Cayley table.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Some element has order `|G|`.
    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.element_order(a) == self.order)
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, num_integer::lcm)
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Conjugacy classes of elements, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for a in self.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for g in self.elements() {
                let c = self.conjugate(a, g);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// The subgroup generated by `gens`: all finite products, including the
    /// empty one.
    pub fn subgroup_closure(&self, gens: &ElementSubset) -> ElementSubset {
        let gens = gens.elements();
        self.closure_of(&gens)
    }

    pub(crate) fn closure_of(&self, gens: &[usize]) -> ElementSubset {
        let mut set = ElementSubset::empty(self.order);
        set.insert(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(self.order % set.len(), 0, "Lagrange violated");
        set
    }

    pub fn is_subgroup(&self, s: &ElementSubset) -> bool {
        s.universe() == self.order
            && s.contains(0)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    /// `g⁻¹ H g` for every `h` in `s`.
    pub fn conjugate_subset(&self, s: &ElementSubset, g: usize) -> ElementSubset {
        ElementSubset::from_elements(self.order, s.iter().map(|a| self.conjugate(a, g)))
    }

    pub fn is_normal_subset(&self, s: &ElementSubset) -> bool {
        self.elements()
            .all(|g| s.iter().all(|a| s.contains(self.conjugate(a, g))))
    }

    /// `N_G(H) = {g : g⁻¹ H g = H}`.
    pub fn normalizer(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_elements(
            self.order,
            self.elements()
                .filter(|&g| s.iter().all(|a| s.contains(self.conjugate(a, g)))),
        )
    }

    /// Re-indexes a subgroup as a group in its own right. Members keep their
    /// relative order, so the identity stays at index 0.
    ///
    /// Also returns the embedding: `embedding[i]` is the ambient index of the
    /// subgroup's element `i`.
    pub fn subgroup_as_group(&self, s: &ElementSubset, label: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::NotSubgroup);
        }
        let members = s.elements();
        let mut local = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i;
        }
        let g = FiniteGroup::from_fn(label, members.len(), |a, b| local[self.mul(members[a], members[b])])?;
        Ok((g, members))
    }

    /// `G/N` as a coset table. Cosets are numbered by their least element, so
    /// the coset `N` itself is index 0.
    pub fn quotient_group(&self, normal: &ElementSubset) -> Result<FiniteGroup> {
        if !self.is_subgroup(normal) {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal_subset(normal) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in self.elements() {
            if coset_of[a] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for h in normal.iter() {
                coset_of[self.mul(a, h)] = id;
            }
        }
        let label = format!("{}/N{}", self.label, normal.len());
        FiniteGroup::from_fn(label, reps.len(), |x, y| coset_of[self.mul(reps[x], reps[y])])
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// Reads the plain-text Cayley format: the order on the first line, then one
/// row of space-separated indices per element.
pub fn parse_cayley(text: &str, label: impl Into<String>) -> Result<FiniteGroup> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Table("empty input".into()))?
        .parse()
        .map_err(|e| Error::Table(format!("bad order line: {e}")))?;
    if n == 0 || n > ORDER_CEILING {
        return Err(Error::Table(format!("order {n} out of range")));
    }
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Table(format!("missing row {row}")))?;
        let entries = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Table(format!("row {row}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != n {
            return Err(Error::Table(format!("row {row} has {} entries, expected {n}", entries.len())));
        }
        table.extend(entries);
    }
    if lines.next().is_some() {
        return Err(Error::Table("trailing rows".into()));
    }
    FiniteGroup::from_table(label, n, table)
}

/// Inverse of [`parse_cayley`].
pub fn format_cayley(g: &FiniteGroup) -> String {
    let mut out = format!("{}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.elements().map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
