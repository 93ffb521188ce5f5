//! Named group families and product constructions.
//!
//! Element numbering is fixed per family:
//! - cyclic `C_n`: `i` is the `i`-th power of the generator;
//! - dihedral of order `2n`: rotations `r^i` at `0..n`, then reflections
//!   `r^i s` at `n + i`;
//! - dicyclic of order `4m`: `a^i` at `0..2m`, then `a^i x` at `2m + i`;
//! - symmetric and alternating: permutations of `0..n` in lexicographic order;
//! - direct product `G × H`: the pair `(a, b)` at `a·|H| + b`;
//! - wreath `C ≀ S_α`: the pair `(v; φ)` at `code(v)·α! + rank(φ)`, with `v`
//!   read as base-`|C|` digits, first coordinate least significant.

use std::collections::HashMap;

use itertools::Itertools;

use super::{FiniteGroup, ORDER_CEILING};
use crate::config::Limits;
use crate::error::{Error, Result};

fn check_ceiling(order: u128) -> Result<usize> {
    if order > ORDER_CEILING as u128 {
        Err(Error::capacity("group order", order, ORDER_CEILING))
    } else {
        Ok(order as usize)
    }
}

/// Permutations of `0..n` in lexicographic order with a lookup from
/// permutation to position.
pub(crate) struct PermList {
    pub perms: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
}

impl PermList {
    pub fn all(n: usize) -> Self {
        Self::from_perms((0..n).permutations(n).collect())
    }

    pub fn even(n: usize) -> Self {
        Self::from_perms((0..n).permutations(n).filter(|p| is_even(p)).collect())
    }

    fn from_perms(perms: Vec<Vec<usize>>) -> Self {
        let index = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PermList { perms, index }
    }
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl FiniteGroup {
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).with_label("C1")
    }

    /// Panics for `n == 0` or `n` above the storage ceiling.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!((1..=ORDER_CEILING).contains(&n));
        FiniteGroup::from_fn(format!("C{n}"), n, |a, b| (a + b) % n).expect("cyclic table is a group")
    }

    /// The dihedral group of the given order (`2n` for the `n`-gon).
    pub fn dihedral(order: usize) -> Result<FiniteGroup> {
        if order < 2 || !order.is_multiple_of(2) {
            return Err(Error::InvalidArgument(format!("dihedral order {order} must be even")));
        }
        let n = order / 2;
        check_ceiling(order as u128)?;
        // r^i s^a · r^j s^b = r^(i + (-1)^a j) s^(a+b)
        FiniteGroup::from_fn(format!("D{order}"), order, |x, y| {
            let (i, a) = (x % n, x / n);
            let (j, b) = (y % n, y / n);
            let k = if a == 0 { (i + j) % n } else { (i + n - j) % n };
            ((a + b) % 2) * n + k
        })
    }

    /// The dicyclic group of order `4m`, `⟨a, x | a^(2m), x² = a^m, x⁻¹ax = a⁻¹⟩`.
    pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
        if order < 4 || !order.is_multiple_of(4) {
            return Err(Error::InvalidArgument(format!("dicyclic order {order} must be a multiple of 4")));
        }
        check_ceiling(order as u128)?;
        let n = order / 2;
        let m = order / 4;
        FiniteGroup::from_fn(format!("Dic{order}"), order, |x, y| {
            let (i, e) = (x % n, x / n);
            let (j, f) = (y % n, y / n);
            match (e, f) {
                (0, _) => f * n + (i + j) % n,
                // a^i x a^j = a^(i-j) x
                (_, 0) => n + (i + n - j) % n,
                // a^i x a^j x = a^(i-j) x² = a^(i-j+m)
                _ => (i + n - j + m) % n,
            }
        })
    }

    /// The quaternion group of order 8; `1` plays `x` and `4` plays `y` in
    /// `x⁴ = x²y⁻² = y⁻¹xyx = 1`.
    pub fn quaternion() -> FiniteGroup {
        FiniteGroup::dicyclic(8).expect("Q8").with_label("Q8")
    }

    /// `S_n` acting on `0..n`; the product `p·q` is `p ∘ q`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        check_ceiling(factorial(n))?;
        let list = PermList::all(n);
        Self::from_perm_list(format!("S{n}"), &list)
    }

    pub fn alternating(n: usize) -> Result<FiniteGroup> {
        check_ceiling(factorial(n))?;
        let list = PermList::even(n);
        Self::from_perm_list(format!("A{n}"), &list)
    }

    fn from_perm_list(label: String, list: &PermList) -> Result<FiniteGroup> {
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
        FiniteGroup::from_fn(label, list.perms.len(), |a, b| {
            list.index[&compose(&list.perms[a], &list.perms[b])]
        })
    }
}

/// `G × H` with componentwise multiplication.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let n = check_ceiling(g.order() as u128 * h.order() as u128)?;
    let m = h.order();
    FiniteGroup::from_fn(format!("{}x{}", g.label(), h.label()), n, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })
}

/// The wreath product `C ≀ S_α` of a group by a symmetric group.
#[derive(Debug, Clone)]
pub struct WreathSpec {
    pub base: FiniteGroup,
    pub degree: usize,
}

impl WreathSpec {
    pub fn new(base: FiniteGroup, degree: usize) -> Self {
        WreathSpec { base, degree }
    }

    /// `|C|^α · α!`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let c = self.base.order() as u128;
        let mut acc = factorial(self.degree.min(34));
        if self.degree > 34 {
            return None;
        }
        for _ in 0..self.degree {
            acc = acc.checked_mul(c)?;
        }
        Some(acc)
    }
}

/// Realizes `C ≀ S_α` with `(v; φ)·(w; ψ) = (v · w^φ; φψ)`, where
/// `(w^φ)_i = w_{φ(i)}`.
///
/// With that coordinate action the product `φψ` must be "φ first, then ψ",
/// i.e. `(φψ)(i) = ψ(φ(i))`; this is what makes the multiplication
/// associative.
pub fn construct_wreath(spec: &WreathSpec, limits: &Limits) -> Result<FiniteGroup> {
    if spec.degree == 0 {
        return Err(Error::InvalidArgument("wreath degree must be at least 1".into()));
    }
    let order = spec
        .order()
        .ok_or_else(|| Error::capacity("wreath product order", "overflow", limits.max_order))?;
    if order > limits.max_order as u128 {
        return Err(Error::capacity("wreath product order", order, limits.max_order));
    }
    let n = check_ceiling(order)?;
    let base = &spec.base;
    let c = base.order();
    let alpha = spec.degree;
    let perms = PermList::all(alpha);
    let fact = perms.perms.len();
    // perm_mul[a][b] = index of (φψ) with φ = perms[a], ψ = perms[b]
    let perm_mul: Vec<Vec<usize>> = perms
        .perms
        .iter()
        .map(|phi| {
            perms
                .perms
                .iter()
                .map(|psi| {
                    let prod: Vec<usize> = (0..alpha).map(|i| psi[phi[i]]).collect();
                    perms.index[&prod]
                })
                .collect()
        })
        .collect();
    let digits = |mut code: usize| -> Vec<usize> {
        (0..alpha)
            .map(|_| {
                let d = code % c;
                code /= c;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &d| acc * c + d) };
    let label = format!("{}wrS{}", base.label(), alpha);
    FiniteGroup::from_fn(label, n, |x, y| {
        let (v, phi) = (digits(x / fact), x % fact);
        let (w, psi) = (digits(y / fact), y % fact);
        let p = &perms.perms[phi];
        let prod: Vec<usize> = (0..alpha).map(|i| base.mul(v[i], w[p[i]])).collect();
        encode(&prod) * fact + perm_mul[phi][psi]
    })
}
