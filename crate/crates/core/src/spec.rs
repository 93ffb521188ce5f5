//! The group-spec grammar.
//!
//! ```text
//! spec    := product
//! product := wreath ('x' wreath)*        left-associative direct product
//! wreath  := atom ('wr' 'S' n)?          C ≀ S_n
//! atom    := 'C' n | 'D' m | 'S' n | 'A' n | 'Q8' | 'Dic' m
//! ```
//!
//! `D<m>` names the dihedral group of ORDER `m` (`m` even, `m >= 6`), so `D8`
//! is the symmetry group of the square. `S<n>` and `A<n>` require `n <= 5`.
//! `Dic<m>` is the dicyclic group of order `m` (`m` a multiple of 4, `m >= 8`).

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::group::{construct_wreath, direct_product, FiniteGroup, WreathSpec};

/// Parsed form of a group spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Dicyclic(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Wreath(Box<GroupSpec>, usize),
}

/// Recognized family of a spec, used to pick family-specific bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    /// Dihedral group of the `n`-gon (order `2n`).
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Other,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let err = |reason: &str| Error::Parse {
            spec: text.to_string(),
            reason: reason.to_string(),
        };
        let text_trim = text.trim();
        if text_trim.is_empty() {
            return Err(err("empty spec"));
        }
        let mut factors = split_products(text_trim).into_iter();
        let first = parse_wreath(factors.next().unwrap(), &err)?;
        factors.try_fold(first, |acc, f| Ok(GroupSpec::Product(Box::new(acc), Box::new(parse_wreath(f, &err)?))))
    }

    /// Exact order, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let fact = |n: usize| -> Option<u128> { (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k)) };
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Dicyclic(n) => Some(*n as u128),
            GroupSpec::Quaternion => Some(8),
            GroupSpec::Symmetric(n) => fact(*n),
            GroupSpec::Alternating(n) => fact(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            GroupSpec::Product(a, b) => a.order()?.checked_mul(b.order()?),
            GroupSpec::Wreath(c, k) => {
                let c = c.order()?;
                (0..*k).try_fold(fact(*k)?, |acc, _| acc.checked_mul(c))
            }
        }
    }

    pub fn family(&self) -> Family {
        match *self {
            GroupSpec::Cyclic(n) => Family::Cyclic(n),
            GroupSpec::Dihedral(m) => Family::Dihedral(m / 2),
            GroupSpec::Symmetric(n) => Family::Symmetric(n),
            GroupSpec::Alternating(n) => Family::Alternating(n),
            _ => Family::Other,
        }
    }

    /// Builds the group after checking its order against `limits.max_order`.
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self.order() {
            Some(o) if o <= limits.max_order as u128 => {}
            Some(o) => return Err(Error::capacity("group order", o, limits.max_order)),
            None => return Err(Error::capacity("group order", "overflow", limits.max_order)),
        }
        Ok(match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(m) => FiniteGroup::dihedral(*m)?,
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n)?,
            GroupSpec::Alternating(n) => FiniteGroup::alternating(*n)?,
            GroupSpec::Quaternion => FiniteGroup::quaternion(),
            GroupSpec::Dicyclic(m) => FiniteGroup::dicyclic(*m)?,
            GroupSpec::Product(a, b) => direct_product(&a.build(limits)?, &b.build(limits)?)?,
            GroupSpec::Wreath(c, k) => construct_wreath(&WreathSpec::new(c.build(limits)?, *k), limits)?,
        })
    }
}

/// Parses and builds in one step.
pub fn construct_group(spec: &str, limits: &Limits) -> Result<FiniteGroup> {
    GroupSpec::parse(spec)?.build(limits)
}

/// Splits on the product operator `x`. A lower-case `x` never occurs inside an
/// atom, so a plain split is exact.
fn split_products(s: &str) -> Vec<&str> {
    s.split('x').collect()
}

fn parse_wreath(s: &str, err: &dyn Fn(&str) -> Error) -> Result<GroupSpec> {
    match s.split_once("wr") {
        None => parse_atom(s, err),
        Some((base, top)) => {
            let base = parse_atom(base, err)?;
            let degree = top
                .strip_prefix('S')
                .ok_or_else(|| err("right operand of 'wr' must be S<n>"))?;
            let degree = parse_number(degree, err)?;
            if degree == 0 {
                return Err(err("wreath degree must be at least 1"));
            }
            Ok(GroupSpec::Wreath(Box::new(base), degree))
        }
    }
}

fn parse_number(s: &str, err: &dyn Fn(&str) -> Error) -> Result<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(&format!("expected a number, found {s:?}")));
    }
    s.parse().map_err(|_| err("number too large"))
}

fn parse_atom(s: &str, err: &dyn Fn(&str) -> Error) -> Result<GroupSpec> {
    if s == "Q8" {
        return Ok(GroupSpec::Quaternion);
    }
    if let Some(rest) = s.strip_prefix("Dic") {
        let m = parse_number(rest, err)?;
        if m < 8 || m % 4 != 0 {
            return Err(err("Dic<m> needs m a multiple of 4 with m >= 8"));
        }
        return Ok(GroupSpec::Dicyclic(m));
    }
    let mut chars = s.chars();
    let head = chars.next().ok_or_else(|| err("empty factor"))?;
    let n = parse_number(chars.as_str(), err)?;
    match head {
        'C' if n >= 1 => Ok(GroupSpec::Cyclic(n)),
        'C' => Err(err("C<n> needs n >= 1")),
        'D' if n >= 6 && n % 2 == 0 => Ok(GroupSpec::Dihedral(n)),
        'D' => Err(err("D<m> names the dihedral group of order m; m must be even and >= 6")),
        'S' if (1..=5).contains(&n) => Ok(GroupSpec::Symmetric(n)),
        'S' => Err(err("S<n> needs 1 <= n <= 5")),
        'A' if (1..=5).contains(&n) => Ok(GroupSpec::Alternating(n)),
        'A' => Err(err("A<n> needs 1 <= n <= 5")),
        _ => Err(err(&format!("unknown family {head:?}"))),
    }
}
