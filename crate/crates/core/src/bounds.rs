//! Bounds on `Rank(Aut(A^G))` and `Rank(End(A^G))`.
//!
//! Unknown correction terms are never estimated. A formula of the form
//! `base + ε` with `0 ≤ ε ≤ slack` becomes the interval `[base, base + slack]`,
//! and every endpoint records which formula and branch produced it.

use std::fmt;

use crate::config::{Limits, RankBudget};
use crate::error::{Error, Result};
use crate::group::{group_rank_bruteforce, is_isomorphic, FiniteGroup};
use crate::lattice::{enumerate_lattice, LatticeStats, SubgroupLattice};
use crate::shift::AutDecomposition;
use crate::spec::Family;

/// Divisor counts of `n`: all, odd and even divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorStats {
    pub n: u64,
    pub d: u64,
    pub d_minus: u64,
    pub d_plus: u64,
}

pub fn divisor_stats(n: u64) -> DivisorStats {
    assert!(n >= 1, "divisor_stats needs n >= 1");
    let (mut d_minus, mut d_plus) = (0, 0);
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            for e in [i, n / i] {
                if e % 2 == 0 {
                    d_plus += 1;
                } else {
                    d_minus += 1;
                }
            }
            if i * i == n {
                // counted twice above
                if i % 2 == 0 {
                    d_plus -= 1;
                } else {
                    d_minus -= 1;
                }
            }
        }
        i += 1;
    }
    DivisorStats {
        n,
        d: d_minus + d_plus,
        d_minus,
        d_plus,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Upper {
    Bounded(u64),
    Unbounded,
}

impl fmt::Display for Upper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Upper::Bounded(v) => write!(f, "{v}"),
            Upper::Unbounded => f.write_str("inf"),
        }
    }
}

/// A certified range for a rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankInterval {
    pub lower: u64,
    pub upper: Upper,
    pub lower_source: String,
    pub upper_source: String,
    /// Width contributed by unknown correction terms.
    pub epsilon_slack: Option<u64>,
}

impl RankInterval {
    fn with_slack(base: u64, slack: u64, source: String) -> Self {
        RankInterval {
            lower: base,
            upper: Upper::Bounded(base + slack),
            lower_source: format!("{source}, eps=0"),
            upper_source: format!("{source}, eps={slack}"),
            epsilon_slack: Some(slack),
        }
    }

    fn exact(value: u64, source: String) -> Self {
        RankInterval {
            lower: value,
            upper: Upper::Bounded(value),
            lower_source: source.clone(),
            upper_source: source,
            epsilon_slack: Some(0),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.upper == Upper::Bounded(self.lower)
    }

    pub fn width(&self) -> Option<u64> {
        match self.upper {
            Upper::Bounded(u) => Some(u - self.lower),
            Upper::Unbounded => None,
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        v >= self.lower && self.upper_value().is_none_or(|u| v <= u)
    }

    pub fn upper_value(&self) -> Option<u64> {
        match self.upper {
            Upper::Bounded(u) => Some(u),
            Upper::Unbounded => None,
        }
    }
}

impl fmt::Display for RankInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

fn branch(q: usize) -> &'static str {
    if q == 2 {
        "q=2"
    } else {
        "q>=3"
    }
}

fn check_q(q: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("alphabet size {q} must be at least 2")));
    }
    Ok(())
}

/// `Rank(Aut(A^{Z_n}))`: exact for `n = 2^k`, otherwise
/// `d(n) + d₊(n) − 1 + ε` (q = 2, n even) or `d(n) + d₊(n) + ε`, with
/// `0 ≤ ε ≤ d(n) − d₊(n) − 2`.
pub fn cyclic_rank_interval(n: u64, q: usize) -> Result<RankInterval> {
    check_q(q)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cyclic order {n} must be at least 2")));
    }
    if n.is_power_of_two() {
        let k = n.trailing_zeros() as u64;
        let value = if q == 2 { 2 * k } else { 2 * k + 1 };
        return Ok(RankInterval::exact(value, format!("cyclic 2^k (k={k}, {})", branch(q))));
    }
    let s = divisor_stats(n);
    let slack = s.d - s.d_plus - 2;
    let (base, case) = if q == 2 && n.is_multiple_of(2) {
        (s.d + s.d_plus - 1, "q=2, n even")
    } else {
        (s.d + s.d_plus, "general")
    };
    Ok(RankInterval::with_slack(base, slack, format!("cyclic (n={n}, q={q}, {case})")))
}

/// `Rank(Aut(A^{D_2n}))` for the dihedral group of order `2n`, `n ≥ 3`.
pub fn dihedral_rank_interval(n: u64, q: usize) -> Result<RankInterval> {
    check_q(q)?;
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dihedral parameter n = {n} must be at least 3")));
    }
    let s2n = divisor_stats(2 * n);
    let sn = divisor_stats(n);
    let core = s2n.d_minus + 2 * s2n.d_plus;
    let (base, slack, case) = match (n % 2 == 1, q == 2) {
        (true, true) => (core - 1, s2n.d - 2, "n odd, q=2"),
        (true, false) => (core, s2n.d - 1, "n odd, q>=3"),
        (false, true) => (core + 2 * sn.d_plus - 1, s2n.d - 2, "n even, q=2"),
        (false, false) => (core + 4 * sn.d_plus, s2n.d - 1, "n even, q>=3"),
    };
    Ok(RankInterval::with_slack(base, slack, format!("dihedral (n={n}, q={q}, {case})")))
}

fn signed(v: usize) -> i64 {
    v as i64
}

fn nonneg(v: i64) -> u64 {
    debug_assert!(v >= 0);
    v.max(0) as u64
}

/// `(r − r_P − 1)·Rank(G) + 2r − r₂ − 1` for q = 2, `… + 2r` otherwise.
pub fn dedekind_upper_bound(stats: &LatticeStats, rank_g: usize, q: usize) -> Result<u64> {
    check_q(q)?;
    if !stats.is_dedekind {
        return Err(Error::NotDedekind);
    }
    let (r, rp, r2) = (signed(stats.r), signed(stats.r_p), signed(stats.r2()));
    let head = (r - rp - 1) * signed(rank_g);
    Ok(nonneg(if q == 2 { head + 2 * r - r2 - 1 } else { head + 2 * r }))
}

/// Upper bound on `Rank(End(A^G))` for Dedekind `G`:
/// `(r − r_P − 1)·Rank(G) + r(r+5)/2 − 2r₂ − 1` for q = 2, `… + r(r+5)/2`
/// otherwise.
pub fn dedekind_end_upper_bound(stats: &LatticeStats, rank_g: usize, q: usize) -> Result<u64> {
    check_q(q)?;
    if !stats.is_dedekind {
        return Err(Error::NotDedekind);
    }
    let (r, rp, r2) = (signed(stats.r), signed(stats.r_p), signed(stats.r2()));
    let head = (r - rp - 1) * signed(rank_g) + r * (r + 5) / 2;
    Ok(nonneg(if q == 2 { head - 2 * r2 - 1 } else { head }))
}

/// A real-valued bound together with its integer ceiling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealBound {
    pub value: f64,
    pub ceiling: u64,
}

/// `(r − r_P − 1)·log₂|G| + 2r − r₂ − 1` for q = 2, `… + 2r` otherwise.
pub fn general_upper_bound(stats: &LatticeStats, q: usize) -> Result<RealBound> {
    check_q(q)?;
    let (r, rp, r2) = (signed(stats.r), signed(stats.r_p), signed(stats.r2()));
    let coeff = (r - rp - 1) as f64;
    let tail = if q == 2 { 2 * r - r2 - 1 } else { 2 * r } as f64;
    let value = coeff * (stats.order as f64).log2() + tail;
    // log2 of a power of two is exact in f64; otherwise the value is
    // irrational and the ceiling is unambiguous
    Ok(RealBound {
        value,
        ceiling: value.ceil() as u64,
    })
}

/// For `G ≤ S_n`, `n > 3`: `(r − 1)⌊n/2⌋ + 2r − r₂ − 1` for q = 2,
/// `… + 2r` otherwise.
pub fn permutation_upper_bound(stats: &LatticeStats, degree: usize, q: usize) -> Result<u64> {
    check_q(q)?;
    if degree <= 3 {
        return Err(Error::Degree(degree));
    }
    let (r, r2) = (signed(stats.r), signed(stats.r2()));
    let head = (r - 1) * signed(degree / 2);
    Ok(nonneg(if q == 2 { head + 2 * r - r2 - 1 } else { head + 2 * r }))
}

/// `r − r₂` for q = 2, `r` otherwise.
pub fn lower_bound(stats: &LatticeStats, q: usize) -> Result<u64> {
    check_q(q)?;
    Ok(if q == 2 {
        (stats.r - stats.r2()) as u64
    } else {
        stats.r as u64
    })
}

/// Bound on `Rank((N_G(H)/H) ≀ S_α)` for the class `class`: 1 or 2 at prime
/// index, otherwise `min(SRank(G), ⌊log₂|G|⌋) + 2`.
pub fn aux_wreath_rank_bound(l: &SubgroupLattice, stats: &LatticeStats, class: usize, q: usize) -> Result<u64> {
    check_q(q)?;
    let index = l
        .classes()
        .get(class)
        .ok_or_else(|| Error::InvalidArgument(format!("no class {class}")))?
        .index;
    if is_prime(index) {
        return Ok(if index == 2 && q == 2 { 1 } else { 2 });
    }
    let log_floor = (usize::BITS - 1 - stats.order.leading_zeros()) as u64;
    Ok(stats.srank.map_or(log_floor, |s| (s as u64).min(log_floor)) + 2)
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// Identifies cyclic and dihedral groups structurally.
pub fn recognize_family(g: &FiniteGroup) -> Family {
    let n = g.order();
    if g.is_cyclic() {
        return Family::Cyclic(n);
    }
    if n >= 6 && n.is_multiple_of(2) && !g.is_abelian() {
        if let Ok(d) = FiniteGroup::dihedral(n) {
            if is_isomorphic(g, &d) {
                return Family::Dihedral(n / 2);
            }
        }
    }
    Family::Other
}

/// Degree of the natural permutation representation: `n` for `S_n` and `A_n`,
/// otherwise the regular representation `|G|`.
pub fn natural_degree(family: Family, order: usize) -> usize {
    match family {
        Family::Symmetric(n) | Family::Alternating(n) => n,
        _ => order,
    }
}

/// Value of one row of a bound table.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundValue {
    Integer(u64),
    Interval(RankInterval),
    Real(RealBound),
    NotApplicable,
}

impl BoundValue {
    /// The smallest integer upper bound this row certifies, if any.
    pub fn upper(&self) -> Option<u64> {
        match self {
            BoundValue::Integer(v) => Some(*v),
            BoundValue::Interval(i) => i.upper_value(),
            BoundValue::Real(r) => Some(r.value.floor() as u64),
            BoundValue::NotApplicable => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub name: &'static str,
    pub value: BoundValue,
    pub provenance: String,
    pub applicable: bool,
}

impl BoundRow {
    fn from_result(name: &'static str, provenance: String, r: Result<BoundValue>) -> Self {
        match r {
            Ok(value) => BoundRow {
                name,
                value,
                provenance,
                applicable: true,
            },
            Err(e) => BoundRow {
                name,
                value: BoundValue::NotApplicable,
                provenance: format!("{provenance}; not applicable: {e}"),
                applicable: false,
            },
        }
    }
}

/// Every bound on `Rank(Aut(A^G))` (and the Dedekind bound on
/// `Rank(End(A^G))`), in a fixed order. Inapplicable bounds are kept with
/// `applicable = false`.
pub fn bound_table(
    g: &FiniteGroup,
    family: Family,
    stats: &LatticeStats,
    q: usize,
    budget: &RankBudget,
) -> Result<Vec<BoundRow>> {
    check_q(q)?;
    let b = branch(q);
    let r = stats.r;
    let mut rows = Vec::new();

    rows.push(BoundRow::from_result(
        "lower",
        format!("class-count lower bound ({b}, r={r}, r_2={})", stats.r2()),
        lower_bound(stats, q).map(BoundValue::Integer),
    ));

    let cyclic = match family {
        Family::Cyclic(n) => cyclic_rank_interval(n as u64, q),
        _ => Err(Error::InvalidArgument("group is not cyclic".into())),
    };
    let cyclic_source = cyclic.as_ref().map(|i| i.lower_source.clone()).unwrap_or_else(|_| "cyclic".into());
    rows.push(BoundRow::from_result("cyclic_interval", cyclic_source, cyclic.map(BoundValue::Interval)));

    let dihedral = match family {
        Family::Dihedral(n) => dihedral_rank_interval(n as u64, q),
        _ => Err(Error::InvalidArgument("group is not dihedral of order >= 6".into())),
    };
    let dihedral_source = dihedral.as_ref().map(|i| i.lower_source.clone()).unwrap_or_else(|_| "dihedral".into());
    rows.push(BoundRow::from_result("dihedral_interval", dihedral_source, dihedral.map(BoundValue::Interval)));

    let rank_g = if stats.is_dedekind {
        group_rank_bruteforce(g, budget)
    } else {
        Err(Error::NotDedekind)
    };
    let rank_note = rank_g.as_ref().map_or("?".to_string(), |r| r.to_string());
    let params = format!("{b}, r={r}, r_P={}, r_2={}, Rank(G)={rank_note}", stats.r_p, stats.r2());
    rows.push(BoundRow::from_result(
        "dedekind_upper",
        format!("Dedekind upper bound ({params})"),
        rank_g
            .clone()
            .and_then(|rg| dedekind_upper_bound(stats, rg, q))
            .map(BoundValue::Integer),
    ));
    rows.push(BoundRow::from_result(
        "dedekind_end_upper",
        format!("Dedekind End upper bound ({params})"),
        rank_g
            .and_then(|rg| dedekind_end_upper_bound(stats, rg, q))
            .map(BoundValue::Integer),
    ));

    rows.push(BoundRow::from_result(
        "general_upper",
        format!("log2|G| upper bound ({b}, r={r}, r_P={}, r_2={}, |G|={})", stats.r_p, stats.r2(), stats.order),
        general_upper_bound(stats, q).map(BoundValue::Real),
    ));

    let degree = natural_degree(family, g.order());
    rows.push(BoundRow::from_result(
        "permutation_upper",
        format!("permutation-degree upper bound ({b}, n={degree}, r={r}, r_2={})", stats.r2()),
        permutation_upper_bound(stats, degree, q).map(BoundValue::Integer),
    ));

    Ok(rows)
}

/// Exact `Rank(Aut(A^G))` by realizing the decomposition and searching.
pub fn exact_aut_rank(d: &AutDecomposition, limits: &Limits) -> Result<usize> {
    let aut = crate::shift::realize_aut_group(d, limits)?;
    group_rank_bruteforce(&aut, &limits.rank)
}

/// Families of finite quotients `Z / p^i Z` of the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientFamily {
    /// `Z > pZ > p²Z > …`, quotients `C_{p^i}`.
    CyclicPrimePowers(usize),
}

impl QuotientFamily {
    /// Accepts `c<p>pow` for a prime `p`, e.g. `c2pow`.
    pub fn parse(s: &str) -> Result<Self> {
        let p = s
            .strip_prefix('c')
            .and_then(|r| r.strip_suffix("pow"))
            .and_then(|p| p.parse::<usize>().ok())
            .filter(|&p| is_prime(p))
            .ok_or_else(|| Error::Parse {
                spec: s.to_string(),
                reason: "expected c<p>pow with p prime".into(),
            })?;
        Ok(QuotientFamily::CyclicPrimePowers(p))
    }

    pub fn quotient(&self, i: u32) -> Result<FiniteGroup> {
        match *self {
            QuotientFamily::CyclicPrimePowers(p) => {
                let order = p
                    .checked_pow(i)
                    .ok_or_else(|| Error::capacity("quotient order", format!("{p}^{i}"), usize::MAX))?;
                Ok(FiniteGroup::cyclic(order))
            }
        }
    }
}

/// One step of the descending chain: the finite quotient `G/N_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRow {
    pub depth: u32,
    pub label: String,
    pub order: usize,
    pub r: usize,
    pub r2: usize,
    pub normal_count: usize,
    pub lower_bound: u64,
}

/// Evaluates the class-count lower bound on the quotients `G/N_1, …, G/N_k`.
/// Each quotient has at least `i + 1` normal subgroups, so the lower bound at
/// depth `i` is at least `i`; both facts are checked.
pub fn chain_growth_demo(family: QuotientFamily, depth: u32, q: usize, limits: &Limits) -> Result<Vec<ChainRow>> {
    check_q(q)?;
    let mut rows = Vec::with_capacity(depth as usize);
    let mut running_max = 0;
    for i in 1..=depth {
        let g = family.quotient(i)?;
        if g.order() > limits.lattice_max_order {
            return Err(Error::capacity("chain quotient order", g.order(), limits.lattice_max_order));
        }
        let l = enumerate_lattice(&g, limits)?;
        let stats = l.stats(&limits.rank);
        let lb = lower_bound(&stats, q)?;
        if stats.normal_count < i as usize + 1 {
            return Err(Error::CrossCheck(format!(
                "{} has {} normal subgroups, fewer than {}",
                g.label(),
                stats.normal_count,
                i + 1
            )));
        }
        running_max = running_max.max(lb);
        if running_max < i as u64 {
            return Err(Error::CrossCheck(format!("lower bounds stalled below {i} at depth {i}")));
        }
        rows.push(ChainRow {
            depth: i,
            label: g.label().to_string(),
            order: g.order(),
            r: stats.r,
            r2: stats.r2(),
            normal_count: stats.normal_count,
            lower_bound: lb,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn stats(spec: &str) -> LatticeStats {
        let l = enumerate_lattice(&corpus::group(spec).unwrap(), &Limits::default()).unwrap();
        l.stats(&RankBudget::default())
    }

    /// Divisors by plain enumeration.
    fn divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisor_stats(12), DivisorStats { n: 12, d: 6, d_minus: 2, d_plus: 4 });
        assert_eq!(divisor_stats(8), DivisorStats { n: 8, d: 4, d_minus: 1, d_plus: 3 });
        assert_eq!(divisor_stats(1), DivisorStats { n: 1, d: 1, d_minus: 1, d_plus: 0 });
    }

    #[test]
    fn divisor_stats_match_enumeration() {
        for n in 1..=500 {
            let ds = divisors(n);
            let s = divisor_stats(n);
            assert_eq!(s.d, ds.len() as u64);
            assert_eq!(s.d_plus, ds.iter().filter(|&&d| d % 2 == 0).count() as u64);
            assert_eq!(s.d, s.d_minus + s.d_plus);
            assert!(s.d_minus >= 1);
            assert_eq!(s.d_plus == 0, n % 2 == 1);
        }
    }

    #[test]
    fn cyclic_examples() {
        let i = cyclic_rank_interval(8, 2).unwrap();
        assert_eq!((i.lower, i.upper), (6, Upper::Bounded(6)));
        let i = cyclic_rank_interval(3, 2).unwrap();
        assert_eq!((i.lower, i.upper), (2, Upper::Bounded(2)));
        let i = cyclic_rank_interval(12, 2).unwrap();
        assert_eq!((i.lower, i.upper), (9, Upper::Bounded(9)));
        assert!(cyclic_rank_interval(1, 2).is_err());
    }

    #[test]
    fn cyclic_powers_of_two_are_exact() {
        for k in 1..=10u32 {
            for q in [2, 3, 4] {
                let i = cyclic_rank_interval(1 << k, q).unwrap();
                assert!(i.is_exact());
                assert_eq!(i.lower, 2 * k as u64 + (q != 2) as u64);
            }
        }
    }

    #[test]
    fn dihedral_examples() {
        let cases = [((3, 2), (5, 7)), ((3, 3), (6, 9)), ((4, 2), (10, 12)), ((4, 3), (15, 18))];
        for ((n, q), (lo, hi)) in cases {
            let i = dihedral_rank_interval(n, q).unwrap();
            assert_eq!((i.lower, i.upper), (lo, Upper::Bounded(hi)), "n={n}, q={q}");
        }
        assert!(dihedral_rank_interval(2, 2).is_err());
    }

    #[test]
    fn interval_widths_equal_slack() {
        for n in 3..=100 {
            for q in [2, 3] {
                let i = dihedral_rank_interval(n, q).unwrap();
                assert_eq!(i.width(), i.epsilon_slack);
                let d = divisor_stats(2 * n).d;
                assert_eq!(i.epsilon_slack, Some(if q == 2 { d - 2 } else { d - 1 }));
            }
        }
        for n in 2..=100 {
            for q in [2, 3] {
                let i = cyclic_rank_interval(n, q).unwrap();
                assert_eq!(i.width(), i.epsilon_slack);
                if !n.is_power_of_two() {
                    let s = divisor_stats(n);
                    assert_eq!(i.epsilon_slack, Some(s.d - s.d_plus - 2));
                }
            }
        }
    }

    #[test]
    fn dedekind_examples() {
        let q8 = stats("Q8");
        assert_eq!(dedekind_upper_bound(&q8, 2, 2).unwrap(), 12);
        assert_eq!(dedekind_upper_bound(&q8, 2, 3).unwrap(), 16);
        assert_eq!(dedekind_upper_bound(&stats("C4"), 1, 2).unwrap(), 5);
        assert_eq!(dedekind_upper_bound(&stats("S4"), 2, 2).unwrap_err(), Error::NotDedekind);
    }

    #[test]
    fn dedekind_end_examples() {
        assert_eq!(dedekind_end_upper_bound(&stats("Q8"), 2, 2).unwrap(), 30);
        assert_eq!(dedekind_end_upper_bound(&stats("C2"), 1, 2).unwrap(), 4);
        assert_eq!(dedekind_end_upper_bound(&stats("C3"), 1, 3).unwrap(), 7);
        assert_eq!(dedekind_end_upper_bound(&stats("D8"), 2, 2).unwrap_err(), Error::NotDedekind);
    }

    #[test]
    fn general_examples() {
        let s4 = stats("S4");
        assert_eq!(s4.r_p, 2);
        let b = general_upper_bound(&s4, 2).unwrap();
        assert!((b.value - (8.0 * 24f64.log2() + 20.0)).abs() < 1e-12);
        assert_eq!(b.ceiling, 57);
        let b = general_upper_bound(&stats("C2"), 2).unwrap();
        assert_eq!((b.value, b.ceiling), (2.0, 2));
        let b = general_upper_bound(&stats("Q8"), 3).unwrap();
        assert_eq!((b.value, b.ceiling), (18.0, 18));
    }

    #[test]
    fn permutation_examples() {
        let s4 = stats("S4");
        assert_eq!(permutation_upper_bound(&s4, 4, 2).unwrap(), 40);
        assert_eq!(permutation_upper_bound(&s4, 4, 3).unwrap(), 42);
        assert_eq!(permutation_upper_bound(&stats("Q8"), 8, 2).unwrap(), 28);
        assert_eq!(permutation_upper_bound(&s4, 3, 2).unwrap_err(), Error::Degree(3));
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower_bound(&stats("S4"), 2).unwrap(), 10);
        assert_eq!(lower_bound(&stats("Q8"), 3).unwrap(), 6);
        assert_eq!(lower_bound(&stats("C2"), 2).unwrap(), 1);
    }

    #[test]
    fn aux_examples() {
        let limits = Limits::default();
        let check = |spec: &str, sub_order: usize, pick: &dyn Fn(&SubgroupLattice, usize) -> bool, expected: u64| {
            let l = enumerate_lattice(&corpus::group(spec).unwrap(), &limits).unwrap();
            let st = l.stats(&limits.rank);
            let class = (0..l.classes().len())
                .find(|&c| {
                    let rep = l.classes()[c].representative;
                    l.subgroup(rep).len() == sub_order && pick(&l, rep)
                })
                .unwrap();
            assert_eq!(aux_wreath_rank_bound(&l, &st, class, 2).unwrap(), expected, "{spec}");
        };
        check("C4", 2, &|_, _| true, 1);
        check("C9", 3, &|_, _| true, 2);
        // the normal Klein subgroup of S4, index 6
        check("S4", 4, &|l, h| l.is_normal(h), 4);
    }

    #[test]
    fn family_recognition() {
        assert_eq!(recognize_family(&corpus::group("C2xC3").unwrap()), Family::Cyclic(6));
        assert_eq!(recognize_family(&corpus::group("S3").unwrap()), Family::Dihedral(3));
        assert_eq!(recognize_family(&corpus::group("C2xS3").unwrap()), Family::Dihedral(6));
        assert_eq!(recognize_family(&corpus::group("Q8").unwrap()), Family::Other);
    }

    #[test]
    fn chain_examples() {
        let limits = Limits::default();
        let lbs = |k, q| -> Vec<u64> {
            chain_growth_demo(QuotientFamily::CyclicPrimePowers(2), k, q, &limits)
                .unwrap()
                .iter()
                .map(|r| r.lower_bound)
                .collect()
        };
        assert_eq!(lbs(4, 2), vec![1, 2, 3, 4]);
        assert_eq!(lbs(3, 3), vec![2, 3, 4]);
        assert_eq!(lbs(1, 2), vec![1]);
        let small = Limits { lattice_max_order: 16, ..Limits::default() };
        assert!(chain_growth_demo(QuotientFamily::CyclicPrimePowers(2), 5, 2, &small).is_err());
    }

    #[test]
    fn quotient_family_parsing() {
        assert_eq!(QuotientFamily::parse("c2pow").unwrap(), QuotientFamily::CyclicPrimePowers(2));
        assert_eq!(QuotientFamily::parse("c3pow").unwrap(), QuotientFamily::CyclicPrimePowers(3));
        assert!(QuotientFamily::parse("c4pow").is_err());
        assert!(QuotientFamily::parse("z").is_err());
    }

    #[test]
    fn bound_table_marks_inapplicable_rows() {
        let g = corpus::group("S4").unwrap();
        let st = stats("S4");
        let rows = bound_table(&g, Family::Symmetric(4), &st, 2, &RankBudget::default()).unwrap();
        let get = |name| rows.iter().find(|r| r.name == name).unwrap();
        assert!(!get("dedekind_upper").applicable);
        assert!(!get("cyclic_interval").applicable);
        assert_eq!(get("permutation_upper").value, BoundValue::Integer(40));
        assert_eq!(get("lower").value, BoundValue::Integer(10));
        assert_eq!(rows.len(), 7);
    }
}
