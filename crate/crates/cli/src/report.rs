//! Serializable report assembled from the library's results.
//!
//! Every command fills the same top-level shape; sections a command does not
//! compute are `null`. Big integers are decimal strings.

use serde::Serialize;
use shiftrank::bounds::{self, BoundRow, BoundValue, ChainRow, QuotientFamily};
use shiftrank::group::group_rank_bruteforce;
use shiftrank::lattice::{enumerate_lattice, LatticeStats, SubgroupLattice};
use shiftrank::oracle::FullShift;
use shiftrank::shift::{self, AlphaProfile, AutDecomposition};
use shiftrank::spec::Family;
use shiftrank::{Error, FiniteGroup, Limits, Result};

#[derive(Debug, Serialize)]
pub struct Report {
    pub group: Option<GroupSection>,
    pub q: Option<usize>,
    pub lattice: Option<LatticeSection>,
    pub alpha: Option<AlphaSection>,
    pub aut: Option<AutSection>,
    pub bounds: Option<BoundsSection>,
    pub oracle: Option<OracleSection>,
    pub meta: Meta,
}

#[derive(Debug, Serialize)]
pub struct GroupSection {
    pub label: String,
    pub order: usize,
    pub family: String,
    pub abelian: bool,
    pub cyclic: bool,
    /// `null` when the lattice is beyond the lattice capacity.
    pub dedekind: Option<bool>,
    /// `null` when the rank search ran out of budget.
    pub rank: Option<usize>,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct LatticeSection {
    pub subgroup_count: usize,
    pub r: usize,
    pub r_by_index: Vec<IndexCount>,
    pub r_2: usize,
    pub r_p: usize,
    pub dedekind: bool,
    pub normal_count: usize,
    pub length: usize,
    pub srank: Option<usize>,
    pub classes: Vec<ClassRow>,
    pub subgroups: Option<Vec<SubgroupRow>>,
    pub mobius: Option<Vec<Vec<i64>>>,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct IndexCount {
    pub index: usize,
    pub count: usize,
}

#[derive(Debug, Serialize)]
pub struct ClassRow {
    pub class: usize,
    pub representative: usize,
    pub size: usize,
    pub subgroup_order: usize,
    pub index: usize,
    pub normalizer_order: usize,
    pub normal: bool,
}

#[derive(Debug, Serialize)]
pub struct SubgroupRow {
    pub id: usize,
    pub order: usize,
    pub class: usize,
    pub normal: bool,
    pub elements: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct AlphaSection {
    pub entries: Vec<AlphaRow>,
    pub orbit_count: String,
    pub burnside_count: String,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct AlphaRow {
    pub class: usize,
    pub index: usize,
    pub quotient_order: usize,
    pub alpha: String,
}

#[derive(Debug, Serialize)]
pub struct AutSection {
    pub structure: String,
    pub factors: Vec<FactorRow>,
    /// Exact decimal order; `null` when longer than the digit limit.
    pub order: Option<String>,
    pub order_expression: String,
    /// Fixed-point rendering of `log₂|Aut|`.
    pub order_log2: String,
    pub rank: Option<usize>,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct FactorRow {
    pub class: usize,
    pub quotient: String,
    pub quotient_order: usize,
    pub degree: String,
}

#[derive(Debug, Serialize)]
pub struct BoundsSection {
    pub rows: Vec<BoundReport>,
    pub chain: Option<ChainSection>,
}

#[derive(Debug, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub applicable: bool,
    pub value: Option<BoundJson>,
    pub provenance: String,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum BoundJson {
    Integer(u64),
    Interval { lower: u64, upper: Option<u64>, epsilon_slack: Option<u64> },
    Real { value: String, ceiling: u64 },
}

#[derive(Debug, Serialize)]
pub struct ChainSection {
    pub family: String,
    pub depth: u32,
    pub rows: Vec<ChainReport>,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct ChainReport {
    pub depth: u32,
    pub quotient: String,
    pub order: usize,
    pub r: usize,
    pub r_2: usize,
    pub normal_count: usize,
    pub lower: u64,
}

#[derive(Debug, Serialize)]
pub struct OracleSection {
    pub configurations: String,
    pub census: Vec<String>,
    pub census_match: bool,
    pub endomorphism_count: String,
    pub aut_count: String,
    pub structure_order: String,
    pub verdict: String,
    pub source: String,
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub version: String,
    pub command: String,
    pub threads: usize,
    pub max_order: usize,
    pub lattice_max_order: usize,
    pub census_budget: u64,
    pub rule_budget: u64,
    pub max_order_digits: u64,
    pub rank_budget: RankBudgetJson,
}

#[derive(Debug, Serialize)]
pub struct RankBudgetJson {
    pub max_order: usize,
    pub max_size: usize,
    pub max_closures: u64,
}

impl Meta {
    pub fn new(command: &str, limits: &Limits) -> Self {
        Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            threads: rayon::current_num_threads(),
            max_order: limits.max_order,
            lattice_max_order: limits.lattice_max_order,
            census_budget: limits.census_budget,
            rule_budget: limits.rule_budget,
            max_order_digits: limits.max_order_digits,
            rank_budget: RankBudgetJson {
                max_order: limits.rank.max_order,
                max_size: limits.rank.max_size,
                max_closures: limits.rank.max_closures,
            },
        }
    }
}

impl Report {
    pub fn empty(command: &str, limits: &Limits) -> Self {
        Report {
            group: None,
            q: None,
            lattice: None,
            alpha: None,
            aut: None,
            bounds: None,
            oracle: None,
            meta: Meta::new(command, limits),
        }
    }

    /// `true` unless an oracle ran and disagreed with the formulas.
    pub fn verdict_ok(&self) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.verdict == "MATCH")
    }
}

/// A group together with how it was named.
pub struct Subject {
    pub group: FiniteGroup,
    pub family: Family,
}

fn family_name(f: Family) -> String {
    match f {
        Family::Cyclic(n) => format!("cyclic(n={n})"),
        Family::Dihedral(n) => format!("dihedral(n={n}, order={})", 2 * n),
        Family::Symmetric(n) => format!("symmetric(n={n})"),
        Family::Alternating(n) => format!("alternating(n={n})"),
        Family::Other => "other".to_string(),
    }
}

fn optional_rank(g: &FiniteGroup, limits: &Limits) -> Result<Option<usize>> {
    match group_rank_bruteforce(g, &limits.rank) {
        Ok(r) => Ok(Some(r)),
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn group_section(s: &Subject, limits: &Limits) -> Result<GroupSection> {
    let g = &s.group;
    let dedekind = if g.order() <= limits.lattice_max_order {
        Some(enumerate_lattice(g, limits)?.stats(&limits.rank).is_dedekind)
    } else {
        None
    };
    Ok(GroupSection {
        label: g.label().to_string(),
        order: g.order(),
        family: family_name(s.family),
        abelian: g.is_abelian(),
        cyclic: g.is_cyclic(),
        dedekind,
        rank: optional_rank(g, limits)?,
        source: "Cayley table; rank by exhaustive generating-set search".into(),
    })
}

pub fn lattice_section(l: &SubgroupLattice, stats: &LatticeStats, detailed: bool, mobius: bool) -> LatticeSection {
    let classes = l
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| ClassRow {
            class: i,
            representative: c.representative,
            size: c.members.len(),
            subgroup_order: l.subgroup(c.representative).len(),
            index: c.index,
            normalizer_order: l.normalizer(c.representative).len(),
            normal: l.is_normal(c.representative),
        })
        .collect();
    let subgroups = detailed.then(|| {
        (0..l.len())
            .map(|h| SubgroupRow {
                id: h,
                order: l.subgroup(h).len(),
                class: l.class_of(h),
                normal: l.is_normal(h),
                elements: l.subgroup(h).elements(),
            })
            .collect()
    });
    let mobius = mobius.then(|| (0..l.len()).map(|h| l.mobius_row(h).to_vec()).collect());
    LatticeSection {
        subgroup_count: l.len(),
        r: stats.r,
        r_by_index: stats
            .r_by_index
            .iter()
            .map(|(&index, &count)| IndexCount { index, count })
            .collect(),
        r_2: stats.r2(),
        r_p: stats.r_p,
        dedekind: stats.is_dedekind,
        normal_count: stats.normal_count,
        length: stats.length,
        srank: stats.srank,
        classes,
        subgroups,
        mobius,
        source: "complete subgroup lattice".into(),
    }
}

pub fn alpha_section(g: &FiniteGroup, profile: &AlphaProfile) -> AlphaSection {
    AlphaSection {
        entries: profile
            .entries
            .iter()
            .map(|e| AlphaRow {
                class: e.class,
                index: e.index,
                quotient_order: e.quotient_order,
                alpha: e.alpha.to_string(),
            })
            .collect(),
        orbit_count: profile.orbit_count().to_string(),
        burnside_count: shift::burnside_count(g, profile.q).to_string(),
        source: "Moebius inversion over the subgroup lattice".into(),
    }
}

pub fn aut_section(d: &AutDecomposition, limits: &Limits, with_rank: bool) -> Result<AutSection> {
    let order = match d.order(limits.max_order_digits) {
        Ok(o) => Some(o.to_string()),
        Err(Error::Capacity { .. }) => None,
        Err(e) => return Err(e),
    };
    let rank = if with_rank && d.order_log2() <= (limits.rank.max_order as f64).log2() + 1e-9 {
        match bounds::exact_aut_rank(d, limits) {
            Ok(r) => Some(r),
            Err(Error::BudgetExceeded(_) | Error::Capacity { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(AutSection {
        structure: d.to_string(),
        factors: d
            .factors
            .iter()
            .map(|f| FactorRow {
                class: f.class,
                quotient: f.quotient.label().to_string(),
                quotient_order: f.quotient.order(),
                degree: f.degree.to_string(),
            })
            .collect(),
        order,
        order_expression: d.order_expression(),
        order_log2: format!("{:.6}", d.order_log2()),
        rank,
        source: "product of (N_G(H)/H) wr S_alpha over subgroup classes".into(),
    })
}

fn bound_report(row: BoundRow) -> BoundReport {
    let value = match row.value {
        BoundValue::Integer(v) => Some(BoundJson::Integer(v)),
        BoundValue::Interval(i) => Some(BoundJson::Interval {
            lower: i.lower,
            upper: i.upper_value(),
            epsilon_slack: i.epsilon_slack,
        }),
        BoundValue::Real(r) => Some(BoundJson::Real {
            value: format!("{:.6}", r.value),
            ceiling: r.ceiling,
        }),
        BoundValue::NotApplicable => None,
    };
    BoundReport {
        name: row.name.to_string(),
        applicable: row.applicable,
        value,
        provenance: row.provenance,
    }
}

pub fn bounds_section(s: &Subject, stats: &LatticeStats, q: usize, limits: &Limits) -> Result<BoundsSection> {
    let rows = bounds::bound_table(&s.group, s.family, stats, q, &limits.rank)?;
    Ok(BoundsSection {
        rows: rows.into_iter().map(bound_report).collect(),
        chain: None,
    })
}

pub fn chain_section(name: &str, family: QuotientFamily, depth: u32, q: usize, limits: &Limits) -> Result<BoundsSection> {
    let rows = bounds::chain_growth_demo(family, depth, q, limits)?;
    Ok(BoundsSection {
        rows: Vec::new(),
        chain: Some(ChainSection {
            family: name.to_string(),
            depth,
            rows: rows.into_iter().map(chain_report).collect(),
            source: "class-count lower bound on the finite quotients".into(),
        }),
    })
}

fn chain_report(r: ChainRow) -> ChainReport {
    ChainReport {
        depth: r.depth,
        quotient: r.label,
        order: r.order,
        r: r.r,
        r_2: r.r2,
        normal_count: r.normal_count,
        lower: r.lower_bound,
    }
}

pub fn oracle_section(
    l: &SubgroupLattice,
    profile: &AlphaProfile,
    d: &AutDecomposition,
    limits: &Limits,
) -> Result<OracleSection> {
    let g = l.group();
    let census = shift::alpha_census_bruteforce(l, profile.q, limits.census_budget)?;
    let census_match = census.entries == profile.entries;
    let shift_space = FullShift::new(g, profile.q)?;
    let aut_count = shift_space.count_automorphisms(limits.rule_budget)?;
    let structure_order = d.order(limits.max_order_digits)?;
    let verdict = if census_match && structure_order == aut_count.into() {
        "MATCH"
    } else {
        "MISMATCH"
    };
    Ok(OracleSection {
        configurations: shift_space.configuration_count().to_string(),
        census: census.entries.iter().map(|e| e.alpha.to_string()).collect(),
        census_match,
        endomorphism_count: shift_space
            .rule_count()
            .map_or_else(|| format!("{}^{}", profile.q, shift_space.configuration_count()), |c| c.to_string()),
        aut_count: aut_count.to_string(),
        structure_order: structure_order.to_string(),
        verdict: verdict.to_string(),
        source: "exhaustive enumeration of local rules with memory set G".into(),
    })
}
