//! Orbit census of the shift action and the structure of `Aut(A^G)`.
//!
//! For `H ≤ G`, a configuration is fixed by `H` iff it is constant on the
//! right cosets `Hg`, so `q^[G:H]` configurations are fixed by `H`. Möbius
//! inversion over the subgroup lattice turns those counts into the number
//! `θ(H) = Σ_{K ⊇ H} μ(H, K) q^[G:K]` of configurations whose stabilizer is
//! exactly `H`. Inside one orbit with stabilizer class `[H]`, exactly
//! `[N_G(H) : H]` points have stabilizer equal to `H`, so
//! `α_[H] = θ(H) / [N_G(H) : H]`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::group::{construct_wreath, direct_product, FiniteGroup, WreathSpec};
use crate::lattice::SubgroupLattice;
use crate::oracle::{Configuration, FullShift};
use crate::subset::ElementSubset;

/// `α_[H]` and the normalizer quotient for one conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaEntry {
    /// Class id in the lattice's class order.
    pub class: usize,
    /// `[G : H]`
    pub index: usize,
    pub alpha: BigUint,
    /// `[N_G(H) : H]`, the order of `N_G(H)/H`.
    pub quotient_order: usize,
}

/// The orbit census `α_[H](G; A)` for every conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaProfile {
    pub group_order: usize,
    pub q: usize,
    pub entries: Vec<AlphaEntry>,
}

impl AlphaProfile {
    /// Number of orbits, `Σ α_[H]`.
    pub fn orbit_count(&self) -> BigUint {
        self.entries.iter().map(|e| &e.alpha).sum()
    }

    pub fn alpha(&self, class: usize) -> &BigUint {
        &self.entries[class].alpha
    }

    /// Checks the counting identities and the known values of `α`:
    /// `Σ α·[G:H] = q^|G|`, `Σ α` equals the Burnside count, `α_[G] = q`,
    /// `α = 1` exactly when `[G:H] = 2` and `q = 2`, and `α ≥ 3` when `q ≥ 3`.
    pub fn check_invariants(&self, g: &FiniteGroup) -> Result<()> {
        let fail = |what: String| Err(Error::CrossCheck(format!("alpha profile for {} (q={}): {what}", g.label(), self.q)));
        let q = BigUint::from(self.q);
        let total: BigUint = self.entries.iter().map(|e| &e.alpha * e.index).sum();
        if total != q.pow(g.order() as u32) {
            return fail(format!("orbit sizes sum to {total}, not q^|G|"));
        }
        let burnside = burnside_count(g, self.q);
        if self.orbit_count() != burnside {
            return fail(format!("{} orbits but the Burnside count is {burnside}", self.orbit_count()));
        }
        for e in &self.entries {
            if e.index == 1 && e.alpha != q {
                return fail(format!("alpha of the whole group is {}", e.alpha));
            }
            if (e.alpha == BigUint::one()) != (e.index == 2 && self.q == 2) {
                return fail(format!("alpha = {} for a class of index {}", e.alpha, e.index));
            }
            if self.q >= 3 && e.alpha < BigUint::from(3u32) {
                return fail(format!("alpha = {} < 3 with q >= 3", e.alpha));
            }
        }
        Ok(())
    }
}

/// `(1/|G|) Σ_g q^(|G| / ord(g))`: left multiplication by `g` splits `G` into
/// `|G|/ord(g)` cycles.
pub fn burnside_count(g: &FiniteGroup, q: usize) -> BigUint {
    let q = BigUint::from(q);
    let sum: BigUint = g
        .elements()
        .map(|a| q.pow((g.order() / g.element_order(a)) as u32))
        .sum();
    let (quot, rem) = sum.div_rem(&BigUint::from(g.order()));
    debug_assert!(rem.is_zero());
    quot
}

/// `α_[H]` for every class via the Möbius function of the lattice.
pub fn alpha_profile(l: &SubgroupLattice, q: usize) -> Result<AlphaProfile> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!("alphabet size {q} must be at least 2")));
    }
    let g = l.group();
    let n = g.order();
    let qb = BigInt::from(q);
    let mut entries = Vec::with_capacity(l.classes().len());
    for (class, c) in l.classes().iter().enumerate() {
        let h = c.representative;
        let row = l.mobius_row(h);
        let theta: BigInt = (0..l.len())
            .filter(|&k| row[k] != 0)
            .map(|k| BigInt::from(row[k]) * qb.pow((n / l.subgroup(k).len()) as u32))
            .sum();
        let quotient_order = l.normalizer(h).len() / l.subgroup(h).len();
        let (alpha, rem) = theta.div_rem(&BigInt::from(quotient_order));
        if !rem.is_zero() {
            return Err(Error::CrossCheck(format!(
                "θ = {theta} is not divisible by [N:H] = {quotient_order} for class {class}"
            )));
        }
        let alpha = alpha
            .to_biguint()
            .ok_or_else(|| Error::CrossCheck(format!("negative orbit count {alpha} for class {class}")))?;
        entries.push(AlphaEntry {
            class,
            index: c.index,
            alpha,
            quotient_order,
        });
    }
    let profile = AlphaProfile {
        group_order: n,
        q,
        entries,
    };
    profile.check_invariants(g)?;
    Ok(profile)
}

/// `α_[H]` by scanning every configuration.
///
/// Configurations are visited in increasing code order; each unvisited one
/// starts a new orbit, whose members are marked and whose stabilizer is read
/// off elementwise. Only the lattice's class lookup is shared with
/// [`alpha_profile`].
pub fn alpha_census_bruteforce(l: &SubgroupLattice, q: usize, budget: u64) -> Result<AlphaProfile> {
    let g = l.group();
    let shift = FullShift::new(g, q)?;
    let total = shift.configuration_count();
    if total > budget {
        return Err(Error::capacity("census configuration count", total, budget));
    }
    let mut visited = fixedbitset::FixedBitSet::with_capacity(total as usize);
    let mut alpha = vec![BigUint::zero(); l.classes().len()];
    for code in 0..total {
        if visited.contains(code as usize) {
            continue;
        }
        let x = Configuration(code);
        let digits = shift.digits(x);
        let mut stabilizer = ElementSubset::empty(g.order());
        let mut orbit_size = 0usize;
        for a in g.elements() {
            let y = shift.shift_digits(a, &digits);
            if y == x {
                stabilizer.insert(a);
            }
            if !visited.put(y.0 as usize) {
                orbit_size += 1;
            }
        }
        let h = l
            .index_of(&stabilizer)
            .ok_or_else(|| Error::CrossCheck(format!("stabilizer of {code} is not in the lattice")))?;
        if orbit_size * stabilizer.len() != g.order() {
            return Err(Error::CrossCheck(format!("orbit of {code} violates orbit-stabilizer")));
        }
        alpha[l.class_of(h)] += 1u32;
    }
    let entries = l
        .classes()
        .iter()
        .zip(alpha)
        .enumerate()
        .map(|(class, (c, alpha))| AlphaEntry {
            class,
            index: c.index,
            alpha,
            quotient_order: l.normalizer(c.representative).len() / l.subgroup(c.representative).len(),
        })
        .collect();
    Ok(AlphaProfile {
        group_order: g.order(),
        q,
        entries,
    })
}

/// One factor `(N_G(H)/H) ≀ S_α` of the decomposition.
#[derive(Debug, Clone)]
pub struct AutFactor {
    pub class: usize,
    pub quotient: FiniteGroup,
    pub degree: BigUint,
}

/// `Aut(A^G) ≅ ∏_[H] (N_G(H)/H) ≀ S_α[H]`.
#[derive(Debug, Clone)]
pub struct AutDecomposition {
    pub q: usize,
    pub factors: Vec<AutFactor>,
}

/// Builds each quotient `N_G(H)/H` and pairs it with `α_[H]`, in class order.
pub fn aut_decomposition(l: &SubgroupLattice, profile: &AlphaProfile) -> Result<AutDecomposition> {
    let g = l.group();
    if profile.entries.len() != l.classes().len() || profile.group_order != g.order() {
        return Err(Error::ContextMismatch("profile does not belong to this lattice".into()));
    }
    let factors = profile
        .entries
        .iter()
        .map(|e| {
            let rep = l.classes()[e.class].representative;
            let (normalizer, embedding) = g.subgroup_as_group(l.normalizer(rep), "N")?;
            let mut local = vec![usize::MAX; g.order()];
            for (i, &a) in embedding.iter().enumerate() {
                local[a] = i;
            }
            let h = ElementSubset::from_elements(normalizer.order(), l.subgroup(rep).iter().map(|a| local[a]));
            let quotient = normalizer.quotient_group(&h)?;
            let label = describe(&quotient);
            let quotient = quotient.with_label(label);
            Ok(AutFactor {
                class: e.class,
                quotient,
                degree: e.alpha.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AutDecomposition { q: profile.q, factors })
}

/// Short structural name for small quotients; falls back to the order.
fn describe(g: &FiniteGroup) -> String {
    let n = g.order();
    if g.is_cyclic() {
        format!("C{n}")
    } else if g.is_abelian() {
        format!("Ab{n}")
    } else {
        format!("G{n}")
    }
}

fn log2_factorial(n: &BigUint) -> f64 {
    match n.to_u64() {
        Some(k) if k <= 1024 => (2..=k).map(|i| (i as f64).log2()).sum(),
        _ => {
            let x = n.to_f64().unwrap_or(f64::INFINITY);
            // Stirling series for ln Γ(x + 1)
            let ln = x * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI * x).ln() + 1.0 / (12.0 * x)
                - 1.0 / (360.0 * x.powi(3));
            ln / std::f64::consts::LN_2
        }
    }
}

fn factorial(n: u64) -> BigUint {
    fn product(lo: u64, hi: u64) -> BigUint {
        if hi - lo < 16 {
            return (lo..=hi).fold(BigUint::one(), |acc, k| acc * k);
        }
        let mid = lo + (hi - lo) / 2;
        product(lo, mid) * product(mid + 1, hi)
    }
    if n < 2 {
        BigUint::one()
    } else {
        product(2, n)
    }
}

impl AutFactor {
    pub fn order_log2(&self) -> f64 {
        let alpha = self.degree.to_f64().unwrap_or(f64::INFINITY);
        alpha * (self.quotient.order() as f64).log2() + log2_factorial(&self.degree)
    }
}

impl AutDecomposition {
    /// `log₂ |Aut(A^G)|`.
    pub fn order_log2(&self) -> f64 {
        self.factors.iter().map(AutFactor::order_log2).sum()
    }

    /// Decimal digits of the order, estimated from `log₂`.
    pub fn estimated_digits(&self) -> f64 {
        self.order_log2() * std::f64::consts::LOG10_2 + 1.0
    }

    /// `∏ |N/H|^α · α!` as an exact integer, provided its decimal expansion
    /// has at most `max_digits` digits.
    pub fn order(&self, max_digits: u64) -> Result<BigUint> {
        let digits = self.estimated_digits();
        if digits > max_digits as f64 + 1.0 {
            return Err(Error::capacity("Aut order decimal length", format!("{digits:.0}"), max_digits));
        }
        let mut acc = BigUint::one();
        for f in &self.factors {
            let alpha = f.degree.to_u64().expect("bounded by the digit estimate");
            acc *= BigUint::from(f.quotient.order()).pow(alpha as u32) * factorial(alpha);
        }
        Ok(acc)
    }

    /// The order as an exact product expression, e.g. `1^2·2! × 2^1·1!`.
    pub fn order_expression(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("{}^{}·{}!", f.quotient.order(), f.degree, f.degree))
            .collect::<Vec<_>>()
            .join(" × ")
    }

    /// Number of factors with `α ≥ 1`.
    pub fn nontrivial_degree_count(&self) -> usize {
        self.factors.iter().filter(|f| !f.degree.is_zero()).count()
    }
}

impl fmt::Display for AutDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("({} wr S{})", x.quotient.label(), x.degree))
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Materializes `∏ (N/H) ≀ S_α` as a Cayley table.
pub fn realize_aut_group(d: &AutDecomposition, limits: &Limits) -> Result<FiniteGroup> {
    let log2_cap = (limits.max_order as f64).log2();
    if d.order_log2() > log2_cap + 1e-9 {
        return Err(Error::capacity("Aut group order", format!("2^{:.1}", d.order_log2()), limits.max_order));
    }
    let order = d.order(64)?;
    if order > BigUint::from(limits.max_order) {
        return Err(Error::capacity("Aut group order", order, limits.max_order));
    }
    let mut acc: Option<FiniteGroup> = None;
    for f in &d.factors {
        let degree = f.degree.to_usize().expect("bounded by max_order");
        if degree == 0 || (f.quotient.order() == 1 && degree == 1) {
            continue;
        }
        let w = construct_wreath(&WreathSpec::new(f.quotient.clone(), degree), limits)?;
        acc = Some(match acc {
            None => w,
            Some(a) => direct_product(&a, &w)?,
        });
    }
    Ok(acc.unwrap_or_else(FiniteGroup::trivial).with_label(format!("Aut[{d}]")))
}
