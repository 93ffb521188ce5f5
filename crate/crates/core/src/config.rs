//! Size limits and search budgets.
//!
//! Every exhaustive routine in the crate is guarded by one of these values.
//! None of them is hard-coded at a call site; callers pass a [`Limits`] (or
//! the relevant sub-budget) explicitly.

/// Budget for exact rank searches over a group or subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankBudget {
    /// Largest group order the search will attempt.
    pub max_order: usize,
    /// Largest generating-set size tried before giving up.
    pub max_size: usize,
    /// Maximum number of subgroup closures computed by one search.
    pub max_closures: u64,
}

impl Default for RankBudget {
    fn default() -> Self {
        RankBudget {
            max_order: 512,
            max_size: 6,
            max_closures: 2_000_000,
        }
    }
}

/// Budget for exhaustive monoid rank searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidBudget {
    pub max_elements: usize,
    pub max_size: usize,
    pub max_closures: u64,
}

impl Default for MonoidBudget {
    fn default() -> Self {
        MonoidBudget {
            max_elements: 256,
            max_size: 8,
            max_closures: 5_000_000,
        }
    }
}

/// All configurable limits in one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order any constructor will materialize.
    pub max_order: usize,
    /// Largest group order whose subgroup lattice is enumerated.
    pub lattice_max_order: usize,
    /// Largest number of configurations `q^|G|` scanned by the orbit census.
    pub census_budget: u64,
    /// Largest number of local rules `q^(q^|G|)` enumerated by the CA oracle.
    pub rule_budget: u64,
    /// Largest decimal length printed for an exact group order.
    pub max_order_digits: u64,
    pub rank: RankBudget,
    pub monoid: MonoidBudget,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 10080,
            lattice_max_order: 64,
            census_budget: 1 << 24,
            rule_budget: 1 << 20,
            max_order_digits: 100_000,
            rank: RankBudget::default(),
            monoid: MonoidBudget::default(),
        }
    }
}
