//! Automorphism groups of full shifts over finite groups.
//!
//! For a finite group `G` and an alphabet of size `q`, the automorphism group
//! of the full shift `A^G` decomposes as a direct product of wreath products
//! `(N_G(H)/H) ≀ S_α`, one per conjugacy class of subgroups `[H]`, where `α`
//! counts the shift orbits whose stabilizers lie in `[H]`. This crate
//! computes every ingredient of that decomposition exactly, evaluates rank
//! bounds derived from it, and checks all of it against brute-force
//! enumeration of cellular automata on small shifts.
//!
//! Module map:
//! - [`group`]: Cayley-table groups, named families, closure, quotients,
//!   isomorphism and exact rank search;
//! - [`lattice`]: subgroup lattices, conjugacy classes, Möbius function and
//!   lattice statistics;
//! - [`shift`]: orbit census, the structure decomposition and its realization;
//! - [`bounds`]: rank intervals and bounds with provenance;
//! - [`oracle`]: cellular automata, endomorphism enumeration and monoid ranks;
//! - [`spec`]: the group-spec grammar;
//! - [`corpus`]: the built-in list of test groups.

pub mod bounds;
pub mod config;
pub mod corpus;
mod error;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod shift;
pub mod spec;
mod subset;

pub use config::{Limits, MonoidBudget, RankBudget};
pub use error::{Error, ErrorKind, Result};
pub use group::FiniteGroup;
pub use subset::ElementSubset;
