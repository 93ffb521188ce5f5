//! Built-in corpus of small groups used by the verification suites.
//!
//! Every group of order at most 12 appears (up to isomorphism), followed by a
//! selection of groups of order 13 to 48.

use crate::config::Limits;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::spec::construct_group;

pub const BUILTIN: &[&str] = &[
    // orders 1..=12: complete up to isomorphism
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D6", "C7", "C8", "C2xC4", "C2xC2xC2", "D8", "Q8",
    "C9", "C3xC3", "C10", "D10", "C11", "C12", "C2xC6", "D12", "A4", "Dic12",
    // orders 13..=24
    "C13", "C14", "D14", "C15", "C16", "C4xC4", "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "C2xD8", "C2xQ8",
    "D16", "Dic16", "C17", "C18", "C3xC6", "D18", "C3xS3", "C3wrS2", "C19", "C20", "C2xC10", "D20",
    "Dic20", "C21", "C22", "D22", "C23", "C24", "C2xC12", "C2xC2xC6", "D24", "Dic24", "S4", "A4xC2",
    "C3xQ8", "C3xD8", "C4xS3", "C2xC2xS3",
    // larger
    "C2wrS3", "S3xS3", "C2xS4",
];

/// Builds every corpus group of order at most `max_order`.
pub fn groups_up_to(max_order: usize) -> Result<Vec<FiniteGroup>> {
    let limits = Limits::default();
    BUILTIN
        .iter()
        .map(|s| crate::spec::GroupSpec::parse(s))
        .filter(|s| s.as_ref().map_or(true, |s| s.order().is_some_and(|o| o <= max_order as u128)))
        .map(|s| s.and_then(|s| s.build(&limits)))
        .collect()
}

/// Builds one corpus entry by spec.
pub fn group(spec: &str) -> Result<FiniteGroup> {
    construct_group(spec, &Limits::default())
}
