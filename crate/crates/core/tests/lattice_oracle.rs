//! Subgroup lattices checked against a subset-by-subset search.

use std::collections::BTreeSet;

use shiftrank::corpus;
use shiftrank::lattice::enumerate_lattice;
use shiftrank::{FiniteGroup, Limits};

/// All subsets containing the identity that are closed under multiplication,
/// each as a sorted element list.
fn closed_subsets(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let mut found = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let contains = |a: usize| a == 0 || mask & (1 << (a - 1)) != 0;
        let members: Vec<usize> = (0..n).filter(|&a| contains(a)).collect();
        if members.iter().all(|&a| members.iter().all(|&b| contains(g.mul(a, b)))) {
            found.insert(members);
        }
    }
    found
}

#[test]
fn lattice_matches_subset_search_up_to_order_16() {
    let limits = Limits::default();
    for g in corpus::groups_up_to(16).unwrap() {
        let l = enumerate_lattice(&g, &limits).unwrap();
        let ours: BTreeSet<Vec<usize>> = l.subgroups().iter().map(|s| s.elements()).collect();
        assert_eq!(ours.len(), l.len(), "{}: duplicate subgroups", g.label());
        assert_eq!(ours, closed_subsets(&g), "{}", g.label());
    }
}

#[test]
fn conjugacy_classes_partition_the_lattice() {
    let limits = Limits::default();
    for g in corpus::groups_up_to(24).unwrap() {
        let l = enumerate_lattice(&g, &limits).unwrap();
        let mut seen = vec![false; l.len()];
        for (c, class) in l.classes().iter().enumerate() {
            let rep = l.subgroup(class.representative);
            for &m in &class.members {
                assert!(!seen[m]);
                seen[m] = true;
                assert_eq!(l.class_of(m), c);
                // some conjugate of the representative is this member
                let hit = g.elements().any(|x| g.conjugate_subset(rep, x) == *l.subgroup(m));
                assert!(hit, "{}: member {m} not conjugate to its representative", g.label());
            }
            assert_eq!(class.index * rep.len(), g.order());
        }
        assert!(seen.into_iter().all(|s| s));
    }
}

#[test]
fn mobius_rows_invert_the_zeta_function() {
    let limits = Limits::default();
    for g in corpus::groups_up_to(24).unwrap() {
        let l = enumerate_lattice(&g, &limits).unwrap();
        for h in 0..l.len() {
            let row = l.mobius_row(h);
            for k in 0..l.len() {
                let sum: i64 = (0..l.len()).filter(|&m| l.contains(k, m)).map(|m| row[m]).sum();
                assert_eq!(sum, (h == k) as i64, "{} at ({h}, {k})", g.label());
            }
        }
    }
}
