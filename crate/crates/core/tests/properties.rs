use proptest::prelude::*;
use shiftrank::bounds::{cyclic_rank_interval, dihedral_rank_interval, divisor_stats};
use shiftrank::group::{direct_product, format_cayley, group_rank_bruteforce, is_isomorphic, parse_cayley};
use shiftrank::lattice::enumerate_lattice;
use shiftrank::oracle::{compose, FullShift};
use shiftrank::{corpus, ElementSubset, FiniteGroup, Limits, RankBudget};

const SMALL: &[&str] = &["C2", "C3", "C4", "C2xC2", "C5", "S3", "C6", "D8", "Q8", "C2xC4", "C3xC3", "A4", "Dic12", "S4"];

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop::sample::select(SMALL).prop_map(|s| corpus::group(s).unwrap())
}

/// Applies a permutation of the non-identity elements to a Cayley table.
fn relabel(g: &FiniteGroup, seed: &[usize]) -> FiniteGroup {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    for (i, s) in seed.iter().enumerate().take(n.saturating_sub(2)) {
        let i = i + 1;
        let j = i + s % (n - i);
        perm.swap(i, j);
    }
    let mut inverse = vec![0; n];
    for (a, &p) in perm.iter().enumerate() {
        inverse[p] = a;
    }
    let table = (0..n * n)
        .map(|k| perm[g.mul(inverse[k / n], inverse[k % n])])
        .collect();
    FiniteGroup::from_table("relabelled", n, table).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_satisfy_lagrange(g in small_group(), picks in prop::collection::vec(0usize..1000, 0..4)) {
        let n = g.order();
        let gens = ElementSubset::from_elements(n, picks.iter().map(|p| p % n));
        let h = g.subgroup_closure(&gens);
        prop_assert!(g.is_subgroup(&h));
        prop_assert_eq!(n % h.len(), 0);
        prop_assert!(gens.is_subset(&h));
    }

    #[test]
    fn rank_is_subadditive_on_products(a in small_group(), b in small_group()) {
        prop_assume!(a.order() * b.order() <= 96);
        let budget = RankBudget::default();
        let p = direct_product(&a, &b).unwrap();
        let (ra, rb) = (group_rank_bruteforce(&a, &budget).unwrap(), group_rank_bruteforce(&b, &budget).unwrap());
        let rp = group_rank_bruteforce(&p, &budget).unwrap();
        prop_assert!(rp <= ra + rb);
        prop_assert!(rp >= ra.max(rb));
    }

    #[test]
    fn relabelling_preserves_structure(g in small_group(), seed in prop::collection::vec(0usize..1000, 24)) {
        let h = relabel(&g, &seed);
        prop_assert!(is_isomorphic(&g, &h));
        let limits = Limits::default();
        let (lg, lh) = (enumerate_lattice(&g, &limits).unwrap(), enumerate_lattice(&h, &limits).unwrap());
        let (sg, sh) = (lg.stats(&limits.rank), lh.stats(&limits.rank));
        prop_assert_eq!(sg, sh);
        prop_assert_eq!(parse_cayley(&format_cayley(&h), "h").unwrap().table(), h.table());
    }

    #[test]
    fn divisor_counts_split(n in 1u64..100_000) {
        let s = divisor_stats(n);
        prop_assert_eq!(s.d, s.d_minus + s.d_plus);
        let odd = n >> n.trailing_zeros();
        // even divisors are 2^j·(odd divisor) with j ≥ 1
        prop_assert_eq!(s.d_plus, s.d_minus * n.trailing_zeros() as u64);
        prop_assert_eq!(s.d_minus, divisor_stats(odd).d);
    }

    #[test]
    fn interval_widths_equal_declared_slack(n in 3u64..5000, q in 2usize..6) {
        let c = cyclic_rank_interval(n, q).unwrap();
        prop_assert_eq!(c.width(), c.epsilon_slack);
        let d = dihedral_rank_interval(n, q).unwrap();
        prop_assert_eq!(d.width(), d.epsilon_slack);
        prop_assert!(d.lower >= 1 && c.lower >= 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn composition_is_associative(spec in prop::sample::select(&["C2", "C3", "C2xC2"][..]), picks in prop::collection::vec(0usize..1 << 16, 3)) {
        let g = corpus::group(spec).unwrap();
        let s = FullShift::new(&g, 2).unwrap();
        let m = s.endomorphism_monoid(1 << 20).unwrap();
        let (a, b, c) = (&m[picks[0] % m.len()], &m[picks[1] % m.len()], &m[picks[2] % m.len()]);
        let (ab, bc) = (compose(a, b).unwrap(), compose(b, c).unwrap());
        let left = compose(&ab, c).unwrap();
        let right = compose(a, &bc).unwrap();
        prop_assert_eq!(left.map(), right.map());
        let id = s.identity_table().unwrap();
        let (ia, ai) = (compose(&id, a).unwrap(), compose(a, &id).unwrap());
        prop_assert_eq!(ia.map(), a.map());
        prop_assert_eq!(ai.map(), a.map());
        prop_assert!(m.iter().any(|t| t.map() == left.map()));
    }
}
