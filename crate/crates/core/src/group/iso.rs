//! Isomorphism testing by backtracking over generator images.

use super::FiniteGroup;

/// True iff some bijection between the element sets respects the tables.
///
/// Picks a small generating set of `a` greedily (largest element order
/// first), then assigns images generator by generator, only to elements of
/// equal order. After each assignment the partial map is propagated over the
/// subgroup generated so far and rejected on the first conflict.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if a.order_profile() != b.order_profile() || a.is_abelian() != b.is_abelian() {
        return false;
    }
    let gens = greedy_generators(a);
    let b_orders: Vec<usize> = b.elements().map(|x| b.element_order(x)).collect();
    let mut images = Vec::with_capacity(gens.len());
    assign(a, b, &gens, &b_orders, &mut images)
}

fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens = Vec::new();
    let mut span = g.closure_of(&gens);
    for x in by_order {
        if span.len() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.closure_of(&gens);
        }
    }
    gens
}

fn assign(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], b_orders: &[usize], images: &mut Vec<usize>) -> bool {
    let i = images.len();
    if i == gens.len() {
        return propagate(a, b, gens, images).is_some_and(|m| m.iter().all(|&x| x != usize::MAX));
    }
    let want = a.element_order(gens[i]);
    for y in b.elements().filter(|&y| b_orders[y] == want) {
        images.push(y);
        if propagate(a, b, &gens[..=i], images).is_some() && assign(a, b, gens, b_orders, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends `gens[i] ↦ images[i]` to the subgroup they generate. Returns the
/// partial map (unmapped entries are `usize::MAX`) or `None` if the
/// assignment does not extend to an injective homomorphism.
fn propagate(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = 0;
    used[0] = true;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let xs = a.mul(x, s);
            let image = b.mul(map[x], t);
            if map[xs] == usize::MAX {
                if used[image] {
                    return None;
                }
                map[xs] = image;
                used[image] = true;
                frontier.push(xs);
            } else if map[xs] != image {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::direct_product;

    #[test]
    fn examples() {
        let c2 = FiniteGroup::cyclic(2);
        let klein = direct_product(&c2, &c2).unwrap();
        assert!(!is_isomorphic(&FiniteGroup::cyclic(4), &klein));
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert!(is_isomorphic(&s4, &s4));
    }

    #[test]
    fn distinguishes_small_groups() {
        let c2 = FiniteGroup::cyclic(2);
        let d8 = FiniteGroup::dihedral(8).unwrap();
        let q8 = FiniteGroup::quaternion();
        assert!(!is_isomorphic(&d8, &q8));
        let c4xc2 = direct_product(&FiniteGroup::cyclic(4), &c2).unwrap();
        assert!(!is_isomorphic(&c4xc2, &q8));
        let d12 = FiniteGroup::dihedral(12).unwrap();
        let c2xs3 = direct_product(&c2, &FiniteGroup::symmetric(3).unwrap()).unwrap();
        assert!(is_isomorphic(&d12, &c2xs3));
        // Dic12 has a unique involution
        assert!(!is_isomorphic(&d12, &FiniteGroup::dicyclic(12).unwrap()));
    }

    #[test]
    fn known_isomorphisms() {
        let c2xc3 = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3)).unwrap();
        assert!(is_isomorphic(&FiniteGroup::cyclic(6), &c2xc3));
        assert!(is_isomorphic(&FiniteGroup::dicyclic(8).unwrap(), &FiniteGroup::quaternion()));
        assert!(is_isomorphic(&FiniteGroup::symmetric(3).unwrap(), &FiniteGroup::dihedral(6).unwrap()));
    }

    #[test]
    fn equal_order_profiles_nonabelian() {
        // C2 x Q8 and C4 ⋊ C4 are both nonabelian with 3 involutions and 12
        // elements of order 4, so only the search can tell them apart.
        let c2xq8 = direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::quaternion()).unwrap();
        let semi = FiniteGroup::from_fn("C4:C4", 16, |x, y| {
            let (a, b) = (x / 4, x % 4);
            let (c, d) = (y / 4, y % 4);
            let c = if b % 2 == 0 { c } else { (4 - c) % 4 };
            ((a + c) % 4) * 4 + (b + d) % 4
        })
        .unwrap();
        assert_eq!(c2xq8.order_profile(), semi.order_profile());
        assert!(!is_isomorphic(&c2xq8, &semi));
        assert!(is_isomorphic(&semi, &semi));
    }

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let c3 = FiniteGroup::cyclic(3);
        let g = direct_product(&c3, &c3).unwrap();
        let t = g.table();
        let swap = |x: usize| match x {
            1 => 4,
            4 => 1,
            x => x,
        };
        let mut relabelled = vec![0; 81];
        for a in 0..9 {
            for b in 0..9 {
                relabelled[swap(a) * 9 + swap(b)] = swap(t[a * 9 + b]);
            }
        }
        let h = FiniteGroup::from_table("relabelled", 9, relabelled).unwrap();
        assert!(is_isomorphic(&g, &h));
    }
}
