//! Brute-force isomorphism search for small groups.

use std::collections::VecDeque;

use crate::group::table::GroupTable;
use crate::structure::generated_subgroup;

/// Returns `phi` with `phi[x]` the image of `x`, if `g` and `h` are
/// isomorphic. Generators of `g` are chosen greedily; their images range over
/// elements of `h` of matching order.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() {
        return None;
    }
    let mut og: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
    let mut oh: Vec<usize> = (0..n).map(|x| h.element_order(x)).collect();
    let (g_orders, h_orders) = (og.clone(), oh.clone());
    og.sort_unstable();
    oh.sort_unstable();
    if og != oh {
        return None;
    }

    // greedy generating set, largest element order first
    let mut by_order: Vec<usize> = (0..n).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g_orders[x]), x));
    let mut gens = Vec::new();
    let mut span = generated_subgroup(g, &[]);
    for &x in &by_order {
        if span.len() == n {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = generated_subgroup(g, &gens);
        }
    }

    let mut images = Vec::with_capacity(gens.len());
    assign(g, h, &gens, &g_orders, &h_orders, &mut images)
}

fn assign(
    g: &GroupTable,
    h: &GroupTable,
    gens: &[usize],
    g_orders: &[usize],
    h_orders: &[usize],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend(g, h, gens, images);
    }
    let want = g_orders[gens[images.len()]];
    for y in 0..h.order() {
        if h_orders[y] == want && !images.contains(&y) {
            images.push(y);
            if let Some(phi) = assign(g, h, gens, g_orders, h_orders, images) {
                return Some(phi);
            }
            images.pop();
        }
    }
    None
}

fn extend(g: &GroupTable, h: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut phi: Vec<Option<usize>> = vec![None; n];
    phi[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let px = phi[x]?;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let py = h.mul(px, t);
            match phi[y] {
                Some(v) if v != py => return None,
                Some(_) => {}
                None => {
                    phi[y] = Some(py);
                    queue.push_back(y);
                }
            }
        }
    }
    let phi: Vec<usize> = phi.into_iter().collect::<Option<_>>()?;
    let mut seen = vec![false; n];
    for &y in &phi {
        if std::mem::replace(&mut seen[y], true) {
            return None;
        }
    }
    Some(phi)
}

/// True if `phi` is a bijective homomorphism `g -> h`.
pub fn is_isomorphism(g: &GroupTable, h: &GroupTable, phi: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    if phi.iter().any(|&y| y >= n || std::mem::replace(&mut seen[y], true)) {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| phi[g.mul(x, y)] == h.mul(phi[x], phi[y])))
}
