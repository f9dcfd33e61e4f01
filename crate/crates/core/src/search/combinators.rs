//! Building factorizations from smaller ones: coset transversals, normal
//! quotients, double cosets and subgroup chains.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::search::factorization::{verify_factorization, FactorShape, Factorization};
use crate::structure::{is_subgroup, is_supersolvable, subgroup_chain, Quotient, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Least elements of the left cosets `x H` (when `left`) or right cosets
/// `H x` of the subgroup `h`, restricted to the subgroup `within`.
pub fn transversal(g: &GroupTable, within: &ElementSet, h: &ElementSet, side: Side) -> ElementSet {
    let mut covered = ElementSet::EMPTY;
    let mut t = ElementSet::EMPTY;
    for x in within {
        if covered.contains(x) {
            continue;
        }
        t.insert(x);
        let coset = match side {
            Side::Left => g.left_translate(x, h),
            Side::Right => g.right_translate(h, x),
        };
        covered.union_with(&coset);
    }
    t
}

/// Extends a factorization of the subgroup `h` to `g`: `Right` appends a
/// transversal of the right cosets `H x`, `Left` prepends one of the left
/// cosets `x H`. An index-1 transversal `{e}` is not added.
pub fn lift_by_transversal(g: &GroupTable, h: &Subgroup, f_h: &Factorization, side: Side) -> Result<Factorization> {
    if !is_subgroup(g, &h.set) {
        return Err(Error::NotASubgroup);
    }
    let mut factors: Vec<ElementSet> = f_h.factors.iter().map(|a| h.lift(a)).collect();
    if h.set.len() < g.order() {
        let t = transversal(g, &g.elements(), &h.set, side);
        match side {
            Side::Right => factors.push(t),
            Side::Left => factors.insert(0, t),
        }
    }
    Ok(Factorization::new(factors))
}

/// Lifts a factorization of `G/N` through coset representatives and inserts
/// `N` at `position` (0 = front). For `N = {e}` the lifted factorization is
/// returned without the trivial factor.
pub fn lift_by_normal_quotient(q: &Quotient, f_q: &Factorization, position: usize) -> Result<Factorization> {
    if position > f_q.len() {
        return Err(Error::ShapeMismatch { shape: format!("insert at {position}"), order: f_q.len() });
    }
    let mut factors: Vec<ElementSet> = f_q.factors.iter().map(|a| q.lift_reps(a)).collect();
    if q.normal.len() > 1 {
        factors.insert(position, q.normal);
    }
    Ok(Factorization::new(factors))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoubleCoset {
    /// `A T B` with `T` one representative per double coset.
    Factorization(Factorization),
    /// `|A x B| < |A| |B|`, i.e. `A^x` meets `B` nontrivially.
    Refused { x: usize },
}

/// Decomposes `G` into double cosets `A x B`; succeeds iff every double coset
/// has `|A| |B|` elements.
pub fn double_coset_factorization(g: &GroupTable, a: &ElementSet, b: &ElementSet) -> Result<DoubleCoset> {
    if !is_subgroup(g, a) || !is_subgroup(g, b) {
        return Err(Error::NotASubgroup);
    }
    let mut covered = ElementSet::EMPTY;
    let mut t = ElementSet::EMPTY;
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        let dc = g.product(&g.right_translate(a, x), b);
        if dc.len() < a.len() * b.len() {
            return Ok(DoubleCoset::Refused { x });
        }
        t.insert(x);
        covered.union_with(&dc);
    }
    Ok(DoubleCoset::Factorization(Factorization::new(vec![*a, t, *b])))
}

/// Transversal factorization along a subgroup chain of `top` with the given
/// indices: `H_{i-1} = A_i H_i`.
pub fn chain_factorization(g: &GroupTable, top: &ElementSet, shape: &FactorShape) -> Option<Factorization> {
    let chain = subgroup_chain(g, top, shape.sizes())?;
    let factors = chain
        .subgroups
        .windows(2)
        .map(|w| transversal(g, &w[0], &w[1], Side::Left))
        .collect();
    Some(Factorization::new(factors))
}

/// Witnesses for every prime shape of a supersolvable group, keyed by shape.
pub fn supersolvable_witness(g: &GroupTable) -> Result<BTreeMap<FactorShape, Factorization>> {
    if !is_supersolvable(g) {
        return Err(Error::NotSupersolvable);
    }
    let all = g.elements();
    let mut out = BTreeMap::new();
    for shape in FactorShape::prime_shapes(g.order()) {
        let f = chain_factorization(g, &all, &shape)
            .ok_or_else(|| Error::InvalidTable(format!("no subgroup chain for {shape}")))?;
        debug_assert!(verify_factorization(g, &f));
        out.insert(shape, f);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, from_permutations, Permutation, DEFAULT_CAP};
    use crate::structure::{sylow, subgroup_of_order};

    fn perms(d: usize, cs: &[&str]) -> GroupTable {
        let gens: Vec<_> = cs.iter().map(|c| Permutation::from_cycles(d, c).unwrap()).collect();
        from_permutations(&gens, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn c6_transversal_lift() {
        let c6 = cyclic(6).unwrap();
        let c3 = subgroup_of_order(&c6, 3).unwrap().unwrap();
        let h = Subgroup::new(&c6, &c3).unwrap();
        let f = lift_by_transversal(&c6, &h, &Factorization::trivial(&h.table), Side::Right).unwrap();
        assert_eq!(f.shape(), vec![3, 2]);
        assert!(verify_factorization(&c6, &f));
        let whole = Subgroup::new(&c6, &c6.elements()).unwrap();
        let f = lift_by_transversal(&c6, &whole, &Factorization::trivial(&whole.table), Side::Left).unwrap();
        assert_eq!(f.shape(), vec![6]);
    }

    #[test]
    fn a4_quotient_lift() {
        let a4 = perms(4, &["(12)(34)", "(123)"]);
        let v = sylow(&a4, 2).unwrap();
        let q = Quotient::new(&a4, &v).unwrap();
        let f = lift_by_normal_quotient(&q, &Factorization::trivial(&q.table), 0).unwrap();
        assert_eq!(f.shape(), vec![4, 3]);
        assert!(verify_factorization(&a4, &f));
        let trivial = Quotient::new(&a4, &ElementSet::singleton(0)).unwrap();
        let f = lift_by_normal_quotient(&trivial, &Factorization::trivial(&trivial.table), 1).unwrap();
        assert_eq!(f.shape(), vec![12]);
        assert!(Quotient::new(&a4, &sylow(&a4, 3).unwrap()).is_err());
    }

    #[test]
    fn double_cosets() {
        let s5 = perms(5, &["(12345)", "(12)"]);
        let p2 = sylow(&s5, 2).unwrap();
        let p3 = sylow(&s5, 3).unwrap();
        let DoubleCoset::Factorization(f) = double_coset_factorization(&s5, &p2, &p3).unwrap() else { panic!() };
        assert_eq!(f.shape(), vec![8, 5, 3]);
        assert!(verify_factorization(&s5, &f));
        let e = ElementSet::singleton(0);
        let DoubleCoset::Factorization(f) = double_coset_factorization(&s5, &e, &p3).unwrap() else { panic!() };
        assert_eq!(f.shape(), vec![1, 40, 3]);
        // two Sylow 2-subgroups always share an involution up to conjugacy
        assert!(matches!(double_coset_factorization(&s5, &p2, &p2).unwrap(), DoubleCoset::Refused { .. }));
    }

    #[test]
    fn supersolvable_witnesses() {
        let c12 = cyclic(12).unwrap();
        let w = supersolvable_witness(&c12).unwrap();
        assert_eq!(w.len(), 3);
        for (s, f) in &w {
            assert_eq!(&f.shape(), s.sizes());
            assert!(verify_factorization(&c12, f));
        }
        let a4 = perms(4, &["(12)(34)", "(123)"]);
        assert_eq!(supersolvable_witness(&a4).unwrap_err(), Error::NotSupersolvable);
        assert_eq!(supersolvable_witness(&cyclic(7).unwrap()).unwrap().len(), 1);
    }
}
