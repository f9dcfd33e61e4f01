//! Multifold factorizability: a factorization for every ordering of the
//! prime factors of `|G|`. Coarser shapes follow by merging adjacent factors.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::group::GroupTable;
use crate::search::backtrack::{find_factorization, SearchOptions, SearchOutcome, SearchStats};
use crate::search::no2m2::prove_no_2m2;
use crate::search::combinators::{chain_factorization, lift_by_normal_quotient, lift_by_transversal, Side};
use crate::search::factorization::{reverse_factorization, verify_factorization, FactorShape, Factorization};
use crate::structure::{is_normal, is_supersolvable, normal_subgroups, subgroup_of_order, Quotient, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Chain,
    Transversal,
    Quotient,
    Search,
    Reversal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeWitness {
    pub shape: FactorShape,
    pub method: Method,
    pub factorization: Factorization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Multifold,
    NotMultifold,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultifoldReport {
    pub verdict: Verdict,
    /// One entry per prime shape checked so far, in lexicographic order.
    pub witnesses: Vec<ShapeWitness>,
    /// The first shape without a witness: proven absent for `NotMultifold`,
    /// budget-limited for `Undecided`.
    pub failing_shape: Option<FactorShape>,
    pub stats: SearchStats,
}

/// Tests every prime shape of `|G|` in lexicographic order, stopping at the
/// first shape that has no factorization.
pub fn is_multifold(g: &GroupTable, opts: &SearchOptions) -> Result<MultifoldReport> {
    let start = Instant::now();
    let supersolvable = is_supersolvable(g);
    let mut stats = SearchStats::default();
    let mut witnesses: Vec<ShapeWitness> = Vec::new();
    let mut no_2m2: Option<bool> = None;
    for shape in FactorShape::prime_shapes(g.order()) {
        let rev = shape.reversed();
        if rev < shape {
            if let Some(w) = witnesses.iter().find(|w| w.shape == rev) {
                let f = reverse_factorization(g, &w.factorization);
                witnesses.push(ShapeWitness { shape, method: Method::Reversal, factorization: f });
                continue;
            }
        }
        // merging the middle of a (2,..,2) shape gives (2,n/4,2), which has
        // its own much smaller search
        if shape.len() >= 3 && shape.sizes()[0] == 2 && shape.sizes()[shape.len() - 1] == 2 {
            if no_2m2.is_none() {
                let r = prove_no_2m2(g, opts)?;
                stats.absorb(&r.stats);
                no_2m2 = Some(r.outcome == SearchOutcome::None);
            }
            if no_2m2 == Some(true) {
                stats.millis = start.elapsed().as_millis() as u64;
                return Ok(MultifoldReport {
                    verdict: Verdict::NotMultifold,
                    witnesses,
                    failing_shape: Some(shape),
                    stats,
                });
            }
        }
        let (outcome, method) = solve_shape(g, &shape, opts, supersolvable, 0, &mut stats)?;
        match outcome {
            SearchOutcome::Found(f) => {
                debug_assert!(verify_factorization(g, &f));
                witnesses.push(ShapeWitness { shape, method, factorization: f });
            }
            other => {
                let verdict = if other == SearchOutcome::None { Verdict::NotMultifold } else { Verdict::Undecided };
                stats.millis = start.elapsed().as_millis() as u64;
                return Ok(MultifoldReport { verdict, witnesses, failing_shape: Some(shape), stats });
            }
        }
    }
    stats.millis = start.elapsed().as_millis() as u64;
    Ok(MultifoldReport { verdict: Verdict::Multifold, witnesses, failing_shape: None, stats })
}

/// Lifts from subgroups are only tried this many levels deep.
const MAX_DEPTH: usize = 3;

/// Cheap constructions first, then the complete search. Only the complete
/// search can answer `None`.
fn solve_shape(
    g: &GroupTable,
    shape: &FactorShape,
    opts: &SearchOptions,
    supersolvable: bool,
    depth: usize,
    stats: &mut SearchStats,
) -> Result<(SearchOutcome, Method)> {
    let n = g.order();
    let all = g.elements();
    if shape.len() == 1 {
        return Ok((SearchOutcome::Found(Factorization::trivial(g)), Method::Chain));
    }
    if let Some(f) = chain_factorization(g, &all, shape) {
        return Ok((SearchOutcome::Found(f), Method::Chain));
    }
    debug_assert!(!supersolvable, "supersolvable groups have every chain");

    if depth < MAX_DEPTH {
        if let Some(f) = by_transversal(g, shape, opts, depth, stats)? {
            return Ok((SearchOutcome::Found(f), Method::Transversal));
        }
        if let Some(f) = by_quotient(g, shape, opts, depth, stats)? {
            return Ok((SearchOutcome::Found(f), Method::Quotient));
        }
    }
    let r = find_factorization(g, shape, opts)?;
    stats.absorb(&r.stats);
    debug_assert!(n == shape.product());
    Ok((r.outcome, Method::Search))
}

/// A subgroup of index `a_k` (or `a_1`) with a factorization of the rest of
/// the shape.
fn by_transversal(
    g: &GroupTable,
    shape: &FactorShape,
    opts: &SearchOptions,
    depth: usize,
    stats: &mut SearchStats,
) -> Result<Option<Factorization>> {
    let k = shape.len();
    let ends = [(shape.sizes()[k - 1], k - 1, Side::Right), (shape.sizes()[0], 0, Side::Left)];
    for (i, &(a, drop, side)) in ends.iter().enumerate() {
        if i == 1 && shape.sizes()[0] == shape.sizes()[k - 1] && k == 2 {
            break;
        }
        let Some(h) = subgroup_of_order(g, g.order() / a)? else { continue };
        let sub = Subgroup::new(g, &h)?;
        let rest = shape.without(drop).expect("k >= 2");
        let ss = is_supersolvable(&sub.table);
        if let (SearchOutcome::Found(f), _) = solve_shape(&sub.table, &rest, opts, ss, depth + 1, stats)? {
            return Ok(Some(lift_by_transversal(g, &sub, &f, side)?));
        }
    }
    Ok(None)
}

/// A normal subgroup of prime order `a_i` with a factorization of the
/// quotient by the rest of the shape.
fn by_quotient(
    g: &GroupTable,
    shape: &FactorShape,
    opts: &SearchOptions,
    depth: usize,
    stats: &mut SearchStats,
) -> Result<Option<Factorization>> {
    let normals: Vec<_> = normal_subgroups(g)
        .into_iter()
        .filter(|s| shape.sizes().contains(&s.len()) && s.len() > 1 && s.len() < g.order())
        .collect();
    for nsub in normals {
        debug_assert!(is_normal(g, &nsub));
        let q = Quotient::new(g, &nsub)?;
        let ss = is_supersolvable(&q.table);
        let mut tried = Vec::new();
        for (pos, &a) in shape.sizes().iter().enumerate() {
            if a != nsub.len() {
                continue;
            }
            let rest = shape.without(pos).expect("k >= 2");
            if tried.contains(&rest) {
                // same quotient shape: reuse the earlier verdict
                continue;
            }
            tried.push(rest.clone());
            if let (SearchOutcome::Found(f), _) = solve_shape(&q.table, &rest, opts, ss, depth + 1, stats)? {
                return Ok(Some(lift_by_normal_quotient(&q, &f, pos)?));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, from_permutations, Permutation, DEFAULT_CAP};

    fn perms(d: usize, cs: &[&str]) -> GroupTable {
        let gens: Vec<_> = cs.iter().map(|c| Permutation::from_cycles(d, c).unwrap()).collect();
        from_permutations(&gens, DEFAULT_CAP).unwrap()
    }

    fn check(g: &GroupTable, r: &MultifoldReport) {
        for w in &r.witnesses {
            assert_eq!(&w.factorization.shape(), w.shape.sizes());
            assert!(verify_factorization(g, &w.factorization), "{}", w.shape);
        }
    }

    #[test]
    fn c6_is_multifold() {
        let c6 = cyclic(6).unwrap();
        let r = is_multifold(&c6, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Multifold);
        assert_eq!(r.witnesses.len(), 2);
        check(&c6, &r);
    }

    #[test]
    fn a4_fails_at_232() {
        let a4 = perms(4, &["(12)(34)", "(123)"]);
        let r = is_multifold(&a4, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::NotMultifold);
        assert_eq!(r.failing_shape.as_ref().unwrap().to_arg(), "2,3,2");
        check(&a4, &r);
    }

    #[test]
    fn s4_is_multifold() {
        let s4 = perms(4, &["(1234)", "(12)"]);
        let r = is_multifold(&s4, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Multifold);
        assert_eq!(r.witnesses.len(), 4);
        check(&s4, &r);
    }
}
