//! Exact decision of shape `(2, n/4, 2)`.
//!
//! With `A = {e, x}` and `C = {e, y}`, a middle factor `B` exists iff the
//! blocks `{b, xb, by, xby}` (four distinct elements) can be chosen to
//! partition `G`. Both `x` and `y` have even order. Conjugating the whole
//! factorization, or replacing `A` by `x^-1 A` or `C` by `C y^-1`, gives
//! another factorization, so `x` runs over classes up to inversion and `y`
//! over orbits of the centralizer of `x` up to inversion.

use std::collections::HashMap;
use std::time::Instant;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::search::backtrack::{SearchOptions, SearchOutcome, SearchResult, SearchStats};
use crate::search::exact_cover::{Budget, Cover, ExactCover, Meter};
use crate::search::factorization::Factorization;
use crate::structure::{centralizer, conjugacy_classes};

pub fn prove_no_2m2(g: &GroupTable, opts: &SearchOptions) -> Result<SearchResult> {
    let n = g.order();
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleBy4(n));
    }
    let start = Instant::now();
    let budget = Budget::new(opts.node_budget);
    let mut meter = Meter::new(&budget);
    let mut stats = SearchStats::default();
    let even: Vec<usize> = (1..n).filter(|&x| g.element_order(x).is_multiple_of(2)).collect();

    let mut xs = Vec::new();
    let mut seen = ElementSet::EMPTY;
    for class in conjugacy_classes(g) {
        let x = class.first().expect("nonempty");
        if seen.contains(x) || g.element_order(x) % 2 == 1 {
            continue;
        }
        seen.union_with(&class);
        seen.union_with(&g.inverse_set(&class));
        xs.push(x);
    }

    let mut outcome = SearchOutcome::None;
    'outer: for &x in &xs {
        let cx = centralizer(g, x);
        let mut done = ElementSet::EMPTY;
        for &y in &even {
            if done.contains(y) {
                continue;
            }
            for h in &cx {
                done.insert(g.conjugate(y, h));
                done.insert(g.conjugate(g.inv(y), h));
            }
            stats.nodes += 1;
            match middle_factor(g, x, y, &mut meter) {
                Cover::Found(b) => {
                    let a: ElementSet = [0, x].into_iter().collect();
                    let c: ElementSet = [0, y].into_iter().collect();
                    outcome = SearchOutcome::Found(Factorization::new(vec![a, b.into_iter().collect(), c]));
                    break 'outer;
                }
                Cover::Exhausted => stats.prune_exact_cover += 1,
                Cover::Stopped => {
                    outcome = SearchOutcome::Undecided;
                    break 'outer;
                }
            }
        }
    }
    stats.millis = start.elapsed().as_millis() as u64;
    Ok(SearchResult { outcome, stats })
}

/// Exact cover of `G` by blocks `{b, xb, by, xby}`; returns the chosen `b`.
fn middle_factor(g: &GroupTable, x: usize, y: usize, meter: &mut Meter<'_>) -> Cover {
    let mut blocks: Vec<ElementSet> = Vec::new();
    let mut reps = Vec::new();
    let mut index: HashMap<ElementSet, usize> = HashMap::new();
    for b in 0..g.order() {
        let xb = g.mul(x, b);
        let block: ElementSet = [b, xb, g.mul(b, y), g.mul(xb, y)].into_iter().collect();
        if block.len() < 4 {
            continue;
        }
        index.entry(block).or_insert_with(|| {
            blocks.push(block);
            reps.push(b);
            blocks.len() - 1
        });
    }
    match ExactCover::new(g.elements(), blocks).solve(meter) {
        Cover::Found(ids) => Cover::Found(ids.into_iter().map(|i| reps[i]).collect()),
        other => other,
    }
}
