//! Complete search over normalized factorizations.
//!
//! Factors are built left to right. Every factor contains `e`; the remaining
//! elements are added in ascending order and must keep the prefix product
//! exact: with `P` the current prefix and `D = P^-1 P`, an element `x` may be
//! added iff `x` is outside `D`, and two chosen elements `x < z` are
//! compatible iff `z` is outside `D x`. The last factor is an exact cover of
//! `G \ P` by right translates `P x`.
//!
//! Symmetry: the first factor must be least (in `ElementSet::lex_cmp`) among
//! all `(a^-1 A_1)^g` with `a` in `A_1` and `g` in `G`; each later factor must
//! be least among its conjugates by the group of `g` that fix every earlier
//! factor (in the same sense). Both moves map factorizations with the chosen
//! prefix to factorizations with the same prefix, so no solution is lost.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::GroupTable;
use crate::search::exact_cover::{Budget, Cover, ExactCover, Meter};
use crate::search::factorization::{reverse_factorization, FactorShape, Factorization};
use crate::structure::subgroup_generated_by_set;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes; `None` for a complete run.
    pub node_budget: Option<u64>,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_budget: None, jobs: 1 }
    }
}

impl SearchOptions {
    pub fn with_budget(node_budget: Option<u64>) -> Self {
        SearchOptions { node_budget, ..Self::default() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Candidates excluded because they lie in `P^-1 P` (would repeat a
    /// prefix product) or clash with an element already chosen.
    pub prune_exactness: u64,
    /// First factors rejected as non-minimal, later factors as non-minimal
    /// under the stabilizer.
    pub prune_normalization: u64,
    /// Prefixes `P` with `|P|` not dividing `|<P>|`.
    pub prune_divisibility: u64,
    /// Final layers with no exact cover.
    pub prune_exact_cover: u64,
    pub millis: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.prune_exactness += o.prune_exactness;
        self.prune_normalization += o.prune_normalization;
        self.prune_divisibility += o.prune_divisibility;
        self.prune_exact_cover += o.prune_exact_cover;
        self.millis += o.millis;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Factorization),
    /// The complete normalized space was exhausted: no factorization exists.
    None,
    /// The node budget ran out first.
    Undecided,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&Factorization> {
        match self {
            SearchOutcome::Found(f) => Some(f),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::None => "none",
            SearchOutcome::Undecided => "undecided",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

/// Decides whether `g` has a factorization of the given shape.
pub fn find_factorization(g: &GroupTable, shape: &FactorShape, opts: &SearchOptions) -> Result<SearchResult> {
    shape.check_order(g.order())?;
    let start = Instant::now();
    // enumerating a large first factor is costly while a large last factor
    // is cheap for the exact cover, so search the orientation ending larger
    let flip = shape.sizes()[0] > shape.sizes()[shape.len() - 1];
    let sizes: Vec<usize> =
        if flip { shape.reversed().sizes().to_vec() } else { shape.sizes().to_vec() };
    let (outcome, mut stats) = run(g, &sizes, opts);
    let outcome = match outcome {
        SearchOutcome::Found(f) if flip => SearchOutcome::Found(reverse_factorization(g, &f)),
        o => o,
    };
    stats.millis = start.elapsed().as_millis() as u64;
    Ok(SearchResult { outcome, stats })
}

struct Task {
    layer: usize,
    prefix: ElementSet,
    chosen: Vec<ElementSet>,
    stab: ElementSet,
}

enum Step {
    Found(Vec<ElementSet>),
    Exhausted,
    Stopped,
}

fn run(g: &GroupTable, sizes: &[usize], opts: &SearchOptions) -> (SearchOutcome, SearchStats) {
    let budget = Budget::new(opts.node_budget);
    let k = sizes.len();
    // split after the first factor, or after two when that still leaves
    // at least two layers below
    let split = if k >= 4 { 2 } else { 1 };
    let mut stats = SearchStats::default();

    if k == 1 || opts.jobs <= 1 {
        let mut s = Searcher::new(g, sizes, Meter::new(&budget), None);
        let step = s.layer(0, &ElementSet::singleton(0), &mut Vec::new(), &g.elements());
        stats.absorb(&s.stats);
        return (finish(step, &budget), stats);
    }

    let tasks = {
        let mut s = Searcher::new(g, sizes, Meter::new(&budget), Some(split));
        let step = s.layer(0, &ElementSet::singleton(0), &mut Vec::new(), &g.elements());
        stats.absorb(&s.stats);
        match step {
            Step::Exhausted => std::mem::take(&mut s.tasks),
            // a shallow layer can complete the search on its own
            other => return (finish(other, &budget), stats),
        }
    };

    let best = AtomicUsize::new(usize::MAX);
    let work = |(i, t): (usize, &Task)| {
        let mut s = Searcher::new(g, sizes, Meter::with_cancel(&budget, &best, i), None);
        let mut chosen = t.chosen.clone();
        let step = s.layer(t.layer, &t.prefix, &mut chosen, &t.stab);
        if matches!(step, Step::Found(_)) {
            best.fetch_min(i, Ordering::Relaxed);
        }
        (step, s.stats)
    };
    let results: Vec<(Step, SearchStats)> = match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
        Ok(pool) => pool.install(|| tasks.par_iter().enumerate().map(work).collect()),
        Err(_) => tasks.iter().enumerate().map(work).collect(),
    };

    let mut outcome = None;
    let mut stopped = false;
    for (step, st) in results {
        stats.absorb(&st);
        match step {
            Step::Found(f) if outcome.is_none() => outcome = Some(f),
            Step::Stopped => stopped = true,
            _ => {}
        }
    }
    let outcome = match outcome {
        Some(f) => SearchOutcome::Found(Factorization::new(f)),
        None if stopped || budget.exceeded() => SearchOutcome::Undecided,
        None => SearchOutcome::None,
    };
    (outcome, stats)
}

fn finish(step: Step, budget: &Budget) -> SearchOutcome {
    match step {
        Step::Found(f) => SearchOutcome::Found(Factorization::new(f)),
        Step::Exhausted if !budget.exceeded() => SearchOutcome::None,
        _ => SearchOutcome::Undecided,
    }
}

struct Searcher<'a> {
    g: &'a GroupTable,
    sizes: &'a [usize],
    n: usize,
    all: ElementSet,
    even: ElementSet,
    meter: Meter<'a>,
    stats: SearchStats,
    /// When set, complete prefixes of this many factors are recorded as
    /// tasks instead of being explored.
    split: Option<usize>,
    tasks: Vec<Task>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a GroupTable, sizes: &'a [usize], meter: Meter<'a>, split: Option<usize>) -> Self {
        let n = g.order();
        let even = (1..n).filter(|&x| g.element_order(x).is_multiple_of(2)).collect();
        Searcher {
            g,
            sizes,
            n,
            all: ElementSet::full(n),
            even,
            meter,
            stats: SearchStats::default(),
            split,
            tasks: Vec::new(),
        }
    }

    /// `P^-1 P`.
    fn difference_set(&self, p: &ElementSet) -> ElementSet {
        let mut d = ElementSet::EMPTY;
        for x in p {
            d.union_with(&self.g.left_translate(self.g.inv(x), p));
        }
        d
    }

    fn layer(&mut self, i: usize, prefix: &ElementSet, chosen: &mut Vec<ElementSet>, stab: &ElementSet) -> Step {
        let d = self.difference_set(prefix);
        if i + 1 == self.sizes.len() {
            return self.last_layer(prefix, &d, chosen);
        }
        let cand = self.all.difference(&d);
        self.stats.prune_exactness += (d.len() - 1) as u64;
        let mut picked = Vec::with_capacity(self.sizes[i] - 1);
        self.choose(i, prefix, &d, cand, &mut picked, chosen, stab)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        i: usize,
        prefix: &ElementSet,
        d: &ElementSet,
        cand: ElementSet,
        picked: &mut Vec<usize>,
        chosen: &mut Vec<ElementSet>,
        stab: &ElementSet,
    ) -> Step {
        let need = self.sizes[i] - 1 - picked.len();
        if need == 0 {
            let mut a = ElementSet::singleton(0);
            for &x in picked.iter() {
                a.insert(x);
            }
            return self.complete_factor(i, prefix, a, chosen, stab);
        }
        if cand.len() < need {
            self.stats.prune_exactness += 1;
            return Step::Exhausted;
        }
        let mut next = cand.first();
        while let Some(x) = next {
            if !self.meter.step() {
                return Step::Stopped;
            }
            self.stats.nodes += 1;
            let mut rest = cand.difference(&self.g.right_translate(d, x));
            rest.subtract(&ElementSet::full(x + 1));
            picked.push(x);
            match self.choose(i, prefix, d, rest, picked, chosen, stab) {
                Step::Exhausted => {}
                other => return other,
            }
            picked.pop();
            next = cand.next_after(x);
        }
        Step::Exhausted
    }

    fn complete_factor(
        &mut self,
        i: usize,
        prefix: &ElementSet,
        a: ElementSet,
        chosen: &mut Vec<ElementSet>,
        stab: &ElementSet,
    ) -> Step {
        let next_stab = if i == 0 { self.first_factor_stabilizer(&a) } else { self.later_factor_stabilizer(&a, stab) };
        let Some(next_stab) = next_stab else {
            self.stats.prune_normalization += 1;
            return Step::Exhausted;
        };
        let p = self.g.product(prefix, &a);
        debug_assert_eq!(p.len(), prefix.len() * a.len());
        // any subgroup containing P has order >= |P|; when 2|P| >= n the
        // only candidates are G and possibly P itself, both divisible by |P|
        if 2 * p.len() < self.n && !subgroup_generated_by_set(self.g, &p).len().is_multiple_of(p.len()) {
            self.stats.prune_divisibility += 1;
            return Step::Exhausted;
        }
        chosen.push(a);
        if self.split == Some(i + 1) {
            self.tasks.push(Task { layer: i + 1, prefix: p, chosen: chosen.clone(), stab: next_stab });
            chosen.pop();
            return Step::Exhausted;
        }
        match self.layer(i + 1, &p, chosen, &next_stab) {
            Step::Exhausted => {}
            other => return other,
        }
        chosen.pop();
        Step::Exhausted
    }

    /// `None` unless `a` is least among `(x^-1 a)^g`; otherwise the group
    /// generated by all `g` with `(x^-1 a)^g = a` for some `x` in `a`.
    fn first_factor_stabilizer(&self, a: &ElementSet) -> Option<ElementSet> {
        let g = self.g;
        let mut fixing = ElementSet::EMPTY;
        for x in a {
            let shifted = g.left_translate(g.inv(x), a);
            for h in 0..self.n {
                let c = g.conjugate_set(&shifted, h);
                match c.lex_cmp(a) {
                    std::cmp::Ordering::Less => return None,
                    std::cmp::Ordering::Equal => {
                        fixing.insert(h);
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
        Some(subgroup_generated_by_set(g, &fixing))
    }

    /// `None` unless `a` is least among its conjugates by `stab`; otherwise
    /// the stabilizer of `a` in `stab`.
    fn later_factor_stabilizer(&self, a: &ElementSet, stab: &ElementSet) -> Option<ElementSet> {
        if stab.len() == 1 {
            return Some(*stab);
        }
        let mut fixing = ElementSet::EMPTY;
        for h in stab {
            let c = self.g.conjugate_set(a, h);
            match c.lex_cmp(a) {
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => {
                    fixing.insert(h);
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        Some(fixing)
    }

    fn last_layer(&mut self, prefix: &ElementSet, d: &ElementSet, chosen: &[ElementSet]) -> Step {
        let g = self.g;
        let a = self.sizes[self.sizes.len() - 1];
        let mut cand = self.all.difference(d);
        if a == 2 {
            // {e, x} generates a group of even order
            cand.intersect_with(&self.even);
        }
        if !self.meter.step() {
            return Step::Stopped;
        }
        self.stats.nodes += 1;
        if cand.len() < a - 1 {
            self.stats.prune_exact_cover += 1;
            return Step::Exhausted;
        }
        let last = if a == 2 {
            // P x is disjoint from P and has n/2 elements: it is the complement
            let x = cand.first().expect("nonempty");
            [0, x].into_iter().collect()
        } else {
            let items = self.all.difference(prefix);
            let mut options = vec![ElementSet::EMPTY; self.n];
            let mut conflicts = vec![ElementSet::EMPTY; self.n];
            for x in &cand {
                options[x] = g.right_translate(prefix, x);
                conflicts[x] = g.right_translate(d, x).intersection(&cand);
            }
            let pinv = g.inverse_set(prefix);
            let mut item_options = vec![ElementSet::EMPTY; self.n];
            for y in &items {
                item_options[y] = g.right_translate(&pinv, y).intersection(&cand);
            }
            let ec = ExactCover::from_parts(items, cand, options, item_options, conflicts);
            match ec.solve(&mut self.meter) {
                Cover::Found(ids) => {
                    let mut s = ElementSet::singleton(0);
                    for x in ids {
                        s.insert(x);
                    }
                    s
                }
                Cover::Exhausted => {
                    self.stats.prune_exact_cover += 1;
                    return Step::Exhausted;
                }
                Cover::Stopped => return Step::Stopped,
            }
        };
        let mut f = chosen.to_vec();
        f.push(last);
        Step::Found(f)
    }
}
