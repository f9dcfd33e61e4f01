//! Bitset exact cover (Algorithm X with minimum-remaining-values branching)
//! and the node budget shared by all searches.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use crate::bitset::{ElementSet, MAX_ORDER};

/// A node budget shared between workers. `None` means unlimited.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: AtomicU64,
    exceeded: AtomicBool,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { limit, used: AtomicU64::new(0), exceeded: AtomicBool::new(false) }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }

    fn charge(&self, n: u64) -> bool {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if self.limit.is_some_and(|l| total > l) {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded()
    }
}

const FLUSH: u64 = 512;

// small budgets are honoured exactly rather than in whole batches
fn flush_at(budget: &Budget) -> u64 {
    budget.limit.map_or(FLUSH, |l| l.clamp(1, FLUSH))
}

/// Per-worker view of a [`Budget`], charged in batches. A worker may also be
/// cancelled once some earlier task (lower index) has found a witness.
pub struct Meter<'a> {
    budget: &'a Budget,
    pending: u64,
    flush_at: u64,
    cancel: Option<(&'a AtomicUsize, usize)>,
    stopped: bool,
}

impl<'a> Meter<'a> {
    pub fn new(budget: &'a Budget) -> Self {
        Meter { budget, pending: 0, flush_at: flush_at(budget), cancel: None, stopped: false }
    }

    pub(crate) fn with_cancel(budget: &'a Budget, best: &'a AtomicUsize, index: usize) -> Self {
        Meter { budget, pending: 0, flush_at: flush_at(budget), cancel: Some((best, index)), stopped: false }
    }

    /// Counts one node; false once the budget is spent or the task cancelled.
    #[inline]
    pub fn step(&mut self) -> bool {
        if self.stopped {
            return false;
        }
        self.pending += 1;
        if self.pending >= self.flush_at {
            self.flush();
        }
        !self.stopped
    }

    fn flush(&mut self) {
        let ok = self.budget.charge(self.pending);
        self.pending = 0;
        let cancelled = self.cancel.is_some_and(|(best, i)| best.load(Ordering::Relaxed) < i);
        self.stopped = !ok || cancelled;
    }

    /// True when stopped by the budget rather than by cancellation.
    pub fn out_of_budget(&self) -> bool {
        self.budget.exceeded()
    }
}

impl Drop for Meter<'_> {
    fn drop(&mut self) {
        if self.pending > 0 {
            self.budget.charge(self.pending);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cover {
    /// Ids of the chosen options.
    Found(Vec<usize>),
    Exhausted,
    Stopped,
}

/// An exact-cover instance over items `< MAX_ORDER` with option ids
/// `< MAX_ORDER`. Option ids need not be contiguous.
#[derive(Clone, Debug)]
pub struct ExactCover {
    items: ElementSet,
    live: ElementSet,
    options: Vec<ElementSet>,
    item_options: Vec<ElementSet>,
    conflicts: Vec<ElementSet>,
}

impl ExactCover {
    /// Options that are empty or reach outside `items` are discarded.
    pub fn new(items: ElementSet, options: Vec<ElementSet>) -> Self {
        assert!(options.len() <= MAX_ORDER, "at most {MAX_ORDER} options");
        let mut live = ElementSet::EMPTY;
        let mut item_options = vec![ElementSet::EMPTY; MAX_ORDER];
        for (id, o) in options.iter().enumerate() {
            if o.is_empty() || !o.is_subset(&items) {
                continue;
            }
            live.insert(id);
            for x in o {
                item_options[x].insert(id);
            }
        }
        let mut conflicts = vec![ElementSet::EMPTY; options.len()];
        for id in &live {
            for x in &options[id] {
                conflicts[id].union_with(&item_options[x]);
            }
        }
        ExactCover { items, live, options, item_options, conflicts }
    }

    /// Builds an instance from precomputed incidence: `options[id]`,
    /// `item_options[item]` and `conflicts[id]` (options sharing an item
    /// with `id`, including `id`). Only ids in `live` are used.
    pub fn from_parts(
        items: ElementSet,
        live: ElementSet,
        options: Vec<ElementSet>,
        item_options: Vec<ElementSet>,
        conflicts: Vec<ElementSet>,
    ) -> Self {
        ExactCover { items, live, options, item_options, conflicts }
    }

    pub fn solve(&self, meter: &mut Meter<'_>) -> Cover {
        let mut chosen = Vec::new();
        match self.search(self.items, self.live, &mut chosen, meter) {
            Some(true) => Cover::Found(chosen),
            Some(false) => Cover::Exhausted,
            None => Cover::Stopped,
        }
    }

    fn search(
        &self,
        uncovered: ElementSet,
        live: ElementSet,
        chosen: &mut Vec<usize>,
        meter: &mut Meter<'_>,
    ) -> Option<bool> {
        if uncovered.is_empty() {
            return Some(true);
        }
        if !meter.step() {
            return None;
        }
        let mut best = (usize::MAX, 0);
        for item in &uncovered {
            let c = self.item_options[item].intersection_len(&live);
            if c < best.0 {
                best = (c, item);
                if c <= 1 {
                    break;
                }
            }
        }
        if best.0 == 0 {
            return Some(false);
        }
        for id in &self.item_options[best.1].intersection(&live) {
            chosen.push(id);
            let next_live = live.difference(&self.conflicts[id]);
            match self.search(uncovered.difference(&self.options[id]), next_live, chosen, meter) {
                Some(false) => {}
                other => return other,
            }
            chosen.pop();
        }
        Some(false)
    }
}
