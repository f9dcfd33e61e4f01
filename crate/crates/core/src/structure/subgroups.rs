use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::structure::classes::normalizer;

/// Least subgroup containing `xs`.
pub fn generated_subgroup(g: &GroupTable, xs: &[usize]) -> ElementSet {
    extend_subgroup(g, &ElementSet::singleton(0), xs)
}

/// Least subgroup containing the subgroup `base` and the elements `xs`.
pub fn extend_subgroup(g: &GroupTable, base: &ElementSet, xs: &[usize]) -> ElementSet {
    let mut set = *base;
    let mut gens: Vec<usize> = xs.iter().copied().filter(|&x| !base.contains(x)).collect();
    if gens.is_empty() {
        return set;
    }
    // generators of the base are needed too, or the closure under right
    // multiplication would miss products like x * b
    gens.extend(base.iter().filter(|&b| b != 0));
    let mut frontier: Vec<usize> = set.to_vec();
    while let Some(s) = frontier.pop() {
        for &x in &gens {
            let y = g.mul(s, x);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Least subgroup containing every element of `set`.
pub fn subgroup_generated_by_set(g: &GroupTable, set: &ElementSet) -> ElementSet {
    let mut h = ElementSet::singleton(0);
    for x in set {
        if !h.contains(x) {
            h = extend_subgroup(g, &h, &[x]);
        }
    }
    h
}

pub fn is_subgroup(g: &GroupTable, s: &ElementSet) -> bool {
    s.contains(0) && s.iter().all(|x| s.iter().all(|y| s.contains(g.mul(x, g.inv(y)))))
}

/// A subgroup packaged with its own Cayley table. `embed[i]` is the index in
/// the parent group of the subgroup's element `i`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub set: ElementSet,
    pub table: GroupTable,
    pub embed: Vec<usize>,
}

impl Subgroup {
    pub fn new(g: &GroupTable, set: &ElementSet) -> Result<Subgroup> {
        if !is_subgroup(g, set) {
            return Err(Error::NotASubgroup);
        }
        let embed = set.to_vec();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &x) in embed.iter().enumerate() {
            local[x] = i;
        }
        let n = embed.len();
        let mul = (0..n * n).map(|k| local[g.mul(embed[k / n], embed[k % n])] as u8).collect();
        let inv = embed.iter().map(|&x| local[g.inv(x)] as u8).collect();
        let labels = embed.iter().map(|&x| g.label(x).to_string()).collect();
        let generators = g
            .generators()
            .iter()
            .filter(|(_, x)| set.contains(*x))
            .map(|(name, x)| (name.clone(), local[*x]))
            .collect();
        Ok(Subgroup { set: *set, table: GroupTable::from_parts(n, mul, inv, labels, generators), embed })
    }

    /// Maps a set of subgroup indices to parent indices.
    pub fn lift(&self, s: &ElementSet) -> ElementSet {
        s.iter().map(|i| self.embed[i]).collect()
    }

    /// Maps parent indices (all inside the subgroup) to subgroup indices.
    pub fn restrict(&self, s: &ElementSet) -> ElementSet {
        s.iter().filter_map(|x| self.embed.binary_search(&x).ok()).collect()
    }
}

/// Visits every subgroup of order `m` contained in the subgroup `within`,
/// in a deterministic order (depth-first over ascending generator indices).
/// Each subgroup is visited once.
pub fn for_each_subgroup_of_order<F>(g: &GroupTable, within: &ElementSet, m: usize, mut f: F)
where
    F: FnMut(&ElementSet) -> ControlFlow<()>,
{
    if !within.len().is_multiple_of(m) {
        return;
    }
    let candidates: Vec<usize> = within.iter().filter(|&x| x != 0 && m.is_multiple_of(g.element_order(x))).collect();
    let mut visited = HashSet::new();
    let start = ElementSet::singleton(0);
    visited.insert(start);
    let _ = dfs(g, &start, m, &candidates, &mut visited, &mut f);
}

fn dfs<F>(
    g: &GroupTable,
    h: &ElementSet,
    m: usize,
    candidates: &[usize],
    visited: &mut HashSet<ElementSet>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&ElementSet) -> ControlFlow<()>,
{
    if h.len() == m {
        return f(h);
    }
    for &x in candidates {
        if h.contains(x) {
            continue;
        }
        let k = extend_subgroup(g, h, &[x]);
        if m.is_multiple_of(k.len()) && visited.insert(k) {
            dfs(g, &k, m, candidates, visited, f)?;
        }
    }
    ControlFlow::Continue(())
}

/// A subgroup of order `m`, or `None` after a complete search.
pub fn subgroup_of_order(g: &GroupTable, m: usize) -> Result<Option<ElementSet>> {
    subgroup_of_order_within(g, &g.elements(), m)
}

/// A subgroup of order `m` inside the subgroup `within`.
pub fn subgroup_of_order_within(g: &GroupTable, within: &ElementSet, m: usize) -> Result<Option<ElementSet>> {
    if m == 0 || !within.len().is_multiple_of(m) {
        return Err(Error::NotADivisor { m, order: within.len() });
    }
    let mut found = None;
    for_each_subgroup_of_order(g, within, m, |s| {
        found = Some(*s);
        ControlFlow::Break(())
    });
    Ok(found)
}

/// All subgroups of order `m` inside `within`.
pub fn subgroups_of_order_within(g: &GroupTable, within: &ElementSet, m: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for_each_subgroup_of_order(g, within, m, |s| {
        out.push(*s);
        ControlFlow::Continue(())
    });
    out
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Prime factors of `n` with multiplicity, ascending.
pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The `p`-part of `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut q = 1;
    while n.is_multiple_of(p) {
        n /= p;
        q *= p;
    }
    q
}

/// A Sylow `p`-subgroup: grow a `p`-subgroup one normalizing `p`-element at a
/// time, falling back to exhaustive search if the climb stalls.
pub fn sylow(g: &GroupTable, p: usize) -> Result<ElementSet> {
    let n = g.order();
    if !is_prime(p) || !n.is_multiple_of(p) {
        return Err(Error::NotPrimeDivisor { p, order: n });
    }
    sylow_within(g, &g.elements(), p)
}

/// A Sylow `p`-subgroup of the subgroup `within`.
pub fn sylow_within(g: &GroupTable, within: &ElementSet, p: usize) -> Result<ElementSet> {
    let target = p_part(within.len(), p);
    if target == 1 {
        return Err(Error::NotPrimeDivisor { p, order: within.len() });
    }
    let mut h = ElementSet::singleton(0);
    while h.len() < target {
        let norm = normalizer(g, &h).intersection(within);
        let next = norm
            .iter()
            .filter(|&x| !h.contains(x) && is_power_of(g.element_order(x), p))
            .map(|x| extend_subgroup(g, &h, &[x]))
            .find(|k| is_power_of(k.len(), p));
        match next {
            Some(k) => h = k,
            None => {
                return subgroup_of_order_within(g, within, target)?
                    .ok_or_else(|| Error::InvalidTable("no Sylow subgroup found".into()))
            }
        }
    }
    Ok(h)
}

/// `H_1 > H_2 > .. > H_{k+1} = {e}` with prescribed indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupChain {
    pub subgroups: Vec<ElementSet>,
    pub indices: Vec<usize>,
}

/// A chain of subgroups starting at `top` whose successive indices are
/// `indices`, found by backtracking over subgroups of each required order.
pub fn subgroup_chain(g: &GroupTable, top: &ElementSet, indices: &[usize]) -> Option<SubgroupChain> {
    if indices.iter().product::<usize>() != top.len() {
        return None;
    }
    let mut subgroups = vec![*top];
    chain_dfs(g, indices, &mut subgroups).then(|| SubgroupChain { subgroups, indices: indices.to_vec() })
}

fn chain_dfs(g: &GroupTable, indices: &[usize], chain: &mut Vec<ElementSet>) -> bool {
    let depth = chain.len() - 1;
    if depth == indices.len() {
        return true;
    }
    let current = *chain.last().expect("nonempty");
    let m = current.len() / indices[depth];
    let mut ok = false;
    for_each_subgroup_of_order(g, &current, m, |s| {
        chain.push(*s);
        if chain_dfs(g, indices, chain) {
            ok = true;
            return ControlFlow::Break(());
        }
        chain.pop();
        ControlFlow::Continue(())
    });
    ok
}
