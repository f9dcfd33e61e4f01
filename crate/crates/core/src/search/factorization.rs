use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::structure::prime_factors;

/// Ordered factor sizes `(a_1, .., a_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct FactorShape(Vec<usize>);

impl FactorShape {
    /// Sizes must be at least 2, except that a lone factor may have any
    /// positive size.
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        let bad = |message: String| Error::Parse { line: 1, column: 1, message };
        if sizes.is_empty() {
            return Err(bad("empty shape".into()));
        }
        if sizes.contains(&0) || (sizes.len() > 1 && sizes.contains(&1)) {
            return Err(bad(format!("factor sizes must exceed 1: {sizes:?}")));
        }
        Ok(FactorShape(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn product(&self) -> usize {
        self.0.iter().product()
    }

    pub fn reversed(&self) -> FactorShape {
        FactorShape(self.0.iter().rev().copied().collect())
    }

    /// Shape with the factor at `i` removed.
    pub fn without(&self, i: usize) -> Option<FactorShape> {
        let mut v = self.0.clone();
        v.remove(i);
        (!v.is_empty()).then_some(FactorShape(v))
    }

    /// Comma-separated sizes, as typed on the command line.
    pub fn to_arg(&self) -> String {
        self.0.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Errors unless the sizes multiply to `order`.
    pub fn check_order(&self, order: usize) -> Result<()> {
        if self.product() != order {
            return Err(Error::ShapeMismatch { shape: self.to_string(), order });
        }
        Ok(())
    }

    /// Every distinct ordering of the prime factors of `n` (with
    /// multiplicity), in lexicographic order.
    pub fn prime_shapes(n: usize) -> Vec<FactorShape> {
        let mut primes = prime_factors(n);
        if primes.is_empty() {
            return Vec::new();
        }
        let mut out = vec![FactorShape(primes.clone())];
        while next_permutation(&mut primes) {
            out.push(FactorShape(primes.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for FactorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_arg())
    }
}

impl FromStr for FactorShape {
    type Err = Error;

    /// Accepts `2,3,2` or `(2,3,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let mut sizes = Vec::new();
        let mut column = 1;
        for part in t.split(',') {
            let v = part.trim().parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("bad factor size `{}`", part.trim()),
            })?;
            sizes.push(v);
            column += part.len() + 1;
        }
        FactorShape::new(sizes)
    }
}

impl From<FactorShape> for String {
    fn from(s: FactorShape) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for FactorShape {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Ordered factors `A_1, .., A_k` of a group. The group itself is not stored;
/// functions taking a `Factorization` also take its `GroupTable`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    pub factors: Vec<ElementSet>,
}

impl Factorization {
    pub fn new(factors: Vec<ElementSet>) -> Self {
        Factorization { factors }
    }

    /// The trivial one-factor factorization `G = G`.
    pub fn trivial(g: &GroupTable) -> Self {
        Factorization { factors: vec![g.elements()] }
    }

    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(|a| a.len()).collect()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors as lists of element labels.
    pub fn labelled(&self, g: &GroupTable) -> Vec<Vec<String>> {
        self.factors.iter().map(|a| a.iter().map(|x| g.label(x).to_string()).collect()).collect()
    }

    /// Short stable fingerprint (FNV-1a over the factor contents).
    pub fn digest(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |b: u64| {
            h ^= b;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        for a in &self.factors {
            for x in a {
                feed(x as u64);
            }
            feed(u64::MAX);
        }
        format!("{h:016x}")
    }
}

/// True iff each prefix product `A_1 .. A_i` has exactly `|A_1| .. |A_i|`
/// elements and the full product is `G`.
pub fn verify_factorization(g: &GroupTable, f: &Factorization) -> bool {
    let n = g.order();
    let full = g.elements();
    if f.factors.is_empty() || f.factors.iter().any(|a| a.is_empty() || !a.is_subset(&full)) {
        return false;
    }
    let mut prefix = ElementSet::singleton(0);
    let mut size = 1usize;
    for a in &f.factors {
        size *= a.len();
        if size > n {
            return false;
        }
        prefix = g.product(&prefix, a);
        if prefix.len() != size {
            return false;
        }
    }
    size == n
}

/// `A_k^-1 .. A_1^-1`, a factorization of the reversed shape.
pub fn reverse_factorization(g: &GroupTable, f: &Factorization) -> Factorization {
    Factorization { factors: f.factors.iter().rev().map(|a| g.inverse_set(a)).collect() }
}

/// Merges runs of adjacent factors: `runs` lists how many consecutive factors
/// go into each new factor.
pub fn group_adjacent(g: &GroupTable, f: &Factorization, runs: &[usize]) -> Result<Factorization> {
    if runs.iter().sum::<usize>() != f.len() || runs.contains(&0) {
        return Err(Error::ShapeMismatch { shape: format!("{runs:?}"), order: f.len() });
    }
    let mut factors = Vec::with_capacity(runs.len());
    let mut i = 0;
    for &r in runs {
        let mut acc = ElementSet::singleton(0);
        for a in &f.factors[i..i + r] {
            acc = g.product(&acc, a);
        }
        factors.push(acc);
        i += r;
    }
    Ok(Factorization { factors })
}
