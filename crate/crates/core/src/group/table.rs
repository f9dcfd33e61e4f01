use std::collections::HashMap;
use std::hash::Hash;

use crate::bitset::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Default bound on the order of constructed groups.
pub const DEFAULT_CAP: usize = 200;

/// A finite group given by its Cayley table.
///
/// Elements are the indices `0..order`; index 0 is always the identity.
/// Tables are immutable once built and can be shared freely between threads.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    labels: Vec<String>,
    generators: Vec<(String, usize)>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroupTable {
    /// Builds a table from a raw multiplication table, checking the group
    /// axioms. Row-major: `mul[i * n + j] = i * j`.
    pub fn from_mul_table(n: usize, mul: Vec<usize>) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidTable(format!("order {n} out of range")));
        }
        if mul.len() != n * n {
            return Err(Error::InvalidTable("table size is not n*n".into()));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        let mul: Vec<u8> = mul.into_iter().map(|x| x as u8).collect();
        let mut inv = vec![0u8; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mul[x * n + y] == 0)
                .ok_or_else(|| Error::InvalidTable(format!("element {x} has no inverse")))?;
            inv[x] = y as u8;
        }
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect();
        let t = GroupTable { order: n, mul, inv, labels, generators: Vec::new() };
        t.audit()?;
        Ok(t)
    }

    /// Closure of `gens` under multiplication. Element 0 is `identity`; other
    /// elements are numbered in breadth-first order over right multiplication
    /// by the generators. Labels are produced by `label`, given the element
    /// and the generator word (generator positions) that first reached it.
    pub fn from_closure<T, M, L>(
        identity: T,
        gens: &[(String, T)],
        mul: M,
        label: L,
        cap: usize,
    ) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T, &[usize]) -> String,
    {
        Self::from_closure_with_elements(identity, gens, mul, label, cap).map(|(t, _)| t)
    }

    /// As [`GroupTable::from_closure`], also returning the concrete element
    /// behind each index.
    pub fn from_closure_with_elements<T, M, L>(
        identity: T,
        gens: &[(String, T)],
        mul: M,
        label: L,
        cap: usize,
    ) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T, &[usize]) -> String,
    {
        let cap = cap.min(MAX_ORDER);
        let mut elems = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elems.len() {
            for (gi, (_, g)) in gens.iter().enumerate() {
                let y = mul(&elems[head], g);
                if !index.contains_key(&y) {
                    if elems.len() == cap {
                        return Err(Error::OrderExceedsCap { cap });
                    }
                    let mut w = words[head].clone();
                    w.push(gi);
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                    words.push(w);
                }
            }
            head += 1;
        }
        let n = elems.len();
        let mut table = vec![0u8; n * n];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                table[i * n + j] = index[&mul(x, y)] as u8;
            }
        }
        let mut inv = vec![0u8; n];
        for x in 0..n {
            inv[x] = (0..n).find(|&y| table[x * n + y] == 0).expect("finite closure has inverses") as u8;
        }
        let labels = elems.iter().zip(&words).map(|(x, w)| label(x, w)).collect();
        let generators = gens.iter().map(|(name, g)| (name.clone(), index[g])).collect();
        Ok((GroupTable { order: n, mul: table, inv, labels, generators }, elems))
    }

    pub(crate) fn from_parts(
        order: usize,
        mul: Vec<u8>,
        inv: Vec<u8>,
        labels: Vec<String>,
        generators: Vec<(String, usize)>,
    ) -> Self {
        GroupTable { order, mul, inv, labels, generators }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.order);
        self.labels = labels;
    }

    /// Named generators, in declaration order.
    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, g)| g)
    }

    pub fn set_generators(&mut self, generators: Vec<(String, usize)>) {
        self.generators = generators;
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// `x^k` for `k >= 0`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let (mut acc, mut base, mut k) = (0, x, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        // g^-1 x g
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `{ s * y : s in set }`.
    #[inline]
    pub fn right_translate(&self, set: &ElementSet, y: usize) -> ElementSet {
        let mut r = ElementSet::EMPTY;
        for s in set {
            r.insert(self.mul(s, y));
        }
        r
    }

    /// `{ y * s : s in set }`.
    #[inline]
    pub fn left_translate(&self, y: usize, set: &ElementSet) -> ElementSet {
        let mut r = ElementSet::EMPTY;
        for s in set {
            r.insert(self.mul(y, s));
        }
        r
    }

    /// `{ g^-1 s g : s in set }`.
    pub fn conjugate_set(&self, set: &ElementSet, g: usize) -> ElementSet {
        set.iter().map(|s| self.conjugate(s, g)).collect()
    }

    pub fn inverse_set(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|s| self.inv(s)).collect()
    }

    /// Set product `A B`.
    pub fn product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut r = ElementSet::EMPTY;
        for y in b {
            r.union_with(&self.right_translate(a, y));
        }
        r
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Exhaustive check of the group axioms.
    pub fn audit(&self) -> Result<()> {
        let n = self.order;
        if let Some(&bad) = self.mul.iter().find(|&&x| x as usize >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidTable(format!("0 is not an identity at {x}")));
            }
            if self.mul(x, self.inv(x)) != 0 {
                return Err(Error::InvalidTable(format!("bad inverse for {x}")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::InvalidTable(format!("not associative at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Raw Cayley table, row-major.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|x| (0..self.order).map(|y| self.mul(x, y)).collect()).collect()
    }
}

/// Renders a generator word such as `[0, 0, 1]` over names `a, t` as `a^2*t`.
pub fn word_label(names: &[&str], word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let name = names[word[i]];
        parts.push(if j - i == 1 { name.to_string() } else { format!("{name}^{}", j - i) });
        i = j;
    }
    parts.join("*")
}
