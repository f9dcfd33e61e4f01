//! Unpruned enumeration, used to cross-check the search on small groups.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::search::factorization::{verify_factorization, FactorShape, Factorization};

const MAX_ORACLE_ORDER: usize = 12;
const MAX_ORACLE_FACTORS: usize = 3;

/// Tries every tuple of subsets of the right sizes that each contain `e`.
pub fn brute_force_oracle(g: &GroupTable, shape: &FactorShape) -> Result<Option<Factorization>> {
    enumerate(g, shape, true)
}

/// Tries every tuple of subsets of the right sizes, normalized or not.
pub fn brute_force_unrestricted(g: &GroupTable, shape: &FactorShape) -> Result<Option<Factorization>> {
    enumerate(g, shape, false)
}

fn enumerate(g: &GroupTable, shape: &FactorShape, normalized: bool) -> Result<Option<Factorization>> {
    let n = g.order();
    if n > MAX_ORACLE_ORDER || shape.len() > MAX_ORACLE_FACTORS {
        return Err(Error::TooLarge { order: n, k: shape.len() });
    }
    shape.check_order(n)?;
    let choices: Vec<Vec<ElementSet>> = shape.sizes().iter().map(|&a| subsets(n, a, normalized)).collect();
    let mut current = Vec::with_capacity(shape.len());
    Ok(product(g, &choices, &mut current))
}

fn product(g: &GroupTable, choices: &[Vec<ElementSet>], current: &mut Vec<ElementSet>) -> Option<Factorization> {
    if current.len() == choices.len() {
        let f = Factorization::new(current.clone());
        return verify_factorization(g, &f).then_some(f);
    }
    for s in &choices[current.len()] {
        current.push(*s);
        if let Some(f) = product(g, choices, current) {
            return Some(f);
        }
        current.pop();
    }
    None
}

/// All `a`-subsets of `{0, .., n-1}`, or only those containing 0.
fn subsets(n: usize, a: usize, containing_zero: bool) -> Vec<ElementSet> {
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(a);
    if containing_zero {
        pick.push(0);
        combine(n, a, 1, &mut pick, &mut out);
    } else {
        combine(n, a, 0, &mut pick, &mut out);
    }
    out
}

fn combine(n: usize, a: usize, from: usize, pick: &mut Vec<usize>, out: &mut Vec<ElementSet>) {
    if pick.len() == a {
        out.push(pick.iter().copied().collect());
        return;
    }
    for x in from..n {
        pick.push(x);
        combine(n, a, x + 1, pick, out);
        pick.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, from_permutations, Permutation, DEFAULT_CAP};

    #[test]
    fn oracle_examples() {
        let gens: Vec<_> = ["(12)(34)", "(123)"].iter().map(|c| Permutation::from_cycles(4, c).unwrap()).collect();
        let a4 = from_permutations(&gens, DEFAULT_CAP).unwrap();
        assert!(brute_force_oracle(&a4, &"2,3,2".parse().unwrap()).unwrap().is_none());
        let c8 = cyclic(8).unwrap();
        assert!(brute_force_oracle(&c8, &"2,2,2".parse().unwrap()).unwrap().is_some());
        let c12 = cyclic(12).unwrap();
        assert!(brute_force_oracle(&c12, &"2,3,2".parse().unwrap()).unwrap().is_some());
    }

    #[test]
    fn refuses_large_inputs() {
        let c16 = cyclic(16).unwrap();
        assert_eq!(
            brute_force_oracle(&c16, &"4,4".parse().unwrap()).unwrap_err(),
            Error::TooLarge { order: 16, k: 2 }
        );
        let c8 = cyclic(8).unwrap();
        assert!(brute_force_oracle(&c8, &"2,2,2".parse().unwrap()).is_ok());
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(6, 3, false).len(), 20);
        assert_eq!(subsets(6, 3, true).len(), 10);
    }
}
