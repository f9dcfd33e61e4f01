use std::sync::OnceLock;

use proptest::prelude::*;

use factorforge::catalog::registry;
use factorforge::group::GroupTable;
use factorforge::ring::{ring_mul, RingVector};
use factorforge::search::{
    brute_force_oracle, find_factorization, group_adjacent, prove_no_2m2, reverse_factorization,
    verify_factorization, FactorShape, SearchOptions, SearchOutcome,
};
use factorforge::suite::shapes_up_to;
use factorforge::ElementSet;

/// Registry groups of order at most 24, built once.
fn groups() -> &'static [(String, GroupTable)] {
    static CELL: OnceLock<Vec<(String, GroupTable)>> = OnceLock::new();
    CELL.get_or_init(|| {
        registry()
            .records
            .iter()
            .filter(|r| r.expected_order <= 24)
            .map(|r| (r.id.clone(), registry().build(&r.id).unwrap()))
            .collect()
    })
}

fn small_groups() -> Vec<&'static (String, GroupTable)> {
    groups().iter().filter(|(_, g)| g.order() <= 12).collect()
}

fn pick_shape(g: &GroupTable, k: usize, i: usize) -> FactorShape {
    let shapes = shapes_up_to(g.order(), k);
    shapes[i % shapes.len()].clone()
}

fn subset(n: usize, bits: u64) -> ElementSet {
    (0..n).filter(|&x| bits >> (x % 64) & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn witnesses_verify_and_are_normalized(gi in 0usize..64, si in 0usize..64) {
        let (id, g) = &groups()[gi % groups().len()];
        let shape = pick_shape(g, 4, si);
        let r = find_factorization(g, &shape, &SearchOptions::default()).unwrap();
        if let SearchOutcome::Found(f) = &r.outcome {
            prop_assert!(verify_factorization(g, f), "{id} {shape}");
            prop_assert_eq!(f.shape(), shape.sizes().to_vec());
            prop_assert!(f.factors.iter().all(|a| a.contains(0)));
        }
    }

    #[test]
    fn search_agrees_with_oracle(gi in 0usize..64, si in 0usize..64) {
        let small = small_groups();
        let (id, g) = small[gi % small.len()];
        let shape = pick_shape(g, 3, si);
        let r = find_factorization(g, &shape, &SearchOptions::default()).unwrap();
        let o = brute_force_oracle(g, &shape).unwrap();
        prop_assert_eq!(r.outcome.witness().is_some(), o.is_some(), "{} {}", id, shape);
    }

    #[test]
    fn reversal_is_symmetric(gi in 0usize..64, si in 0usize..64) {
        let (id, g) = &groups()[gi % groups().len()];
        let shape = pick_shape(g, 4, si);
        let a = find_factorization(g, &shape, &SearchOptions::default()).unwrap();
        let b = find_factorization(g, &shape.reversed(), &SearchOptions::default()).unwrap();
        prop_assert_eq!(a.outcome.label(), b.outcome.label(), "{} {}", id, shape);
        if let SearchOutcome::Found(f) = &a.outcome {
            let rev = reverse_factorization(g, f);
            prop_assert!(verify_factorization(g, &rev));
            prop_assert_eq!(rev.shape(), shape.reversed().sizes().to_vec());
        }
    }

    #[test]
    fn grouping_preserves_factorizations(gi in 0usize..64, si in 0usize..64, cut in 1usize..4) {
        let (_, g) = &groups()[gi % groups().len()];
        let shape = pick_shape(g, 4, si);
        if shape.len() < 2 {
            return Ok(());
        }
        let r = find_factorization(g, &shape, &SearchOptions::default()).unwrap();
        if let SearchOutcome::Found(f) = &r.outcome {
            let c = 1 + cut % (shape.len() - 1);
            let merged = group_adjacent(g, f, &[c, shape.len() - c]).unwrap();
            prop_assert!(verify_factorization(g, &merged));
            let left: usize = shape.sizes()[..c].iter().product();
            prop_assert_eq!(merged.shape(), vec![left, g.order() / left]);
        }
    }

    #[test]
    fn parallel_matches_sequential(gi in 0usize..64, si in 0usize..64, jobs in 2usize..5) {
        let (_, g) = &groups()[gi % groups().len()];
        let shape = pick_shape(g, 4, si);
        let a = find_factorization(g, &shape, &SearchOptions::default()).unwrap();
        let b = find_factorization(g, &shape, &SearchOptions { node_budget: None, jobs }).unwrap();
        prop_assert_eq!(a.outcome, b.outcome);
    }

    #[test]
    fn ring_product_is_associative_and_distributive(
        gi in 0usize..64, x in any::<u64>(), y in any::<u64>(), z in any::<u64>(),
    ) {
        let (_, g) = &groups()[gi % groups().len()];
        let n = g.order();
        let [u, v, w] = [x, y, z].map(|b| RingVector::indicator(n, &subset(n, b)));
        let left = ring_mul(g, &ring_mul(g, &u, &v).unwrap(), &w).unwrap();
        let right = ring_mul(g, &u, &ring_mul(g, &v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let sum = ring_mul(g, &u, &v.add(&w).unwrap()).unwrap();
        let parts = ring_mul(g, &u, &v).unwrap().add(&ring_mul(g, &u, &w).unwrap()).unwrap();
        prop_assert_eq!(sum, parts);
    }
}

#[test]
fn no2m2_agrees_with_search() {
    for (id, g) in groups().iter().filter(|(_, g)| g.order() % 4 == 0 && g.order() >= 8) {
        let shape = FactorShape::new(vec![2, g.order() / 4, 2]).unwrap();
        let a = prove_no_2m2(g, &SearchOptions::default()).unwrap();
        let b = find_factorization(g, &shape, &SearchOptions::default()).unwrap();
        assert_eq!(a.outcome.label(), b.outcome.label(), "{id}");
        if let SearchOutcome::Found(f) = &a.outcome {
            assert!(verify_factorization(g, f), "{id}");
        }
    }
}
