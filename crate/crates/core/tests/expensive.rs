use std::time::Instant;

use factorforge::group::{from_permutations, Permutation, DEFAULT_CAP};
use factorforge::search::{find_factorization, SearchOptions, SearchOutcome};

#[test]
fn a5_has_no_2352() {
    let gens: Vec<_> = ["(12345)", "(123)"].iter().map(|c| Permutation::from_cycles(5, c).unwrap()).collect();
    let a5 = from_permutations(&gens, DEFAULT_CAP).unwrap();
    let t = Instant::now();
    let r = find_factorization(&a5, &"2,3,5,2".parse().unwrap(), &SearchOptions::default()).unwrap();
    eprintln!("A5 (2,3,5,2): {:?} in {:?} {:?}", r.outcome.label(), t.elapsed(), r.stats);
    assert_eq!(r.outcome, SearchOutcome::None);
}
