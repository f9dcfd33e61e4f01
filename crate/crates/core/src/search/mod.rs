//! Factorization search: verification, complete backtracking with exact
//! cover, the `(2, n/4, 2)` decision procedure, combinators and the
//! multifold sweep.

pub mod backtrack;
pub mod combinators;
pub mod exact_cover;
pub mod factorization;
pub mod multifold;
pub mod no2m2;
pub mod oracle;

pub use backtrack::{find_factorization, SearchOptions, SearchOutcome, SearchResult, SearchStats};
pub use combinators::{
    chain_factorization, double_coset_factorization, lift_by_normal_quotient, lift_by_transversal,
    supersolvable_witness, transversal, DoubleCoset, Side,
};
pub use exact_cover::{Budget, Cover, ExactCover, Meter};
pub use factorization::{group_adjacent, reverse_factorization, verify_factorization, FactorShape, Factorization};
pub use multifold::{is_multifold, Method, MultifoldReport, ShapeWitness, Verdict};
pub use no2m2::prove_no_2m2;
pub use oracle::{brute_force_oracle, brute_force_unrestricted};
