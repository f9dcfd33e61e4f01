//! Small finite groups as Cayley tables, and complete search for subset
//! factorizations `G = A_1 A_2 ... A_k` with `|G| = |A_1| ... |A_k|`.

pub mod bitset;
pub mod catalog;
pub mod error;
pub mod group;
pub mod ring;
pub mod search;
pub mod structure;
pub mod suite;

pub use bitset::{ElementSet, MAX_ORDER};
pub use error::{Error, Result};
pub use group::GroupTable;
