//! Construction and representation of small finite groups.

pub mod construct;
pub mod gf2m;
pub mod iso;
pub mod perm;
pub mod table;
pub mod words;

pub use construct::{
    affine_gf2s, cyclic, cyclic_named, direct_product, linear_action, matrix_group, semidirect_product, ActionTable,
    Matrix,
};
pub use gf2m::{Gf2m, Gf2mElement};
pub use iso::find_isomorphism;
pub use perm::{from_named_permutations, from_permutations, Permutation};
pub use table::{GroupTable, DEFAULT_CAP};
