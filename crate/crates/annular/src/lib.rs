//! Annular noncrossing permutations of types A and B.
//!
//! This crate models the absolute order on the symmetric group S_n and the
//! hyperoctahedral group B_n, the annular noncrossing posets obtained by
//! cutting those orders below a two-block top element, minimal transitive
//! reflection factorizations of two-cycle permutations, the two-to-one
//! projection from type B chains onto marked type A chains, and lattice-path
//! encodings of annular permutations, together with exact closed-form counts
//! for all of the above.

pub mod encoding;
pub mod error;
pub mod factorization;
pub mod formulas;
pub mod goldens;
pub mod marked;
pub mod perm;
pub mod poset_b;
pub mod signed;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{alpha_pq, Partition, Permutation, Transposition};
pub use poset_b::{MaximalChainB, PosetContext};
pub use signed::{BCycle, BTransposition, SignedPermutation};
