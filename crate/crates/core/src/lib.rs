//! Simsun and double simsun permutations avoiding patterns of length three.
//!
//! The crate covers permutations and pattern containment ([`perm`]),
//! increasing and ordered 1-2 trees ([`tree`]), Motzkin paths
//! ([`motzkin`]), the bijections linking them ([`bijection`]), exhaustive
//! enumeration with reference sequences ([`enumeration`], [`sequences`]) and
//! a claim-by-claim verification harness ([`verify`]).

pub mod bijection;
pub mod enumeration;
pub mod error;
pub mod motzkin;
pub mod perm;
pub mod sequences;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use motzkin::{MotzkinPath, Step};
pub use perm::{Pattern, Permutation};
pub use tree::{IncreasingTree, OrderedTree};
