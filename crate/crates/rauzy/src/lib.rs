//! Combinatorics of Rauzy classes: induction on true and generalized
//! permutations, class enumeration, suspension invariants (signature,
//! genus, spin parity, hyperellipticity), explicit self-inverse
//! constructions, Lagrangian subspace checks, and exact-arithmetic
//! interval dynamics.

pub mod atlas;
pub mod blocks;
pub mod class;
pub mod dynamics;
pub mod error;
pub mod genconstruct;
pub mod genperm;
pub mod invariants;
pub mod lagrangian;
pub mod perm;
mod sigtext;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{MoveKind, Permutation};
