//! Partialization of finite concrete categories.
//!
//! The crate builds categories of "partial morphisms" (spans through a
//! subobject) over small concrete base categories, iterates the
//! construction, and enumerates and analyzes the finite monoids that
//! fall out: symmetric inverse monoids, dual symmetric inverse monoids,
//! partial transformation monoids, the orthodox family `RS(n, k)`, and
//! an algebraic model of the inverse braid-permutation monoid.
//!
//! The core is `no_std` (with `alloc`); IO, the CLI and file formats
//! live in the companion `partcat-cli` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod braidperm;
pub mod category;
pub mod cats;
pub mod chain;
pub mod error;
pub mod partial;
pub mod rsnk;
pub mod semigroup;
pub mod verify;

pub use category::{Category, ComplementSquare, PullbackSquare};
pub use chain::Chain;
pub use error::CatError;
pub use partial::{PMor, Partialization, QMor};
pub use semigroup::FiniteSemigroup;
