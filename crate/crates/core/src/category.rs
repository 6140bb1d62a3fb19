//! Contract of a finite concrete category with pullbacks along
//! monomorphisms and (optionally) complement diagrams.

use alloc::vec::Vec;
use core::fmt::Debug;

use crate::error::{CatError, Result};

/// A pullback of a cospan `f : m? -> j <- k : alpha` along the mono
/// `alpha`: the apex together with the mono into `dom(f)` and the map
/// to `dom(alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackSquare<O, M> {
    pub apex: O,
    /// Mono `apex -> dom(f)`.
    pub left_mono: M,
    /// Map `apex -> dom(alpha)` closing the square.
    pub top: M,
}

/// The relative completion of a composable pair of monos
/// `alpha : i -> j`, `beta : j -> k`: an object `mid` with monos
/// `embed : i -> mid` and `upper : mid -> k` such that
/// `upper . embed = beta . alpha`, the square is a pullback, and the
/// lifting property against outer pullback squares holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementSquare<O, M> {
    pub mid: O,
    /// Mono `dom(alpha) -> mid`.
    pub embed: M,
    /// Mono `mid -> cod(beta)`.
    pub upper: M,
}

/// A small concrete category, finitized so that every hom-set is
/// enumerable. All values are immutable and every operation is pure.
pub trait Category {
    type Obj: Clone + Ord + Debug;
    type Mor: Clone + Ord + Debug;

    /// Every object reachable at the category's configured bound.
    fn objects(&self) -> Vec<Self::Obj>;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, obj: &Self::Obj) -> Self::Mor;

    /// `second . first`; requires `cod(first) = dom(second)`.
    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor>;

    fn is_mono(&self, f: &Self::Mor) -> bool;
    fn is_iso(&self, f: &Self::Mor) -> bool;
    fn inverse_of_iso(&self, f: &Self::Mor) -> Result<Self::Mor>;

    /// All morphisms from `i` to `j`.
    fn hom(&self, i: &Self::Obj, j: &Self::Obj) -> Vec<Self::Mor>;

    /// Canonical subobject representatives of `obj`: pairs
    /// `(k0, iota)` with `iota : k0 -> obj` a canonical mono, one per
    /// subobject class.
    fn subobjects(&self, obj: &Self::Obj) -> Vec<(Self::Obj, Self::Mor)>;

    /// For a mono `alpha` returns `(k0, iota, theta)` where `iota` is
    /// the canonical mono with the same image as `alpha` and `theta`
    /// is the unique isomorphism with `iota . theta = alpha`.
    /// Idempotent: canonicalizing `iota` yields `theta = id`.
    fn canonical_subobject(&self, alpha: &Self::Mor)
        -> Result<(Self::Obj, Self::Mor, Self::Mor)>;

    /// Pullback of `f` along the mono `alpha` (`cod(f) = cod(alpha)`).
    /// The apex need not be in canonical subobject form; callers
    /// canonicalize the resulting mono themselves where it matters.
    fn pullback_along_mono(
        &self,
        f: &Self::Mor,
        alpha: &Self::Mor,
    ) -> Result<PullbackSquare<Self::Obj, Self::Mor>>;

    fn supports_complements(&self) -> bool;

    /// Complement diagram for the composable mono pair
    /// `alpha : i -> j`, `beta : j -> k`.
    fn complement(
        &self,
        alpha: &Self::Mor,
        beta: &Self::Mor,
    ) -> Result<ComplementSquare<Self::Obj, Self::Mor>>;
}

/// Checks the composability precondition shared by several operations.
pub fn check_composable<C: Category>(cat: &C, second: &C::Mor, first: &C::Mor) -> Result<()> {
    if cat.cod(first) != cat.dom(second) {
        Err(CatError::CompositionMismatch)
    } else {
        Ok(())
    }
}
