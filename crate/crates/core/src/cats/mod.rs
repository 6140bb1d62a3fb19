//! The registered example categories: finite sets with injections,
//! finite sets with surjections taken opposite, and finite sets with
//! all maps. Objects are subsets of a fixed universe `{1..N}` so that
//! every enumeration is total.

mod fininj;
mod finset;
mod finsurjop;
mod setfn;

pub use fininj::FinInj;
pub use finset::FinSet;
pub use finsurjop::{FinSurjOp, RevSurj};
pub use setfn::{
    all_injections, all_maps, all_surjections, full_set, partitions_of, subsets_of, Elem, SetFn,
    SetObj,
};
