//! Finite sets with surjective maps, taken in the opposite
//! orientation. A morphism `X -> Y` is stored as the underlying
//! surjection `Y -> X` plus the direction flip implied by the types.
//! Every morphism is a monomorphism; pullbacks are computed as
//! pushouts of surjections via the join of kernel partitions.
//! Complement diagrams are not available, so iterated partializations
//! (k >= 2) are refused over this category.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::setfn::{self, Elem, SetObj};
use crate::category::{Category, ComplementSquare, PullbackSquare};
use crate::error::{CatError, Result};

/// A morphism `dom -> cod` of the opposite category, backed by the
/// surjection `cod -> dom`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RevSurj {
    pub dom: SetObj,
    pub cod: SetObj,
    /// Underlying surjection `cod -> dom` as a pair list.
    pub rev: BTreeMap<Elem, Elem>,
}

impl RevSurj {
    pub fn identity(obj: &SetObj) -> Self {
        RevSurj {
            dom: obj.clone(),
            cod: obj.clone(),
            rev: obj.iter().map(|&e| (e, e)).collect(),
        }
    }

    /// Kernel partition of the underlying surjection, as sorted blocks.
    pub fn kernel_partition(&self) -> Vec<SetObj> {
        let mut by_value: BTreeMap<Elem, SetObj> = BTreeMap::new();
        for (&y, &x) in &self.rev {
            by_value.entry(x).or_default().insert(y);
        }
        let mut blocks: Vec<SetObj> = by_value.into_values().collect();
        blocks.sort();
        blocks
    }

    fn is_bijective(&self) -> bool {
        let image: SetObj = self.rev.values().copied().collect();
        image.len() == self.rev.len()
    }
}

impl fmt::Debug for RevSurj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RevSurj({self})")
    }
}

impl fmt::Display for RevSurj {
    /// Underlying surjection as `y=>x` pairs; empty prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rev.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for (y, x) in &self.rev {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{y}=>{x}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinSurjOp {
    universe: u32,
}

impl FinSurjOp {
    pub fn new(universe: u32) -> Result<Self> {
        if universe == 0 {
            return Err(CatError::InvalidParameter("universe size must be >= 1"));
        }
        Ok(FinSurjOp { universe })
    }

    pub fn full_object(&self) -> SetObj {
        setfn::full_set(self.universe)
    }

    /// Canonical quotient of `obj` by a partition: the object of
    /// minimal block representatives together with the block map.
    fn quotient(obj: &SetObj, blocks: &[SetObj]) -> (SetObj, RevSurj) {
        let mut rev = BTreeMap::new();
        let mut reps = SetObj::new();
        for block in blocks {
            let rep = *block.iter().next().expect("empty partition block");
            reps.insert(rep);
            for &y in block {
                rev.insert(y, rep);
            }
        }
        debug_assert_eq!(rev.len(), obj.len());
        let mono = RevSurj {
            dom: reps.clone(),
            cod: obj.clone(),
            rev,
        };
        (reps, mono)
    }
}

/// Join of two partitions of the same carrier (union-find closure).
fn join_partitions(carrier: &SetObj, a: &[SetObj], b: &[SetObj]) -> Vec<SetObj> {
    let elems: Vec<Elem> = carrier.iter().copied().collect();
    let index: BTreeMap<Elem, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut parent: Vec<usize> = (0..elems.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for block in a.iter().chain(b) {
        let mut it = block.iter();
        if let Some(&first) = it.next() {
            let r = find(&mut parent, index[&first]);
            for &e in it {
                let s = find(&mut parent, index[&e]);
                parent[s] = r;
            }
        }
    }
    let mut by_root: BTreeMap<usize, SetObj> = BTreeMap::new();
    for (i, &e) in elems.iter().enumerate() {
        let r = find(&mut parent, i);
        by_root.entry(r).or_default().insert(e);
    }
    let mut blocks: Vec<SetObj> = by_root.into_values().collect();
    blocks.sort();
    blocks
}

impl Category for FinSurjOp {
    type Obj = SetObj;
    type Mor = RevSurj;

    fn objects(&self) -> Vec<SetObj> {
        setfn::subsets_of(&self.full_object())
    }

    fn dom(&self, f: &RevSurj) -> SetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &RevSurj) -> SetObj {
        f.cod.clone()
    }

    fn identity(&self, obj: &SetObj) -> RevSurj {
        RevSurj::identity(obj)
    }

    fn compose(&self, second: &RevSurj, first: &RevSurj) -> Result<RevSurj> {
        if first.cod != second.dom {
            return Err(CatError::CompositionMismatch);
        }
        // Underlying surjections compose the other way round.
        Ok(RevSurj {
            dom: first.dom.clone(),
            cod: second.cod.clone(),
            rev: second.rev.iter().map(|(&z, &y)| (z, first.rev[&y])).collect(),
        })
    }

    fn is_mono(&self, _f: &RevSurj) -> bool {
        // Surjections are epimorphisms, so in the opposite orientation
        // every morphism is a monomorphism.
        true
    }

    fn is_iso(&self, f: &RevSurj) -> bool {
        f.is_bijective()
    }

    fn inverse_of_iso(&self, f: &RevSurj) -> Result<RevSurj> {
        if !f.is_bijective() {
            return Err(CatError::NotIso);
        }
        Ok(RevSurj {
            dom: f.cod.clone(),
            cod: f.dom.clone(),
            rev: f.rev.iter().map(|(&y, &x)| (x, y)).collect(),
        })
    }

    fn hom(&self, i: &SetObj, j: &SetObj) -> Vec<RevSurj> {
        setfn::all_surjections(j, i)
            .into_iter()
            .map(|s| RevSurj {
                dom: i.clone(),
                cod: j.clone(),
                rev: s.map,
            })
            .collect()
    }

    fn subobjects(&self, obj: &SetObj) -> Vec<(SetObj, RevSurj)> {
        setfn::partitions_of(obj)
            .into_iter()
            .map(|blocks| Self::quotient(obj, &blocks))
            .collect()
    }

    fn canonical_subobject(&self, alpha: &RevSurj) -> Result<(SetObj, RevSurj, RevSurj)> {
        let blocks = alpha.kernel_partition();
        let (reps, iota) = Self::quotient(&alpha.cod, &blocks);
        // theta : dom(alpha) -> reps, backed by the restriction of the
        // underlying surjection to the representatives.
        let theta = RevSurj {
            dom: alpha.dom.clone(),
            cod: reps.clone(),
            rev: reps.iter().map(|&r| (r, alpha.rev[&r])).collect(),
        };
        Ok((reps, iota, theta))
    }

    /// Pushout of the underlying surjections: the canonical quotient
    /// of `cod` by the join of the two kernel partitions.
    fn pullback_along_mono(
        &self,
        f: &RevSurj,
        alpha: &RevSurj,
    ) -> Result<PullbackSquare<SetObj, RevSurj>> {
        if f.cod != alpha.cod {
            return Err(CatError::ObjectMismatch);
        }
        let carrier = &f.cod;
        let blocks = join_partitions(carrier, &f.kernel_partition(), &alpha.kernel_partition());
        let (reps, to_carrier) = Self::quotient(carrier, &blocks);
        // Induced surjections out of dom(f) and dom(alpha).
        let left_mono = RevSurj {
            dom: reps.clone(),
            cod: f.dom.clone(),
            rev: f.rev.iter().map(|(&y, &x)| (x, to_carrier.rev[&y])).collect(),
        };
        let top = RevSurj {
            dom: reps.clone(),
            cod: alpha.dom.clone(),
            rev: alpha
                .rev
                .iter()
                .map(|(&y, &k)| (k, to_carrier.rev[&y]))
                .collect(),
        };
        Ok(PullbackSquare {
            apex: reps,
            left_mono,
            top,
        })
    }

    fn supports_complements(&self) -> bool {
        false
    }

    fn complement(
        &self,
        _alpha: &RevSurj,
        _beta: &RevSurj,
    ) -> Result<ComplementSquare<SetObj, RevSurj>> {
        Err(CatError::ComplementUnsupported)
    }
}
