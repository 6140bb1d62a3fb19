//! Finite sets and all maps. Monomorphisms are the injective maps.
//! Complement squares are found by exhaustive search with full
//! verification of both defining clauses; this is only meant for desk
//! scale universes.

use alloc::vec::Vec;

use super::setfn::{self, SetFn, SetObj};
use crate::category::{Category, ComplementSquare, PullbackSquare};
use crate::error::{CatError, Result};
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinSet {
    universe: u32,
}

impl FinSet {
    pub fn new(universe: u32) -> Result<Self> {
        if universe == 0 {
            return Err(CatError::InvalidParameter("universe size must be >= 1"));
        }
        Ok(FinSet { universe })
    }

    pub fn full_object(&self) -> SetObj {
        setfn::full_set(self.universe)
    }
}

impl Category for FinSet {
    type Obj = SetObj;
    type Mor = SetFn;

    fn objects(&self) -> Vec<SetObj> {
        setfn::subsets_of(&self.full_object())
    }

    fn dom(&self, f: &SetFn) -> SetObj {
        f.dom.clone()
    }

    fn cod(&self, f: &SetFn) -> SetObj {
        f.cod.clone()
    }

    fn identity(&self, obj: &SetObj) -> SetFn {
        SetFn::identity(obj)
    }

    fn compose(&self, second: &SetFn, first: &SetFn) -> Result<SetFn> {
        SetFn::compose(second, first)
    }

    fn is_mono(&self, f: &SetFn) -> bool {
        f.is_injective()
    }

    fn is_iso(&self, f: &SetFn) -> bool {
        f.is_bijective()
    }

    fn inverse_of_iso(&self, f: &SetFn) -> Result<SetFn> {
        f.inverse()
    }

    fn hom(&self, i: &SetObj, j: &SetObj) -> Vec<SetFn> {
        setfn::all_maps(i, j)
    }

    fn subobjects(&self, obj: &SetObj) -> Vec<(SetObj, SetFn)> {
        setfn::subsets_of(obj)
            .into_iter()
            .map(|s| {
                let incl = SetFn::inclusion(&s, obj);
                (s, incl)
            })
            .collect()
    }

    fn canonical_subobject(&self, alpha: &SetFn) -> Result<(SetObj, SetFn, SetFn)> {
        if !self.is_mono(alpha) {
            return Err(CatError::NotMono);
        }
        let image = alpha.image();
        let iota = SetFn::inclusion(&image, &alpha.cod);
        let theta = SetFn {
            dom: alpha.dom.clone(),
            cod: image.clone(),
            map: alpha.map.clone(),
        };
        Ok((image, iota, theta))
    }

    /// Preimage restriction: the apex is `f^{-1}(im alpha)`.
    fn pullback_along_mono(
        &self,
        f: &SetFn,
        alpha: &SetFn,
    ) -> Result<PullbackSquare<SetObj, SetFn>> {
        if f.cod != alpha.cod {
            return Err(CatError::ObjectMismatch);
        }
        if !self.is_mono(alpha) {
            return Err(CatError::NotMono);
        }
        let alpha_image = alpha.image();
        let apex: SetObj = f
            .map
            .iter()
            .filter(|(_, v)| alpha_image.contains(v))
            .map(|(&k, _)| k)
            .collect();
        let alpha_inv: alloc::collections::BTreeMap<u32, u32> =
            alpha.map.iter().map(|(&k, &v)| (v, k)).collect();
        let top = SetFn {
            dom: apex.clone(),
            cod: alpha.dom.clone(),
            map: apex.iter().map(|&u| (u, alpha_inv[&f.map[&u]])).collect(),
        };
        let left_mono = SetFn::inclusion(&apex, &f.dom);
        Ok(PullbackSquare { apex, left_mono, top })
    }

    fn supports_complements(&self) -> bool {
        true
    }

    fn complement(&self, alpha: &SetFn, beta: &SetFn) -> Result<ComplementSquare<SetObj, SetFn>> {
        verify::search_complement(self, alpha, beta)
    }
}
