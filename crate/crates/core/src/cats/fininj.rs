//! Finite sets and injective maps. Every morphism is a monomorphism;
//! the category has pullbacks along monos and complement diagrams, so
//! every iterated partialization is available over it.

use alloc::vec::Vec;

use super::setfn::{self, SetFn, SetObj};
use crate::category::{Category, ComplementSquare, PullbackSquare};
use crate::error::{CatError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinInj {
    universe: u32,
}

impl FinInj {
    pub fn new(universe: u32) -> Result<Self> {
        if universe == 0 {
            return Err(CatError::InvalidParameter("universe size must be >= 1"));
        }
        Ok(FinInj { universe })
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn full_object(&self) -> SetObj {
        setfn::full_set(self.universe)
    }
}

impl Category for FinInj {
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

    fn is_mono(&self, _f: &SetFn) -> bool {
        // All morphisms are injective, hence monomorphisms.
        true
    }

    fn is_iso(&self, f: &SetFn) -> bool {
        f.is_bijective()
    }

    fn inverse_of_iso(&self, f: &SetFn) -> Result<SetFn> {
        f.inverse()
    }

    fn hom(&self, i: &SetObj, j: &SetObj) -> Vec<SetFn> {
        setfn::all_injections(i, j)
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
        let image = alpha.image();
        let iota = SetFn::inclusion(&image, &alpha.cod);
        let theta = SetFn {
            dom: alpha.dom.clone(),
            cod: image.clone(),
            map: alpha.map.clone(),
        };
        Ok((image, iota, theta))
    }

    fn pullback_along_mono(
        &self,
        f: &SetFn,
        alpha: &SetFn,
    ) -> Result<PullbackSquare<SetObj, SetFn>> {
        if f.cod != alpha.cod {
            return Err(CatError::ObjectMismatch);
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

    /// Explicit formula: `mid = im(beta.alpha) + (cod(beta) - im(beta))`.
    fn complement(&self, alpha: &SetFn, beta: &SetFn) -> Result<ComplementSquare<SetObj, SetFn>> {
        if alpha.cod != beta.dom {
            return Err(CatError::CompositionMismatch);
        }
        let through = SetFn::compose(beta, alpha)?;
        let mut mid = through.image();
        let beta_image = beta.image();
        mid.extend(beta.cod.iter().copied().filter(|e| !beta_image.contains(e)));
        let embed = SetFn {
            dom: alpha.dom.clone(),
            cod: mid.clone(),
            map: through.map.clone(),
        };
        let upper = SetFn::inclusion(&mid, &beta.cod);
        Ok(ComplementSquare { mid, embed, upper })
    }
}
