//! The partialization of a category: morphisms `i -> j` are spans
//! `i <- k -> j` whose left leg is a mono, taken up to isomorphism of
//! the span apex. Equality is decided by keeping every span in
//! canonical subobject form rather than by searching for isomorphisms.

use alloc::vec::Vec;

use crate::category::{Category, ComplementSquare, PullbackSquare};
use crate::error::{CatError, Result};

/// A partial morphism `src -> tgt`: a mono `alpha : sub -> src` in
/// canonical subobject form together with `f : sub -> tgt`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PMor<O, M> {
    pub src: O,
    pub tgt: O,
    pub sub: O,
    pub alpha: M,
    pub f: M,
}

/// A morphism of the subcategory where the span map extends to a
/// total morphism: `f = g . alpha` for some `g : src -> tgt`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QMor<O, M>(pub PMor<O, M>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partialization<C> {
    base: C,
}

impl<C: Category> Partialization<C> {
    pub fn new(base: C) -> Self {
        Partialization { base }
    }

    pub fn base(&self) -> &C {
        &self.base
    }

    /// Builds the canonical representative of the span `(alpha, f)`.
    pub fn from_span(&self, alpha: &C::Mor, f: &C::Mor) -> Result<PMor<C::Obj, C::Mor>> {
        if self.base.dom(alpha) != self.base.dom(f) {
            return Err(CatError::ObjectMismatch);
        }
        if !self.base.is_mono(alpha) {
            return Err(CatError::NotMono);
        }
        let (sub, iota, theta) = self.base.canonical_subobject(alpha)?;
        let theta_inv = self.base.inverse_of_iso(&theta)?;
        let f_canon = self.base.compose(f, &theta_inv)?;
        Ok(PMor {
            src: self.base.cod(alpha),
            tgt: self.base.cod(f),
            sub,
            alpha: iota,
            f: f_canon,
        })
    }

    /// Embedding of a total base morphism (the span with full domain).
    pub fn embed(&self, f: &C::Mor) -> PMor<C::Obj, C::Mor> {
        let src = self.base.dom(f);
        PMor {
            src: src.clone(),
            tgt: self.base.cod(f),
            sub: src.clone(),
            alpha: self.base.identity(&src),
            f: f.clone(),
        }
    }

    /// Whether the span map factors through its mono via a total
    /// morphism, i.e. the element lies in the distinguished
    /// subcategory of "restrictions of total morphisms".
    pub fn is_in_q(&self, p: &PMor<C::Obj, C::Mor>) -> bool {
        self.base.hom(&p.src, &p.tgt).into_iter().any(|g| {
            self.base
                .compose(&g, &p.alpha)
                .map(|h| h == p.f)
                .unwrap_or(false)
        })
    }

    pub fn to_q(&self, p: &PMor<C::Obj, C::Mor>) -> Option<QMor<C::Obj, C::Mor>> {
        if self.is_in_q(p) {
            Some(QMor(p.clone()))
        } else {
            None
        }
    }

    /// Hom-set of the Q subcategory.
    pub fn q_hom(&self, i: &C::Obj, j: &C::Obj) -> Vec<QMor<C::Obj, C::Mor>> {
        self.hom(i, j)
            .into_iter()
            .filter(|p| self.is_in_q(p))
            .map(QMor)
            .collect()
    }

    fn is_embedded_mono(&self, p: &PMor<C::Obj, C::Mor>) -> bool {
        p.sub == p.src
            && p.alpha == self.base.identity(&p.src)
            && self.base.is_mono(&p.f)
    }
}

impl<C: Category> Category for Partialization<C> {
    type Obj = C::Obj;
    type Mor = PMor<C::Obj, C::Mor>;

    fn objects(&self) -> Vec<C::Obj> {
        self.base.objects()
    }

    fn dom(&self, p: &Self::Mor) -> C::Obj {
        p.src.clone()
    }

    fn cod(&self, p: &Self::Mor) -> C::Obj {
        p.tgt.clone()
    }

    fn identity(&self, obj: &C::Obj) -> Self::Mor {
        self.embed(&self.base.identity(obj))
    }

    /// Pull the first span back along the second span's mono, then
    /// glue and recanonicalize.
    fn compose(&self, second: &Self::Mor, first: &Self::Mor) -> Result<Self::Mor> {
        if first.tgt != second.src {
            return Err(CatError::CompositionMismatch);
        }
        let square = self.base.pullback_along_mono(&first.f, &second.alpha)?;
        let alpha_raw = self.base.compose(&first.alpha, &square.left_mono)?;
        let f_raw = self.base.compose(&second.f, &square.top)?;
        self.from_span(&alpha_raw, &f_raw)
    }

    /// The monomorphisms are exactly the embedded base monos.
    fn is_mono(&self, p: &Self::Mor) -> bool {
        self.is_embedded_mono(p)
    }

    fn is_iso(&self, p: &Self::Mor) -> bool {
        p.sub == p.src
            && p.alpha == self.base.identity(&p.src)
            && self.base.is_iso(&p.f)
    }

    fn inverse_of_iso(&self, p: &Self::Mor) -> Result<Self::Mor> {
        if !self.is_iso(p) {
            return Err(CatError::NotIso);
        }
        Ok(self.embed(&self.base.inverse_of_iso(&p.f)?))
    }

    fn hom(&self, i: &C::Obj, j: &C::Obj) -> Vec<Self::Mor> {
        let mut out = Vec::new();
        for (sub, iota) in self.base.subobjects(i) {
            for f in self.base.hom(&sub, j) {
                out.push(PMor {
                    src: i.clone(),
                    tgt: j.clone(),
                    sub: sub.clone(),
                    alpha: iota.clone(),
                    f,
                });
            }
        }
        out
    }

    fn subobjects(&self, obj: &C::Obj) -> Vec<(C::Obj, Self::Mor)> {
        self.base
            .subobjects(obj)
            .into_iter()
            .map(|(sub, iota)| {
                let m = self.embed(&iota);
                (sub, m)
            })
            .collect()
    }

    fn canonical_subobject(&self, p: &Self::Mor) -> Result<(C::Obj, Self::Mor, Self::Mor)> {
        if !self.is_embedded_mono(p) {
            return Err(CatError::NotMono);
        }
        let (sub, iota, theta) = self.base.canonical_subobject(&p.f)?;
        Ok((sub, self.embed(&iota), self.embed(&theta)))
    }

    /// Pullback along an embedded mono: the base pullback of the span
    /// map, followed by a complement for the new mono pair.
    fn pullback_along_mono(
        &self,
        p: &Self::Mor,
        alpha: &Self::Mor,
    ) -> Result<PullbackSquare<C::Obj, Self::Mor>> {
        if p.tgt != alpha.tgt {
            return Err(CatError::ObjectMismatch);
        }
        if !self.is_embedded_mono(alpha) {
            return Err(CatError::NotMono);
        }
        let beta = &alpha.f;
        let right = self.base.pullback_along_mono(&p.f, beta)?;
        let comp = self.base.complement(&right.left_mono, &p.alpha)?;
        let top = self.from_span(&comp.embed, &right.top)?;
        Ok(PullbackSquare {
            apex: comp.mid.clone(),
            left_mono: self.embed(&comp.upper),
            top,
        })
    }

    fn supports_complements(&self) -> bool {
        self.base.supports_complements()
    }

    /// Complements of embedded monos are the embedded base
    /// complements.
    fn complement(
        &self,
        alpha: &Self::Mor,
        beta: &Self::Mor,
    ) -> Result<ComplementSquare<C::Obj, Self::Mor>> {
        if !self.is_embedded_mono(alpha) || !self.is_embedded_mono(beta) {
            return Err(CatError::NotMono);
        }
        let comp = self.base.complement(&alpha.f, &beta.f)?;
        Ok(ComplementSquare {
            mid: comp.mid.clone(),
            embed: self.embed(&comp.embed),
            upper: self.embed(&comp.upper),
        })
    }
}
