//! Flat representation of iterated partial morphisms: a chain of
//! monos `k_1 -> k_2 -> ... -> k_n -> src` together with a map
//! `k_1 -> tgt`, kept in canonical subobject form so that equality is
//! structural. Two different products live on the same carrier: the
//! staircase product (the true n-fold iteration) and the quasi
//! product (pullbacks only).

use alloc::vec::Vec;

use crate::category::Category;
use crate::error::{CatError, Result};

/// `monos[t] : objs[t] -> objs[t+1]` with `objs[n] := src`, and
/// `f : objs[0] -> tgt`. The depth is `monos.len()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain<O, M> {
    pub src: O,
    pub tgt: O,
    pub objs: Vec<O>,
    pub monos: Vec<M>,
    pub f: M,
}

impl<O, M> Chain<O, M> {
    pub fn depth(&self) -> usize {
        self.monos.len()
    }
}

/// Structural sanity check: endpoints line up and all legs are monos.
pub fn validate<C: Category>(cat: &C, ch: &Chain<C::Obj, C::Mor>) -> Result<()> {
    if ch.objs.len() != ch.monos.len() || ch.objs.is_empty() {
        return Err(CatError::LengthMismatch);
    }
    let n = ch.depth();
    for t in 0..n {
        if !cat.is_mono(&ch.monos[t]) {
            return Err(CatError::NotMono);
        }
        if cat.dom(&ch.monos[t]) != ch.objs[t] {
            return Err(CatError::ObjectMismatch);
        }
        let target = if t + 1 < n { ch.objs[t + 1].clone() } else { ch.src.clone() };
        if cat.cod(&ch.monos[t]) != target {
            return Err(CatError::ObjectMismatch);
        }
    }
    if cat.dom(&ch.f) != ch.objs[0] || cat.cod(&ch.f) != ch.tgt {
        return Err(CatError::ObjectMismatch);
    }
    Ok(())
}

/// Embedding of a total base morphism at a given depth: every chain
/// object is the domain and every mono is the identity.
pub fn embed<C: Category>(cat: &C, f: &C::Mor, depth: usize) -> Chain<C::Obj, C::Mor> {
    let src = cat.dom(f);
    Chain {
        src: src.clone(),
        tgt: cat.cod(f),
        objs: alloc::vec![src.clone(); depth],
        monos: alloc::vec![cat.identity(&src); depth],
        f: f.clone(),
    }
}

pub fn identity_chain<C: Category>(cat: &C, obj: &C::Obj, depth: usize) -> Chain<C::Obj, C::Mor> {
    embed(cat, &cat.identity(obj), depth)
}

/// Rewrites every mono into canonical subobject form, working from
/// the outermost inwards and threading the correcting isomorphisms.
pub fn canonicalize<C: Category>(
    cat: &C,
    ch: &Chain<C::Obj, C::Mor>,
) -> Result<Chain<C::Obj, C::Mor>> {
    let n = ch.depth();
    let mut objs = ch.objs.clone();
    let mut monos = ch.monos.clone();
    let mut f = ch.f.clone();
    for t in (0..n).rev() {
        let (obj, iota, theta) = cat.canonical_subobject(&monos[t])?;
        objs[t] = obj;
        monos[t] = iota;
        if t > 0 {
            monos[t - 1] = cat.compose(&theta, &monos[t - 1])?;
        } else {
            let theta_inv = cat.inverse_of_iso(&theta)?;
            f = cat.compose(&f, &theta_inv)?;
        }
    }
    Ok(Chain { src: ch.src.clone(), tgt: ch.tgt.clone(), objs, monos, f })
}

/// The staircase product `second . first` of equal-depth chains:
/// each row starts with a pullback in the rightmost column and
/// continues with complement squares to the left.
pub fn chain_compose<C: Category>(
    cat: &C,
    second: &Chain<C::Obj, C::Mor>,
    first: &Chain<C::Obj, C::Mor>,
) -> Result<Chain<C::Obj, C::Mor>> {
    if first.depth() != second.depth() {
        return Err(CatError::LengthMismatch);
    }
    if first.tgt != second.src {
        return Err(CatError::CompositionMismatch);
    }
    let n = first.depth();
    // Working row: monos of the current (partially consumed) top
    // chain and the map out of its leftmost object.
    let mut row_monos: Vec<C::Mor> = first.monos.clone();
    let mut top = first.f.clone();
    let mut out_objs: Vec<C::Obj> = alloc::vec![first.src.clone(); n];
    let mut out_monos: Vec<C::Mor> = Vec::with_capacity(n);
    for r in (0..n).rev() {
        let square = cat.pullback_along_mono(&top, &second.monos[r])?;
        top = square.top;
        let mut b = square.left_mono;
        let mut next_monos: Vec<C::Mor> = Vec::with_capacity(r);
        for mono in row_monos.iter().take(r) {
            let comp = cat.complement(&b, mono)?;
            next_monos.push(comp.embed);
            b = comp.upper;
        }
        // `b` now sits under column r; push it through the row's
        // final mono to get the r-th leg of the result.
        let gamma = cat.compose(&row_monos[r], &b)?;
        out_objs[r] = cat.dom(&gamma);
        out_monos.push(gamma);
        row_monos = next_monos;
    }
    out_monos.reverse();
    let f = cat.compose(&second.f, &top)?;
    let raw = Chain {
        src: first.src.clone(),
        tgt: second.tgt.clone(),
        objs: out_objs,
        monos: out_monos,
        f,
    };
    canonicalize(cat, &raw)
}

/// The quasi product `second . first`: a single cascade of pullbacks
/// down the second chain, with the first chain's monos only entering
/// through the outermost leg.
pub fn quasi_compose<C: Category>(
    cat: &C,
    second: &Chain<C::Obj, C::Mor>,
    first: &Chain<C::Obj, C::Mor>,
) -> Result<Chain<C::Obj, C::Mor>> {
    if first.depth() != second.depth() {
        return Err(CatError::LengthMismatch);
    }
    if first.tgt != second.src {
        return Err(CatError::CompositionMismatch);
    }
    let n = first.depth();
    let mut legs: Vec<C::Mor> = Vec::with_capacity(n);
    let mut current = first.f.clone();
    for r in (0..n).rev() {
        let square = cat.pullback_along_mono(&current, &second.monos[r])?;
        legs.push(square.left_mono);
        current = square.top;
    }
    legs.reverse();
    // legs[n-1] lands in objs[0] of the first chain; compose it with
    // the full mono tower to reach the source.
    let mut outer = legs[n - 1].clone();
    for mono in &first.monos {
        outer = cat.compose(mono, &outer)?;
    }
    let mut monos: Vec<C::Mor> = legs[..n - 1].to_vec();
    monos.push(outer);
    let objs: Vec<C::Obj> = monos.iter().map(|m| cat.dom(m)).collect();
    let f = cat.compose(&second.f, &current)?;
    let raw = Chain {
        src: first.src.clone(),
        tgt: second.tgt.clone(),
        objs,
        monos,
        f,
    };
    canonicalize(cat, &raw)
}

/// All canonical chains `i -> j` of the given depth.
pub fn enumerate_chains<C: Category>(
    cat: &C,
    i: &C::Obj,
    j: &C::Obj,
    depth: usize,
) -> Vec<Chain<C::Obj, C::Mor>> {
    assert!(depth >= 1, "chains have depth at least 1");
    let mut out = Vec::new();
    let mut objs: Vec<C::Obj> = Vec::with_capacity(depth);
    let mut monos: Vec<C::Mor> = Vec::with_capacity(depth);
    fn rec<C: Category>(
        cat: &C,
        i: &C::Obj,
        j: &C::Obj,
        depth: usize,
        objs: &mut Vec<C::Obj>,
        monos: &mut Vec<C::Mor>,
        out: &mut Vec<Chain<C::Obj, C::Mor>>,
    ) {
        if objs.len() == depth {
            let inner = objs.last().expect("depth >= 1");
            for f in cat.hom(inner, j) {
                let mut o = objs.clone();
                let mut m = monos.clone();
                o.reverse();
                m.reverse();
                out.push(Chain {
                    src: i.clone(),
                    tgt: j.clone(),
                    objs: o,
                    monos: m,
                    f,
                });
            }
            return;
        }
        let parent = objs.last().cloned().unwrap_or_else(|| i.clone());
        for (sub, iota) in cat.subobjects(&parent) {
            objs.push(sub);
            monos.push(iota);
            rec(cat, i, j, depth, objs, monos, out);
            objs.pop();
            monos.pop();
        }
    }
    rec(cat, i, j, depth, &mut objs, &mut monos, &mut out);
    out.sort();
    out
}

/// Predicted hom-set size, for guarding enumerations.
pub fn count_chains<C: Category>(cat: &C, i: &C::Obj, j: &C::Obj, depth: usize) -> u64 {
    fn rec<C: Category>(cat: &C, parent: &C::Obj, j: &C::Obj, left: usize) -> u64 {
        if left == 0 {
            return cat.hom(parent, j).len() as u64;
        }
        cat.subobjects(parent)
            .iter()
            .map(|(sub, _)| rec(cat, sub, j, left - 1))
            .sum()
    }
    rec(cat, i, j, depth)
}

/// A morphism `m -> n` of the index category that organizes the
/// natural maps between iteration depths: an order preserving map
/// from `{1..n, oo}` to `{1..m, oo}` sending `1` to `1` and `oo` to
/// `oo`, stored as the value list on `1..n` with `oo` encoded as
/// `usize::MAX`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BMor {
    pub src_depth: usize,
    pub vals: Vec<usize>,
}

pub const INF: usize = usize::MAX;

impl BMor {
    pub fn new(src_depth: usize, vals: Vec<usize>) -> Result<Self> {
        if vals.is_empty() || vals[0] != 1 {
            return Err(CatError::InvalidParameter("first value must be 1"));
        }
        for w in vals.windows(2) {
            if w[0] > w[1] {
                return Err(CatError::InvalidParameter("values must be nondecreasing"));
            }
        }
        if vals.iter().any(|&v| v != INF && (v < 1 || v > src_depth)) {
            return Err(CatError::InvalidParameter("value out of range"));
        }
        Ok(BMor { src_depth, vals })
    }

    pub fn tgt_depth(&self) -> usize {
        self.vals.len()
    }

    pub fn identity(depth: usize) -> Self {
        BMor { src_depth: depth, vals: (1..=depth).collect() }
    }

    /// The depth-raising map duplicating position `s` (`1 <= s <=
    /// depth + 1`; at `s = depth + 1` the new outer object is the
    /// source itself).
    pub fn duplication(depth: usize, s: usize) -> Result<Self> {
        if s < 1 || s > depth + 1 {
            return Err(CatError::InvalidParameter("duplication position out of range"));
        }
        let vals = (1..=depth + 1)
            .map(|t| {
                if t <= s {
                    if t == depth + 1 { INF } else { t }
                } else if t == s + 1 {
                    s
                } else {
                    t - 1
                }
            })
            .collect();
        BMor::new(depth, vals)
    }

    /// The depth-lowering map deleting position `s` (`2 <= s <=
    /// depth`).
    pub fn deletion(depth: usize, s: usize) -> Result<Self> {
        if s < 2 || s > depth {
            return Err(CatError::InvalidParameter("deletion position out of range"));
        }
        let vals = (1..=depth - 1).map(|t| if t < s { t } else { t + 1 }).collect();
        BMor::new(depth, vals)
    }

    /// The retraction collapsing the whole tower onto its innermost
    /// object.
    pub fn retraction(depth: usize) -> Self {
        BMor { src_depth: depth, vals: alloc::vec![1; depth] }
    }

    /// `second . first` as maps of index chains: the underlying maps
    /// compose contravariantly.
    pub fn compose(second: &BMor, first: &BMor) -> Result<BMor> {
        if second.src_depth != first.tgt_depth() {
            return Err(CatError::CompositionMismatch);
        }
        let vals = second
            .vals
            .iter()
            .map(|&v| if v == INF { INF } else { first.vals[v - 1] })
            .collect();
        Ok(BMor { src_depth: first.src_depth, vals })
    }

    /// Reindexing action on a chain of matching depth. Position `t`
    /// of the result picks chain object `vals[t]` (the source object
    /// for `oo`) and the composite of the monos in between.
    pub fn apply<C: Category>(
        &self,
        cat: &C,
        ch: &Chain<C::Obj, C::Mor>,
    ) -> Result<Chain<C::Obj, C::Mor>> {
        if ch.depth() != self.src_depth {
            return Err(CatError::LengthMismatch);
        }
        let m = self.src_depth;
        let n = self.tgt_depth();
        let mut objs = Vec::with_capacity(n);
        let mut monos = Vec::with_capacity(n);
        for t in 0..n {
            let a = self.vals[t];
            let next = if t + 1 < n { self.vals[t + 1] } else { INF };
            if a == INF {
                objs.push(ch.src.clone());
                monos.push(cat.identity(&ch.src));
                continue;
            }
            objs.push(ch.objs[a - 1].clone());
            let stop = if next == INF { m } else { next - 1 };
            let mut acc = cat.identity(&ch.objs[a - 1]);
            for idx in (a - 1)..stop {
                acc = cat.compose(&ch.monos[idx], &acc)?;
            }
            // The composite must land in the next result object.
            if next == INF {
                debug_assert_eq!(cat.cod(&acc), ch.src);
            }
            monos.push(acc);
        }
        let raw = Chain {
            src: ch.src.clone(),
            tgt: ch.tgt.clone(),
            objs,
            monos,
            f: ch.f.clone(),
        };
        canonicalize(cat, &raw)
    }
}

/// All endomorphisms of depth `m` in the index category: order
/// preserving self-maps of `{1..m, oo}` fixing `1` and `oo`.
pub fn all_endo_bmors(m: usize) -> Vec<BMor> {
    let mut out = Vec::new();
    let mut vals: Vec<usize> = alloc::vec![1];
    fn rec(m: usize, vals: &mut Vec<usize>, out: &mut Vec<BMor>) {
        if vals.len() == m {
            out.push(BMor { src_depth: m, vals: vals.clone() });
            return;
        }
        let lo = *vals.last().expect("seeded with 1");
        if lo == INF {
            vals.push(INF);
            rec(m, vals, out);
            vals.pop();
            return;
        }
        for v in lo..=m {
            vals.push(v);
            rec(m, vals, out);
            vals.pop();
        }
        vals.push(INF);
        rec(m, vals, out);
        vals.pop();
    }
    if m == 0 {
        return out;
    }
    rec(m, &mut vals, &mut out);
    out
}

/// All morphisms `m -> n` in the index category.
pub fn all_bmors(m: usize, n: usize) -> Vec<BMor> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut vals: Vec<usize> = alloc::vec![1];
    fn rec(m: usize, n: usize, vals: &mut Vec<usize>, out: &mut Vec<BMor>) {
        if vals.len() == n {
            out.push(BMor { src_depth: m, vals: vals.clone() });
            return;
        }
        let lo = *vals.last().expect("seeded with 1");
        if lo == INF {
            vals.push(INF);
            rec(m, n, vals, out);
            vals.pop();
            return;
        }
        for v in lo..=m {
            vals.push(v);
            rec(m, n, vals, out);
            vals.pop();
        }
        vals.push(INF);
        rec(m, n, vals, out);
        vals.pop();
    }
    rec(m, n, &mut vals, &mut out);
    out
}
