//! Shared function-on-finite-sets machinery.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CatError, Result};

pub type Elem = u32;
pub type SetObj = BTreeSet<Elem>;

pub fn full_set(n: u32) -> SetObj {
    (1..=n).collect()
}

/// All subsets of `obj`, smallest first, each sorted internally.
pub fn subsets_of(obj: &SetObj) -> Vec<SetObj> {
    let elems: Vec<Elem> = obj.iter().copied().collect();
    let mut out = Vec::with_capacity(1 << elems.len());
    for mask in 0u64..(1u64 << elems.len()) {
        let s: SetObj = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        out.push(s);
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// A total function between two finite subsets of the universe,
/// stored as a sorted pair list for order-independent equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetFn {
    pub dom: SetObj,
    pub cod: SetObj,
    pub map: BTreeMap<Elem, Elem>,
}

impl SetFn {
    pub fn new(dom: SetObj, cod: SetObj, map: BTreeMap<Elem, Elem>) -> Result<Self> {
        if map.len() != dom.len()
            || !map.keys().all(|k| dom.contains(k))
            || !map.values().all(|v| cod.contains(v))
        {
            return Err(CatError::InvalidParameter("function table out of range"));
        }
        Ok(SetFn { dom, cod, map })
    }

    pub fn identity(obj: &SetObj) -> Self {
        SetFn {
            dom: obj.clone(),
            cod: obj.clone(),
            map: obj.iter().map(|&e| (e, e)).collect(),
        }
    }

    pub fn inclusion(sub: &SetObj, sup: &SetObj) -> Self {
        debug_assert!(sub.is_subset(sup));
        SetFn {
            dom: sub.clone(),
            cod: sup.clone(),
            map: sub.iter().map(|&e| (e, e)).collect(),
        }
    }

    pub fn apply(&self, e: Elem) -> Elem {
        self.map[&e]
    }

    pub fn image(&self) -> SetObj {
        self.map.values().copied().collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.map.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.image() == self.cod
    }

    /// `second . first` as function tables.
    pub fn compose(second: &SetFn, first: &SetFn) -> Result<SetFn> {
        if first.cod != second.dom {
            return Err(CatError::CompositionMismatch);
        }
        Ok(SetFn {
            dom: first.dom.clone(),
            cod: second.cod.clone(),
            map: first.map.iter().map(|(&k, &v)| (k, second.map[&v])).collect(),
        })
    }

    pub fn inverse(&self) -> Result<SetFn> {
        if !self.is_bijective() {
            return Err(CatError::NotIso);
        }
        Ok(SetFn {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map: self.map.iter().map(|(&k, &v)| (v, k)).collect(),
        })
    }
}

impl fmt::Debug for SetFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFn({self})")
    }
}

impl fmt::Display for SetFn {
    /// Pair-list form `1->2,3->1`; the empty function prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for (k, v) in &self.map {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}->{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// All total maps `dom -> cod`.
pub fn all_maps(dom: &SetObj, cod: &SetObj) -> Vec<SetFn> {
    let dom_v: Vec<Elem> = dom.iter().copied().collect();
    let cod_v: Vec<Elem> = cod.iter().copied().collect();
    if dom_v.is_empty() {
        return alloc::vec![SetFn {
            dom: dom.clone(),
            cod: cod.clone(),
            map: BTreeMap::new(),
        }];
    }
    if cod_v.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; dom_v.len()];
    loop {
        out.push(SetFn {
            dom: dom.clone(),
            cod: cod.clone(),
            map: dom_v.iter().zip(&idx).map(|(&d, &i)| (d, cod_v[i])).collect(),
        });
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < cod_v.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// All injective maps `dom -> cod`, by backtracking.
pub fn all_injections(dom: &SetObj, cod: &SetObj) -> Vec<SetFn> {
    let dom_v: Vec<Elem> = dom.iter().copied().collect();
    let cod_v: Vec<Elem> = cod.iter().copied().collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Elem> = Vec::with_capacity(dom_v.len());
    let mut used = alloc::vec![false; cod_v.len()];
    fn rec(
        dom: &SetObj,
        cod: &SetObj,
        dom_v: &[Elem],
        cod_v: &[Elem],
        used: &mut [bool],
        chosen: &mut Vec<Elem>,
        out: &mut Vec<SetFn>,
    ) {
        if chosen.len() == dom_v.len() {
            out.push(SetFn {
                dom: dom.clone(),
                cod: cod.clone(),
                map: dom_v.iter().copied().zip(chosen.iter().copied()).collect(),
            });
            return;
        }
        for i in 0..cod_v.len() {
            if !used[i] {
                used[i] = true;
                chosen.push(cod_v[i]);
                rec(dom, cod, dom_v, cod_v, used, chosen, out);
                chosen.pop();
                used[i] = false;
            }
        }
    }
    rec(dom, cod, &dom_v, &cod_v, &mut used, &mut chosen, &mut out);
    out
}

/// All surjective maps `dom -> cod`.
pub fn all_surjections(dom: &SetObj, cod: &SetObj) -> Vec<SetFn> {
    all_maps(dom, cod)
        .into_iter()
        .filter(|f| f.image() == *cod)
        .collect()
}

/// All partitions of `obj`, each as a sorted list of sorted blocks.
pub fn partitions_of(obj: &SetObj) -> Vec<Vec<SetObj>> {
    let elems: Vec<Elem> = obj.iter().copied().collect();
    let mut out = Vec::new();
    let mut blocks: Vec<SetObj> = Vec::new();
    fn rec(elems: &[Elem], blocks: &mut Vec<SetObj>, out: &mut Vec<Vec<SetObj>>) {
        match elems.split_first() {
            None => {
                let mut snapshot = blocks.clone();
                snapshot.sort();
                out.push(snapshot);
            }
            Some((&e, rest)) => {
                for i in 0..blocks.len() {
                    blocks[i].insert(e);
                    rec(rest, blocks, out);
                    blocks[i].remove(&e);
                }
                blocks.push(core::iter::once(e).collect());
                rec(rest, blocks, out);
                blocks.pop();
            }
        }
    }
    rec(&elems, &mut blocks, &mut out);
    out.sort();
    out.dedup();
    out
}
