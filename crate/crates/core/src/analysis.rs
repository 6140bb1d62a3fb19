//! Structural analysis of finite semigroups given by their
//! multiplication table: Green's relations, regularity hierarchy
//! predicates, unit groups and maximal subgroups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::semigroup::FiniteSemigroup;

/// Class index per element, for each of the five relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenClasses {
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
    pub j: Vec<usize>,
}

impl GreenClasses {
    pub fn classes_of(ids: &[usize]) -> Vec<Vec<usize>> {
        let mut by_id: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (e, &c) in ids.iter().enumerate() {
            by_id.entry(c).or_default().push(e);
        }
        by_id.into_values().collect()
    }

    pub fn related(ids: &[usize], a: usize, b: usize) -> bool {
        ids[a] == ids[b]
    }
}

fn canon_ids<K: Ord>(keys: Vec<K>) -> Vec<usize> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    let index: BTreeMap<&K, usize> = sorted.into_iter().enumerate().map(|(i, k)| (k, i)).collect();
    keys.iter().map(|k| index[k]).collect()
}

fn right_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = (0..s.len()).map(|x| s.mul(a, x)).collect();
    out.insert(a);
    out
}

fn left_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = (0..s.len()).map(|x| s.mul(x, a)).collect();
    out.insert(a);
    out
}

fn two_sided_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    let n = s.len();
    let mut out = right_ideal(s, a);
    out.extend(left_ideal(s, a));
    for x in 0..n {
        let xa = s.mul(x, a);
        for y in 0..n {
            out.insert(s.mul(xa, y));
        }
    }
    out
}

/// Green's relations computed from principal ideals.
pub fn green(s: &FiniteSemigroup) -> GreenClasses {
    let n = s.len();
    let r_ideals: Vec<BTreeSet<usize>> = (0..n).map(|a| right_ideal(s, a)).collect();
    let l_ideals: Vec<BTreeSet<usize>> = (0..n).map(|a| left_ideal(s, a)).collect();
    let j_ideals: Vec<BTreeSet<usize>> = (0..n).map(|a| two_sided_ideal(s, a)).collect();
    let r = canon_ids(r_ideals);
    let l = canon_ids(l_ideals);
    let j = canon_ids(j_ideals);
    let h = canon_ids(l.iter().zip(&r).map(|(&a, &b)| (a, b)).collect::<Vec<_>>());
    // D as the transitive closure of L and R, via union-find.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut first_of: BTreeMap<(bool, usize), usize> = BTreeMap::new();
    for e in 0..n {
        for key in [(false, l[e]), (true, r[e])] {
            let root = find(&mut parent, e);
            match first_of.get(&key) {
                Some(&other) => {
                    let o = find(&mut parent, other);
                    parent[root] = o;
                }
                None => {
                    first_of.insert(key, e);
                }
            }
        }
    }
    let d = canon_ids((0..n).map(|e| find(&mut parent, e)).collect::<Vec<_>>());
    GreenClasses { l, r, h, d, j }
}

pub fn is_regular(s: &FiniteSemigroup) -> bool {
    let n = s.len();
    (0..n).all(|a| (0..n).any(|x| s.mul(s.mul(a, x), a) == a))
}

pub fn idempotents_commute(s: &FiniteSemigroup) -> bool {
    let e = s.idempotents();
    e.iter()
        .all(|&x| e.iter().all(|&y| s.mul(x, y) == s.mul(y, x)))
}

pub fn is_inverse(s: &FiniteSemigroup) -> bool {
    is_regular(s) && idempotents_commute(s)
}

pub fn idempotents_closed(s: &FiniteSemigroup) -> bool {
    let e: BTreeSet<usize> = s.idempotents().into_iter().collect();
    e.iter().all(|&x| e.iter().all(|&y| e.contains(&s.mul(x, y))))
}

pub fn is_orthodox(s: &FiniteSemigroup) -> bool {
    is_regular(s) && idempotents_closed(s)
}

/// A monoid is factorizable when every element is a unit times an
/// idempotent.
pub fn is_factorizable(s: &FiniteSemigroup) -> bool {
    if s.identity_index().is_none() {
        return false;
    }
    let units = s.units();
    let idems = s.idempotents();
    (0..s.len()).all(|a| {
        units
            .iter()
            .any(|&g| idems.iter().any(|&e| s.mul(g, e) == a))
    })
}

/// Submonoid generated by the given elements (plus the identity).
pub fn submonoid_closure(s: &FiniteSemigroup, gens: &[usize]) -> BTreeSet<usize> {
    let mut out: BTreeSet<usize> = gens.iter().copied().collect();
    if let Some(id) = s.identity_index() {
        out.insert(id);
    }
    loop {
        let snapshot: Vec<usize> = out.iter().copied().collect();
        let before = out.len();
        for &a in &snapshot {
            for &b in &snapshot {
                out.insert(s.mul(a, b));
            }
        }
        if out.len() == before {
            return out;
        }
    }
}

/// The submonoid generated by all units and idempotents. For an
/// inverse monoid this is the maximal factorizable inverse submonoid.
pub fn factorizable_part(s: &FiniteSemigroup) -> BTreeSet<usize> {
    let mut gens = s.units();
    gens.extend(s.idempotents());
    submonoid_closure(s, &gens)
}

/// Isomorphism-type fingerprint of a maximal subgroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgroupInfo {
    pub idempotent: usize,
    pub order: usize,
    pub abelian: bool,
    pub element_orders: Vec<usize>,
}

/// The maximal subgroup at each idempotent: its H-class with the
/// idempotent as identity.
pub fn max_subgroups(s: &FiniteSemigroup) -> Vec<SubgroupInfo> {
    let g = green(s);
    let mut out = Vec::new();
    for e in s.idempotents() {
        let class: Vec<usize> = (0..s.len()).filter(|&x| g.h[x] == g.h[e]).collect();
        let abelian = class
            .iter()
            .all(|&x| class.iter().all(|&y| s.mul(x, y) == s.mul(y, x)));
        let mut element_orders: Vec<usize> = class
            .iter()
            .map(|&x| {
                let mut p = x;
                let mut ord = 1;
                while p != e {
                    p = s.mul(p, x);
                    ord += 1;
                }
                ord
            })
            .collect();
        element_orders.sort();
        out.push(SubgroupInfo {
            idempotent: e,
            order: class.len(),
            abelian,
            element_orders,
        });
    }
    out
}

/// Everything the export format wants in one bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub idempotents: Vec<usize>,
    pub units: Vec<usize>,
    pub regular: bool,
    pub inverse: bool,
    pub orthodox: bool,
    pub factorizable: bool,
    pub green: GreenClasses,
    pub subgroups: Vec<SubgroupInfo>,
}

pub fn analyze(s: &FiniteSemigroup) -> AnalysisReport {
    let regular = is_regular(s);
    AnalysisReport {
        idempotents: s.idempotents(),
        units: s.units(),
        regular,
        inverse: regular && idempotents_commute(s),
        orthodox: regular && idempotents_closed(s),
        factorizable: is_factorizable(s),
        green: green(s),
        subgroups: max_subgroups(s),
    }
}
