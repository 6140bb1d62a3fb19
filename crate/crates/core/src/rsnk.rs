//! Flat model of the orthodox monoids `RS(n, k)`: normal forms are a
//! nested flag of subsets of `{1..n}` together with an injection
//! defined on the innermost set. The multiplication formula here was
//! derived by instrumenting the generic staircase product on small
//! cases; the generic engine stays the ground truth in tests.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cats::{full_set, subsets_of, Elem, FinInj, SetFn, SetObj};
use crate::chain::{self, BMor, Chain};
use crate::error::{CatError, Result};
use crate::semigroup::FiniteSemigroup;

pub use crate::chain::BMor as OPrimeMap;

/// Normal form of an element of `RS(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RSElement {
    pub n: u32,
    pub k: usize,
    /// `flags[0] <= flags[1] <= ... <= flags[k-1] <= {1..n}`.
    pub flags: Vec<SetObj>,
    /// Injection `flags[0] -> {1..n}` as a sorted pair list.
    pub f: BTreeMap<Elem, Elem>,
}

/// An idempotent: the element whose map is the inclusion of the
/// innermost flag component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FlagIdempotent {
    pub n: u32,
    pub k: usize,
    pub flags: Vec<SetObj>,
}

impl RSElement {
    pub fn new(n: u32, k: usize, flags: Vec<SetObj>, f: BTreeMap<Elem, Elem>) -> Result<Self> {
        if k == 0 || flags.len() != k {
            return Err(CatError::InvalidParameter("flag count must equal k"));
        }
        let full = full_set(n);
        for w in flags.windows(2) {
            if !w[0].is_subset(&w[1]) {
                return Err(CatError::InvalidParameter("flags must be nested"));
            }
        }
        if !flags[k - 1].is_subset(&full) {
            return Err(CatError::InvalidParameter("flags must lie in the universe"));
        }
        let keys: SetObj = f.keys().copied().collect();
        let vals: SetObj = f.values().copied().collect();
        if keys != flags[0] || vals.len() != f.len() || !vals.is_subset(&full) {
            return Err(CatError::InvalidParameter("map must be an injection on the innermost flag"));
        }
        Ok(RSElement { n, k, flags, f })
    }

    pub fn identity(n: u32, k: usize) -> Self {
        let full = full_set(n);
        RSElement {
            n,
            k,
            flags: alloc::vec![full.clone(); k],
            f: full.iter().map(|&e| (e, e)).collect(),
        }
    }

    pub fn image(&self) -> SetObj {
        self.f.values().copied().collect()
    }

    pub fn is_idempotent_form(&self) -> bool {
        self.f.iter().all(|(a, b)| a == b)
    }

    pub fn as_flag_idempotent(&self) -> Option<FlagIdempotent> {
        if self.is_idempotent_form() {
            Some(FlagIdempotent { n: self.n, k: self.k, flags: self.flags.clone() })
        } else {
            None
        }
    }
}

impl FlagIdempotent {
    pub fn to_element(&self) -> RSElement {
        RSElement {
            n: self.n,
            k: self.k,
            flags: self.flags.clone(),
            f: self.flags[0].iter().map(|&e| (e, e)).collect(),
        }
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, s: &SetObj) -> fmt::Result {
    write!(f, "{{")?;
    let mut first = true;
    for e in s {
        if !first {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
        first = false;
    }
    write!(f, "}}")
}

impl fmt::Display for RSElement {
    /// `[A1|A2|...|Ak];f` with sets `{1,3}` and the map as
    /// `1->2,3->1` (or `-` when empty).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, set) in self.flags.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            fmt_set(f, set)?;
        }
        write!(f, "];")?;
        if self.f.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for (a, b) in &self.f {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{a}->{b}")?;
            first = false;
        }
        Ok(())
    }
}

/// `b . a` (apply `a` first). Component `r` of the result is
/// `f^{-1}(B_r) + (A_r - A_1)` and the map is `g . f` restricted to
/// `f^{-1}(B_1)`.
pub fn rs_multiply(b: &RSElement, a: &RSElement) -> Result<RSElement> {
    if a.n != b.n || a.k != b.k {
        return Err(CatError::ObjectMismatch);
    }
    let a1 = &a.flags[0];
    let preimage = |target: &SetObj| -> SetObj {
        a.f.iter().filter(|(_, v)| target.contains(v)).map(|(&u, _)| u).collect()
    };
    let mut flags = Vec::with_capacity(a.k);
    for r in 0..a.k {
        let mut c: SetObj = preimage(&b.flags[r]);
        c.extend(a.flags[r].difference(a1).copied());
        flags.push(c);
    }
    let f: BTreeMap<Elem, Elem> = preimage(&b.flags[0])
        .iter()
        .map(|&u| (u, b.f[&a.f[&u]]))
        .collect();
    RSElement::new(a.n, a.k, flags, f)
}

/// Idempotent flag product: component `i` is
/// `(A_1 & B_i) + (A_i - A_1)`.
pub fn flag_product(b: &FlagIdempotent, a: &FlagIdempotent) -> Result<FlagIdempotent> {
    if a.n != b.n || a.k != b.k {
        return Err(CatError::ObjectMismatch);
    }
    let a1 = &a.flags[0];
    let flags = (0..a.k)
        .map(|i| {
            let mut c: SetObj = a1.intersection(&b.flags[i]).copied().collect();
            c.extend(a.flags[i].difference(a1).copied());
            c
        })
        .collect();
    Ok(FlagIdempotent { n: a.n, k: a.k, flags })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `sum_i C(n,i)^2 i! k^(n-i)`.
pub fn rs_cardinality(n: u32, k: u32) -> u64 {
    let n = n as u64;
    let k = k as u64;
    (0..=n)
        .map(|i| binom(n, i) * binom(n, i) * factorial(i) * k.pow((n - i) as u32))
        .sum()
}

/// `(k+1)^n`.
pub fn rs_idempotent_count(n: u32, k: u32) -> u64 {
    ((k + 1) as u64).pow(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreenRel {
    L,
    R,
    H,
    D,
    J,
}

/// The closed-form characterizations on normal forms.
pub fn rs_green(a: &RSElement, b: &RSElement, rel: GreenRel) -> Result<bool> {
    if a.n != b.n || a.k != b.k {
        return Err(CatError::ObjectMismatch);
    }
    Ok(match rel {
        GreenRel::L => a.flags == b.flags,
        GreenRel::R => a.image() == b.image(),
        GreenRel::H => a.flags == b.flags && a.image() == b.image(),
        GreenRel::D | GreenRel::J => a.flags[0].len() == b.flags[0].len(),
    })
}

/// All elements of `RS(n, k)`, sorted.
pub fn enumerate_rs(n: u32, k: usize) -> Vec<RSElement> {
    assert!(k >= 1);
    let full = full_set(n);
    let mut out = Vec::new();
    let mut flags_outer_first: Vec<SetObj> = Vec::with_capacity(k);
    fn injections(dom: &SetObj, cod: &SetObj) -> Vec<BTreeMap<Elem, Elem>> {
        crate::cats::all_injections(dom, cod)
            .into_iter()
            .map(|f| f.map)
            .collect()
    }
    fn rec(
        n: u32,
        k: usize,
        full: &SetObj,
        flags_outer_first: &mut Vec<SetObj>,
        out: &mut Vec<RSElement>,
    ) {
        if flags_outer_first.len() == k {
            let inner = flags_outer_first.last().expect("k >= 1");
            for f in injections(inner, full) {
                let mut flags = flags_outer_first.clone();
                flags.reverse();
                out.push(RSElement { n, k, flags, f });
            }
            return;
        }
        let parent = flags_outer_first.last().cloned().unwrap_or_else(|| full.clone());
        for sub in subsets_of(&parent) {
            flags_outer_first.push(sub);
            rec(n, k, full, flags_outer_first, out);
            flags_outer_first.pop();
        }
    }
    rec(n, k, &full, &mut flags_outer_first, &mut out);
    out.sort();
    out
}

/// All flag idempotents of `RS(n, k)`.
pub fn enumerate_flag_idempotents(n: u32, k: usize) -> Vec<FlagIdempotent> {
    enumerate_rs(n, k)
        .into_iter()
        .filter_map(|e| e.as_flag_idempotent())
        .collect()
}

/// The corresponding chain over the injection category at the full
/// object.
pub fn to_chain(e: &RSElement) -> Chain<SetObj, SetFn> {
    let full = full_set(e.n);
    let monos: Vec<SetFn> = (0..e.k)
        .map(|t| {
            let sup = if t + 1 < e.k { &e.flags[t + 1] } else { &full };
            SetFn::inclusion(&e.flags[t], sup)
        })
        .collect();
    Chain {
        src: full.clone(),
        tgt: full,
        objs: e.flags.clone(),
        monos,
        f: SetFn {
            dom: e.flags[0].clone(),
            cod: full_set(e.n),
            map: e.f.clone(),
        },
    }
}

/// Inverse of `to_chain` on canonical chains (inclusion monos).
pub fn from_chain(n: u32, ch: &Chain<SetObj, SetFn>) -> Result<RSElement> {
    RSElement::new(n, ch.depth(), ch.objs.clone(), ch.f.map.clone())
}

/// Action of an endomorphism of the depth-`k` index chain, routed
/// through the generic reindexing on chains.
pub fn oprime_act(phi: &OPrimeMap, x: &RSElement) -> Result<RSElement> {
    if phi.src_depth != x.k || phi.tgt_depth() != x.k {
        return Err(CatError::LengthMismatch);
    }
    let cat = FinInj::new(x.n)?;
    let moved = phi.apply(&cat, &to_chain(x))?;
    from_chain(x.n, &moved)
}

/// The monoid of order preserving self-maps of `{1..m, oo}` fixing
/// `1` and `oo`, with its element list.
pub fn oprime_monoid(m: usize) -> Result<(FiniteSemigroup, Vec<OPrimeMap>)> {
    if m == 0 {
        return Err(CatError::InvalidParameter("chain size must be >= 1"));
    }
    let elems = chain::all_endo_bmors(m);
    let sg = FiniteSemigroup::from_elements(&elems, |a, b| {
        BMor::compose(a, b).expect("endomorphisms compose")
    })?;
    Ok((sg, elems))
}

/// Builds the Cayley table of `RS(n, k)` from the flat product,
/// returning the sorted element list alongside.
pub fn rs_monoid(n: u32, k: usize) -> Result<(FiniteSemigroup, Vec<RSElement>)> {
    let elems = enumerate_rs(n, k);
    let sg = FiniteSemigroup::from_elements(&elems, |a, b| {
        rs_multiply(a, b).expect("same parameters")
    })?;
    Ok((sg, elems))
}

/// Canonical string form used by exports.
pub fn canonical_string(e: &RSElement) -> String {
    alloc::format!("{e}")
}
