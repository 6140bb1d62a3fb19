//! Models for the braid-permutation group and its inverse monoid of
//! partial welded braids, plus a relation checker and a bounded
//! rewriting engine. Products are read diagrammatically: in a word
//! the leftmost factor acts first.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::cats::{Elem, SetObj};
use crate::error::{CatError, Result};

/// A freely reduced word over generators `x_1, x_2, ...`; `true`
/// marks an inverse letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct FreeWord(Vec<(Elem, bool)>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: Elem) -> Self {
        FreeWord(alloc::vec![(i, false)])
    }

    pub fn letters(&self) -> &[(Elem, bool)] {
        &self.0
    }

    pub fn from_letters(letters: Vec<(Elem, bool)>) -> Self {
        let mut out = FreeWord::empty();
        for l in letters {
            out.push(l);
        }
        out
    }

    fn push(&mut self, letter: (Elem, bool)) {
        match self.0.last() {
            Some(&(i, s)) if i == letter.0 && s != letter.1 => {
                self.0.pop();
            }
            _ => self.0.push(letter),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&(i, s)| (i, !s)).collect())
    }

    /// Replaces every letter by the image of its generator, honoring
    /// signs; generators without an image are deleted.
    pub fn substitute<F>(&self, mut image: F) -> FreeWord
    where
        F: FnMut(Elem) -> Option<FreeWord>,
    {
        let mut out = FreeWord::empty();
        for &(i, inv) in &self.0 {
            if let Some(w) = image(i) {
                let w = if inv { w.inverse() } else { w };
                for &l in &w.0 {
                    out.push(l);
                }
            }
        }
        out
    }

    /// Deletes every letter whose generator index is not in `keep`.
    pub fn restrict(&self, keep: &SetObj) -> FreeWord {
        let mut out = FreeWord::empty();
        for &(i, s) in &self.0 {
            if keep.contains(&i) {
                out.push((i, s));
            }
        }
        out
    }
}

/// An automorphism of the free group on `n` generators of
/// permutation-conjugacy type: `x_i -> w_i x_{perm(i)} w_i^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PermConjAut {
    pub n: u32,
    /// `perm[i]` is the image index of strand `i`.
    pub perm: BTreeMap<Elem, Elem>,
    pub words: BTreeMap<Elem, FreeWord>,
}

impl PermConjAut {
    pub fn identity(n: u32) -> Self {
        PermConjAut {
            n,
            perm: (1..=n).map(|i| (i, i)).collect(),
            words: (1..=n).map(|i| (i, FreeWord::empty())).collect(),
        }
    }

    /// Full image word of the generator `x_i`.
    pub fn image(&self, i: Elem) -> FreeWord {
        let w = &self.words[&i];
        w.concat(&FreeWord::generator(self.perm[&i])).concat(&w.inverse())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BpKind {
    Sigma,
    SigmaInv,
    Tau,
}

/// The generators: `sigma_i` threads strand `i` under strand `i + 1`
/// (`x_i -> x_{i+1}`, `x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}`), and
/// `tau_i` swaps the strands without threading. The orientation is
/// tied to the diagrammatic evaluation order of `aut_eval`; the
/// mirrored choice breaks the mixed relations, see
/// `bp_sigma_reversed`.
pub fn bp_generator(kind: BpKind, i: u32, n: u32) -> Result<PermConjAut> {
    if i < 1 || i + 1 > n {
        return Err(CatError::InvalidParameter("generator index out of range"));
    }
    let mut g = PermConjAut::identity(n);
    g.perm.insert(i, i + 1);
    g.perm.insert(i + 1, i);
    match kind {
        BpKind::Tau => {}
        BpKind::Sigma => {
            g.words.insert(i + 1, FreeWord::generator(i + 1).inverse());
        }
        BpKind::SigmaInv => {
            g.words.insert(i, FreeWord::generator(i));
        }
    }
    Ok(g)
}

/// The deliberately mirrored threading move, kept around as a
/// negative control: with it the mixed relations must fail.
pub fn bp_sigma_reversed(i: u32, n: u32) -> Result<PermConjAut> {
    bp_generator(BpKind::SigmaInv, i, n)
}

/// `first` then `second` as maps: the composite sends `x_i` to
/// `second(first(x_i))`.
pub fn aut_compose(second: &PermConjAut, first: &PermConjAut) -> Result<PermConjAut> {
    if second.n != first.n {
        return Err(CatError::ObjectMismatch);
    }
    let n = first.n;
    let mut perm = BTreeMap::new();
    let mut words = BTreeMap::new();
    for i in 1..=n {
        let j = first.perm[&i];
        perm.insert(i, second.perm[&j]);
        let moved = first.words[&i].substitute(|g| Some(second.image(g)));
        words.insert(i, moved.concat(&second.words[&j]));
    }
    Ok(PermConjAut { n, perm, words })
}

pub fn aut_equal(a: &PermConjAut, b: &PermConjAut) -> bool {
    a.n == b.n && (1..=a.n).all(|i| a.image(i) == b.image(i))
}

/// Evaluates a word of generators diagrammatically (leftmost factor
/// first).
pub fn aut_eval(word: &[PermConjAut], n: u32) -> Result<PermConjAut> {
    let mut acc = PermConjAut::identity(n);
    for g in word {
        acc = aut_compose(g, &acc)?;
    }
    Ok(acc)
}

/// A partial welded braid: a partial bijection `pi : dom -> cod`
/// with a conjugator word for each strand of the domain, written in
/// letters indexed by the codomain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartialWeldedBraid {
    pub n: u32,
    pub dom: SetObj,
    pub cod: SetObj,
    pub pi: BTreeMap<Elem, Elem>,
    pub words: BTreeMap<Elem, FreeWord>,
}

impl PartialWeldedBraid {
    /// Full image word of the strand generator `x_i`, `i` in the
    /// domain.
    pub fn image(&self, i: Elem) -> FreeWord {
        let w = &self.words[&i];
        w.concat(&FreeWord::generator(self.pi[&i])).concat(&w.inverse())
    }
}

/// The partial identity on `Y`.
pub fn epsilon(y: &SetObj, n: u32) -> PartialWeldedBraid {
    PartialWeldedBraid {
        n,
        dom: y.clone(),
        cod: y.clone(),
        pi: y.iter().map(|&i| (i, i)).collect(),
        words: y.iter().map(|&i| (i, FreeWord::empty())).collect(),
    }
}

/// `epsilon_i`: the partial identity on the complement of `{i}`.
pub fn epsilon_i(i: u32, n: u32) -> PartialWeldedBraid {
    let y: SetObj = (1..=n).filter(|&x| x != i).collect();
    epsilon(&y, n)
}

pub fn embed_total(g: &PermConjAut) -> PartialWeldedBraid {
    let full: SetObj = (1..=g.n).collect();
    PartialWeldedBraid {
        n: g.n,
        dom: full.clone(),
        cod: full,
        pi: g.perm.clone(),
        words: g.words.clone(),
    }
}

/// `first` then `second`. Strands whose image leaves the second
/// factor's domain are dropped; their letters are erased from the
/// conjugator words, as are letters that fall outside the surviving
/// codomain.
pub fn iwb_compose(
    second: &PartialWeldedBraid,
    first: &PartialWeldedBraid,
) -> Result<PartialWeldedBraid> {
    if second.n != first.n {
        return Err(CatError::ObjectMismatch);
    }
    let dom: SetObj = first
        .dom
        .iter()
        .copied()
        .filter(|i| second.dom.contains(&first.pi[i]))
        .collect();
    let pi: BTreeMap<Elem, Elem> =
        dom.iter().map(|&i| (i, second.pi[&first.pi[&i]])).collect();
    let cod: SetObj = pi.values().copied().collect();
    let mut words = BTreeMap::new();
    for &i in &dom {
        let through = first.words[&i].substitute(|g| {
            if second.dom.contains(&g) {
                Some(second.image(g))
            } else {
                None
            }
        });
        let j = first.pi[&i];
        let w = through.concat(&second.words[&j]).restrict(&cod);
        words.insert(i, w);
    }
    Ok(PartialWeldedBraid { n: first.n, dom, cod, pi, words })
}

/// Evaluates a word of partial welded braids diagrammatically.
pub fn iwb_eval(word: &[PartialWeldedBraid], n: u32) -> Result<PartialWeldedBraid> {
    let full: SetObj = (1..=n).collect();
    let mut acc = epsilon(&full, n);
    for g in word {
        acc = iwb_compose(g, &acc)?;
    }
    Ok(acc)
}

/// One checked relation instance: a human-readable label plus the
/// outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub label: String,
    pub holds: bool,
}

pub fn all_pass(report: &[RelationCheck]) -> bool {
    report.iter().all(|c| c.holds)
}

fn sig(i: u32, n: u32) -> PermConjAut {
    bp_generator(BpKind::Sigma, i, n).expect("index checked by caller")
}

fn sig_inv(i: u32, n: u32) -> PermConjAut {
    bp_generator(BpKind::SigmaInv, i, n).expect("index checked by caller")
}

fn tau(i: u32, n: u32) -> PermConjAut {
    bp_generator(BpKind::Tau, i, n).expect("index checked by caller")
}

fn check_aut(label: String, lhs: &[PermConjAut], rhs: &[PermConjAut], n: u32) -> RelationCheck {
    let l = aut_eval(lhs, n).expect("well-formed word");
    let r = aut_eval(rhs, n).expect("well-formed word");
    RelationCheck { label, holds: aut_equal(&l, &r) }
}

/// Every instance of the braid, permutation and mixed relation
/// families in the automorphism model, with an optional substitute
/// for the threading generator (used by the negative control).
pub fn verify_bp_relations_with<F>(n: u32, mut sigma: F) -> Vec<RelationCheck>
where
    F: FnMut(u32, u32) -> PermConjAut,
{
    let mut out = Vec::new();
    let top = n.saturating_sub(1);
    for i in 1..=top {
        for j in 1..=top {
            if i.abs_diff(j) > 1 {
                out.push(check_aut(
                    alloc::format!("braid: s{i} s{j} = s{j} s{i}"),
                    &[sigma(i, n), sigma(j, n)],
                    &[sigma(j, n), sigma(i, n)],
                    n,
                ));
                out.push(check_aut(
                    alloc::format!("perm: t{i} t{j} = t{j} t{i}"),
                    &[tau(i, n), tau(j, n)],
                    &[tau(j, n), tau(i, n)],
                    n,
                ));
                out.push(check_aut(
                    alloc::format!("mixed: s{i} t{j} = t{j} s{i}"),
                    &[sigma(i, n), tau(j, n)],
                    &[tau(j, n), sigma(i, n)],
                    n,
                ));
            }
        }
        out.push(check_aut(
            alloc::format!("perm: t{i}^2 = 1"),
            &[tau(i, n), tau(i, n)],
            &[],
            n,
        ));
        if i + 1 <= top {
            let (a, b) = (i, i + 1);
            out.push(check_aut(
                alloc::format!("braid: s{a} s{b} s{a} = s{b} s{a} s{b}"),
                &[sigma(a, n), sigma(b, n), sigma(a, n)],
                &[sigma(b, n), sigma(a, n), sigma(b, n)],
                n,
            ));
            out.push(check_aut(
                alloc::format!("perm: t{a} t{b} t{a} = t{b} t{a} t{b}"),
                &[tau(a, n), tau(b, n), tau(a, n)],
                &[tau(b, n), tau(a, n), tau(b, n)],
                n,
            ));
            out.push(check_aut(
                alloc::format!("mixed: t{a} t{b} s{a} = s{b} t{a} t{b}"),
                &[tau(a, n), tau(b, n), sigma(a, n)],
                &[sigma(b, n), tau(a, n), tau(b, n)],
                n,
            ));
            out.push(check_aut(
                alloc::format!("mixed: s{a} s{b} t{a} = t{b} s{a} s{b}"),
                &[sigma(a, n), sigma(b, n), tau(a, n)],
                &[tau(b, n), sigma(a, n), sigma(b, n)],
                n,
            ));
        }
    }
    out
}

pub fn verify_bp_relations(n: u32) -> Vec<RelationCheck> {
    verify_bp_relations_with(n, sig)
}

fn check_iwb(
    label: String,
    lhs: &[PartialWeldedBraid],
    rhs: &[PartialWeldedBraid],
    n: u32,
) -> RelationCheck {
    let l = iwb_eval(lhs, n).expect("well-formed word");
    let r = iwb_eval(rhs, n).expect("well-formed word");
    RelationCheck { label, holds: l == r }
}

fn ws(i: u32, n: u32) -> PartialWeldedBraid {
    embed_total(&sig(i, n))
}

fn wsi(i: u32, n: u32) -> PartialWeldedBraid {
    embed_total(&sig_inv(i, n))
}

fn wt(i: u32, n: u32) -> PartialWeldedBraid {
    embed_total(&tau(i, n))
}

/// Every instance of the six relation families of the monoid
/// presentation, in the partial welded braid model.
pub fn verify_ibp_relations(n: u32) -> Vec<RelationCheck> {
    let mut out: Vec<RelationCheck> = verify_bp_relations(n)
        .into_iter()
        .map(|mut c| {
            c.label.insert_str(0, "group ");
            c
        })
        .collect();
    let top = n.saturating_sub(1);
    for i in 1..=top {
        out.push(check_iwb(
            alloc::format!("inverse: s{i} S{i} = 1"),
            &[ws(i, n), wsi(i, n)],
            &[],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("inverse: S{i} s{i} = 1"),
            &[wsi(i, n), ws(i, n)],
            &[],
            n,
        ));
    }
    for i in 1..=n {
        out.push(check_iwb(
            alloc::format!("semilattice: e{i}^2 = e{i}"),
            &[epsilon_i(i, n), epsilon_i(i, n)],
            &[epsilon_i(i, n)],
            n,
        ));
        for j in 1..=n {
            out.push(check_iwb(
                alloc::format!("semilattice: e{i} e{j} = e{j} e{i}"),
                &[epsilon_i(i, n), epsilon_i(j, n)],
                &[epsilon_i(j, n), epsilon_i(i, n)],
                n,
            ));
        }
    }
    for i in 1..=top {
        for j in 1..=n {
            if j != i && j != i + 1 {
                out.push(check_iwb(
                    alloc::format!("action: s{i} e{j} = e{j} s{i}"),
                    &[ws(i, n), epsilon_i(j, n)],
                    &[epsilon_i(j, n), ws(i, n)],
                    n,
                ));
                out.push(check_iwb(
                    alloc::format!("action: t{i} e{j} = e{j} t{i}"),
                    &[wt(i, n), epsilon_i(j, n)],
                    &[epsilon_i(j, n), wt(i, n)],
                    n,
                ));
            }
        }
        out.push(check_iwb(
            alloc::format!("action: s{i} e{i} = e{} s{i}", i + 1),
            &[ws(i, n), epsilon_i(i, n)],
            &[epsilon_i(i + 1, n), ws(i, n)],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("action: s{i} e{} = e{i} s{i}", i + 1),
            &[ws(i, n), epsilon_i(i + 1, n)],
            &[epsilon_i(i, n), ws(i, n)],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("action: t{i} e{i} = e{} t{i}", i + 1),
            &[wt(i, n), epsilon_i(i, n)],
            &[epsilon_i(i + 1, n), wt(i, n)],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("kernel: e{i} e{} s{i} = e{i} e{}", i + 1, i + 1),
            &[epsilon_i(i, n), epsilon_i(i + 1, n), ws(i, n)],
            &[epsilon_i(i, n), epsilon_i(i + 1, n)],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("kernel: e{i} e{} t{i} = e{i} e{}", i + 1, i + 1),
            &[epsilon_i(i, n), epsilon_i(i + 1, n), wt(i, n)],
            &[epsilon_i(i, n), epsilon_i(i + 1, n)],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("kernel: e{i} s{i}^2 = e{i}"),
            &[epsilon_i(i, n), ws(i, n), ws(i, n)],
            &[epsilon_i(i, n)],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("kernel: e{i} s{i} t{i} = e{i}"),
            &[epsilon_i(i, n), ws(i, n), wt(i, n)],
            &[epsilon_i(i, n)],
            n,
        ));
    }
    out
}

/// The relations attached to the reduced generating set (all epsilons
/// replaced by the single `e = e1`).
pub fn verify_ibp_reduced_relations(n: u32) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let e = || epsilon_i(1, n);
    out.push(check_iwb("reduced: e^2 = e".into(), &[e(), e()], &[e()], n));
    out.push(check_iwb(
        "reduced: e s1^2 = e".into(),
        &[e(), ws(1, n), ws(1, n)],
        &[e()],
        n,
    ));
    out.push(check_iwb(
        "reduced: s1^2 e = e".into(),
        &[ws(1, n), ws(1, n), e()],
        &[e()],
        n,
    ));
    out.push(check_iwb(
        "reduced: e s1 t1 = e".into(),
        &[e(), ws(1, n), wt(1, n)],
        &[e()],
        n,
    ));
    for i in 3..=n.saturating_sub(1) {
        out.push(check_iwb(
            alloc::format!("reduced: e s{i} = s{i} e"),
            &[e(), ws(i, n)],
            &[ws(i, n), e()],
            n,
        ));
        out.push(check_iwb(
            alloc::format!("reduced: e t{i} = t{i} e"),
            &[e(), wt(i, n)],
            &[wt(i, n), e()],
            n,
        ));
    }
    out.push(check_iwb(
        "reduced: e s1 e = e s1 e s1".into(),
        &[e(), ws(1, n), e()],
        &[e(), ws(1, n), e(), ws(1, n)],
        n,
    ));
    out.push(check_iwb(
        "reduced: e s1 e = s1 e s1 e".into(),
        &[e(), ws(1, n), e()],
        &[ws(1, n), e(), ws(1, n), e()],
        n,
    ));
    out
}

/// Abstract generator letters for rewriting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `s_i`
    Sigma(u32),
    /// `s_i^{-1}`
    SigmaInv(u32),
    /// `t_i`
    Tau(u32),
    /// `e_i`
    Eps(u32),
}

pub type Word = Vec<Letter>;

#[derive(Debug, Clone)]
pub struct RewriteSystem {
    /// Unordered equalities of words; applied in both directions.
    pub relations: Vec<(Word, Word)>,
    /// Words longer than this are not explored.
    pub max_len: usize,
}

impl RewriteSystem {
    /// The relation instances used by the derived-identity search:
    /// the permutation involutions, the inverse relations and the
    /// kernel relations.
    pub fn kernel_system(n: u32, max_len: usize) -> Self {
        use Letter::*;
        let mut relations: Vec<(Word, Word)> = Vec::new();
        let top = n.saturating_sub(1);
        for i in 1..=top {
            relations.push((alloc::vec![Tau(i), Tau(i)], Vec::new()));
            relations.push((alloc::vec![Sigma(i), SigmaInv(i)], Vec::new()));
            relations.push((alloc::vec![SigmaInv(i), Sigma(i)], Vec::new()));
            relations.push((
                alloc::vec![Eps(i), Sigma(i), Sigma(i)],
                alloc::vec![Eps(i)],
            ));
            relations.push((
                alloc::vec![Eps(i), Sigma(i), Tau(i)],
                alloc::vec![Eps(i)],
            ));
            relations.push((
                alloc::vec![Eps(i), Eps(i + 1), Sigma(i)],
                alloc::vec![Eps(i), Eps(i + 1)],
            ));
            relations.push((
                alloc::vec![Eps(i), Eps(i + 1), Tau(i)],
                alloc::vec![Eps(i), Eps(i + 1)],
            ));
        }
        RewriteSystem { relations, max_len }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Unknown,
}

fn neighbors(word: &Word, rules: &RewriteSystem) -> Vec<Word> {
    let mut out = Vec::new();
    for (lhs, rhs) in &rules.relations {
        for (from, to) in [(lhs, rhs), (rhs, lhs)] {
            if from.len() > word.len() {
                continue;
            }
            for start in 0..=word.len() - from.len() {
                if &word[start..start + from.len()] == from.as_slice() {
                    let mut next = Vec::with_capacity(word.len() - from.len() + to.len());
                    next.extend_from_slice(&word[..start]);
                    next.extend_from_slice(to);
                    next.extend_from_slice(&word[start + from.len()..]);
                    if next.len() <= rules.max_len {
                        out.push(next);
                    }
                }
            }
        }
    }
    out
}

/// Bidirectional breadth-first search for a common rewrite of the
/// two words, alternating sides, up to `depth` total levels. Sound
/// but incomplete: `Unknown` carries no information.
pub fn bounded_rewrite_equal(
    u: &Word,
    v: &Word,
    rules: &RewriteSystem,
    depth: usize,
) -> Result<Verdict> {
    if depth == 0 {
        return Err(CatError::InvalidParameter("depth must be positive"));
    }
    if u == v {
        return Ok(Verdict::Equal);
    }
    let mut seen_u: BTreeSet<Word> = [u.clone()].into_iter().collect();
    let mut seen_v: BTreeSet<Word> = [v.clone()].into_iter().collect();
    let mut frontier_u: Vec<Word> = alloc::vec![u.clone()];
    let mut frontier_v: Vec<Word> = alloc::vec![v.clone()];
    for _ in 0..depth {
        // Expand the smaller frontier.
        let (frontier, seen, other_seen) = if frontier_u.len() <= frontier_v.len() {
            (&mut frontier_u, &mut seen_u, &seen_v)
        } else {
            (&mut frontier_v, &mut seen_v, &seen_u)
        };
        let mut next = Vec::new();
        for w in frontier.iter() {
            for nb in neighbors(w, rules) {
                if other_seen.contains(&nb) {
                    return Ok(Verdict::Equal);
                }
                if seen.insert(nb.clone()) {
                    next.push(nb);
                }
            }
        }
        *frontier = next;
        if frontier_u.is_empty() && frontier_v.is_empty() {
            break;
        }
    }
    Ok(Verdict::Unknown)
}

/// Model evaluation of an abstract word, for soundness checks.
pub fn eval_letters(word: &[Letter], n: u32) -> Result<PartialWeldedBraid> {
    let factors: Vec<PartialWeldedBraid> = word
        .iter()
        .map(|l| match *l {
            Letter::Sigma(i) => Ok(ws(i, n)),
            Letter::SigmaInv(i) => Ok(wsi(i, n)),
            Letter::Tau(i) => Ok(wt(i, n)),
            Letter::Eps(i) => Ok(epsilon_i(i, n)),
        })
        .collect::<Result<_>>()?;
    iwb_eval(&factors, n)
}
