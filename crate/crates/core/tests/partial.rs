//! Partialization engine against hand-rolled partial map models.

use std::collections::{BTreeMap, BTreeSet};

use partcat_core::analysis;
use partcat_core::cats::{full_set, partitions_of, Elem, FinInj, FinSet, FinSurjOp, SetObj};
use partcat_core::category::Category;
use partcat_core::partial::{PMor, Partialization};
use partcat_core::semigroup::FiniteSemigroup;

type Partial = BTreeMap<Elem, Elem>;

fn compose_partial(second: &Partial, first: &Partial) -> Partial {
    first
        .iter()
        .filter_map(|(&x, y)| second.get(y).map(|&z| (x, z)))
        .collect()
}

fn all_partial_injections(n: u32) -> Vec<Partial> {
    let full = full_set(n);
    let mut out = Vec::new();
    for dom in partcat_core::cats::subsets_of(&full) {
        for f in partcat_core::cats::all_injections(&dom, &full) {
            out.push(f.map);
        }
    }
    out.sort();
    out
}

fn all_partial_maps(n: u32) -> Vec<Partial> {
    let full = full_set(n);
    let mut out = Vec::new();
    for dom in partcat_core::cats::subsets_of(&full) {
        for f in partcat_core::cats::all_maps(&dom, &full) {
            out.push(f.map);
        }
    }
    out.sort();
    out
}

fn pmor_to_partial(p: &PMor<SetObj, partcat_core::cats::SetFn>) -> Partial {
    // Canonical forms carry the domain as a genuine subset with an
    // inclusion, so the span is just its map part.
    assert!(p.sub.iter().all(|e| p.src.contains(e)));
    p.f.map.clone()
}

fn endo_monoid<C: Category>(
    part: &Partialization<C>,
    obj: &C::Obj,
) -> (FiniteSemigroup, Vec<PMor<C::Obj, C::Mor>>) {
    let elems = part.hom(obj, obj);
    let sg = FiniteSemigroup::from_elements(&elems, |a, b| part.compose(a, b).unwrap()).unwrap();
    (sg, elems)
}

#[test]
fn partial_injection_model_matches_engine() {
    for n in 1..=3u32 {
        let part = Partialization::new(FinInj::new(n).unwrap());
        let full = full_set(n);
        let (sg, elems) = endo_monoid(&part, &full);
        let oracle = all_partial_injections(n);
        let translated: Vec<Partial> = elems.iter().map(pmor_to_partial).collect();
        let mut sorted = translated.clone();
        sorted.sort();
        assert_eq!(sorted, oracle);
        for ai in 0..elems.len() {
            for bi in 0..elems.len() {
                let product = &elems[sg.mul(ai, bi)];
                assert_eq!(
                    pmor_to_partial(product),
                    compose_partial(&translated[ai], &translated[bi]),
                );
            }
        }
    }
}

#[test]
fn partial_map_model_matches_engine() {
    for n in 1..=3u32 {
        let part = Partialization::new(FinSet::new(n).unwrap());
        let full = full_set(n);
        let (sg, elems) = endo_monoid(&part, &full);
        assert_eq!(elems.len() as u64, ((n + 1) as u64).pow(n));
        let oracle = all_partial_maps(n);
        let translated: Vec<Partial> = elems.iter().map(pmor_to_partial).collect();
        let mut sorted = translated.clone();
        sorted.sort();
        assert_eq!(sorted, oracle);
        for ai in 0..elems.len() {
            for bi in 0..elems.len() {
                let product = &elems[sg.mul(ai, bi)];
                assert_eq!(
                    pmor_to_partial(product),
                    compose_partial(&translated[ai], &translated[bi]),
                );
            }
        }
    }
}

fn stirling2(n: u64, k: u64) -> u64 {
    match (n, k) {
        (0, 0) => 1,
        (0, _) | (_, 0) => 0,
        _ => stirling2(n - 1, k - 1) + k * stirling2(n - 1, k),
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Block bijections on an n-set, counted by brute force: pairs of
/// partitions with the same number of blocks plus a bijection
/// between the block sets.
fn block_bijection_count(n: u32) -> u64 {
    let full = full_set(n);
    let parts = partitions_of(&full);
    let mut count = 0u64;
    for p in &parts {
        for q in &parts {
            if p.len() == q.len() {
                count += factorial(p.len() as u64);
            }
        }
    }
    count
}

#[test]
fn dual_counts_match_block_bijections() {
    for n in 1..=3u32 {
        let part = Partialization::new(FinSurjOp::new(n).unwrap());
        let full = full_set(n);
        let (sg, elems) = endo_monoid(&part, &full);
        assert_eq!(elems.len() as u64, block_bijection_count(n));
        let formula: u64 = (0..=n as u64)
            .map(|s| stirling2(n as u64, s) * stirling2(n as u64, s) * factorial(s))
            .sum();
        assert_eq!(elems.len() as u64, formula);
        assert!(sg.is_associative());
    }
}

#[test]
fn dual_n3_has_25_elements() {
    let part = Partialization::new(FinSurjOp::new(3).unwrap());
    let full = full_set(3);
    assert_eq!(part.hom(&full, &full).len(), 25);
}

fn check_inverse_monoid(sg: &FiniteSemigroup) {
    let report = analysis::analyze(sg);
    assert!(report.inverse);
    // Explicit inverse law: a unique b with aba = a and bab = b.
    for a in 0..sg.len() {
        let witnesses: Vec<usize> = (0..sg.len())
            .filter(|&b| sg.mul(sg.mul(a, b), a) == a && sg.mul(sg.mul(b, a), b) == b)
            .collect();
        assert_eq!(witnesses.len(), 1, "element {a} has {} inverses", witnesses.len());
    }
}

#[test]
fn symmetric_inverse_monoids_are_inverse() {
    for n in 1..=4u32 {
        let part = Partialization::new(FinInj::new(n).unwrap());
        let full = full_set(n);
        let (sg, elems) = endo_monoid(&part, &full);
        let expected: u64 = (0..=n as u64)
            .map(|i| {
                let c = (0..i).fold(1u64, |acc, t| acc * (n as u64 - t) / (t + 1));
                c * c * factorial(i)
            })
            .sum();
        assert_eq!(elems.len() as u64, expected);
        check_inverse_monoid(&sg);
    }
}

#[test]
fn dual_monoids_are_inverse() {
    for n in 1..=3u32 {
        let part = Partialization::new(FinSurjOp::new(n).unwrap());
        let full = full_set(n);
        let (sg, _) = endo_monoid(&part, &full);
        check_inverse_monoid(&sg);
    }
}

#[test]
fn is2_d_class_sizes() {
    let part = Partialization::new(FinInj::new(2).unwrap());
    let full = full_set(2);
    let (sg, _) = endo_monoid(&part, &full);
    assert_eq!(sg.len(), 7);
    let green = analysis::green(&sg);
    let mut sizes: Vec<usize> = partcat_core::analysis::GreenClasses::classes_of(&green.d)
        .into_iter()
        .map(|c| c.len())
        .collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 4]);
}

#[test]
fn q_subcategory_is_closed_and_factorizable() {
    for n in 1..=3u32 {
        let part = Partialization::new(FinInj::new(n).unwrap());
        let full = full_set(n);
        let q = part.q_hom(&full, &full);
        for a in &q {
            assert!(part.is_in_q(&a.0));
            for b in &q {
                let prod = part.compose(&a.0, &b.0).unwrap();
                assert!(part.is_in_q(&prod), "Q not closed under composition");
            }
        }
        let elems: Vec<_> = q.iter().map(|m| m.0.clone()).collect();
        let sg = FiniteSemigroup::from_elements(&elems, |a, b| part.compose(a, b).unwrap())
            .unwrap();
        let report = analysis::analyze(&sg);
        assert!(report.factorizable);
    }
}

#[test]
fn q_at_dual_is_the_maximal_factorizable_part() {
    let part = Partialization::new(FinSurjOp::new(3).unwrap());
    let full = full_set(3);
    let elems = part.hom(&full, &full);
    let sg = FiniteSemigroup::from_elements(&elems, |a, b| part.compose(a, b).unwrap()).unwrap();
    let factorizable: BTreeSet<usize> = analysis::factorizable_part(&sg).into_iter().collect();
    let q_indices: BTreeSet<usize> = part
        .q_hom(&full, &full)
        .into_iter()
        .map(|m| elems.iter().position(|e| *e == m.0).unwrap())
        .collect();
    assert_eq!(q_indices, factorizable);
    assert!(q_indices.len() < elems.len());
}

#[test]
fn embed_is_functorial() {
    let base = FinInj::new(3).unwrap();
    let part = Partialization::new(base.clone());
    for i in base.objects() {
        for j in base.objects() {
            for f in base.hom(&i, &j) {
                for k in base.objects() {
                    for g in base.hom(&j, &k) {
                        let gf = base.compose(&g, &f).unwrap();
                        assert_eq!(
                            part.embed(&gf),
                            part.compose(&part.embed(&g), &part.embed(&f)).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn pmor_monos_and_isos() {
    let part = Partialization::new(FinInj::new(2).unwrap());
    let full = full_set(2);
    let elems = part.hom(&full, &full);
    let monos: Vec<_> = elems.iter().filter(|m| part.is_mono(m)).collect();
    let isos: Vec<_> = elems.iter().filter(|m| part.is_iso(m)).collect();
    // Total injections on a 2-set: the two permutations.
    assert_eq!(monos.len(), 2);
    assert_eq!(isos.len(), 2);
    for iso in isos {
        let inv = part.inverse_of_iso(iso).unwrap();
        let id = part.identity(&full);
        assert_eq!(part.compose(&inv, iso).unwrap(), id);
        assert_eq!(part.compose(iso, &inv).unwrap(), id);
    }
}

#[test]
fn pmor_pullbacks_satisfy_universal_property() {
    let part = Partialization::new(FinInj::new(2).unwrap());
    let full = full_set(2);
    for (_, alpha) in part.subobjects(&full) {
        for k in part.base().objects() {
            for p in part.hom(&k, &full) {
                let sq = part.pullback_along_mono(&p, &alpha).unwrap();
                assert!(partcat_core::verify::is_pullback(&part, &p, &alpha, &sq));
            }
        }
    }
}
