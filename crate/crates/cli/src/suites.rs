//! Named verification suites for the `verify` subcommand. Each suite
//! returns labelled pass/fail checks; the caller decides the exit
//! code.

use partcat_core::analysis;
use partcat_core::braidperm::{
    all_pass, bounded_rewrite_equal, verify_bp_relations, verify_ibp_reduced_relations,
    verify_ibp_relations, Letter, RewriteSystem, Verdict,
};
use partcat_core::cats::{full_set, FinInj, FinSet, FinSurjOp};
use partcat_core::category::Category;
use partcat_core::chain::{self, BMor};
use partcat_core::partial::Partialization;
use partcat_core::rsnk::{
    self, enumerate_rs, rs_cardinality, rs_green, rs_idempotent_count, rs_monoid, rs_multiply,
    GreenRel,
};
use partcat_core::semigroup::FiniteSemigroup;

use crate::bundle;

pub type Check = (String, bool);

pub const SUITES: &[&str] = &[
    "isn", "dual", "ptn", "rsnk", "nat", "orthodox", "ibp", "oprime",
];

pub fn run_suite(name: &str, max_n: u32, max_k: usize) -> Result<Vec<Check>, String> {
    match name {
        "isn" => Ok(suite_isn(max_n)),
        "dual" => Ok(suite_dual(max_n.min(3))),
        "ptn" => Ok(suite_ptn(max_n.min(3))),
        "rsnk" => Ok(suite_rsnk(max_n, max_k)),
        "nat" => Ok(suite_nat(max_k.min(3))),
        "orthodox" => Ok(suite_orthodox(max_n, max_k)),
        "ibp" => Ok(suite_ibp(max_n.max(2))),
        "oprime" => Ok(suite_oprime()),
        _ => Err(format!(
            "unknown suite {name:?} (expected one of {})",
            SUITES.join(", ")
        )),
    }
}

fn endo_monoid<C: Category<Obj = partcat_core::cats::SetObj>>(cat: C, n: u32) -> FiniteSemigroup {
    let part = Partialization::new(cat);
    let full = full_set(n);
    let elems = part.hom(&full, &full);
    FiniteSemigroup::from_elements(&elems, |a, b| part.compose(a, b).unwrap()).unwrap()
}

fn suite_isn(max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n.max(1) {
        let s = endo_monoid(FinInj::new(n).unwrap(), n);
        out.push((
            format!("partial injections on {n} points: count {}", s.len()),
            s.len() as u64 == rs_cardinality(n, 1),
        ));
        out.push((format!("inverse monoid at n={n}"), analysis::is_inverse(&s)));
        out.push((
            format!("factorizable at n={n}"),
            analysis::is_factorizable(&s),
        ));
    }
    out
}

fn suite_dual(max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n.max(1) {
        let s = endo_monoid(FinSurjOp::new(n).unwrap(), n);
        out.push((
            format!("dual monoid on {n} points: count {}", s.len()),
            s.len() as u64 == bundle::block_bijection_count(n),
        ));
        out.push((
            format!("dual monoid inverse at n={n}"),
            analysis::is_inverse(&s),
        ));
    }
    out
}

fn suite_ptn(max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n.max(1) {
        let s = endo_monoid(FinSet::new(n).unwrap(), n);
        out.push((
            format!("partial transformations on {n} points: count {}", s.len()),
            s.len() as u64 == ((n as u64) + 1).pow(n),
        ));
        out.push((
            format!("regular monoid at n={n}"),
            analysis::is_regular(&s),
        ));
    }
    out
}

fn suite_rsnk(max_n: u32, max_k: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n.max(1) {
        for k in 1..=max_k.max(1) {
            let predicted = rs_cardinality(n, k as u32);
            if predicted > 2500 {
                continue;
            }
            let elems = enumerate_rs(n, k);
            out.push((
                format!("RS({n},{k}) count {}", elems.len()),
                elems.len() as u64 == predicted,
            ));
            out.push((
                format!("RS({n},{k}) idempotent count"),
                elems.iter().filter(|e| e.is_idempotent_form()).count() as u64
                    == rs_idempotent_count(n, k as u32),
            ));
            if predicted <= 300 {
                let cat = FinInj::new(n).unwrap();
                let flat_matches = elems.iter().all(|a| {
                    elems.iter().all(|b| {
                        let flat = rs_multiply(a, b).unwrap();
                        let stair = chain::chain_compose(
                            &cat,
                            &rsnk::to_chain(a),
                            &rsnk::to_chain(b),
                        )
                        .unwrap();
                        rsnk::from_chain(n, &stair).unwrap() == flat
                    })
                });
                out.push((
                    format!("RS({n},{k}) flat product matches the staircase"),
                    flat_matches,
                ));
            }
            if predicted <= 100 {
                let (sg, list) = rs_monoid(n, k).unwrap();
                let g = analysis::green(&sg);
                let green_matches = (0..list.len()).all(|a| {
                    (0..list.len()).all(|b| {
                        (g.l[a] == g.l[b])
                            == rs_green(&list[a], &list[b], GreenRel::L).unwrap()
                            && (g.r[a] == g.r[b])
                                == rs_green(&list[a], &list[b], GreenRel::R).unwrap()
                            && (g.d[a] == g.d[b])
                                == rs_green(&list[a], &list[b], GreenRel::D).unwrap()
                    })
                });
                out.push((
                    format!("RS({n},{k}) Green's relations match the closed forms"),
                    green_matches,
                ));
            }
        }
    }
    out
}

fn suite_nat(max_m: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let expected = [1usize, 3, 10];
    for m in 1..=max_m.max(1).min(3) {
        out.push((
            format!("index endomorphism count at depth {m}"),
            chain::all_endo_bmors(m).len() == expected[m - 1],
        ));
        let id = BMor::identity(m);
        let mut identities = true;
        for s in 1..=m + 1 {
            let dup = BMor::duplication(m, s).unwrap();
            for sd in 2..=m + 1 {
                if sd == s || sd == s + 1 {
                    let del = BMor::deletion(m + 1, sd).unwrap();
                    identities &= BMor::compose(&del, &dup).unwrap() == id;
                }
            }
        }
        out.push((format!("deletion undoes duplication at depth {m}"), identities));

        // Distinct index maps act distinctly on depth-m chains over a
        // universe one point larger.
        let cat = FinInj::new((m + 1) as u32).unwrap();
        let full = full_set((m + 1) as u32);
        let chains = chain::enumerate_chains(&cat, &full, &full, m);
        let endos = chain::all_endo_bmors(m);
        let mut faithful = true;
        for (i, a) in endos.iter().enumerate() {
            for b in endos.iter().skip(i + 1) {
                let same = chains
                    .iter()
                    .all(|c| a.apply(&cat, c).unwrap() == b.apply(&cat, c).unwrap());
                faithful &= !same;
            }
        }
        out.push((format!("index action faithful at depth {m}"), faithful));
    }
    out
}

fn suite_orthodox(max_n: u32, max_k: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n.max(1) {
        for k in 1..=max_k.max(1) {
            if rs_cardinality(n, k as u32) > 300 {
                continue;
            }
            let (sg, _) = rs_monoid(n, k).unwrap();
            out.push((
                format!("RS({n},{k}) orthodox"),
                analysis::is_orthodox(&sg),
            ));
            out.push((
                format!("RS({n},{k}) inverse iff k = 1"),
                analysis::is_inverse(&sg) == (k == 1),
            ));
            if k >= 2 {
                let cat = FinInj::new(n).unwrap();
                let full = full_set(n);
                let chains = chain::enumerate_chains(&cat, &full, &full, k);
                let retr = BMor::retraction(k);
                let law = chains.iter().all(|x| {
                    chains.iter().all(|y| {
                        let quasi = chain::quasi_compose(&cat, x, y).unwrap();
                        let retracted = retr.apply(&cat, y).unwrap();
                        let stair = chain::chain_compose(&cat, x, &retracted).unwrap();
                        quasi == stair
                    })
                });
                out.push((
                    format!("quasi product is the staircase after retracting the right factor, RS({n},{k})"),
                    law,
                ));
            }
        }
    }
    out
}

fn suite_ibp(max_n: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=max_n.max(2) {
        out.push((
            format!("automorphism relations at n={n}"),
            all_pass(&verify_bp_relations(n)),
        ));
        out.push((
            format!("partial braid relations at n={n}"),
            all_pass(&verify_ibp_relations(n)),
        ));
        out.push((
            format!("reduced relation scheme at n={n}"),
            all_pass(&verify_ibp_reduced_relations(n)),
        ));
    }
    use Letter::*;
    let rules = RewriteSystem::kernel_system(2, 8);
    let verdict = bounded_rewrite_equal(&vec![Eps(1), Tau(1), Sigma(1)], &vec![Eps(1)], &rules, 6);
    out.push((
        "derived identity e1 t1 s1 = e1 by bounded rewriting".to_string(),
        verdict == Ok(Verdict::Equal),
    ));
    out
}

fn suite_oprime() -> Vec<Check> {
    let mut out = Vec::new();
    let expected = [1usize, 3, 10];
    for m in 1..=3usize {
        let (sg, elems) = rsnk::oprime_monoid(m).unwrap();
        out.push((
            format!("index monoid size at depth {m}"),
            elems.len() == expected[m - 1],
        ));
        out.push((
            format!("index monoid associative at depth {m}"),
            sg.is_associative() && sg.identity_index().is_some(),
        ));
    }
    // The action is covariant on RS(2,2).
    let elems = enumerate_rs(2, 2);
    let endos = chain::all_endo_bmors(2);
    let covariant = endos.iter().all(|a| {
        endos.iter().all(|b| {
            let ab = BMor::compose(a, b).unwrap();
            elems.iter().all(|x| {
                rsnk::oprime_act(&ab, x).unwrap()
                    == rsnk::oprime_act(a, &rsnk::oprime_act(b, x).unwrap()).unwrap()
            })
        })
    });
    out.push(("index action is covariant on RS(2,2)".to_string(), covariant));
    out
}
