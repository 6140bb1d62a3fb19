//! Enumeration of endomorphism monoids for the registered categories
//! and constructions, and the export bundle they serialize to.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use partcat_core::analysis;
use partcat_core::cats::{full_set, partitions_of, FinInj, FinSet, FinSurjOp};
use partcat_core::category::Category;
use partcat_core::chain;
use partcat_core::partial::Partialization;
use partcat_core::rsnk;
use partcat_core::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CategoryName {
    /// Finite sets with injective maps.
    Fininj,
    /// Finite sets with all maps.
    Finset,
    /// The opposite of finite sets with surjective maps.
    FinsurjOp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    P,
    Q,
    Iter(usize),
    Quasi(usize),
}

impl FromStr for Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P" => return Ok(Construction::P),
            "Q" => return Ok(Construction::Q),
            _ => {}
        }
        let parse_depth = |rest: &str| -> Result<usize, String> {
            let k: usize = rest
                .parse()
                .map_err(|_| format!("bad iteration depth {rest:?}"))?;
            if k == 0 {
                return Err("iteration depth must be at least 1".into());
            }
            Ok(k)
        };
        if let Some(rest) = s.strip_prefix("Piter:") {
            return Ok(Construction::Iter(parse_depth(rest)?));
        }
        if let Some(rest) = s.strip_prefix("Pquasi:") {
            return Ok(Construction::Quasi(parse_depth(rest)?));
        }
        Err(format!(
            "unknown construction {s:?} (expected P, Q, Piter:k or Pquasi:k)"
        ))
    }
}

impl Construction {
    pub fn depth(&self) -> usize {
        match self {
            Construction::P | Construction::Q => 1,
            Construction::Iter(k) | Construction::Quasi(k) => *k,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GreenOut {
    pub l: Vec<Vec<usize>>,
    pub r: Vec<Vec<usize>>,
    pub h: Vec<Vec<usize>>,
    pub d: Vec<Vec<usize>>,
    pub j: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExportBundle {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub idempotents: Vec<usize>,
    pub green: GreenOut,
    pub verdicts: BTreeMap<String, bool>,
}

impl ExportBundle {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable bundle");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }

    /// Index matrix preceded by a header row of quoted element
    /// strings.
    pub fn to_cayley_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self
            .elements
            .iter()
            .map(|e| format!("\"{}\"", e.replace('"', "\"\"")))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|i| i.to_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn bundle_from_sorted<T: Clone + Ord>(
    mut pairs: Vec<(String, T)>,
    mut mul: impl FnMut(&T, &T) -> partcat_core::error::Result<T>,
) -> Result<ExportBundle, String> {
    pairs.sort();
    let strings: Vec<String> = pairs.iter().map(|(s, _)| s.clone()).collect();
    if strings.windows(2).any(|w| w[0] == w[1]) {
        return Err("canonical strings are not distinct".into());
    }
    let index: BTreeMap<&T, usize> =
        pairs.iter().enumerate().map(|(i, (_, t))| (t, i)).collect();
    let n = pairs.len();
    let mut table = Vec::with_capacity(n);
    for (_, a) in &pairs {
        let mut row = Vec::with_capacity(n);
        for (_, b) in &pairs {
            let p = mul(a, b).map_err(|e| format!("product failed: {e:?}"))?;
            let i = *index
                .get(&p)
                .ok_or_else(|| "product escapes the enumerated carrier".to_string())?;
            row.push(i);
        }
        table.push(row);
    }
    let sg = FiniteSemigroup::new(table).map_err(|e| format!("{e:?}"))?;
    let report = analysis::analyze(&sg);
    let green = GreenOut {
        l: analysis::GreenClasses::classes_of(&report.green.l),
        r: analysis::GreenClasses::classes_of(&report.green.r),
        h: analysis::GreenClasses::classes_of(&report.green.h),
        d: analysis::GreenClasses::classes_of(&report.green.d),
        j: analysis::GreenClasses::classes_of(&report.green.j),
    };
    let mut verdicts = BTreeMap::new();
    verdicts.insert("associative".to_string(), sg.is_associative());
    verdicts.insert("regular".to_string(), report.regular);
    verdicts.insert("inverse".to_string(), report.inverse);
    verdicts.insert("orthodox".to_string(), report.orthodox);
    verdicts.insert("factorizable".to_string(), report.factorizable);
    Ok(ExportBundle {
        elements: strings,
        table: sg.table().clone(),
        idempotents: sg.idempotents(),
        green,
        verdicts,
    })
}

fn build_for<C>(cat: C, full: C::Obj, cons: Construction, cap: u64) -> Result<ExportBundle, String>
where
    C: Category,
    C::Mor: fmt::Display,
{
    let upper = chain::count_chains(&cat, &full, &full, cons.depth());
    if upper > cap {
        return Err(format!(
            "size cap exceeded: predicted {upper} elements, cap {cap}"
        ));
    }
    match cons {
        Construction::P | Construction::Q => {
            let part = Partialization::new(cat);
            let elems = match cons {
                Construction::P => part.hom(&full, &full),
                _ => part.q_hom(&full, &full).into_iter().map(|q| q.0).collect(),
            };
            let pairs = elems
                .into_iter()
                .map(|p| (format!("{}|{}", p.alpha, p.f), p))
                .collect();
            bundle_from_sorted(pairs, |a, b| part.compose(a, b))
        }
        Construction::Iter(k) | Construction::Quasi(k) => {
            let chains = chain::enumerate_chains(&cat, &full, &full, k);
            let pairs = chains
                .into_iter()
                .map(|c| {
                    let monos: Vec<String> = c.monos.iter().map(|m| m.to_string()).collect();
                    (format!("[{}];{}", monos.join("|"), c.f), c)
                })
                .collect();
            if matches!(cons, Construction::Iter(_)) {
                bundle_from_sorted(pairs, |a, b| chain::chain_compose(&cat, a, b))
            } else {
                bundle_from_sorted(pairs, |a, b| chain::quasi_compose(&cat, a, b))
            }
        }
    }
}

pub fn build_bundle(
    category: CategoryName,
    cons: Construction,
    n: u32,
    cap: u64,
) -> Result<ExportBundle, String> {
    let full = full_set(n);
    match category {
        CategoryName::Fininj => {
            let cat = FinInj::new(n).map_err(|e| format!("{e:?}"))?;
            build_for(cat, full, cons, cap)
        }
        CategoryName::Finset => {
            let cat = FinSet::new(n).map_err(|e| format!("{e:?}"))?;
            build_for(cat, full, cons, cap)
        }
        CategoryName::FinsurjOp => {
            let cat = FinSurjOp::new(n).map_err(|e| format!("{e:?}"))?;
            build_for(cat, full, cons, cap)
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

/// Closed-form element count, when the construction admits one.
pub fn prediction(category: CategoryName, cons: Construction, n: u32) -> Option<u64> {
    match (category, cons) {
        // Over injections every partial map is a restriction of a
        // total one, so P and Q coincide; same over all maps.
        (CategoryName::Fininj, _) => Some(rsnk::rs_cardinality(n, cons.depth() as u32)),
        (CategoryName::Finset, Construction::P | Construction::Q) => {
            Some(((n as u64) + 1).pow(n))
        }
        (CategoryName::FinsurjOp, Construction::P) => Some(
            (0..=n as u64)
                .map(|s| stirling2(n as u64, s).pow(2) * factorial(s))
                .sum(),
        ),
        _ => None,
    }
}

/// Brute-force block bijection count, used by the dual suite.
pub fn block_bijection_count(n: u32) -> u64 {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_lossless() {
        let b = build_bundle(CategoryName::Fininj, Construction::P, 2, 1000).unwrap();
        let back = ExportBundle::from_json(&b.to_json()).unwrap();
        assert_eq!(back, b);
        assert_eq!(back.to_json(), b.to_json());
    }

    #[test]
    fn construction_parsing() {
        assert_eq!("P".parse::<Construction>().unwrap(), Construction::P);
        assert_eq!("Q".parse::<Construction>().unwrap(), Construction::Q);
        assert_eq!(
            "Piter:3".parse::<Construction>().unwrap(),
            Construction::Iter(3)
        );
        assert_eq!(
            "Pquasi:2".parse::<Construction>().unwrap(),
            Construction::Quasi(2)
        );
        assert!("Piter:0".parse::<Construction>().is_err());
        assert!("R".parse::<Construction>().is_err());
    }

    #[test]
    fn predictions_match_enumeration() {
        for (cat, cons, n) in [
            (CategoryName::Fininj, Construction::P, 2),
            (CategoryName::Fininj, Construction::Q, 2),
            (CategoryName::Fininj, Construction::Iter(2), 2),
            (CategoryName::Finset, Construction::P, 2),
            (CategoryName::FinsurjOp, Construction::P, 3),
        ] {
            let b = build_bundle(cat, cons, n, 100_000).unwrap();
            assert_eq!(Some(b.len() as u64), prediction(cat, cons, n));
        }
    }
}
