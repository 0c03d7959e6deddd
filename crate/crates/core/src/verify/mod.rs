//! Exhaustive certification of the bijection identities over all Catalan
//! objects of a given size.
//!
//! Each [`Law`] sweeps one enumeration stream and compares both sides of an
//! identity exactly: paths by their step words, posets by their canonical
//! relations. Sweeps can be spread over a worker pool; chunks are merged in
//! enumeration order, so reports do not depend on the worker count.

mod enumerate;
pub mod mutants;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::dyck::DyckPath;
use crate::dyck_maps;
use crate::error::{Error, Result};
use crate::poset::{
    canonical_form, is_three_plus_one_free, is_two_plus_two_free, poset_from_starting_set,
    Relation, StartingSet, UnitIntervalPoset,
};
use crate::rational::{catalan, ExactRational};
use crate::tree::PlaneTree;
use crate::tree_maps::{self, check_parent_condition_with, check_parent_gap_bound_with};

pub use enumerate::{enumerate_dyck, enumerate_posets, enumerate_trees, DyckPaths};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// `phi . psi = zeta` on Dyck paths.
    Main,
    /// `lambda_poset . xi_poset = id` on trees and `xi_poset . lambda_poset = id`
    /// on posets.
    PosetRoundtrip,
    /// `phi . xi_poset = xi_bounce` on trees.
    PhiBounce,
    /// `psi = xi_poset . lambda_steep` on Dyck paths.
    PsiSteep,
    /// `zeta` agrees with the classical diagonal-scan construction.
    ZetaOracle,
    /// Every `psi(D)` is a (3+1)-free, (2+2)-free strict order.
    PsiValid,
    /// There are `Cat_n` pairwise non-isomorphic unit interval posets.
    Count,
    /// Parents are recovered from node values, with the exact gap bound.
    ParentLemma,
}

impl Law {
    pub const ALL: [Law; 8] = [
        Law::Main,
        Law::PosetRoundtrip,
        Law::PhiBounce,
        Law::PsiSteep,
        Law::ZetaOracle,
        Law::PsiValid,
        Law::Count,
        Law::ParentLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Main => "main",
            Law::PosetRoundtrip => "poset-roundtrip",
            Law::PhiBounce => "phi-bounce",
            Law::PsiSteep => "psi-steep",
            Law::ZetaOracle => "zeta-oracle",
            Law::PsiValid => "psi-valid",
            Law::Count => "count",
            Law::ParentLemma => "parent-lemma",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub n: usize,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub millis: u64,
}

impl LawReport {
    pub fn success(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Fold per-size reports of one law into a single report for sizes up to
    /// the largest `n`.
    pub fn combine(law: Law, reports: &[LawReport]) -> LawReport {
        LawReport {
            law,
            n: reports.iter().map(|r| r.n).max().unwrap_or(0),
            checked: reports.iter().map(|r| r.checked).sum(),
            counterexamples: reports
                .iter()
                .flat_map(|r| r.counterexamples.iter().cloned())
                .collect(),
            millis: reports.iter().map(|r| r.millis).sum(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// The implementations a sweep runs against. [`Maps::standard`] is the
/// library; [`mutants`] swaps single entries for wrong conventions.
#[derive(Clone, Copy)]
pub struct Maps {
    pub node_values: fn(&PlaneTree) -> Vec<ExactRational>,
    pub lambda_poset: fn(&UnitIntervalPoset) -> PlaneTree,
    pub xi_steep: fn(&PlaneTree) -> DyckPath,
    pub lambda_steep: fn(&DyckPath) -> PlaneTree,
    pub xi_bounce: fn(&PlaneTree) -> DyckPath,
    pub phi: fn(&UnitIntervalPoset) -> DyckPath,
    pub psi_relation: fn(&DyckPath) -> Relation,
    pub zeta_oracle: fn(&DyckPath) -> DyckPath,
}

impl Default for Maps {
    fn default() -> Self {
        Self::standard()
    }
}

impl Maps {
    pub fn standard() -> Self {
        Self {
            node_values: tree_maps::node_values,
            lambda_poset: tree_maps::lambda_poset,
            xi_steep: tree_maps::xi_steep,
            lambda_steep: tree_maps::lambda_steep,
            xi_bounce: tree_maps::xi_bounce,
            phi: dyck_maps::phi,
            psi_relation: dyck_maps::psi_relation,
            zeta_oracle: dyck_maps::zeta_classical_oracle,
        }
    }

    fn xi_poset(&self, tree: &PlaneTree) -> std::result::Result<UnitIntervalPoset, String> {
        let values = (self.node_values)(tree);
        let set = StartingSet::from_unsorted(values[1..].to_vec())
            .map_err(|e| format!("node values collide: {e}"))?;
        Ok(poset_from_starting_set(&set))
    }

    fn psi(&self, path: &DyckPath) -> std::result::Result<UnitIntervalPoset, String> {
        canonical_form(&(self.psi_relation)(path)).map_err(|e| e.to_string())
    }

    fn zeta(&self, path: &DyckPath) -> DyckPath {
        (self.xi_bounce)(&(self.lambda_steep)(path))
    }

    fn trees(&self, n: usize) -> impl Iterator<Item = PlaneTree> + '_ {
        enumerate_dyck(n).map(move |d| (self.lambda_steep)(&d))
    }
}

fn poset_text(p: &std::result::Result<UnitIntervalPoset, String>) -> String {
    match p {
        Ok(p) => p.to_json_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn mismatch(input: impl fmt::Display, expected: String, actual: String) -> Option<Counterexample> {
    (expected != actual).then(|| Counterexample {
        input: input.to_string(),
        expected,
        actual,
    })
}

const CHUNK: usize = 2048;

/// Run `check` over `items`, `jobs` workers at a time, keeping counterexamples
/// in stream order.
fn sweep<T, I, F>(items: I, jobs: usize, check: F) -> (u64, Vec<Counterexample>)
where
    T: Send + Sync,
    I: Iterator<Item = T>,
    F: Fn(&T) -> Option<Counterexample> + Sync,
{
    let mut checked = 0u64;
    let mut found = Vec::new();
    if jobs <= 1 {
        for item in items {
            checked += 1;
            found.extend(check(&item));
        }
        return (checked, found);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let mut items = items.peekable();
    while items.peek().is_some() {
        let chunk: Vec<T> = items.by_ref().take(CHUNK).collect();
        checked += chunk.len() as u64;
        let results: Vec<Option<Counterexample>> =
            pool.install(|| chunk.par_iter().map(&check).collect());
        found.extend(results.into_iter().flatten());
    }
    (checked, found)
}

/// Sweep `law` at size `n` with the library's own maps, single-threaded.
pub fn verify_law(law: Law, n: usize) -> LawReport {
    verify_law_with(law, n, &Maps::standard(), 1)
}

pub fn verify_law_with(law: Law, n: usize, maps: &Maps, jobs: usize) -> LawReport {
    let start = Instant::now();
    let (checked, counterexamples) = match law {
        Law::Main => sweep(enumerate_dyck(n), jobs, |d| {
            let actual = maps.psi(d).map(|p| (maps.phi)(&p).to_string());
            mismatch(
                d,
                maps.zeta(d).to_string(),
                actual.unwrap_or_else(|e| format!("error: {e}")),
            )
        }),
        Law::PosetRoundtrip => sweep(maps.trees(n), jobs, |t| {
            let poset = match maps.xi_poset(t) {
                Ok(p) => p,
                Err(e) => return mismatch(t, t.to_string(), format!("error: {e}")),
            };
            let tree_back = (maps.lambda_poset)(&poset);
            if let Some(c) = mismatch(t, t.to_string(), tree_back.to_string()) {
                return Some(c);
            }
            let poset_back = maps.xi_poset(&tree_back);
            mismatch(
                poset.to_json_string(),
                poset.to_json_string(),
                poset_text(&poset_back),
            )
        }),
        Law::PhiBounce => sweep(maps.trees(n), jobs, |t| {
            let actual = maps.xi_poset(t).map(|p| (maps.phi)(&p).to_string());
            mismatch(
                t,
                (maps.xi_bounce)(t).to_string(),
                actual.unwrap_or_else(|e| format!("error: {e}")),
            )
        }),
        Law::PsiSteep => sweep(enumerate_dyck(n), jobs, |d| {
            let expected = maps.xi_poset(&(maps.lambda_steep)(d));
            mismatch(d, poset_text(&expected), poset_text(&maps.psi(d)))
        }),
        Law::ZetaOracle => sweep(enumerate_dyck(n), jobs, |d| {
            mismatch(
                d,
                maps.zeta(d).to_string(),
                (maps.zeta_oracle)(d).to_string(),
            )
        }),
        Law::PsiValid => sweep(enumerate_dyck(n), jobs, |d| {
            let rel = (maps.psi_relation)(d);
            let verdict = match rel.check_strict_order() {
                Err(e) => e.to_string(),
                Ok(()) if !is_three_plus_one_free(&rel) => "contains an induced 3+1".into(),
                Ok(()) if !is_two_plus_two_free(&rel) => "contains an induced 2+2".into(),
                Ok(()) => VALID_ORDER.to_string(),
            };
            mismatch(d, VALID_ORDER.to_string(), verdict)
        }),
        Law::Count => count_law(n, maps),
        Law::ParentLemma => sweep(maps.trees(n), jobs, |t| {
            let values = (maps.node_values)(t);
            let verdict = if !check_parent_condition_with(t, &values) {
                "parent is not the largest value below x - 1"
            } else if !check_parent_gap_bound_with(t, &values) {
                "parent gap outside (1, 1 + (m+2)^(1-l))"
            } else {
                PARENT_OK
            };
            mismatch(t, PARENT_OK.to_string(), verdict.to_string())
        }),
    };
    LawReport {
        law,
        n,
        checked,
        counterexamples,
        millis: start.elapsed().as_millis() as u64,
    }
}

const VALID_ORDER: &str = "strict order, (3+1)-free, (2+2)-free";
const PARENT_OK: &str = "parent condition and gap bound hold";

/// Sizes up to which the count law compares every pair of posets; above it,
/// distinctness is checked through a hash of the canonical encodings.
pub const PAIRWISE_LIMIT: usize = 8;

fn count_law(n: usize, maps: &Maps) -> (u64, Vec<Counterexample>) {
    let mut found = Vec::new();
    let mut posets: Vec<(String, UnitIntervalPoset)> = Vec::new();
    for tree in maps.trees(n) {
        let canonical = maps
            .xi_poset(&tree)
            .and_then(|p| canonical_form(p.relation()).map_err(|e| e.to_string()));
        match canonical {
            Ok(p) => posets.push((tree.to_string(), p)),
            Err(e) => found.push(Counterexample {
                input: tree.to_string(),
                expected: "unit interval poset".into(),
                actual: format!("error: {e}"),
            }),
        }
    }
    let checked = posets.len() as u64 + found.len() as u64;
    let mut duplicate = |a: &str, b: &(String, UnitIntervalPoset)| {
        found.push(Counterexample {
            input: b.0.clone(),
            expected: "not isomorphic to any earlier poset".into(),
            actual: format!("isomorphic to the poset of {a}: {}", b.1.to_json_string()),
        })
    };
    if n <= PAIRWISE_LIMIT {
        for j in 0..posets.len() {
            if let Some(i) = (0..j).find(|&i| posets[i].1 == posets[j].1) {
                duplicate(&posets[i].0, &posets[j]);
            }
        }
    } else {
        let mut seen: HashMap<&UnitIntervalPoset, &str> = HashMap::new();
        for entry in &posets {
            if let Some(first) = seen.insert(&entry.1, &entry.0) {
                duplicate(first, entry);
            }
        }
    }
    let expected = catalan(n as u32);
    if expected != checked.into() {
        found.push(Counterexample {
            input: format!("n = {n}"),
            expected: expected.to_string(),
            actual: checked.to_string(),
        });
    }
    (checked, found)
}

/// Every law for every size `1..=n_max`, in law-major order.
pub fn verify_all(n_max: usize, jobs: usize) -> Vec<LawReport> {
    verify_all_with(n_max, &Maps::standard(), jobs)
}

pub fn verify_all_with(n_max: usize, maps: &Maps, jobs: usize) -> Vec<LawReport> {
    Law::ALL
        .into_iter()
        .flat_map(|law| (1..=n_max).map(move |n| verify_law_with(law, n, maps, jobs)))
        .collect()
}
