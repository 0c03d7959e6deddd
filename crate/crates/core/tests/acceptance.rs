//! Acceptance suite: every criterion is an exact, exhaustive check. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use zeta_core::rational::ratio;
use zeta_core::verify::mutants::mutant_for;
use zeta_core::verify::{verify_law_with, Maps};
use zeta_core::*;

/// Largest size swept for the identities.
const N_IDENTITIES: usize = 12;
/// Largest size for the count, validity, lemma and oracle sweeps.
const N_SMALL: usize = 10;
/// Mutants must be caught at or below this size.
const N_MUTANT: usize = 3;
/// Oracle convention is calibrated on sizes up to this.
const N_CALIBRATE: usize = 4;
const MAIN_TIME_LIMIT: Duration = Duration::from_secs(300);

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Sweep `law` for all sizes `1..=n_max`, single-threaded.
fn sweep(law: Law, n_max: usize) -> std::result::Result<u64, String> {
    let maps = Maps::standard();
    let mut checked = 0;
    for n in 1..=n_max {
        let r = verify_law_with(law, n, &maps, 1);
        if let Some(c) = r.counterexamples.first() {
            return Err(format!(
                "{law} fails at n = {n}: input {} expected {} actual {}",
                c.input, c.expected, c.actual
            ));
        }
        let expected = catalan(n as u32);
        if BigUint::from(r.checked) != expected {
            return Err(format!(
                "{law} checked {} objects at n = {n}, expected {expected}",
                r.checked
            ));
        }
        checked += r.checked;
    }
    Ok(checked)
}

fn main_theorem() -> Outcome {
    let checked = sweep(Law::Main, N_IDENTITIES - 1)?;
    let start = Instant::now();
    let top = verify_law(Law::Main, N_IDENTITIES);
    let elapsed = start.elapsed();
    if !top.success() {
        let c = &top.counterexamples[0];
        return Err(format!(
            "phi(psi({})) = {} but zeta = {}",
            c.input, c.actual, c.expected
        ));
    }
    if top.checked != 208_012 {
        return Err(format!("checked {} paths at n = 12", top.checked));
    }
    if elapsed > MAIN_TIME_LIMIT {
        return Err(format!(
            "n = 12 took {elapsed:?}, limit {MAIN_TIME_LIMIT:?}"
        ));
    }
    Ok(format!(
        "phi(psi(D)) = zeta(D) for all {} paths, n <= 12 (n = 12 single-threaded in {:.1}s)",
        checked + top.checked,
        elapsed.as_secs_f64()
    ))
}

fn poset_roundtrip() -> Outcome {
    let checked = sweep(Law::PosetRoundtrip, N_IDENTITIES)?;
    Ok(format!(
        "lambda_poset/xi_poset round trips exact on {checked} trees and posets, n <= 12"
    ))
}

fn bounce_and_steep() -> Outcome {
    let a = sweep(Law::PhiBounce, N_IDENTITIES)?;
    let b = sweep(Law::PsiSteep, N_IDENTITIES)?;
    Ok(format!(
        "phi . xi_poset = xi_bounce on {a} trees; psi = xi_poset . lambda_steep on {b} paths, n <= 12"
    ))
}

fn poset_count() -> Outcome {
    // Pairwise up to 8, hashed canonical encodings above.
    let checked = sweep(Law::Count, N_SMALL)?;
    for n in 0..=N_SMALL {
        let encodings: HashSet<String> = enumerate_posets(n).map(|p| p.to_json_string()).collect();
        if BigUint::from(encodings.len()) != catalan(n as u32) {
            return Err(format!("{} distinct posets at n = {n}", encodings.len()));
        }
    }
    Ok(format!(
        "Cat_n pairwise non-isomorphic unit interval posets, {checked} in total, n <= 10"
    ))
}

fn psi_validity() -> Outcome {
    let checked = sweep(Law::PsiValid, N_SMALL)?;
    Ok(format!(
        "psi(D) is (3+1)-free and (2+2)-free for all {checked} paths, n <= 10"
    ))
}

fn worked_value() -> Outcome {
    let tree: PlaneTree = "(()((())())()())".parse().map_err(|e| format!("{e}"))?;
    let values = node_values(&tree);
    let node = (0..tree.node_count())
        .find(|&u| tree.depth(u) == 3)
        .ok_or("no depth-3 node")?;
    let mut path = Vec::new();
    let mut u = node;
    while let Some(c) = tree.right_index(u) {
        path.push(c);
        u = tree.parent(u).unwrap();
    }
    path.reverse();
    if tree.max_arity() != 4 || path != [3, 2, 1] {
        return Err(format!(
            "fixture has arity {} and path {path:?}",
            tree.max_arity()
        ));
    }
    if values[node] != ratio(769, 216) {
        return Err(format!("value {} != 769/216", values[node]));
    }
    Ok("depth-3 node with sibling path (3,2,1), m = 4 has value exactly 769/216".into())
}

fn parent_lemma() -> Outcome {
    let checked = sweep(Law::ParentLemma, N_SMALL)?;
    Ok(format!(
        "parent = largest value below x_u - 1 and 1 < x_u - x_parent < 1 + (m+2)^(1-l) on {checked} trees, n <= 10"
    ))
}

fn mutation_sanity() -> Outcome {
    let mut caught = Vec::new();
    for law in Law::ALL {
        let mutant = mutant_for(law);
        let maps = mutant.maps();
        let hit = (1..=N_MUTANT).find(|&n| !verify_law_with(law, n, &maps, 1).success());
        match hit {
            Some(n) => caught.push(format!("{law}:{mutant:?}@{n}")),
            None => {
                return Err(format!(
                    "mutant {mutant:?} survives law {law} up to n = {N_MUTANT}"
                ))
            }
        }
    }
    Ok(format!(
        "every law catches its mutant by n = 3 ({})",
        caught.join(", ")
    ))
}

fn oracle_agreement() -> Outcome {
    let paths: Vec<DyckPath> = (0..=N_CALIBRATE).flat_map(enumerate_dyck).collect();
    let convention = calibrate_zeta_convention(paths.iter())
        .ok_or("no supported classical convention matches zeta at n <= 4")?;
    if convention != ZetaConvention::FROZEN {
        return Err(format!(
            "calibrated {convention:?}, documented {:?}",
            ZetaConvention::FROZEN
        ));
    }
    let checked = sweep(Law::ZetaOracle, N_SMALL)?;
    Ok(format!(
        "classical zeta ({:?} scan, reverse = {}) equals xi_bounce . lambda_steep on {checked} paths, n <= 10",
        convention.scan, convention.reverse
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 main theorem", main_theorem),
        ("2 poset round trips", poset_roundtrip),
        ("3 phi-bounce and psi-steep", bounce_and_steep),
        ("4 Catalan count of posets", poset_count),
        ("5 psi validity", psi_validity),
        ("6 worked node value", worked_value),
        ("7 parent lemma", parent_lemma),
        ("8 mutation sanity", mutation_sanity),
        ("9 classical zeta oracle", oracle_agreement),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name} [{secs:.1}s]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} [{secs:.1}s]: {msg}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
