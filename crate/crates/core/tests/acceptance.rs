//! One test that runs every acceptance criterion and prints a pass/fail line
//! for each, then fails if any of them failed.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use actlift::action::MonoidalAction;
use actlift::category::ObjId;
use actlift::distlaw::{
    check_lift_lemmas, check_unlift_lemmas, enumerate_laws, enumerate_strict_lifts, Caps,
};
use actlift::instances::{chain, max_action};
use actlift::linear::{run_linear_suite, LinearBundle};
use actlift::monad::{em_category, Monad};
use common::mutate::run_mutants;
use common::oracle::{closures, max_type_actions, poset_law_count};
use common::random_linear::check_random_bundles;
use common::{fixture_path, load, BIJECTION, PASSING};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bijection_suite() -> Outcome {
    let total = Instant::now();
    for (name, expected) in BIJECTION {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_actlift"))
            .args(["--format", "machine", "roundtrip"])
            .arg(fixture_path(name))
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let json: serde_json::Value =
            serde_json::from_slice(&out.stdout).map_err(|e| format!("{name}: {e}"))?;
        let (laws, lifts) = (&json["counts"]["laws"], &json["counts"]["lifts"]);
        ensure(
            out.status.code() == Some(0) && json["status"] == "pass",
            || format!("{name}: {json}"),
        )?;
        ensure(*laws == expected && *lifts == expected, || {
            format!("{name}: laws {laws}, lifts {lifts}, expected {expected}")
        })?;
        ensure(elapsed < Duration::from_secs(60), || {
            format!("{name}: {elapsed:?}")
        })?;
    }
    ensure(total.elapsed() < Duration::from_secs(300), || {
        format!("total {:?}", total.elapsed())
    })?;
    Ok(format!(
        "{} instances, counts match and both roundtrips hold",
        BIJECTION.len()
    ))
}

fn instances() -> Vec<(String, Arc<MonoidalAction>, Arc<Monad>)> {
    let mut out = Vec::new();
    for (name, _) in BIJECTION {
        let d = load(name);
        let action = d.actions.values().next().expect("one action").value.clone();
        let monad = d.monads.values().next().expect("one monad").value.clone();
        out.push((name.to_owned(), action, monad));
    }
    for n in 1..=3 {
        for c in closures(n) {
            for phi in max_type_actions(n, 2) {
                let action = Arc::new(max_action(n, 2, &phi).unwrap());
                let monad = Arc::new(
                    Monad::thin(Arc::new(chain(n)), c.iter().map(|&i| ObjId(i)).collect()).unwrap(),
                );
                out.push((format!("closure {c:?}, phi {phi:?}"), action, monad));
            }
        }
    }
    out
}

fn proof_lemmas() -> Outcome {
    let (mut laws, mut lifts) = (0, 0);
    for (name, action, monad) in instances() {
        let em = em_category(&monad).map_err(|e| format!("{name}: {e}"))?;
        for l in enumerate_laws(&action, &monad, Caps::default()).map_err(|e| e.to_string())? {
            let r = check_lift_lemmas(&l, &em);
            ensure(r.is_pass(), || format!("{name}: {r}"))?;
            laws += 1;
        }
        for lift in
            enumerate_strict_lifts(&action, &monad, Caps::default()).map_err(|e| e.to_string())?
        {
            let r = check_unlift_lemmas(&lift);
            ensure(r.is_pass(), || format!("{name}: {r}"))?;
            lifts += 1;
        }
    }
    ensure(laws > 0 && lifts > 0, || "nothing was enumerated".into())?;
    Ok(format!("{laws} laws and {lifts} strict lifts checked"))
}

fn poset_criterion() -> Outcome {
    let mut cases = 0;
    for n in 1..=4 {
        for c in closures(n) {
            let monad = Arc::new(
                Monad::thin(Arc::new(chain(n)), c.iter().map(|&i| ObjId(i)).collect()).unwrap(),
            );
            for k in 1..=4 {
                for phi in max_type_actions(n, k) {
                    let action = Arc::new(max_action(n, k, &phi).unwrap());
                    let want = poset_law_count(&c, &phi);
                    let got = enumerate_laws(&action, &monad, Caps::default())
                        .map_err(|e| e.to_string())?
                        .len();
                    ensure(got == want, || {
                        format!("closure {c:?}, phi {phi:?}: {got} laws, oracle says {want}")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!(
        "{cases} closure/action pairs agree with the order oracle"
    ))
}

fn linear_instance() -> Outcome {
    let start = Instant::now();
    let checks = run_linear_suite(&LinearBundle::f3_example());
    let elapsed = start.elapsed();
    for c in &checks {
        ensure(c.report.is_pass(), || format!("{}: {}", c.name, c.report))?;
    }
    for group in ["law", "lifted-action", "lb-monad", "lb-compatibility"] {
        ensure(checks.iter().any(|c| c.name.starts_with(group)), || {
            format!("{group} did not run")
        })?;
    }
    ensure(elapsed < Duration::from_secs(5), || format!("{elapsed:?}"))?;
    Ok(format!(
        "{} check groups over F3 in {elapsed:.2?}",
        checks.len()
    ))
}

fn mutation_robustness() -> Outcome {
    let (mut total, mut equivalent) = (0, 0);
    for name in PASSING {
        let s = run_mutants(&load(name));
        ensure(s.total >= 20, || {
            format!("{name}: only {} mutants", s.total)
        })?;
        ensure(s.survived.is_empty(), || {
            format!("{name}: undetected {:?}", s.survived)
        })?;
        total += s.total;
        equivalent += s.equivalent.len();
    }
    Ok(format!(
        "{total} mutants over {} fixtures, {equivalent} confirmed equivalent",
        PASSING.len()
    ))
}

fn random_linear() -> Outcome {
    let start = Instant::now();
    let (checked, _) = check_random_bundles(11, 100);
    let elapsed = start.elapsed();
    ensure(checked >= 100, || format!("only {checked} bundles"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("{elapsed:?}"))?;
    Ok(format!("{checked} bundles in {elapsed:.2?}"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 6] = [
        ("bijection suite", bijection_suite),
        ("proof lemmas", proof_lemmas),
        ("poset criterion", poset_criterion),
        ("linear instance over F3", linear_instance),
        ("mutation robustness", mutation_robustness),
        ("random linear bundles", random_linear),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let line = match &outcome {
            Ok(detail) => format!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => format!("criterion {}: FAIL  {name}: {detail}", i + 1),
        };
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
