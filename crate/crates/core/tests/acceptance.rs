//! One line per acceptance criterion, each with its runtime budget.

mod common;

use std::time::{Duration, Instant};

use jsonschema::JSONSchema;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;
use skeinlab::report::Report;
use skeinlab::verify::{self, Params};

type Outcome = Result<(), String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    check: Box<dyn Fn() -> Outcome>,
}

fn suite(name: &'static str, max_degree: usize, required: &'static [&'static str]) -> Box<dyn Fn() -> Outcome> {
    Box::new(move || {
        let params = Params { max_degree, ..Params::default() };
        let report = verify::run_suite(name, &params).map_err(|e| e.to_string())?;
        for r in required {
            if !report.cases.iter().any(|c| c.name == *r) {
                return Err(format!("{name} has no case {r}"));
            }
        }
        match report.cases.iter().find(|c| !c.status.is_pass()) {
            None => Ok(()),
            Some(c) => Err(format!("{name}/{}: {}", c.name, c.witness.clone().unwrap_or_default())),
        }
    })
}

fn both(a: Box<dyn Fn() -> Outcome>, b: Box<dyn Fn() -> Outcome>) -> Box<dyn Fn() -> Outcome> {
    Box::new(move || a().and_then(|_| b()))
}

fn round_trips() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 500, failure_persistence: None, ..Config::default() });
    runner
        .run(&common::printable(), |p| p.round_trips().map_err(proptest::test_runner::TestCaseError::fail))
        .map_err(|e| e.to_string())
}

fn verify_all_json() -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["skeinlab", "verify", "all", "--max-degree", "3", "--json"];
    let code = skeinlab::cli::run_with(args, &mut out, &mut err);
    let text = String::from_utf8(out).map_err(|e| e.to_string())?;
    let value: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let schema = JSONSchema::compile(&schema).map_err(|e| e.to_string())?;
    if let Err(errors) = schema.validate(&value) {
        return Err(errors.map(|e| e.to_string()).collect::<Vec<_>>().join("; "));
    }
    let report = Report::from_json(&text).map_err(|e| e.to_string())?;
    if code != 0 || !report.status.is_pass() {
        let failed: Vec<&str> = report.cases.iter().filter(|c| !c.status.is_pass()).map(|c| c.name.as_str()).collect();
        return Err(format!("exit {code}, failed cases {failed:?}"));
    }
    if report.totals.total < 50 {
        return Err(format!("only {} cases ran", report.totals.total));
    }
    Ok(())
}

fn criteria() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion {
            id: 1,
            title: "reduction matches the smoothing oracle; Reidemeister II/III; kink factor",
            budget: secs(10),
            check: suite("rt", 3, &["oracle_agreement", "reidemeister_ii", "reidemeister_iii", "positive_kink"]),
        },
        Criterion {
            id: 2,
            title: "Hopf axioms on all basis elements with at most 3 strands",
            budget: secs(60),
            check: suite("hopf", 3, &["coassociativity", "counit", "antipode"]),
        },
        Criterion {
            id: 3,
            title: "transport to the PBW algebra is an algebra and coalgebra isomorphism",
            budget: None,
            check: suite("iso", 3, &["dictionary", "round_trip", "algebra_map", "coalgebra_map"]),
        },
        Criterion {
            id: 4,
            title: "R and theta values, exchange law, centrality, braiding on V⊗V",
            budget: None,
            check: suite("coquasi", 2, &["r_generators", "theta_generators", "exchange_law", "theta_central", "braiding_is_crossing"]),
        },
        Criterion {
            id: 5,
            title: "half-ribbon axioms for t",
            budget: None,
            check: suite(
                "halfribbon",
                3,
                &["t_convolution_inverse", "t_squares_to_twist", "t_product_law", "t_is_counit_after_inversion"],
            ),
        },
        Criterion {
            id: 6,
            title: "left/right bridge S(x₁)t(x₂) = rot(x₂)t(x₁)",
            budget: None,
            check: suite("leftright", 3, &["bridge"]),
        },
        Criterion {
            id: 7,
            title: "braided-opposite product equals crossed stacking",
            budget: None,
            check: suite("braidop", 2, &["crossed_stacking"]),
        },
        Criterion {
            id: 8,
            title: "St intertwiner, naturality and ranks up to 6 points",
            budget: secs(120),
            check: suite("st", 3, &["intertwiner", "naturality", "rank"]),
        },
        Criterion {
            id: 9,
            title: "excision containments and dimensions",
            budget: secs(180),
            check: suite("excision", 3, &["cotensor_containment", "variant_containment", "dimensions"]),
        },
        Criterion {
            id: 10,
            title: "comodule axioms, U relations, half twist values",
            budget: None,
            check: suite("comodule", 3, &["quantum_plane_axioms", "u_relations", "half_twist_values"]),
        },
        Criterion {
            id: 11,
            title: "500 print/parse round trips; verify all passes with a valid JSON report",
            budget: secs(300),
            check: both(Box::new(round_trips), Box::new(verify_all_json)),
        },
    ]
}

fn main() {
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let mut outcome = (c.check)();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, c.budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {status} {} ({} ms)", c.id, c.title, elapsed.as_millis());
        if let Err(w) = outcome {
            println!("    {w}");
            failed.push(c.id);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
