//! Acceptance gate: one line per criterion, exact equality throughout.
//!
//! Runs as a plain binary (`cargo test --test acceptance`) so the verdict
//! lines are always printed; exits nonzero if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use virbi::algebra::{BasisIndex, MapAlgebra};
use virbi::bialgebra::RMatrix;
use virbi::cohomology::{coboundary_of, inner_solve, InnerSolution};
use virbi::sampling::{trial_rng, Sampler};
use virbi::scalar::{int, ratio};
use virbi::suites::{run_suite, Status, SuiteOptions, SuiteReport};
use virbi::tensor::Tensor2;
use virbi::window::Window;

const SEED: u64 = 42;
const BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn suite(name: &str) -> Result<SuiteReport, String> {
    let opts = SuiteOptions {
        seed: SEED,
        ..Default::default()
    };
    run_suite(name, &opts).map_err(|e| e.to_string())
}

fn summarize(rep: &SuiteReport) -> Outcome {
    let count = |s| rep.checks.iter().filter(|c| c.status == s).count();
    let failing: Vec<String> = rep
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} on {}: {}", c.name, c.backend, c.detail))
        .collect();
    if failing.is_empty() {
        Ok(format!(
            "{} checks passed, {} skipped",
            count(Status::Pass),
            count(Status::Skip)
        ))
    } else {
        Err(failing.join("; "))
    }
}

fn run_named(name: &str) -> Outcome {
    summarize(&suite(name)?)
}

fn loop_window(vars: usize) -> Window {
    Window::symmetric(&int(2), &ratio(1, 2), 2, vars).unwrap()
}

/// Brute-force confirmation of the triangular fixture by two independent
/// expansions, and agreement of the library's `c(r)` with them on random r.
fn triangular_oracles() -> Outcome {
    let mut fixtures = 0;
    for vars in 0..=2 {
        let g = MapAlgebra::laurent(vars);
        let window = loop_window(vars);
        for alpha in window.gamma().iter().filter(|a| !a.is_zero()) {
            for mono in window.monos(&g).unwrap() {
                let r = g.triangular_r(alpha, mono).unwrap();
                if !common::cybe(r.tensor()).is_empty() || !common::cybe_words(r.tensor()).is_empty() {
                    return Err(format!("oracle c(r) != 0 for {:?}", r.tensor()));
                }
                fixtures += 1;
            }
        }
    }
    let g = MapAlgebra::laurent(1);
    let s = Sampler::new(&g, &loop_window(1)).unwrap();
    for i in 0..50 {
        let r = s.tensor2(&mut trial_rng(SEED, i));
        let lib = common::tensor3(&g.cybe_c(&RMatrix(r.clone())));
        if lib != common::cybe(&r) || lib != common::cybe_words(&r) {
            return Err(format!("library c(r) disagrees with the oracles on random r #{i}"));
        }
    }
    Ok(format!("{fixtures} triangular fixtures vanish by both expansions; 50 random r agree"))
}

fn triangular() -> Outcome {
    let oracle = triangular_oracles()?;
    let suite = run_named("triangular")?;
    Ok(format!("{oracle}; {suite}"))
}

/// Every single-entry mutation of one coboundary table is refused.
fn inner_recovery() -> Outcome {
    let suite = run_named("inner-recovery")?;
    let g = MapAlgebra::laurent(1);
    let window = loop_window(1);
    let s = Sampler::new(&g, &window).unwrap().with_max_terms(4);
    let v = s.nonzero_tensor2(&mut trial_rng(SEED, 0));
    let d = coboundary_of(&g, &v, &window).map_err(|e| e.to_string())?;
    let unit = BasisIndex::laurent(int(0), [0]);
    let bump = Tensor2::single((unit.clone(), unit), One::one());
    let mut refused = 0;
    for x in d.domain() {
        let mut mutated = d.clone();
        mutated.set(x.clone(), d.value(x).add(&bump));
        match inner_solve(&g, &mutated, None).map_err(|e| e.to_string())? {
            InnerSolution::Inconsistent(_) => refused += 1,
            InnerSolution::Inner(_) => return Err(format!("mutation at {x} was solved")),
        }
    }
    Ok(format!("{suite}; all {refused} single-entry mutations certified inconsistent"))
}

fn cli_json(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_virbi"))
        .args(args)
        .env_remove("VIRBI_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("virbi {} exited with {}", args.join(" "), out.status));
    }
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let suite = run_named("determinism")?;
    let mut compared = 0;
    for (name, trials) in [("jacobi", "40"), ("inner-recovery", "4"), ("skew-witness", "40")] {
        let base = ["--json", "--seed", "42", "--trials", trials, "suite", name];
        let one = |threads: &str| {
            let mut args = base.to_vec();
            args.extend(["--threads", threads]);
            cli_json(&args)
        };
        let (a, b, c) = (one("1")?, one("1")?, one("4")?);
        if a != b || a != c {
            return Err(format!("CLI output for suite {name} differs between runs"));
        }
        compared += 1;
    }
    Ok(format!("{suite}; CLI JSON byte-identical for {compared} suites (1, 1, 4 threads)"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("algebra axioms", || run_named("jacobi")),
        ("operator involutions", || run_named("involutions")),
        ("module law", || run_named("module-law")),
        ("triangular construction", triangular),
        ("coboundary is a derivation", || run_named("coboundary-derivation")),
        ("Drinfeld linkage", || run_named("drinfeld")),
        ("inner recovery", inner_recovery),
        ("skewness witness", || run_named("skew-witness")),
        ("annihilator witness", || run_named("annihilator-witness")),
        ("grading split and degree zero", || run_named("grading")),
        ("determinism", determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    let total = start.elapsed();
    let within = total <= BUDGET;
    println!(
        "time budget {} total {:.1}s (limit {}s)",
        if within { "PASS" } else { "FAIL" },
        total.as_secs_f64(),
        BUDGET.as_secs()
    );
    if failed > 0 || !within {
        println!("acceptance: FAIL ({failed} criteria failing)");
        std::process::exit(1);
    }
    println!("acceptance: PASS (11/11)");
}
