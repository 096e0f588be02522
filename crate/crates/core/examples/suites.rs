//! Running property suites from code; the reports are what `virbi suite` prints.

use virbi::suites::{run_suite, SuiteOptions, SUITES};

fn main() {
    let opts = SuiteOptions {
        seed: 7,
        trials: Some(20),
        ..Default::default()
    };
    for (name, criterion) in SUITES.iter().filter(|(n, _)| *n != "determinism") {
        let report = run_suite(name, &opts).unwrap();
        let verdict = if report.passed { "pass" } else { "FAIL" };
        println!("{criterion:>2} {name:<22} {verdict} ({} checks)", report.checks.len());
    }
}
