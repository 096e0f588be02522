//! Command implementations behind the `virbi` binary.
//!
//! Each command returns an [`Output`] holding the rendered text (or JSON)
//! and whether the checked property held; the binary maps that and any
//! [`Error`] to an exit code with [`exit_code`].

use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::MapAlgebra;
use crate::bialgebra::RMatrix;
use crate::coefficients::CoefficientAlgebra;
use crate::cohomology::{annihilator_witness, cocycle_sweep, inner_solve, skewness_witness, InnerSolution, Witness};
use crate::error::{Error, Result};
use crate::json::{
    certificate_to_json, derivation_from_json, element_to_json, table_from_json, tensor2_to_json, tensor3_to_json,
};
use crate::parser::{parse_element, parse_tensor2, parse_tensor3, render_element, render_tensor2, render_tensor3};
use crate::sampling::{trial_rng, Sampler};
use crate::scalar::{int, parse_rational, ratio, Scalar};
use crate::suites::{run_suite, SuiteOptions, DEFAULT_SEED};
use crate::window::Window;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Arity { .. } | Error::ZeroDenominator | Error::Json(_) => EXIT_USAGE,
        Error::Config(_) => EXIT_CONFIG,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_PROPERTY_FAILURE
        }
    }
}

/// Settings shared by all commands.
#[derive(Clone, Debug)]
pub struct Config {
    pub algebra: MapAlgebra,
    /// Sampling and search Γ-set; `None` means `{−2, −3/2, …, 2}`.
    pub gamma: Option<Vec<Scalar>>,
    pub exp_bound: i64,
    pub seed: u64,
    pub json: bool,
    pub trials: Option<usize>,
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            algebra: MapAlgebra::laurent(1),
            gamma: None,
            exp_bound: 2,
            seed: DEFAULT_SEED,
            json: false,
            trials: None,
            threads: 0,
        }
    }
}

impl Config {
    pub fn vars(&self) -> usize {
        match self.algebra.coefficients() {
            CoefficientAlgebra::Laurent { vars } => *vars,
            CoefficientAlgebra::Table(_) => 0,
        }
    }

    pub fn window(&self) -> Result<Window> {
        if self.exp_bound < 0 {
            return Err(Error::config("--exp-bound must be nonnegative"));
        }
        let ranges = vec![(-self.exp_bound, self.exp_bound); self.vars()];
        match &self.gamma {
            Some(g) => Window::new(g.iter().cloned(), ranges),
            None => Window::symmetric(&int(2), &ratio(1, 2), self.exp_bound, self.vars()),
        }
    }

    fn emit(&self, text: String, value: Value, passed: bool) -> Output {
        let text = if self.json {
            serde_json::to_string_pretty(&value).expect("serializable")
        } else {
            text
        };
        Output { text, passed }
    }
}

/// Parses a `--gamma` list: rationals separated by commas or whitespace.
pub fn parse_gamma(text: &str) -> Result<Vec<Scalar>> {
    let items: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if items.is_empty() {
        return Err(Error::config("--gamma list is empty"));
    }
    items
        .into_iter()
        .map(|s| parse_rational(s).map_err(|e| Error::config(format!("--gamma entry {s:?}: {e}"))))
        .collect()
}

/// Loads a coefficient table file; any problem with it is a config error.
pub fn load_table(path: &Path) -> Result<CoefficientAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read table {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::config(format!("table {}: {e}", path.display())))?;
    table_from_json(&value).map_err(|e| match e {
        Error::Config(m) => Error::config(format!("table {}: {m}", path.display())),
        other => Error::config(format!("table {}: {other}", path.display())),
    })
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn cmd_bracket(cfg: &Config, x: &str, y: &str) -> Result<Output> {
    let g = &cfg.algebra;
    let z = g.bracket(&parse_element(g, x)?, &parse_element(g, y)?);
    Ok(cfg.emit(render_element(&z), json!({ "result": element_to_json(&z) }), true))
}

/// Acts on a two- or three-fold tensor, whichever `w` parses as.
pub fn cmd_act(cfg: &Config, a: &str, w: &str) -> Result<Output> {
    let g = &cfg.algebra;
    let a = parse_element(g, a)?;
    match parse_tensor2(g, w) {
        Ok(w2) => {
            let out = g.act2(&a, &w2);
            Ok(cfg.emit(render_tensor2(&out), json!({ "result": tensor2_to_json(&out) }), true))
        }
        Err(e2) => match parse_tensor3(g, w) {
            Ok(w3) => {
                let out = g.act3(&a, &w3);
                Ok(cfg.emit(render_tensor3(&out), json!({ "result": tensor3_to_json(&out) }), true))
            }
            Err(_) => Err(e2),
        },
    }
}

pub fn cmd_cybe(cfg: &Config, r: &str) -> Result<Output> {
    let g = &cfg.algebra;
    let c = g.cybe_c(&RMatrix(parse_tensor2(g, r)?));
    let zero = c.is_zero();
    Ok(cfg.emit(
        format!("c(r) = {}\nc(r) = 0: {zero}", render_tensor3(&c)),
        json!({ "c": tensor3_to_json(&c), "zero": zero }),
        true,
    ))
}

pub fn cmd_mybe(cfg: &Config, r: &str, x: &str) -> Result<Output> {
    let g = &cfg.algebra;
    let out = g.mybe_residual(&RMatrix(parse_tensor2(g, r)?), &parse_element(g, x)?);
    Ok(cfg.emit(
        format!("x·c(r) = {}", render_tensor3(&out)),
        json!({ "result": tensor3_to_json(&out), "zero": out.is_zero() }),
        true,
    ))
}

pub fn cmd_cojacobi(cfg: &Config, r: &str, x: &str) -> Result<Output> {
    let g = &cfg.algebra;
    let out = g.cojacobi_residual(&RMatrix(parse_tensor2(g, r)?), &parse_element(g, x)?);
    Ok(cfg.emit(
        format!("co-Jacobi residual = {}", render_tensor3(&out)),
        json!({ "result": tensor3_to_json(&out), "zero": out.is_zero() }),
        true,
    ))
}

/// Certifies `r` on `samples` random elements drawn from the window.
pub fn cmd_certify(cfg: &Config, r: &str, samples: usize) -> Result<Output> {
    let g = &cfg.algebra;
    let r = RMatrix(parse_tensor2(g, r)?);
    let sampler = Sampler::new(g, &cfg.window()?)?;
    let mut rng = trial_rng(cfg.seed, 0);
    let sample: Vec<_> = (0..samples).map(|_| sampler.element(&mut rng)).collect();
    let rep = g.certify_bialgebra(&r, &sample, cfg.seed);
    let text = format!(
        "skew: {}\nc(r) = 0: {}\nmax co-Jacobi residual terms: {}\nmax compatibility residual terms: {}\nsamples: {}\nseed: {}\nverdict: {}",
        rep.skew, rep.cybe_zero, rep.max_cojacobi_terms, rep.max_compat_terms, rep.sample_size, rep.seed, rep.verdict
    );
    let value = serde_json::to_value(&rep)?;
    Ok(cfg.emit(text, value, rep.passed()))
}

pub fn cmd_cocycle_check(cfg: &Config, table: &Path) -> Result<Output> {
    let d = derivation_from_json(&cfg.algebra, &read_json(table)?)?;
    let rep = cocycle_sweep(&cfg.algebra, &d);
    let mut text = format!(
        "pairs: {} total, {} defined on the window, {} failing\ncoverage: {:.4}\nmax residual terms: {}",
        rep.pairs_total, rep.pairs_defined, rep.pairs_failing, rep.coverage, rep.max_residual_terms
    );
    for (x, y) in &rep.failures {
        text.push_str(&format!("\n  failing pair ({x}, {y})"));
    }
    let value = serde_json::to_value(&rep)?;
    Ok(cfg.emit(text, value, rep.passed()))
}

pub fn cmd_inner_solve(cfg: &Config, table: &Path) -> Result<Output> {
    let d = derivation_from_json(&cfg.algebra, &read_json(table)?)?;
    Ok(match inner_solve(&cfg.algebra, &d, None)? {
        InnerSolution::Inner(v) => cfg.emit(
            format!("inner: v = {}", render_tensor2(&v)),
            json!({ "inner": true, "v": tensor2_to_json(&v) }),
            true,
        ),
        InnerSolution::Inconsistent(cert) => {
            let cj = certificate_to_json(&cert);
            let text = format!(
                "not inner on the tensor window\nfailing equation: coordinate {} ⊗ {} of {}·v\nrequired {}, residual after elimination {}",
                cert.coordinate.0, cert.coordinate.1, cert.element, crate::scalar::format_rational(&cert.rhs),
                crate::scalar::format_rational(&cert.residual)
            );
            cfg.emit(text, json!({ "inner": false, "certificate": cj }), false)
        }
    })
}

pub enum WitnessQuery<'a> {
    Skew(&'a str),
    Annihilator(&'a str),
}

/// Searches the integer window `|β| ≤ 3`, `|i| ≤ 3` unless `--gamma` is set.
pub fn cmd_witness(cfg: &Config, query: WitnessQuery<'_>) -> Result<Output> {
    let g = &cfg.algebra;
    let window = match cfg.gamma {
        Some(_) => cfg.window()?,
        None => Window::integer(3, cfg.exp_bound.max(3), cfg.vars())?,
    };
    let (kind, w) = match query {
        WitnessQuery::Skew(r) => {
            if !g.coefficients().tensor_square_is_domain() {
                return Err(Error::config(
                    "skewness witnesses need A⊗A to be an integral domain; use a Laurent backend",
                ));
            }
            ("skewness", skewness_witness(g, &parse_tensor2(g, r)?, &window)?)
        }
        WitnessQuery::Annihilator(c) => ("annihilator", annihilator_witness(g, &parse_tensor3(g, c)?, &window)?),
    };
    let text = match &w {
        Witness::NotNeeded => format!("{kind}: no witness needed"),
        Witness::Found(a) => format!("{kind} witness: {a}"),
        Witness::NoWitnessInWindow => format!("{kind}: no witness in window"),
    };
    let passed = w != Witness::NoWitnessInWindow;
    let value = json!({ "kind": kind, "result": serde_json::to_value(&w)? });
    Ok(cfg.emit(text, value, passed))
}

/// Runs a named suite. `--k`/`--table` pin the backend; otherwise the
/// suite's default backends are used.
pub fn cmd_suite(cfg: &Config, name: &str, pin_backend: bool) -> Result<Output> {
    let opts = SuiteOptions {
        backends: pin_backend.then(|| vec![cfg.algebra.clone()]),
        gamma: cfg.gamma.clone(),
        exp_bound: Some(cfg.exp_bound),
        seed: cfg.seed,
        trials: cfg.trials,
        threads: cfg.threads,
    };
    let rep = run_suite(name, &opts)?;
    let mut text = format!("suite {} (criterion {}), seed {}", rep.suite, rep.criterion, rep.seed);
    for c in &rep.checks {
        let status = match c.status {
            crate::suites::Status::Pass => "pass",
            crate::suites::Status::Fail => "FAIL",
            crate::suites::Status::Skip => "skip",
        };
        text.push_str(&format!("\n  [{status}] {} on {}: {}", c.name, c.backend, c.detail));
    }
    text.push_str(if rep.passed { "\nresult: pass" } else { "\nresult: FAIL" });
    Ok(Output {
        text: if cfg.json { rep.to_json() } else { text },
        passed: rep.passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_example() {
        let out = cmd_bracket(&Config::default(), "L[1;2]", "L[2;3]").unwrap();
        assert_eq!(out.text, "L[3;5]");
    }

    #[test]
    fn cybe_triangular() {
        let out = cmd_cybe(&Config::default(), "L[0;0] (x) L[1;1] - L[1;1] (x) L[0;0]").unwrap();
        assert!(out.text.ends_with("c(r) = 0: true"), "{}", out.text);
    }

    #[test]
    fn error_codes() {
        let cfg = Config::default();
        let e = cmd_bracket(&cfg, "L[1;", "L[0]").unwrap_err();
        assert_eq!(exit_code(&e), EXIT_USAGE);
        assert_eq!(exit_code(&parse_gamma("1, x").unwrap_err()), EXIT_CONFIG);
        let cfg = Config {
            gamma: Some(vec![int(1), int(0)]),
            ..Config::default()
        };
        assert_eq!(exit_code(&cfg.window().unwrap_err()), EXIT_CONFIG);
    }

    #[test]
    fn act_picks_arity() {
        let cfg = Config::default();
        assert_eq!(cmd_act(&cfg, "L[1;0]", "L[0;0] (x) L[0;0]").unwrap().text, "-L[0;0](x)L[1;0] - L[1;0](x)L[0;0]");
        assert!(cmd_act(&cfg, "L[1;0]", "L[0;0] (x) L[0;0] (x) L[0;0]").is_ok());
    }
}
