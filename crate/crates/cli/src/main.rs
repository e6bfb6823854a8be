use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use eigencomplete::algebra::{Gfp, Rationals};
use eigencomplete::completion::{check, witness_to_full, Chain, CompletionError, Prescription};
use eigencomplete::io::{EigenstructureJson, FieldSpec, JsonScalar, PrescriptionJson, ProblemJson, Subject};
use eigencomplete::oracle::{sweep, verify_predicate, OracleConfig, SweepConfig};
use eigencomplete::structmat::{eigenstructure, Eigenstructure};

const OK: u8 = 0;
const INFEASIBLE: u8 = 2;
const OBSTRUCTED: u8 = 3;
const MISMATCH: u8 = 4;

/// Eigenstructure of polynomial matrices and feasibility of row completions.
///
/// Exit codes: 0 feasible/ok, 1 error, 2 infeasible, 3 field obstruction,
/// 4 oracle mismatch.
#[derive(Parser)]
#[command(name = "eigencomplete", version)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Field to work over: Q or GF(p). Overrides the problem file.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Coefficient budget of the oracle search.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Seed for randomized self-tests.
    #[arg(long, global = true, default_value_t = 0x0c0ffee)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the complete eigenstructure of the problem's matrix.
    Analyze { path: PathBuf },
    /// Evaluate the feasibility predicate of the problem's prescription.
    Check { path: PathBuf },
    /// Construct the invariant chain from the sufficiency proof and lift the
    /// prescription to a full one.
    Chain { path: PathBuf },
    /// Compare the predicate with exhaustive search over GF(p).
    Oracle {
        path: PathBuf,
        /// Ignore the coefficient budget and candidate ceiling.
        #[arg(long)]
        override_budget: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Random oracle sweep over small instances of every variant.
    Selftest {
        #[arg(long, default_value_t = 40)]
        instances: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path) -> Result<ProblemJson> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    ProblemJson::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.cmd {
        Cmd::Analyze { path } => with_field(cli, path, Generic::Analyze),
        Cmd::Check { path } => with_field(cli, path, Generic::Check),
        Cmd::Chain { path } => with_field(cli, path, Generic::Chain),
        Cmd::Oracle { path, override_budget, inject_fault } => oracle(cli, path, *override_budget, *inject_fault),
        Cmd::Selftest { instances } => selftest(cli, *instances),
    }
}

#[derive(Clone, Copy)]
enum Generic {
    Analyze,
    Check,
    Chain,
}

fn with_field(cli: &Cli, path: &Path, what: Generic) -> Result<u8> {
    let problem = load(path)?;
    match problem.field_spec(cli.field)? {
        FieldSpec::Rationals => dispatch(cli, &problem, &Rationals, what),
        FieldSpec::Gfp(p) => dispatch(cli, &problem, &Gfp::new(p)?, what),
    }
}

fn dispatch<F: JsonScalar>(cli: &Cli, problem: &ProblemJson, field: &F, what: Generic) -> Result<u8> {
    let base = match problem.subject(field)? {
        Subject::Matrix(m) => eigenstructure(&m)?,
        Subject::Invariants(es) => es,
    };
    match what {
        Generic::Analyze => analyze(cli, &base),
        Generic::Check => run_check(cli, &base, &problem.prescription(field)?),
        Generic::Chain => chain(cli, &base, &problem.prescription(field)?),
    }
}

fn analyze<F: JsonScalar>(cli: &Cli, es: &Eigenstructure<F>) -> Result<u8> {
    if cli.json {
        print_json(&EigenstructureJson::from_eigenstructure(es))?;
    } else {
        println!("{es}");
    }
    Ok(OK)
}

fn run_check<F: JsonScalar>(cli: &Cli, base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<u8> {
    let report = check(base, presc)?;
    if cli.json {
        print_json(&report)?;
    } else {
        println!("{presc}");
        print!("{report}");
    }
    Ok(if report.feasible { OK } else { INFEASIBLE })
}

fn chain<F: JsonScalar>(cli: &Cli, base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<u8> {
    let w = match witness_to_full(base, presc) {
        Ok(w) => w,
        Err(CompletionError::NotFeasible) => {
            eprintln!("prescription is not feasible");
            return Ok(INFEASIBLE);
        }
        Err(CompletionError::FieldObstruction(e)) => {
            eprintln!("field obstruction: {e}");
            return Ok(OBSTRUCTED);
        }
        Err(e) => return Err(e.into()),
    };
    if cli.json {
        let chain = w.chain.as_ref().map(|c| {
            let seq = match &c.chain {
                Chain::Beta(b) => json!({ "beta": b.iter().map(eigencomplete::io::poly_to_json).collect::<Vec<_>>() }),
                Chain::F(f) => json!({ "f": f }),
                Chain::Gamma(g) => json!({ "gamma": g.iter().map(|h| json!({"e": h.e, "alpha": eigencomplete::io::poly_to_json(&h.alpha)})).collect::<Vec<_>>() }),
            };
            json!({ "constant": c.constant, "g": c.g, "h": c.h, "w": c.w, "tau": c.tau, "chain": seq })
        });
        let stages: Vec<_> = w.stages.iter().map(PrescriptionJson::from_prescription).collect();
        print_json(&json!({ "stages": stages, "construction": chain, "report": w.report }))?;
    } else {
        for (i, s) in w.stages.iter().enumerate() {
            println!("stage {i}: {s}");
        }
        if let Some(c) = &w.chain {
            println!("construction: {c}");
        }
        print!("{}", w.report);
    }
    Ok(OK)
}

fn oracle(cli: &Cli, path: &Path, override_budget: bool, inject_fault: bool) -> Result<u8> {
    let problem = load(path)?;
    let p = match problem.field_spec(cli.field)? {
        FieldSpec::Gfp(p) => p,
        FieldSpec::Rationals => bail!("the oracle needs a finite field (GF(2), GF(3) or GF(5))"),
    };
    let field = Gfp::new(p)?;
    let Subject::Matrix(mat) = problem.subject(&field)? else {
        bail!("the oracle needs a concrete matrix, not bare invariants");
    };
    let presc = problem.prescription(&field)?;
    let mut cfg = problem.oracle.clone().unwrap_or_else(|| OracleConfig::new(p, presc.z()));
    cfg.p = p;
    if let Some(b) = cli.budget {
        cfg.coefficient_budget = b;
    }
    cfg.override_budget |= override_budget;
    cfg.inject_fault |= inject_fault;
    let verdict = verify_predicate(&mat, &presc, &cfg)?;
    if cli.json {
        print_json(&verdict)?;
    } else {
        let j = &verdict.judgement;
        println!("{}", verdict.target);
        println!("candidates searched: {}", verdict.candidates);
        println!("achievable tuples for this variant: {}", verdict.achievable_tuples);
        println!(
            "predicate: {}{}",
            if j.feasible { "feasible" } else { "infeasible" },
            if j.field_caveat { " (field caveat)" } else { "" }
        );
        println!("achieved: {}", j.achieved);
        if let Some(w) = &verdict.witness {
            println!("witness W = {w}");
        }
        println!("caveat path: {:?}", j.caveat_path);
        match j.mismatch {
            None => println!("consistent"),
            Some(rule) => {
                println!("MISMATCH ({rule:?})");
                for c in verdict.report.failing() {
                    println!("  failing condition {}: {} vs {}", c.id, c.lhs, c.rhs);
                }
            }
        }
    }
    Ok(if verdict.consistent() { OK } else { MISMATCH })
}

fn selftest(cli: &Cli, instances: usize) -> Result<u8> {
    let cfg = SweepConfig { instances, seed: cli.seed, ..SweepConfig::default() };
    let report = sweep(&cfg)?;
    if cli.json {
        print_json(&report)?;
    } else {
        println!(
            "{} instances, {} candidates, {} targets, {} achieved tuples",
            report.instances,
            report.candidates,
            report.targets(),
            report.achieved_tuples
        );
        for t in &report.tallies {
            println!(
                "  {:<9} targets {:>6}  feasible {:>6}  achieved {:>6}  caveat built {:>4}  obstructed {:>3}",
                t.variant.map(|v| v.to_string()).unwrap_or_default(),
                t.targets,
                t.feasible,
                t.achieved,
                t.caveat_constructed,
                t.caveat_obstructed
            );
        }
        for (name, list) in [
            ("necessity violations", &report.necessity_violations),
            ("sufficiency failures", &report.sufficiency_failures),
            ("caveat inconsistencies", &report.caveat_inconsistencies),
            ("witness closure failures", &report.closure_failures),
            ("uncovered tuples", &report.uncovered),
        ] {
            println!("{name}: {}", list.len());
            for item in list.iter().take(5) {
                println!("    {item}");
            }
        }
    }
    Ok(if report.is_clean() { OK } else { MISMATCH })
}
