use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Gfp, Poly};
use crate::completion::Variant;
use crate::structmat::{eigenstructure, PolyMatrix};

use super::targets::targets;
use super::verify::{judge, CaveatPath, Rule};
use super::{enumerate_completions, OracleConfig, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub instances: usize,
    pub seed: u64,
    /// Largest `z * n * (d + 1)` drawn over GF(2).
    pub gf2_max_coefficients: usize,
    /// Largest `z * n * (d + 1)` drawn over GF(3).
    pub gf3_max_coefficients: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { instances: 200, seed: 0x0c0ffee, gf2_max_coefficients: 18, gf3_max_coefficients: 9 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantTally {
    pub variant: Option<Variant>,
    pub targets: usize,
    pub feasible: usize,
    pub achieved: usize,
    pub caveat_constructed: usize,
    pub caveat_obstructed: usize,
    pub lifted: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub instances: usize,
    pub candidates: u64,
    pub achieved_tuples: usize,
    pub tallies: Vec<VariantTally>,
    pub necessity_violations: Vec<String>,
    pub sufficiency_failures: Vec<String>,
    pub caveat_inconsistencies: Vec<String>,
    pub closure_failures: Vec<String>,
    /// Achieved tuples missing from the target enumeration.
    pub uncovered: Vec<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.necessity_violations.is_empty()
            && self.sufficiency_failures.is_empty()
            && self.caveat_inconsistencies.is_empty()
            && self.closure_failures.is_empty()
            && self.uncovered.is_empty()
    }

    pub fn targets(&self) -> usize {
        self.tallies.iter().map(|t| t.targets).sum()
    }
}

/// A random `m x n` matrix of true degree `d` over GF(p) and a row count `z`
/// whose search space has at most `max_coefficients` coefficients.
pub fn random_instance(rng: &mut impl Rng, p: u32, max_coefficients: usize) -> (PolyMatrix<Gfp>, usize) {
    let field = Gfp::new(p).expect("prime");
    let (m, n, d, z) = loop {
        let (m, n, d, z) = (rng.gen_range(1..=2), rng.gen_range(1..=3), rng.gen_range(1..=2), rng.gen_range(1..=2));
        if z * n * (d + 1) <= max_coefficients {
            break (m, n, d, z);
        }
    };
    let mut coeffs: Vec<Vec<Vec<u32>>> =
        (0..m).map(|_| (0..n).map(|_| (0..=d).map(|_| rng.gen_range(0..p)).collect()).collect()).collect();
    if m == 2 && rng.gen_bool(0.25) {
        let c = rng.gen_range(1..p);
        coeffs[1] = coeffs[0].iter().map(|e| e.iter().map(|&a| field.mul(&a, &c)).collect()).collect();
    }
    if coeffs.iter().flatten().all(|e| e[d] == 0) {
        let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..n));
        coeffs[i][j][d] = rng.gen_range(1..p);
        if m == 2 && coeffs[1 - i][j][d] == 0 && coeffs[0] == coeffs[1] {
            coeffs[1 - i][j][d] = coeffs[i][j][d];
        }
    }
    let rows = coeffs
        .into_iter()
        .map(|row| row.into_iter().map(|c| Poly::new(&field, c)).collect())
        .collect();
    (PolyMatrix::new(&field, d, rows).expect("within grade"), z)
}

/// Compares every variant's predicate against exhaustive search on random
/// instances.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut report = SweepReport {
        tallies: Variant::ALL.iter().map(|&v| VariantTally { variant: Some(v), ..Default::default() }).collect(),
        ..Default::default()
    };
    for k in 0..cfg.instances {
        let (p, cap) = if k % 2 == 0 { (2, cfg.gf2_max_coefficients) } else { (3, cfg.gf3_max_coefficients) };
        let (mat, z) = random_instance(&mut rng, p, cap);
        run_instance(&mat, z, &mut report)?;
    }
    Ok(report)
}

fn run_instance(mat: &PolyMatrix<Gfp>, z: usize, report: &mut SweepReport) -> Result<(), OracleError> {
    let field = *mat.field();
    let base = eigenstructure(mat)?;
    let mut ocfg = OracleConfig::new(field.modulus(), z);
    ocfg.override_budget = true;
    let oracle = enumerate_completions(mat, &ocfg)?;
    report.instances += 1;
    report.candidates += oracle.candidates;
    report.achieved_tuples += oracle.len();
    let tag = |what: &str| format!("GF({}) P={mat} z={z}: {what}", field.modulus());

    for (vi, &variant) in Variant::ALL.iter().enumerate() {
        let achieved = oracle.project(variant);
        let all = targets(&base, &field, variant, z);
        for t in achieved.keys() {
            if !all.contains(t) {
                report.uncovered.push(tag(&t.to_string()));
            }
        }
        let judged: Vec<_> = all
            .par_iter()
            .map(|t| judge(&base, &field, t, achieved.contains_key(t), false).map(|(_, j)| (t, j)))
            .collect::<Result<_, _>>()?;
        let tally = &mut report.tallies[vi];
        for (t, j) in judged {
            tally.targets += 1;
            tally.feasible += j.feasible as usize;
            tally.achieved += j.achieved as usize;
            match j.caveat_path {
                CaveatPath::Constructed => tally.caveat_constructed += 1,
                CaveatPath::Obstructed { .. } => tally.caveat_obstructed += 1,
                _ => {}
            }
            let detail = || {
                let w = achieved.get(t).map(|&i| format!(" witness W={}", oracle.candidate(i))).unwrap_or_default();
                tag(&format!("{t} ({:?}){w}", j.caveat_path))
            };
            match j.mismatch {
                Some(Rule::Necessity) => report.necessity_violations.push(detail()),
                Some(Rule::Sufficiency) => report.sufficiency_failures.push(detail()),
                Some(Rule::Caveat) => report.caveat_inconsistencies.push(detail()),
                None => {}
            }
            match j.witness_closure {
                Some(true) => tally.lifted += 1,
                Some(false) => report.closure_failures.push(detail()),
                None => {}
            }
        }
    }
    Ok(())
}
