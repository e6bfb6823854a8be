//! Exhaustive search over completions with entries in GF(p).
//!
//! Every `W` with `z` rows and entries of degree at most the degree bound is
//! stacked under `P` and analyzed. The achieved eigenstructures are then the
//! ground truth against which the predicates are compared.

mod sweep;
mod targets;
mod verify;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Gfp, Poly};
use crate::completion::{CompletionError, Prescription, Variant};
use crate::structmat::{eigenstructure, Eigenstructure, PolyMatrix, StructError};

pub use sweep::{random_instance, sweep, SweepConfig, SweepReport, VariantTally};
pub use targets::{full_candidates, targets};
pub use verify::{field_resolution, judge, verify_predicate, CaveatPath, Judgement, Rule, Verdict};

pub const DEFAULT_COEFFICIENT_BUDGET: usize = 14;
pub const DEFAULT_CANDIDATE_CEILING: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "search space too large: {coefficients} coefficients ({candidates} candidates) \
         exceeds budget of {budget} coefficients / {ceiling} candidates; raise --budget or set override"
    )]
    BudgetExceeded { coefficients: usize, candidates: u128, budget: usize, ceiling: u64 },
    #[error("degree bound {bound} exceeds the grade {grade}")]
    DegreeBound { bound: usize, grade: usize },
    #[error("the oracle needs p in {{2, 3, 5}}, got {0}")]
    UnsupportedField(u32),
    #[error(transparent)]
    Struct(#[from] StructError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
}

fn default_budget() -> usize {
    DEFAULT_COEFFICIENT_BUDGET
}

fn default_ceiling() -> u64 {
    DEFAULT_CANDIDATE_CEILING
}

/// Size of the search and the limits it must respect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleConfig {
    pub p: u32,
    pub z: usize,
    /// Maximum degree of the entries of `W`; the grade of `P` when absent.
    #[serde(default)]
    pub degree_bound: Option<usize>,
    #[serde(default = "default_budget")]
    pub coefficient_budget: usize,
    #[serde(default = "default_ceiling")]
    pub candidate_ceiling: u64,
    #[serde(default)]
    pub override_budget: bool,
    /// Negates every predicate verdict; exercises the mismatch path.
    #[doc(hidden)]
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub inject_fault: bool,
}

impl OracleConfig {
    pub fn new(p: u32, z: usize) -> Self {
        OracleConfig {
            p,
            z,
            degree_bound: None,
            coefficient_budget: DEFAULT_COEFFICIENT_BUDGET,
            candidate_ceiling: DEFAULT_CANDIDATE_CEILING,
            override_budget: false,
            inject_fault: false,
        }
    }

    pub fn field(&self) -> Result<Gfp, OracleError> {
        if ![2, 3, 5].contains(&self.p) {
            return Err(OracleError::UnsupportedField(self.p));
        }
        Ok(Gfp::new(self.p).expect("small primes"))
    }

    fn bound_for(&self, p: &PolyMatrix<Gfp>) -> Result<usize, OracleError> {
        let bound = self.degree_bound.unwrap_or(p.grade());
        if bound > p.grade() {
            return Err(OracleError::DegreeBound { bound, grade: p.grade() });
        }
        Ok(bound)
    }

    /// Number of free coefficients and candidates for completing `p`.
    pub fn space(&self, p: &PolyMatrix<Gfp>) -> Result<(usize, u128), OracleError> {
        let coefficients = self.z * p.cols() * (self.bound_for(p)? + 1);
        let candidates = (self.p as u128).checked_pow(coefficients as u32).unwrap_or(u128::MAX);
        Ok((coefficients, candidates))
    }

    fn admit(&self, p: &PolyMatrix<Gfp>) -> Result<u64, OracleError> {
        let (coefficients, candidates) = self.space(p)?;
        let over = coefficients > self.coefficient_budget || candidates > self.candidate_ceiling as u128;
        if over && !self.override_budget || candidates > u64::MAX as u128 {
            return Err(OracleError::BudgetExceeded {
                coefficients,
                candidates,
                budget: self.coefficient_budget,
                ceiling: self.candidate_ceiling,
            });
        }
        Ok(candidates as u64)
    }
}

/// Achieved eigenstructures of `[P; W]`, each with the smallest candidate
/// index realizing it.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub p: u32,
    pub z: usize,
    pub degree_bound: usize,
    pub candidates: u64,
    pub exhausted: bool,
    base_rank: usize,
    matrix: PolyMatrix<Gfp>,
    achieved: HashMap<Eigenstructure<Gfp>, u64>,
}

impl OracleResult {
    /// Candidate `W` number `index` in coefficient-lexicographic order:
    /// coefficients run over rows, then columns, then ascending powers, and
    /// the first one is the most significant digit.
    pub fn candidate(&self, index: u64) -> PolyMatrix<Gfp> {
        decode(&self.matrix, self.p, self.z, self.degree_bound, index)
    }

    /// Achieved full tuples sorted by witness index.
    pub fn achieved(&self) -> Vec<(&Eigenstructure<Gfp>, u64)> {
        let mut v: Vec<_> = self.achieved.iter().map(|(k, &i)| (k, i)).collect();
        v.sort_by_key(|&(_, i)| i);
        v
    }

    pub fn len(&self) -> usize {
        self.achieved.len()
    }

    pub fn is_empty(&self) -> bool {
        self.achieved.is_empty()
    }

    /// Achieved tuples restricted to the coordinates `variant` prescribes.
    pub fn project(&self, variant: Variant) -> HashMap<Prescription<Gfp>, u64> {
        let mut out: HashMap<Prescription<Gfp>, u64> = HashMap::new();
        for (es, &idx) in &self.achieved {
            let t = Prescription::project(variant, self.z, self.base_rank, es).expect("achieved tuples are valid");
            out.entry(t).and_modify(|i| *i = (*i).min(idx)).or_insert(idx);
        }
        out
    }

    /// Smallest-index witness for a target, if any completion realizes it.
    pub fn witness(&self, target: &Prescription<Gfp>) -> Option<u64> {
        self.achieved
            .iter()
            .filter(|(es, _)| {
                Prescription::project(target.variant(), self.z, self.base_rank, es).as_ref() == Ok(target)
            })
            .map(|(_, &i)| i)
            .min()
    }
}

fn decode(p: &PolyMatrix<Gfp>, q: u32, z: usize, bound: usize, mut index: u64) -> PolyMatrix<Gfp> {
    let field = *p.field();
    let n = p.cols();
    let per = bound + 1;
    let total = z * n * per;
    let mut digits = vec![0u32; total];
    for slot in digits.iter_mut().rev() {
        *slot = (index % q as u64) as u32;
        index /= q as u64;
    }
    let rows = (0..z)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let start = (i * n + j) * per;
                    Poly::new(&field, digits[start..start + per].to_vec())
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(&field, p.grade(), rows).expect("candidate within grade")
}

/// Runs the exhaustive search. Work is split into index ranges evaluated in
/// parallel; merging keeps the smallest index, so the result does not depend
/// on scheduling.
pub fn enumerate_completions(p: &PolyMatrix<Gfp>, cfg: &OracleConfig) -> Result<OracleResult, OracleError> {
    let field = cfg.field()?;
    if p.field() != &field {
        return Err(OracleError::UnsupportedField(p.field().modulus()));
    }
    let candidates = cfg.admit(p)?;
    let bound = cfg.bound_for(p)?;
    let base_rank = eigenstructure(p)?.rank();
    const CHUNK: u64 = 256;
    let achieved = (0..candidates.div_ceil(CHUNK))
        .into_par_iter()
        .try_fold(HashMap::new, |mut acc: HashMap<Eigenstructure<Gfp>, u64>, chunk| {
            for idx in chunk * CHUNK..((chunk + 1) * CHUNK).min(candidates) {
                let w = decode(p, cfg.p, cfg.z, bound, idx);
                let es = eigenstructure(&p.stack(&w)?)?;
                acc.entry(es).and_modify(|i| *i = (*i).min(idx)).or_insert(idx);
            }
            Ok::<_, StructError>(acc)
        })
        .try_reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).and_modify(|i| *i = (*i).min(v)).or_insert(v);
            }
            Ok(a)
        })?;
    Ok(OracleResult {
        p: cfg.p,
        z: cfg.z,
        degree_bound: bound,
        candidates,
        exhausted: true,
        base_rank,
        matrix: p.clone(),
        achieved,
    })
}
