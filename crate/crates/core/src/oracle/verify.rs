use serde::{Deserialize, Serialize};

use crate::algebra::Gfp;
use crate::completion::{check, check_full, witness_to_full, CompletionError, FeasibilityReport, Prescription};
use crate::structmat::{eigenstructure, Eigenstructure, PolyMatrix};

use super::targets::full_candidates;
use super::{enumerate_completions, OracleConfig, OracleError};

/// Which comparison rule a mismatch breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Predicate false, yet some completion realizes the target.
    Necessity,
    /// Predicate true without caveat, yet nothing realizes the target.
    Sufficiency,
    /// Caveat case decided the wrong way.
    Caveat,
}

/// How a positive verdict with a field caveat was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "path")]
pub enum CaveatPath {
    NotApplicable,
    /// The proof's chain exists over this field.
    Constructed,
    /// The proof's chain does not exist; `resolved` says whether any full
    /// prescription over this field passes the full predicate.
    Obstructed { resolved: bool },
    /// The construction failed for another reason.
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Judgement {
    pub feasible: bool,
    pub field_caveat: bool,
    pub achieved: bool,
    pub caveat_path: CaveatPath,
    pub mismatch: Option<Rule>,
    /// Outcome of lifting a feasible target to a full one; absent when the
    /// target is infeasible or the lift hits a field obstruction.
    pub witness_closure: Option<bool>,
}

/// True when some full prescription over GF(p), agreeing with `presc` on its
/// coordinates, passes the full predicate.
pub fn field_resolution(base: &Eigenstructure<Gfp>, field: &Gfp, presc: &Prescription<Gfp>) -> bool {
    full_candidates(base, field, presc)
        .iter()
        .any(|g| check_full(base, g).is_ok_and(|r| r.feasible))
}

/// Compares a predicate verdict with the oracle's answer for one target.
pub fn judge(
    base: &Eigenstructure<Gfp>,
    field: &Gfp,
    presc: &Prescription<Gfp>,
    achieved: bool,
    inject_fault: bool,
) -> Result<(FeasibilityReport, Judgement), CompletionError> {
    let mut report = check(base, presc)?;
    if inject_fault {
        report.feasible = !report.feasible;
    }
    let mut j = Judgement {
        feasible: report.feasible,
        field_caveat: report.field_caveat,
        achieved,
        caveat_path: CaveatPath::NotApplicable,
        mismatch: None,
        witness_closure: None,
    };
    if !report.feasible {
        j.mismatch = achieved.then_some(Rule::Necessity);
        return Ok((report, j));
    }
    let lifted = witness_to_full(base, presc);
    if !report.field_caveat {
        j.mismatch = (!achieved).then_some(Rule::Sufficiency);
        j.witness_closure = Some(lifted.is_ok_and(|w| w.report.feasible));
        return Ok((report, j));
    }
    match lifted {
        Ok(w) => {
            j.caveat_path = CaveatPath::Constructed;
            j.witness_closure = Some(w.report.feasible);
            j.mismatch = (!achieved).then_some(Rule::Caveat);
        }
        Err(CompletionError::FieldObstruction(_)) => {
            let resolved = field_resolution(base, field, presc);
            j.caveat_path = CaveatPath::Obstructed { resolved };
            j.mismatch = (resolved != achieved).then_some(Rule::Caveat);
        }
        Err(_) => {
            j.caveat_path = CaveatPath::Failed;
            j.witness_closure = Some(false);
        }
    }
    Ok((report, j))
}

/// Outcome of comparing one prescription against the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub target: String,
    pub report: FeasibilityReport,
    pub judgement: Judgement,
    /// Smallest achieving `W`, rendered, when the target is achieved.
    pub witness: Option<String>,
    pub achievable_tuples: usize,
    pub candidates: u64,
}

impl Verdict {
    pub fn consistent(&self) -> bool {
        self.judgement.mismatch.is_none()
    }
}

/// Runs the oracle for `presc` and checks the predicate against it.
pub fn verify_predicate(p: &PolyMatrix<Gfp>, presc: &Prescription<Gfp>, cfg: &OracleConfig) -> Result<Verdict, OracleError> {
    let field = cfg.field()?;
    if cfg.z != presc.z() {
        return Err(CompletionError::InvalidPrescription(format!(
            "oracle adds {} rows but the prescription adds {}",
            cfg.z,
            presc.z()
        ))
        .into());
    }
    let base = eigenstructure(p)?;
    presc.validate_against(&base)?;
    let result = enumerate_completions(p, cfg)?;
    let idx = result.witness(presc);
    let (report, judgement) = judge(&base, &field, presc, idx.is_some(), cfg.inject_fault)?;
    Ok(Verdict {
        target: presc.to_string(),
        report,
        judgement,
        witness: idx.map(|i| result.candidate(i).to_string()),
        achievable_tuples: result.project(presc.variant()).len(),
        candidates: result.candidates,
    })
}
