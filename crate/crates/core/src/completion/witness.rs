use crate::algebra::{Field, HomogFactor};
use crate::seqcomb::seq_union;
use crate::structmat::Eigenstructure;

use super::chains::{construct_beta_chain, construct_f_chain, construct_gamma_chain};
use super::predicates::{b_tilde_cmi, check, check_full, family, Ctx};
use super::types::{Chain, ChainConstruction, FeasibilityReport, Prescription, Variant};
use super::CompletionError;

/// A feasible partial prescription lifted to a full one.
///
/// `stages` lists every intermediate prescription, starting with the input
/// and ending with the full one; each was re-checked on the way.
#[derive(Clone, Debug)]
pub struct Witness<F: Field> {
    pub stages: Vec<Prescription<F>>,
    pub chain: Option<ChainConstruction<F>>,
    pub full: Prescription<F>,
    pub report: FeasibilityReport,
}

fn mismatch(stage: &Prescription<impl Field>, what: &str) -> CompletionError {
    CompletionError::AssemblyMismatch(format!("{what} at stage {stage}"))
}

fn to_usize(xs: Vec<i64>, stage: &Prescription<impl Field>) -> Result<Vec<usize>, CompletionError> {
    xs.into_iter()
        .map(|v| usize::try_from(v).map_err(|_| mismatch(stage, "negative completed minimal index")))
        .collect()
}

/// One reduction step towards a prescription that fixes both kinds of
/// minimal indices; `None` once there.
fn reduce<F: Field>(base: &Eigenstructure<F>, p: &Prescription<F>) -> Result<Option<Prescription<F>>, CompletionError> {
    let (z, x) = (p.z(), p.x());
    let lead_dropped = || base.cmi()[x..].to_vec();
    let next = match p.variant() {
        Variant::Full | Variant::InfSing | Variant::FinSing | Variant::Sing => return Ok(None),
        Variant::InfRmi => Prescription::inf_sing(z, x, p.f().unwrap().to_vec(), lead_dropped(), p.v().unwrap().to_vec())?,
        Variant::FinRmi => Prescription::fin_sing(z, x, p.beta().unwrap().to_vec(), lead_dropped(), p.v().unwrap().to_vec())?,
        Variant::Rmi => Prescription::sing(z, x, lead_dropped(), p.v().unwrap().to_vec())?,
        Variant::Cmi => {
            let ctx = Ctx::new(base, p)?;
            let f = (1..=ctx.rr as i64).map(|i| ctx.e(i - x as i64) as usize).collect();
            Prescription::inf_cmi(z, x, f, p.d().unwrap().to_vec())?
        }
        Variant::InfCmi | Variant::FinCmi => {
            let ctx = Ctx::new(base, p)?;
            let d = p.d().unwrap();
            let b = b_tilde_cmi(&ctx, &family(p), d.iter().sum::<usize>() as i64);
            let u: Vec<i64> = base.rmi().iter().map(|&v| v as i64).collect();
            let v = to_usize(seq_union(&u, &b), p)?;
            if p.variant() == Variant::InfCmi {
                Prescription::inf_sing(z, x, p.f().unwrap().to_vec(), d.to_vec(), v)?
            } else {
                Prescription::fin_sing(z, x, p.beta().unwrap().to_vec(), d.to_vec(), v)?
            }
        }
    };
    Ok(Some(next))
}

/// Builds a full prescription extending a feasible partial one, following
/// the constructive sufficiency arguments, and confirms it with [`check_full`].
///
/// Fails with [`CompletionError::FieldObstruction`] when the construction
/// needs a divisor that does not exist over the field.
pub fn witness_to_full<F: Field>(base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<Witness<F>, CompletionError> {
    if !check(base, presc)?.feasible {
        return Err(CompletionError::NotFeasible);
    }
    let mut stages = vec![presc.clone()];
    while let Some(next) = reduce(base, stages.last().unwrap())? {
        if !check(base, &next)?.feasible {
            return Err(mismatch(&next, "reduced prescription infeasible"));
        }
        stages.push(next);
    }
    let last = stages.last().unwrap().clone();
    let (z, x) = (last.z(), last.x());
    let (chain, gamma) = match last.variant() {
        Variant::Full => (None, None),
        Variant::InfSing => {
            let cc = construct_beta_chain(base, &last)?;
            let Chain::Beta(beta) = &cc.chain else { unreachable!() };
            let g = last.f().unwrap().iter().zip(beta).map(|(&e, b)| HomogFactor::new(e, b.clone())).collect();
            (Some(cc), Some(g))
        }
        Variant::FinSing => {
            let cc = construct_f_chain(base, &last)?;
            let Chain::F(f) = &cc.chain else { unreachable!() };
            let g = f.iter().zip(last.beta().unwrap()).map(|(&e, b)| HomogFactor::new(e, b.clone())).collect();
            (Some(cc), Some(g))
        }
        Variant::Sing => {
            let cc = construct_gamma_chain(base, &last)?;
            let Chain::Gamma(g) = &cc.chain else { unreachable!() };
            let g = g.clone();
            (Some(cc), Some(g))
        }
        _ => unreachable!("reduction ends at a prescription with both index sets"),
    };
    if let Some(gamma) = gamma {
        let full = Prescription::full(z, x, gamma, last.d().unwrap().to_vec(), last.v().unwrap().to_vec())
            .map_err(|e| mismatch(&last, &format!("assembled chain rejected ({e})")))?;
        stages.push(full);
    }
    let full = stages.last().unwrap().clone();
    let report = check_full(base, &full)?;
    if !report.feasible {
        let failing: Vec<&str> = report.failing().map(|c| c.id.as_str()).collect();
        return Err(mismatch(&full, &format!("full predicate fails [{}]", failing.join(", "))));
    }
    Ok(Witness { stages, chain, full, report })
}
