use crate::algebra::{divisor_of_degree, AlgebraError, Field, HomogFactor, Poly};
use crate::structmat::Eigenstructure;

use super::predicates::{check, family, Ctx, Family};
use super::types::{Chain, ChainConstruction, Prescription, Variant};
use super::CompletionError;

/// Staircase parameters `(g, h, w)` for a positive constant `k`.
///
/// `g` counts how many trailing base degrees are needed to absorb `k`; the
/// remainder is split between positions `h - g` and `h - g + 1`, leaving a
/// middle element of degree `w`.
fn staircase<F: Field>(ctx: &Ctx<F>, fam: &Family<F>, k: i64) -> (usize, usize, usize) {
    let r = ctx.r as i64;
    let g = (0..=ctx.z as i64)
        .find(|&g| k <= fam.tail(ctx, g))
        .expect("constant bound holds for a feasible prescription");
    let rest = k - fam.tail(ctx, g - 1);
    let h = (g..=r)
        .find(|&h| rest <= fam.y(ctx, h - g + 1))
        .expect("remainder fits one base degree");
    let w = fam.y(ctx, h - g) + fam.y(ctx, h - g + 1) - rest;
    (g as usize, h as usize, w as usize)
}

/// Places `obj(i - x - g)` before position `h + x`, `tau` there, and
/// `obj(i - x - g + 1)` after it.
fn staircase_chain<T>(ctx: &Ctx<impl Field>, g: usize, h: usize, tau: T, obj: impl Fn(i64) -> T) -> Vec<T> {
    let (x, g, h) = (ctx.x as i64, g as i64, h as i64);
    let mut tau = Some(tau);
    (1..=ctx.rr as i64)
        .map(|i| {
            if i < h + x {
                obj(i - x - g)
            } else if i == h + x {
                tau.take().unwrap()
            } else {
                obj(i - x - g + 1)
            }
        })
        .collect()
}

fn prepare<'a, F: Field>(
    base: &'a Eigenstructure<F>,
    presc: &'a Prescription<F>,
    want: Variant,
) -> Result<(Ctx<'a, F>, i64), CompletionError> {
    if presc.variant() != want {
        return Err(CompletionError::WrongVariant { expected: want, found: presc.variant() });
    }
    let report = check(base, presc)?;
    if !report.feasible {
        return Err(CompletionError::NotFeasible);
    }
    let k = report.constant_value().expect("predicate with a constant");
    let ctx = Ctx::new(base, presc)?;
    Ok((ctx, k))
}

fn need_field<F: Field>(ctx: &Ctx<F>) -> Result<(), CompletionError> {
    if ctx.r == 0 && ctx.rr > 0 && ctx.base.field().is_none() {
        return Err(CompletionError::InvalidPrescription(
            "a rank-zero base does not determine the field of the constructed chain".into(),
        ));
    }
    Ok(())
}

/// Finite invariant factors compatible with a feasible `inf_sing` prescription.
pub fn construct_beta_chain<F: Field>(
    base: &Eigenstructure<F>,
    presc: &Prescription<F>,
) -> Result<ChainConstruction<F>, CompletionError> {
    let (ctx, k) = prepare(base, presc, Variant::InfSing)?;
    need_field(&ctx)?;
    let fam = family(presc);
    let field = if ctx.rr > 0 { Some(ctx.field()) } else { None };
    if k > 0 {
        let (g, h, w) = staircase(&ctx, &fam, k);
        let (lo, hi) = (ctx.alpha(h as i64 - g as i64), ctx.alpha(h as i64 - g as i64 + 1));
        let tau = divisor_of_degree(&lo, &hi, w).map_err(CompletionError::FieldObstruction)?;
        let chain = staircase_chain(&ctx, g, h, tau.clone(), |j| ctx.alpha(j));
        return Ok(ChainConstruction { constant: k, g: Some(g), h: Some(h), w: Some(w), tau: tau.to_string(), chain: Chain::Beta(chain) });
    }
    let mut chain: Vec<Poly<F>> = (1..ctx.rr as i64).map(|i| ctx.alpha(i - ctx.x as i64)).collect();
    let mut tau = String::new();
    if let Some(field) = field {
        let t = Poly::s_pow(&field, (-k) as usize);
        tau = t.to_string();
        chain.push(ctx.alpha(ctx.r as i64).mul(&t));
    }
    Ok(ChainConstruction { constant: k, g: None, h: None, w: None, tau, chain: Chain::Beta(chain) })
}

/// Infinite multiplicities compatible with a feasible `fin_sing` prescription.
pub fn construct_f_chain<F: Field>(
    base: &Eigenstructure<F>,
    presc: &Prescription<F>,
) -> Result<ChainConstruction<F>, CompletionError> {
    let (ctx, k) = prepare(base, presc, Variant::FinSing)?;
    let fam = family(presc);
    if k > 0 {
        let (g, h, w) = staircase(&ctx, &fam, k);
        let chain = staircase_chain(&ctx, g, h, w, |j| ctx.e(j) as usize);
        return Ok(ChainConstruction { constant: k, g: Some(g), h: Some(h), w: Some(w), tau: w.to_string(), chain: Chain::F(chain) });
    }
    let mut chain: Vec<usize> = (1..ctx.rr as i64).map(|i| ctx.e(i - ctx.x as i64) as usize).collect();
    if ctx.rr > 0 {
        chain.push((ctx.e(ctx.r as i64) - k) as usize);
    }
    Ok(ChainConstruction { constant: k, g: None, h: None, w: None, tau: (-k).to_string(), chain: Chain::F(chain) })
}

/// A homogeneous factor `tau` with `lo | tau | hi` of total degree `w`,
/// preferring the smallest power of `t`.
fn homog_divisor<F: Field>(lo: &HomogFactor<F>, hi: &HomogFactor<F>, w: usize) -> Result<HomogFactor<F>, AlgebraError> {
    let (dlo, dhi) = (lo.alpha.deg(), hi.alpha.deg());
    let mut last = None;
    for e in lo.e..=hi.e {
        let Some(da) = w.checked_sub(e) else { break };
        if da < dlo || da > dhi {
            continue;
        }
        match divisor_of_degree(&lo.alpha, &hi.alpha, da) {
            Ok(alpha) => return Ok(HomogFactor::new(e, alpha)),
            Err(err) => last = Some(err),
        }
    }
    Err(last.unwrap_or(AlgebraError::DegreeOutOfRange { w, lo: lo.degree(), hi: hi.degree() }))
}

/// Homogeneous invariant factors compatible with a feasible `sing` prescription.
pub fn construct_gamma_chain<F: Field>(
    base: &Eigenstructure<F>,
    presc: &Prescription<F>,
) -> Result<ChainConstruction<F>, CompletionError> {
    let (ctx, k) = prepare(base, presc, Variant::Sing)?;
    need_field(&ctx)?;
    let fam = family(presc);
    if k > 0 {
        let (g, h, w) = staircase(&ctx, &fam, k);
        let (lo, hi) = (ctx.phi(h as i64 - g as i64), ctx.phi(h as i64 - g as i64 + 1));
        let tau = homog_divisor(&lo, &hi, w).map_err(CompletionError::FieldObstruction)?;
        let chain = staircase_chain(&ctx, g, h, tau.clone(), |j| ctx.phi(j));
        return Ok(ChainConstruction { constant: k, g: Some(g), h: Some(h), w: Some(w), tau: tau.to_string(), chain: Chain::Gamma(chain) });
    }
    let mut chain: Vec<HomogFactor<F>> = (1..ctx.rr as i64).map(|i| ctx.phi(i - ctx.x as i64)).collect();
    let mut tau = String::new();
    if ctx.rr > 0 {
        let t = Poly::s_pow(&ctx.field(), (-k) as usize);
        tau = HomogFactor::new(0, t.clone()).to_string();
        let last = ctx.phi(ctx.r as i64);
        chain.push(HomogFactor::new(last.e, last.alpha.mul(&t)));
    }
    Ok(ChainConstruction { constant: k, g: None, h: None, w: None, tau, chain: Chain::Gamma(chain) })
}
