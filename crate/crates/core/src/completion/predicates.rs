use crate::algebra::{hlcm_deg, poly_lcm, Field, HomogFactor, Poly};
use crate::seqcomb::{gen_majorize, majorize, GenMajTrace};
use crate::structmat::Eigenstructure;

use super::types::{Condition, FeasibilityReport, NamedSeq, NamedValue, Prescription, Variant};
use super::CompletionError;

fn to_i64(xs: &[usize]) -> Vec<i64> {
    xs.iter().map(|&v| v as i64).collect()
}

fn sum(xs: &[usize]) -> i64 {
    xs.iter().sum::<usize>() as i64
}

fn fmt_i64(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// Quantities of the matrix being completed, read with the index conventions
/// used by every predicate: positions below 1 hold the unit factor.
pub(crate) struct Ctx<'a, F: Field> {
    pub base: &'a Eigenstructure<F>,
    pub r: usize,
    pub x: usize,
    pub z: usize,
    /// Rank of the completion, `r + x`.
    pub rr: usize,
    pub grade: i64,
    pub c: Vec<i64>,
    pub u: Vec<i64>,
    field: Option<F>,
}

impl<'a, F: Field> Ctx<'a, F> {
    pub fn new(base: &'a Eigenstructure<F>, presc: &Prescription<F>) -> Result<Self, CompletionError> {
        presc.validate_against(base)?;
        let (r, x) = (base.rank(), presc.x());
        Ok(Ctx {
            base,
            r,
            x,
            z: presc.z(),
            rr: r + x,
            grade: base.grade() as i64,
            c: to_i64(base.cmi()),
            u: to_i64(base.rmi()),
            field: base
                .field()
                .or_else(|| presc.beta().and_then(|b| b.first()).map(Poly::field))
                .or_else(|| presc.gamma().and_then(|g| g.first()).map(|h| h.alpha.field()))
                .cloned(),
        })
    }

    fn check_index(&self, j: i64) -> Option<usize> {
        assert!(j <= self.r as i64, "index {j} beyond the rank in a degree sum");
        (j >= 1).then(|| j as usize - 1)
    }

    pub fn e(&self, j: i64) -> i64 {
        self.check_index(j).map_or(0, |i| self.base.es()[i] as i64)
    }

    pub fn alpha(&self, j: i64) -> Poly<F> {
        let field = self.field();
        self.check_index(j).map_or_else(|| Poly::one(&field), |i| self.base.alphas()[i].clone())
    }

    pub fn deg_alpha(&self, j: i64) -> i64 {
        self.check_index(j).map_or(0, |i| self.base.alphas()[i].deg() as i64)
    }

    pub fn phi(&self, j: i64) -> HomogFactor<F> {
        HomogFactor::new(self.e(j) as usize, self.alpha(j))
    }

    pub fn field(&self) -> F {
        self.field.clone().expect("a unit factor is only needed next to a polynomial target")
    }

    pub fn sc(&self) -> i64 {
        self.c.iter().sum()
    }

    pub fn su(&self) -> i64 {
        self.u.iter().sum()
    }

    pub fn eta_holds(&self, v: &[usize]) -> Condition {
        let eta_bar = v.iter().filter(|&&k| k > 0).count();
        let eta = self.base.eta();
        Condition {
            id: "eta".into(),
            holds: eta_bar >= eta,
            lhs: format!("#positive v = {eta_bar}"),
            rhs: format!("#positive u = {eta}"),
            trace: None,
        }
    }
}

fn ineq(id: &str, lhs: i64, rhs: i64, holds: bool, op: &str) -> Condition {
    Condition { id: id.into(), holds, lhs: lhs.to_string(), rhs: format!("{op} {rhs}"), trace: None }
}

fn genmaj(id: &str, g: &[i64], d: &[i64], a: &[i64]) -> Condition {
    let trace: GenMajTrace = gen_majorize(g, d, a).expect("lengths fixed by validation");
    Condition {
        id: id.into(),
        holds: trace.holds,
        lhs: fmt_i64(g),
        rhs: format!("({}, {})", fmt_i64(d), fmt_i64(a)),
        trace: Some(trace),
    }
}

/// The three families of partial prescriptions differ only in which
/// per-index degree enters the sums.
pub(crate) enum Family<'p, F: Field> {
    Inf(&'p [usize]),
    Fin(&'p [Poly<F>]),
    Sing,
}

impl<F: Field> Family<'_, F> {
    fn new_sum(&self) -> i64 {
        match self {
            Family::Inf(f) => sum(f),
            Family::Fin(b) => b.iter().map(|p| p.deg() as i64).sum(),
            Family::Sing => 0,
        }
    }

    fn old_sum(&self, ctx: &Ctx<F>) -> i64 {
        match self {
            Family::Inf(_) => sum(ctx.base.es()),
            Family::Fin(_) => ctx.base.alphas().iter().map(|p| p.deg() as i64).sum(),
            Family::Sing => 0,
        }
    }

    /// `sum_{i=1}^{U}` of the lcm degree between the base factor at `i - x + k`
    /// and the prescribed one at `i`.
    pub fn g(&self, ctx: &Ctx<F>, k: i64, upto: i64) -> i64 {
        let shift = k - ctx.x as i64;
        match self {
            Family::Inf(f) => (1..=upto).map(|i| ctx.e(i + shift).max(f[i as usize - 1] as i64)).sum(),
            Family::Fin(b) => (1..=upto)
                .map(|i| {
                    poly_lcm(&ctx.alpha(i + shift), &b[i as usize - 1])
                        .expect("monic inputs")
                        .deg() as i64
                })
                .sum(),
            Family::Sing => 0,
        }
    }

    /// Degree of the part of the base not prescribed by this family.
    pub fn y(&self, ctx: &Ctx<F>, j: i64) -> i64 {
        match self {
            Family::Inf(_) => ctx.deg_alpha(j),
            Family::Fin(_) => ctx.e(j),
            Family::Sing => ctx.deg_alpha(j) + ctx.e(j),
        }
    }

    /// `sum_{i=r-k+1}^{r} y_i`.
    pub fn tail(&self, ctx: &Ctx<F>, k: i64) -> i64 {
        let r = ctx.r as i64;
        ((r - k + 1).max(1)..=r).map(|j| self.y(ctx, j)).sum()
    }

    fn interlacing(&self, ctx: &Ctx<F>) -> Option<Condition> {
        let (r, z) = (ctx.r, ctx.z);
        let (holds, lhs, rhs) = match self {
            Family::Inf(f) => {
                let ok = (1..=r).all(|i| {
                    let e = ctx.base.es()[i - 1];
                    f[i - 1] <= e && f.get(i + z - 1).is_none_or(|&next| e <= next)
                });
                (ok, "f_i <= e_i <= f_{i+z}".to_string(), format!("f={}", fmt_i64(&to_i64(f))))
            }
            Family::Fin(b) => {
                let ok = (1..=r).all(|i| {
                    let a = &ctx.base.alphas()[i - 1];
                    b[i - 1].divides(a) && b.get(i + z - 1).is_none_or(|next| a.divides(next))
                });
                let parts: Vec<String> = b.iter().map(|p| p.to_string()).collect();
                (ok, "β_i | α_i | β_{i+z}".to_string(), format!("β=({})", parts.join(", ")))
            }
            Family::Sing => return None,
        };
        Some(Condition { id: "interlacing".into(), holds, lhs, rhs, trace: None })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Both,
    Cmi,
    Rmi,
}

fn names(variant: Variant) -> (&'static str, &'static str, &'static str) {
    match variant {
        Variant::InfSing => ("A", "â", "b̂"),
        Variant::InfRmi => ("Ã", "ã", "b̃"),
        Variant::FinSing => ("B", "â", "b̂"),
        Variant::FinRmi => ("B̃", "ã", "b̃"),
        Variant::Sing => ("E", "ã", "b̃"),
        Variant::Rmi => ("Ê", "ã", "b̂"),
        Variant::Cmi => ("", "â", ""),
        _ => ("", "ã", ""),
    }
}

/// The `b` sequence shared by the partial predicates with prescribed row
/// minimal indices.
pub(crate) fn b_hat<F: Field>(ctx: &Ctx<F>, fam: &Family<F>, k: i64, sv: i64) -> Vec<i64> {
    let (rr, su) = (ctx.rr as i64, ctx.su());
    let tail_term = |j: i64| (fam.tail(ctx, j) - k).min(0);
    (1..=(ctx.z - ctx.x) as i64)
        .map(|j| {
            if j == 1 {
                sv - su + tail_term(1) + fam.new_sum() - fam.g(ctx, -1, rr)
            } else {
                tail_term(j) - tail_term(j - 1) + fam.g(ctx, -j + 1, rr) - fam.g(ctx, -j, rr)
            }
        })
        .collect()
}

/// The `a` sequence of a predicate with prescribed row minimal indices.
fn a_hat<F: Field>(ctx: &Ctx<F>, fam: &Family<F>, k: i64, sv: i64) -> Vec<i64> {
    let (rr, su, dd) = (ctx.rr as i64, ctx.su(), ctx.grade);
    (1..=ctx.x as i64)
        .map(|j| {
            if j == 1 {
                sv - su + fam.new_sum() - fam.g(ctx, 1, rr - 1) - k - dd
            } else {
                fam.g(ctx, j - 1, rr - j + 1) - fam.g(ctx, j, rr - j) - dd
            }
        })
        .collect()
}

/// The `a` sequence of a predicate without prescribed row minimal indices.
fn a_tilde<F: Field>(ctx: &Ctx<F>, fam: &Family<F>, sd: i64) -> Vec<i64> {
    let (rr, dd, x) = (ctx.rr as i64, ctx.grade, ctx.x as i64);
    (1..=x)
        .map(|j| {
            if j == 1 {
                ctx.sc() - sd + fam.old_sum(ctx) - fam.g(ctx, 1, rr - 1) + (x - 1) * dd
            } else {
                fam.g(ctx, j - 1, rr - j + 1) - fam.g(ctx, j, rr - j) - dd
            }
        })
        .collect()
}

/// The `b` sequence whose union with `u` completes a column-only prescription
/// to one with row minimal indices.
pub(crate) fn b_tilde_cmi<F: Field>(ctx: &Ctx<F>, fam: &Family<F>, sd: i64) -> Vec<i64> {
    let (rr, dd, x) = (ctx.rr as i64, ctx.grade, ctx.x as i64);
    (1..=(ctx.z - ctx.x) as i64)
        .map(|j| {
            if j == 1 {
                ctx.sc() - sd + fam.old_sum(ctx) + x * dd - fam.g(ctx, -1, rr)
            } else {
                fam.g(ctx, -j + 1, rr) - fam.g(ctx, -j, rr)
            }
        })
        .collect()
}

/// The constant of a predicate with prescribed row minimal indices.
pub(crate) fn constant<F: Field>(ctx: &Ctx<F>, fam: &Family<F>, d: Option<&[usize]>, sv: i64) -> i64 {
    let col_part = match d {
        Some(d) => sum(d) - ctx.sc(),
        None => -ctx.c[..ctx.x].iter().sum::<i64>(),
    };
    fam.new_sum() - fam.old_sum(ctx) + col_part + sv - ctx.su() - ctx.x as i64 * ctx.grade
}

fn partial<F: Field>(
    ctx: &Ctx<F>,
    variant: Variant,
    fam: Family<F>,
    kind: Kind,
    d: Option<&[usize]>,
    v: Option<&[usize]>,
) -> FeasibilityReport {
    let (kname, aname, bname) = names(variant);
    let mut conditions = Vec::new();
    let mut sequences = Vec::new();
    let mut konst = None;
    let mut caveat_possible = false;

    if kind != Kind::Cmi {
        let v = v.expect("row minimal indices present");
        let sv = sum(v);
        let k = constant(ctx, &fam, d, sv);
        konst = Some(NamedValue { name: kname.into(), value: k });
        caveat_possible = k > 0 && !matches!(fam, Family::Fin(_));
        conditions.push(ctx.eta_holds(v));
        conditions.extend(fam.interlacing(ctx));
        let bound = fam.tail(ctx, ctx.z as i64 - ctx.x as i64);
        conditions.push(ineq("constant_bound", k, bound, k <= bound, "<="));
        let need = k.max(0) + fam.g(ctx, 0, ctx.rr as i64) - fam.new_sum();
        conditions.push(ineq("row_surplus", sv - ctx.su(), need, sv - ctx.su() >= need, ">="));
        let a = a_hat(ctx, &fam, k, sv);
        let b = b_hat(ctx, &fam, k, sv);
        match kind {
            Kind::Both => {
                let d = d.expect("column minimal indices present");
                conditions.push(genmaj("cmi_majorization", &ctx.c, &to_i64(d), &a));
            }
            _ if variant != Variant::Rmi => {
                let lead = &ctx.c[..ctx.x];
                let holds = majorize(lead, &a).expect("lengths fixed by validation");
                conditions.push(Condition {
                    id: "leading_cmi_majorization".into(),
                    holds,
                    lhs: fmt_i64(lead),
                    rhs: fmt_i64(&a),
                    trace: None,
                });
            }
            _ => {}
        }
        conditions.push(genmaj("rmi_majorization", &to_i64(v), &ctx.u, &b));
        if variant != Variant::Rmi || !a.is_empty() {
            sequences.push(NamedSeq { name: aname.into(), values: a });
        }
        sequences.push(NamedSeq { name: bname.into(), values: b });
    } else {
        let d = d.expect("column minimal indices present");
        let sd = sum(d);
        conditions.extend(fam.interlacing(ctx));
        let need = fam.g(ctx, 0, ctx.rr as i64) - fam.old_sum(ctx) - ctx.x as i64 * ctx.grade;
        conditions.push(ineq("cmi_surplus", ctx.sc() - sd, need, ctx.sc() - sd >= need, ">="));
        let a = a_tilde(ctx, &fam, sd);
        conditions.push(genmaj("cmi_majorization", &ctx.c, &to_i64(d), &a));
        sequences.push(NamedSeq { name: aname.into(), values: a });
    }

    let feasible = conditions.iter().all(|c| c.holds);
    FeasibilityReport {
        variant,
        feasible,
        constant: konst,
        sequences,
        conditions,
        field_caveat: feasible && caveat_possible,
    }
}

/// `sum_{i=1}^{U}` of homogeneous lcm degrees between the base factor at
/// `i - x + k` and the prescribed one at `i`.
pub(crate) fn h_sum<F: Field>(ctx: &Ctx<F>, gamma: &[HomogFactor<F>], k: i64, upto: i64) -> i64 {
    let shift = k - ctx.x as i64;
    (1..=upto)
        .map(|i| hlcm_deg(&ctx.phi(i + shift), &gamma[i as usize - 1]) as i64)
        .sum()
}

/// Both auxiliary sequences of the full predicate, in the form driven by the
/// row minimal indices.
pub fn build_ab_full<F: Field>(
    base: &Eigenstructure<F>,
    presc: &Prescription<F>,
) -> Result<(Vec<i64>, Vec<i64>), CompletionError> {
    let (gamma, _, v) = full_parts(presc)?;
    let ctx = Ctx::new(base, presc)?;
    let top = sum(v) - ctx.su() + gamma.iter().map(|g| g.degree() as i64).sum::<i64>();
    Ok(full_ab(&ctx, gamma, top, 0))
}

/// The same sequences driven by the column minimal indices and the base
/// factors instead.
pub fn build_ab_alt<F: Field>(
    base: &Eigenstructure<F>,
    presc: &Prescription<F>,
) -> Result<(Vec<i64>, Vec<i64>), CompletionError> {
    let (_, d, _) = full_parts(presc)?;
    let ctx = Ctx::new(base, presc)?;
    let sphi: i64 = base.phis().iter().map(|p| p.degree() as i64).sum();
    let top = ctx.sc() - sum(d) + sphi;
    Ok(full_ab(&ctx, presc.gamma().unwrap(), top, ctx.x as i64 * ctx.grade))
}

fn full_ab<F: Field>(ctx: &Ctx<F>, gamma: &[HomogFactor<F>], top: i64, offset: i64) -> (Vec<i64>, Vec<i64>) {
    let (rr, dd) = (ctx.rr as i64, ctx.grade);
    let a = (1..=ctx.x as i64)
        .map(|j| {
            if j == 1 {
                top - h_sum(ctx, gamma, 1, rr - 1) - dd + offset
            } else {
                h_sum(ctx, gamma, j - 1, rr - j + 1) - h_sum(ctx, gamma, j, rr - j) - dd
            }
        })
        .collect();
    let b = (1..=(ctx.z - ctx.x) as i64)
        .map(|j| {
            if j == 1 {
                top - h_sum(ctx, gamma, -1, rr) + offset
            } else {
                h_sum(ctx, gamma, -j + 1, rr) - h_sum(ctx, gamma, -j, rr)
            }
        })
        .collect();
    (a, b)
}

#[allow(clippy::type_complexity)]
fn full_parts<F: Field>(presc: &Prescription<F>) -> Result<(&[HomogFactor<F>], &[usize], &[usize]), CompletionError> {
    match (presc.gamma(), presc.d(), presc.v()) {
        (Some(g), Some(d), Some(v)) => Ok((g, d, v)),
        _ => Err(CompletionError::WrongVariant { expected: Variant::Full, found: presc.variant() }),
    }
}

fn full_report<F: Field>(base: &Eigenstructure<F>, presc: &Prescription<F>, alt: bool) -> Result<FeasibilityReport, CompletionError> {
    let (gamma, d, v) = full_parts(presc)?;
    let ctx = Ctx::new(base, presc)?;
    let (r, z) = (ctx.r, ctx.z);
    let phis = base.phis();
    let interlaced = (1..=r).all(|i| {
        gamma[i - 1].divides(&phis[i - 1]) && gamma.get(i + z - 1).is_none_or(|next| phis[i - 1].divides(next))
    });
    let parts: Vec<String> = gamma.iter().map(|g| g.to_string()).collect();
    let mut conditions = vec![
        Condition {
            id: "interlacing".into(),
            holds: interlaced,
            lhs: "γ_i | φ_i | γ_{i+z}".into(),
            rhs: format!("γ=({})", parts.join(", ")),
            trace: None,
        },
        ctx.eta_holds(v),
    ];
    let (a, b) = if alt { build_ab_alt(base, presc)? } else { build_ab_full(base, presc)? };
    conditions.push(genmaj("cmi_majorization", &ctx.c, &to_i64(d), &a));
    conditions.push(genmaj("rmi_majorization", &to_i64(v), &ctx.u, &b));

    let h0 = h_sum(&ctx, gamma, 0, ctx.rr as i64);
    let (rhs, tight) = if alt {
        let sphi: i64 = phis.iter().map(|p| p.degree() as i64).sum();
        (ctx.sc() - sum(d) + sphi + ctx.x as i64 * ctx.grade, ctx.x == z)
    } else {
        (sum(v) - ctx.su() + gamma.iter().map(|g| g.degree() as i64).sum::<i64>(), ctx.x == 0)
    };
    let (holds, op) = if tight { (h0 == rhs, "=") } else { (h0 <= rhs, "<=") };
    conditions.push(ineq("degree_sum", h0, rhs, holds, op));

    let feasible = conditions.iter().all(|c| c.holds);
    Ok(FeasibilityReport {
        variant: Variant::Full,
        feasible,
        constant: None,
        sequences: vec![NamedSeq { name: "a".into(), values: a }, NamedSeq { name: "b".into(), values: b }],
        conditions,
        field_caveat: false,
    })
}

/// Full prescription: homogeneous invariant factors and both kinds of
/// minimal indices.
pub fn check_full<F: Field>(base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<FeasibilityReport, CompletionError> {
    full_report(base, presc, false)
}

/// The full predicate with the alternative sequences; it agrees with
/// [`check_full`] whenever the index sum identity holds for the targets.
pub fn check_full_alt<F: Field>(base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<FeasibilityReport, CompletionError> {
    full_report(base, presc, true)
}

/// Evaluates the predicate matching the prescription's variant.
pub fn check<F: Field>(base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<FeasibilityReport, CompletionError> {
    let variant = presc.variant();
    if variant == Variant::Full {
        return check_full(base, presc);
    }
    let ctx = Ctx::new(base, presc)?;
    let (fam, kind) = family_of(presc);
    Ok(partial(&ctx, variant, fam, kind, presc.d(), presc.v()))
}

fn family_of<F: Field>(presc: &Prescription<F>) -> (Family<'_, F>, Kind) {
    let fam = if let Some(f) = presc.f() {
        Family::Inf(f)
    } else if let Some(b) = presc.beta() {
        Family::Fin(b)
    } else {
        Family::Sing
    };
    let kind = match presc.variant() {
        Variant::InfCmi | Variant::FinCmi | Variant::Cmi => Kind::Cmi,
        Variant::InfRmi | Variant::FinRmi | Variant::Rmi => Kind::Rmi,
        _ => Kind::Both,
    };
    (fam, kind)
}

pub(crate) fn family<F: Field>(presc: &Prescription<F>) -> Family<'_, F> {
    family_of(presc).0
}

/// Column completion: adding columns to `base` is adding rows to its transpose.
pub fn check_column<F: Field>(base: &Eigenstructure<F>, presc: &Prescription<F>) -> Result<FeasibilityReport, CompletionError> {
    check(&base.transpose(), &presc.transposed())
}
