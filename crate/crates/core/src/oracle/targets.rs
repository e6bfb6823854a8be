use crate::algebra::{Field, Gfp, HomogFactor, Poly};
use crate::completion::{Prescription, Targets, Variant};
use crate::structmat::Eigenstructure;

/// Nonincreasing sequences of length `len` with sum at most `max_sum`.
pub(crate) fn partitions(len: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..=cap.min(left) {
            cur.push(v);
            go(len, v, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, max_sum, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Nondecreasing `f` of length `rr` with `f_i <= e_i <= f_{i+z}` and sum at
/// most `max_sum`.
pub(crate) fn f_chains(es: &[usize], rr: usize, z: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn go(es: &[usize], rr: usize, z: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len() + 1;
        if i > rr {
            out.push(cur.clone());
            return;
        }
        let mut lo = cur.last().copied().unwrap_or(0);
        if i > z && i - z <= es.len() {
            lo = lo.max(es[i - z - 1]);
        }
        let hi = if i <= es.len() { es[i - 1] } else { usize::MAX };
        // Later entries are at least as large as this one.
        let remaining = rr - i + 1;
        let mut v = lo;
        while v <= hi && v * remaining <= left {
            cur.push(v);
            go(es, rr, z, left - v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    go(es, rr, z, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Every monic polynomial of degree exactly `k` over GF(p).
fn monic_of_degree(field: &Gfp, k: usize) -> Vec<Poly<Gfp>> {
    let p = field.modulus();
    let count = (p as usize).pow(k as u32);
    (0..count)
        .map(|mut idx| {
            let mut c: Vec<u32> = (0..k)
                .map(|_| {
                    let d = (idx % p as usize) as u32;
                    idx /= p as usize;
                    d
                })
                .collect();
            c.push(1);
            Poly::new(field, c)
        })
        .collect()
}

/// Monic divisors of `f` of degree at most `max_deg`.
fn monic_divisors(field: &Gfp, f: &Poly<Gfp>, max_deg: usize) -> Vec<Poly<Gfp>> {
    (0..=f.deg().min(max_deg))
        .flat_map(|k| monic_of_degree(field, k))
        .filter(|q| q.divides(f))
        .collect()
}

/// Monic chains `beta_1 | ... | beta_rr` with `beta_i | alpha_i | beta_{i+z}`
/// and total degree at most `max_sum`.
pub(crate) fn beta_chains(field: &Gfp, alphas: &[Poly<Gfp>], rr: usize, z: usize, max_sum: usize) -> Vec<Vec<Poly<Gfp>>> {
    struct Ctx<'a> {
        field: &'a Gfp,
        alphas: &'a [Poly<Gfp>],
        rr: usize,
        z: usize,
    }
    fn go(cx: &Ctx, left: usize, cur: &mut Vec<Poly<Gfp>>, out: &mut Vec<Vec<Poly<Gfp>>>) {
        let i = cur.len() + 1;
        if i > cx.rr {
            out.push(cur.clone());
            return;
        }
        let prev = cur.last().cloned().unwrap_or_else(|| Poly::one(cx.field));
        let remaining = cx.rr - i + 1;
        if prev.deg() * remaining > left {
            return;
        }
        let budget = left / remaining - prev.deg();
        let quotients = if i <= cx.alphas.len() {
            let q = cx.alphas[i - 1].exact_div(&prev).expect("chain stays below alpha");
            monic_divisors(cx.field, &q, budget)
        } else {
            (0..=budget).flat_map(|k| monic_of_degree(cx.field, k)).collect()
        };
        for q in quotients {
            let b = prev.mul(&q);
            if i > cx.z && i - cx.z <= cx.alphas.len() && !cx.alphas[i - cx.z - 1].divides(&b) {
                continue;
            }
            let d = b.deg();
            cur.push(b);
            go(cx, left - d, cur, out);
            cur.pop();
        }
    }
    let cx = Ctx { field, alphas, rr, z };
    let mut out = Vec::new();
    go(&cx, max_sum, &mut Vec::new(), &mut out);
    out
}

fn total<F: Field>(t: &Targets<F>) -> usize {
    t.gamma.as_ref().map_or(0, |g| g.iter().map(HomogFactor::degree).sum())
        + t.f.as_ref().map_or(0, |f| f.iter().sum())
        + t.beta.as_ref().map_or(0, |b| b.iter().map(Poly::deg).sum())
        + t.d.as_ref().map_or(0, |d| d.iter().sum())
        + t.v.as_ref().map_or(0, |v| v.iter().sum())
}

/// Enumerates targets of one variant and rank increase: free coordinates
/// come from the enumerations above, fixed ones from `fixed`; total degree
/// stays within `(r + x) * grade`.
fn enumerate(base: &Eigenstructure<Gfp>, field: &Gfp, variant: Variant, z: usize, x: usize, fixed: &Targets<Gfp>) -> Vec<Prescription<Gfp>> {
    let (r, m, n) = (base.rank(), base.rows(), base.cols());
    if x > z.min(n - r) {
        return Vec::new();
    }
    let rr = r + x;
    let cap = rr * base.grade();
    let wants_f = variant.wants_f() || variant.wants_gamma();
    let wants_beta = variant.wants_beta() || variant.wants_gamma();

    let fs: Vec<Option<Vec<usize>>> = match (&fixed.f, wants_f) {
        (Some(f), _) => vec![Some(f.clone())],
        (None, true) => f_chains(base.es(), rr, z, cap).into_iter().map(Some).collect(),
        (None, false) => vec![None],
    };
    let betas: Vec<Option<Vec<Poly<Gfp>>>> = match (&fixed.beta, wants_beta) {
        (Some(b), _) => vec![Some(b.clone())],
        (None, true) => beta_chains(field, base.alphas(), rr, z, cap).into_iter().map(Some).collect(),
        (None, false) => vec![None],
    };
    let mut out = Vec::new();
    for f in &fs {
        let fsum: usize = f.as_ref().map_or(0, |f| f.iter().sum());
        if fsum > cap {
            continue;
        }
        for beta in &betas {
            let bsum: usize = beta.as_ref().map_or(0, |b| b.iter().map(Poly::deg).sum());
            if fsum + bsum > cap {
                continue;
            }
            let left = cap - fsum - bsum;
            let ds: Vec<Option<Vec<usize>>> = match (&fixed.d, variant.wants_d()) {
                (Some(d), _) => vec![Some(d.clone())],
                (None, true) => partitions(n - rr, left).into_iter().map(Some).collect(),
                (None, false) => vec![None],
            };
            for d in &ds {
                let dsum: usize = d.as_ref().map_or(0, |d| d.iter().sum());
                if dsum > left {
                    continue;
                }
                let vs: Vec<Option<Vec<usize>>> = match (&fixed.v, variant.wants_v()) {
                    (Some(v), _) => vec![Some(v.clone())],
                    (None, true) => partitions(m + z - rr, left - dsum).into_iter().map(Some).collect(),
                    (None, false) => vec![None],
                };
                for v in vs {
                    let t = if variant.wants_gamma() {
                        let gamma = f.as_ref().unwrap().iter().zip(beta.as_ref().unwrap())
                            .map(|(&e, b)| HomogFactor::new(e, b.clone()))
                            .collect();
                        Targets { gamma: Some(gamma), d: d.clone(), v, ..Targets::default() }
                    } else {
                        Targets { f: f.clone(), beta: beta.clone(), d: d.clone(), v, ..Targets::default() }
                    };
                    if total(&t) > cap {
                        continue;
                    }
                    // Candidates violating a chain rule are skipped here; the
                    // predicate would reject them anyway.
                    if let Ok(p) = Prescription::new(variant, z, x, t) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All targets of `variant` for adding `z` rows to `base`, over every rank
/// increase, within the index-sum bound and interlacing with the base.
pub fn targets(base: &Eigenstructure<Gfp>, field: &Gfp, variant: Variant, z: usize) -> Vec<Prescription<Gfp>> {
    let xmax = z.min(base.cols() - base.rank());
    (0..=xmax)
        .flat_map(|x| enumerate(base, field, variant, z, x, &Targets::default()))
        .collect()
}

/// Full prescriptions extending `partial`: its coordinates are kept and the
/// remaining ones range over everything within the index-sum bound.
pub fn full_candidates(base: &Eigenstructure<Gfp>, field: &Gfp, partial: &Prescription<Gfp>) -> Vec<Prescription<Gfp>> {
    let mut fixed = partial.targets().clone();
    if let Some(g) = fixed.gamma.take() {
        fixed.f = Some(g.iter().map(|h| h.e).collect());
        fixed.beta = Some(g.into_iter().map(|h| h.alpha).collect());
    }
    enumerate(base, field, Variant::Full, partial.z(), partial.x(), &fixed)
}
