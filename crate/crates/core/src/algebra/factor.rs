use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Gfp, Rationals};
use super::poly::{poly_gcd, Poly};
use super::AlgebraError;

/// Monic factors with multiplicities, sorted canonically.
///
/// When `complete` is false some entries are products the field arithmetic
/// could not split further; they are still treated as indivisible blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub factors: Vec<(Poly<F>, usize)>,
    pub complete: bool,
}

impl<F: Field> Factorization<F> {
    fn from_parts(mut parts: Vec<(Poly<F>, usize)>, complete: bool) -> Self {
        parts.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        let mut factors: Vec<(Poly<F>, usize)> = Vec::new();
        for (p, m) in parts {
            match factors.last_mut() {
                Some((q, k)) if *q == p => *k += m,
                _ => factors.push((p, m)),
            }
        }
        Factorization { factors, complete }
    }

    pub fn product(&self, field: &F) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::one(field), |acc, (p, m)| acc.mul(&p.pow(*m as u64)))
    }
}

/// Squarefree decomposition `f = prod g_i^i` of a monic polynomial.
fn squarefree<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = poly_gcd(f, &df).expect("f is nonzero");
    let mut w = f.exact_div(&c).unwrap();
    let mut i = 1;
    while !w.is_one() {
        let y = poly_gcd(&w, &c).unwrap();
        let fac = w.exact_div(&y).unwrap();
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).unwrap();
        i += 1;
    }
    if !c.is_one() {
        // Only reachable in characteristic p: c is a p-th power.
        assert!(p > 0, "nontrivial remainder in characteristic zero");
        let root = pth_root(&c, p);
        for (g, m) in squarefree(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// For GF(p), `a^p = a`, so the p-th root of `sum c_{kp} s^{kp}` is `sum c_{kp} s^k`.
fn pth_root<F: Field>(c: &Poly<F>, p: usize) -> Poly<F> {
    let coeffs = c.coeffs().iter().step_by(p).cloned().collect();
    Poly::new(c.field(), coeffs)
}

fn distinct_degree(f: &Poly<Gfp>) -> Vec<(Poly<Gfp>, usize)> {
    let field = *f.field();
    let p = field.modulus() as u64;
    let x = Poly::s(&field);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = poly_gcd(&h.sub(&x), &rest).unwrap();
        if !g.is_one() {
            rest = rest.exact_div(&g).unwrap();
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let n = rest.deg();
        out.push((rest, n));
    }
    out
}

/// Splits `g`, a product of distinct irreducibles of degree `d`.
fn equal_degree(g: &Poly<Gfp>, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly<Gfp>> {
    let n = g.deg();
    if n == d {
        return vec![g.clone()];
    }
    let field = *g.field();
    let p = field.modulus();
    loop {
        let coeffs: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = Poly::new(&field, coeffs);
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.rem(g);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(g);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1) / 2) = (a * a^p * ... * a^(p^(d-1)))^((p - 1) / 2)
            let mut t = a.rem(g);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p as u64, g);
                norm = norm.mul(&t).rem(g);
            }
            norm.pow_mod((p as u64 - 1) / 2, g).sub(&Poly::one(&field))
        };
        let split = poly_gcd(&b, g).unwrap();
        if !split.is_one() && split.deg() < n {
            let other = g.exact_div(&split).unwrap();
            let mut out = equal_degree(&split, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Complete factorization over GF(p) (squarefree, distinct-degree,
/// Cantor-Zassenhaus). The random choices are seeded, and the result is
/// sorted, so the output is deterministic.
pub fn factor_gfp(f: &Poly<Gfp>) -> Factorization<Gfp> {
    let f = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut parts = Vec::new();
    for (g, m) in squarefree(&f) {
        for (block, d) in distinct_degree(&g) {
            for irr in equal_degree(&block, d, &mut rng) {
                parts.push((irr.monic(), m));
            }
        }
    }
    Factorization::from_parts(parts, true)
}

/// Best-effort factorization over the rationals: squarefree split, then
/// extraction of rational roots. A rootless cofactor of degree at most 3 is
/// irreducible; larger rootless cofactors are kept whole and mark the result
/// incomplete.
pub fn factor_rational(f: &Poly<Rationals>) -> Factorization<Rationals> {
    let f = f.monic();
    let q = Rationals;
    let mut parts = Vec::new();
    let mut complete = true;
    for (g, m) in squarefree(&f) {
        let mut rest = g;
        for root in rational_roots(&rest) {
            let lin = Poly::new(&q, vec![-root, BigRational::one()]);
            rest = rest.exact_div(&lin).expect("root divides");
            parts.push((lin, m));
        }
        if rest.deg() > 0 {
            if rest.deg() > 3 {
                complete = false;
            }
            parts.push((rest.monic(), m));
        }
    }
    Factorization::from_parts(parts, complete)
}

/// Candidate magnitude above which divisor enumeration is abandoned.
const ROOT_SEARCH_LIMIT: u64 = 1 << 24;

/// Distinct rational roots of a squarefree polynomial (within the search
/// limit on the clearing integers).
fn rational_roots(f: &Poly<Rationals>) -> Vec<BigRational> {
    let q = Rationals;
    let lcm_den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm_den.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let a0 = ints[low].abs().to_u64();
    let an = ints.last().unwrap().abs().to_u64();
    let (Some(a0), Some(an)) = (a0, an) else {
        return roots;
    };
    if a0 > ROOT_SEARCH_LIMIT || an > ROOT_SEARCH_LIMIT {
        return roots;
    }
    for num in divisors(a0) {
        for den in divisors(an) {
            if num_integer::gcd(num, den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let r = q.ratio(sign * num as i64, den as i64);
                if q.is_zero(&f.eval(&r)) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            if k * k != n {
                out.push(n / k);
            }
        }
        k += 1;
    }
    out
}

/// A monic `tau` with `lo | tau | hi` and `deg(tau) = w`.
///
/// Factors `hi / lo` and searches sub-multisets of its irreducible factors
/// whose degrees add up to `w - deg(lo)`. Among the candidates the smallest in
/// canonical order wins.
pub fn divisor_of_degree<F: Field>(lo: &Poly<F>, hi: &Poly<F>, w: usize) -> Result<Poly<F>, AlgebraError> {
    if lo.is_zero() || hi.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let quot = hi.exact_div(lo).ok_or(AlgebraError::NotDivisible)?;
    let (dlo, dhi) = (lo.deg(), hi.deg());
    if w < dlo || w > dhi {
        return Err(AlgebraError::DegreeOutOfRange { w, lo: dlo, hi: dhi });
    }
    let field = lo.field().clone();
    let target = w - dlo;
    let fac = field.factor(&quot.monic());

    let mut best: Option<Poly<F>> = None;
    let mut counts = vec![0usize; fac.factors.len()];
    loop {
        let deg: usize = counts
            .iter()
            .zip(&fac.factors)
            .map(|(k, (p, _))| k * p.deg())
            .sum();
        if deg == target {
            let cand = counts
                .iter()
                .zip(&fac.factors)
                .fold(lo.monic(), |acc, (k, (p, _))| acc.mul(&p.pow(*k as u64)));
            if best.as_ref().is_none_or(|b| cand.cmp_canonical(b).is_lt()) {
                best = Some(cand);
            }
        }
        // Odometer over 0..=multiplicity for each factor.
        let mut i = 0;
        loop {
            if i == counts.len() {
                return best.ok_or(AlgebraError::FieldObstruction {
                    needed: w,
                    quotient: quot.to_string(),
                });
            }
            if counts[i] < fac.factors[i].1 {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}
