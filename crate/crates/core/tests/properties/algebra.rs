use crate::common::{gf, runner, which};
use crate::over_field;
use eigencomplete::algebra::{divisor_of_degree, poly_gcd, poly_lcm, Field, HomogFactor, Poly};
use proptest::prelude::*;

const CASES: u32 = 1000;

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..=5)
}

fn gcd_lcm_laws<F: Field>(f: &F, a: &[i64], b: &[i64], c: &[i64]) -> Result<(), TestCaseError> {
    let (p, q, r) = (Poly::from_i64s(f, a), Poly::from_i64s(f, b), Poly::from_i64s(f, c));
    if p.is_zero() || q.is_zero() || r.is_zero() {
        return Ok(());
    }
    let g = poly_gcd(&p, &q).unwrap();
    let l = poly_lcm(&p, &q).unwrap();
    prop_assert!(g.is_monic() && l.is_monic());
    prop_assert_eq!(g.deg() + l.deg(), p.deg() + q.deg());
    prop_assert!(g.divides(&p) && g.divides(&q) && p.divides(&l) && q.divides(&l));
    prop_assert_eq!(&g, &poly_gcd(&q, &p).unwrap());
    prop_assert_eq!(&l, &poly_lcm(&q, &p).unwrap());
    prop_assert_eq!(poly_gcd(&g, &r).unwrap(), poly_gcd(&p, &poly_gcd(&q, &r).unwrap()).unwrap());
    prop_assert_eq!(poly_lcm(&l, &r).unwrap(), poly_lcm(&p, &poly_lcm(&q, &r).unwrap()).unwrap());
    Ok(())
}

pub fn gcd_and_lcm_laws() -> Result<(), String> {
    runner(CASES)
        .run(&(which(), coeffs(), coeffs(), coeffs()), |(w, a, b, c)| over_field!(w, |f| gcd_lcm_laws(&f, &a, &b, &c)))
        .map_err(|e| e.to_string())
}

fn homog_order<F: Field>(f: &F, xs: [(usize, Vec<i64>); 3]) -> Result<(), TestCaseError> {
    let hs: Vec<HomogFactor<F>> = xs
        .iter()
        .filter_map(|(e, c)| {
            let p = Poly::from_i64s(f, c);
            (!p.is_zero()).then(|| HomogFactor::new(*e, p.monic()))
        })
        .collect();
    for a in &hs {
        prop_assert!(a.divides(a));
        prop_assert!(HomogFactor::unit(f).divides(a));
        for b in &hs {
            prop_assert_eq!(a.divides(b), a.e <= b.e && a.alpha.divides(&b.alpha));
            if a.divides(b) && b.divides(a) {
                prop_assert_eq!(a, b);
            }
            let l = a.lcm(b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            for c in &hs {
                if a.divides(b) && b.divides(c) {
                    prop_assert!(a.divides(c));
                }
            }
        }
    }
    Ok(())
}

pub fn homogeneous_divisibility_is_a_partial_order() -> Result<(), String> {
    let h = || (0..3usize, prop::collection::vec(-2i64..=2, 1..=3));
    runner(CASES)
        .run(&(which(), h(), h(), h()), |(w, a, b, c)| over_field!(w, |f| homog_order(&f, [a, b, c])))
        .map_err(|e| e.to_string())
}

/// Over a field where `hi / lo` splits into linear factors every degree in
/// range is reachable.
pub fn divisor_of_degree_never_obstructs_over_a_splitting_field() -> Result<(), String> {
    let strat = (prop_oneof![Just(5u32), Just(7), Just(13)], prop::collection::vec(0i64..13, 0..=4), prop::collection::vec(0i64..13, 0..=4), 0..=8usize);
    runner(CASES)
        .run(&strat, |(p, lo_roots, extra_roots, pick)| {
            let f = gf(p);
            let linear = |r: &i64| Poly::from_i64s(&f, &[-r, 1]);
            let lo = lo_roots.iter().map(linear).fold(Poly::one(&f), |acc, x| acc.mul(&x));
            let hi = extra_roots.iter().map(linear).fold(lo.clone(), |acc, x| acc.mul(&x));
            let w = lo.deg() + pick % (extra_roots.len() + 1);
            let tau = divisor_of_degree(&lo, &hi, w).unwrap();
            prop_assert_eq!(tau.deg(), w);
            prop_assert!(tau.is_monic() && lo.divides(&tau) && tau.divides(&hi));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Over any field the returned divisor, when there is one, sits in the chain.
pub fn divisor_of_degree_is_sound() -> Result<(), String> {
    let strat = (which(), coeffs(), coeffs(), 0..=6usize);
    runner(CASES)
        .run(&strat, |(w, a, b, pick)| {
            over_field!(w, |f| {
                let (lo, cof) = (Poly::from_i64s(&f, &a), Poly::from_i64s(&f, &b));
                if lo.is_zero() || cof.is_zero() {
                    return Ok(());
                }
                let (lo, hi) = (lo.monic(), lo.mul(&cof).monic());
                let w = lo.deg() + pick % (cof.deg() + 1);
                if let Ok(tau) = divisor_of_degree(&lo, &hi, w) {
                    prop_assert_eq!(tau.deg(), w);
                    prop_assert!(tau.is_monic() && lo.divides(&tau) && tau.divides(&hi));
                }
                Ok(())
            })
        })
        .map_err(|e| e.to_string())
}
