#![allow(dead_code)]

use eigencomplete::algebra::{poly_gcd, Field, Gfp, Poly};
use eigencomplete::structmat::PolyMatrix;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub fn gf(p: u32) -> Gfp {
    Gfp::new(p).unwrap()
}

pub fn poly<F: Field>(field: &F, coeffs: &[i64]) -> Poly<F> {
    Poly::from_i64s(field, coeffs)
}

pub fn mat<F: Field>(field: &F, grade: usize, rows: &[Vec<Vec<i64>>]) -> PolyMatrix<F> {
    PolyMatrix::from_i64s(field, grade, rows).unwrap()
}

/// `[[s, 1], [-1, s]]`, grade 1: invariant factors 1 and s^2 + 1.
pub fn rotation<F: Field>(field: &F) -> PolyMatrix<F> {
    mat(field, 1, &[vec![vec![0, 1], vec![1]], vec![vec![-1], vec![0, 1]]])
}

/// `[[s^2, -1, 0], [0, 0, 0]]`, grade 2.
pub fn shear<F: Field>(field: &F) -> PolyMatrix<F> {
    mat(field, 2, &[vec![vec![0, 0, 1], vec![-1], vec![]], vec![vec![], vec![], vec![]]])
}

/// Runner with a fixed seed so property failures reproduce.
pub fn runner(cases: u32) -> TestRunner {
    let seed: [u8; 32] = *b"eigencomplete-property-suite-v1!";
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::from_seed(RngAlgorithm::ChaCha, &seed),
    )
}

/// Shape and raw coefficients of a random polynomial matrix.
#[derive(Debug, Clone)]
pub struct RawMatrix {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub coeffs: Vec<i64>,
}

impl RawMatrix {
    pub fn build<F: Field>(&self, field: &F) -> PolyMatrix<F> {
        let rows = (0..self.m)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let at = (i * self.n + j) * (self.d + 1);
                        Poly::from_i64s(field, &self.coeffs[at..at + self.d + 1])
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(field, self.d, rows).unwrap()
    }
}

/// Sparse-ish integer entries so that rank drops and shared factors show up.
pub fn raw_matrix(max_m: usize, max_n: usize, max_d: usize) -> impl Strategy<Value = RawMatrix> {
    (1..=max_m, 1..=max_n, 0..=max_d).prop_flat_map(|(m, n, d)| {
        let entry = prop_oneof![3 => Just(0i64), 4 => -2i64..=2];
        prop::collection::vec(entry, m * n * (d + 1)).prop_map(move |coeffs| RawMatrix { m, n, d, coeffs })
    })
}

/// Which of GF(2), GF(3), Q a property case runs over.
#[derive(Debug, Clone, Copy)]
pub enum Which {
    Gf2,
    Gf3,
    Q,
}

pub fn which() -> impl Strategy<Value = Which> {
    prop_oneof![Just(Which::Gf2), Just(Which::Gf3), Just(Which::Q)]
}

/// Runs `body` over the field named by `w`.
#[macro_export]
macro_rules! over_field {
    ($w:expr, |$f:ident| $body:expr) => {
        match $w {
            $crate::common::Which::Gf2 => {
                let $f = $crate::common::gf(2);
                $body
            }
            $crate::common::Which::Gf3 => {
                let $f = $crate::common::gf(3);
                $body
            }
            $crate::common::Which::Q => {
                let $f = eigencomplete::algebra::Rationals;
                $body
            }
        }
    };
}

fn det<F: Field>(field: &F, m: &[Vec<Poly<F>>]) -> Poly<F> {
    match m.len() {
        0 => Poly::one(field),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Poly::zero(field);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly<F>>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
                    .collect();
                let term = m[0][j].mul(&det(field, &minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Monic gcd of all `k x k` minors, or zero when every minor vanishes.
pub fn determinantal_divisor<F: Field>(p: &PolyMatrix<F>, k: usize) -> Poly<F> {
    let field = p.field();
    let mut g = Poly::zero(field);
    for rows in subsets(p.rows(), k) {
        for cols in subsets(p.cols(), k) {
            let sub: Vec<Vec<Poly<F>>> =
                rows.iter().map(|&i| cols.iter().map(|&j| p.get(i, j).clone()).collect()).collect();
            let d = det(field, &sub);
            if !d.is_zero() {
                g = if g.is_zero() { d.monic() } else { poly_gcd(&g, &d).unwrap() };
            }
        }
    }
    g
}

/// Invariant factors as quotients of consecutive determinantal divisors.
pub fn smith_by_minors<F: Field>(p: &PolyMatrix<F>) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    let mut prev = Poly::one(p.field());
    for k in 1..=p.rows().min(p.cols()) {
        let dk = determinantal_divisor(p, k);
        if dk.is_zero() {
            break;
        }
        out.push(dk.exact_div(&prev).expect("D_{k-1} divides D_k"));
        prev = dk;
    }
    out
}

/// Partial multiplicities at infinity: t-adic valuations of the invariant
/// factors of the grade reversal.
pub fn infinite_by_minors<F: Field>(p: &PolyMatrix<F>) -> Vec<usize> {
    smith_by_minors(&p.reversal()).iter().map(|a| a.valuation().unwrap()).collect()
}
