use crate::common::{infinite_by_minors, raw_matrix, runner, smith_by_minors, which, RawMatrix};
use crate::over_field;
use eigencomplete::algebra::Field;
use eigencomplete::structmat::{eigenstructure, rank, smith_form, PolyMatrix};
use proptest::prelude::*;

const CASES: u32 = 1000;

fn index_sum_and_oracles<F: Field>(p: &PolyMatrix<F>) -> Result<(), TestCaseError> {
    let es = eigenstructure(p).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let alphas = smith_by_minors(p);
    let infinite = infinite_by_minors(p);
    prop_assert_eq!(es.alphas(), alphas.as_slice());
    prop_assert_eq!(es.es(), infinite.as_slice());
    let lhs: usize = infinite.iter().sum::<usize>()
        + alphas.iter().map(|a| a.deg()).sum::<usize>()
        + es.cmi().iter().sum::<usize>()
        + es.rmi().iter().sum::<usize>();
    prop_assert_eq!(lhs, alphas.len() * p.grade());
    prop_assert_eq!(es.index_sum().0, es.index_sum().1);
    prop_assert_eq!(es.cmi().len(), p.cols() - es.rank());
    prop_assert_eq!(es.rmi().len(), p.rows() - es.rank());
    Ok(())
}

pub fn index_sum_identity_against_determinantal_divisors() -> Result<(), String> {
    runner(CASES)
        .run(&(which(), raw_matrix(3, 4, 3)), |(w, raw)| {
            over_field!(w, |f| index_sum_and_oracles(&raw.build(&f)))
        })
        .map_err(|e| e.to_string())
}

fn transpose_duality<F: Field>(p: &PolyMatrix<F>) -> Result<(), TestCaseError> {
    let es = eigenstructure(p).unwrap();
    let et = eigenstructure(&p.transpose()).unwrap();
    prop_assert_eq!(es.alphas(), et.alphas());
    prop_assert_eq!(es.es(), et.es());
    prop_assert_eq!(es.cmi(), et.rmi());
    prop_assert_eq!(es.rmi(), et.cmi());
    prop_assert_eq!(smith_form(p), smith_form(&p.transpose()));
    Ok(())
}

pub fn transpose_swaps_minimal_indices() -> Result<(), String> {
    runner(CASES)
        .run(&(which(), raw_matrix(3, 4, 2)), |(w, raw)| over_field!(w, |f| transpose_duality(&raw.build(&f))))
        .map_err(|e| e.to_string())
}

fn zero_row<F: Field>(p: &PolyMatrix<F>) -> Result<(), TestCaseError> {
    let es = eigenstructure(p).unwrap();
    let padded = eigenstructure(&p.stack(&PolyMatrix::zero(p.field(), 1, p.cols(), p.grade())).unwrap()).unwrap();
    let mut rmi = es.rmi().to_vec();
    rmi.push(0);
    prop_assert_eq!(padded.rmi(), rmi.as_slice());
    prop_assert_eq!(padded.alphas(), es.alphas());
    prop_assert_eq!(padded.es(), es.es());
    prop_assert_eq!(padded.cmi(), es.cmi());
    Ok(())
}

pub fn zero_row_adds_one_zero_row_index() -> Result<(), String> {
    runner(CASES)
        .run(&(which(), raw_matrix(3, 4, 2)), |(w, raw)| over_field!(w, |f| zero_row(&raw.build(&f))))
        .map_err(|e| e.to_string())
}

fn stacked_rank<F: Field>(p: &PolyMatrix<F>, w: &RawMatrix) -> Result<(), TestCaseError> {
    let w = RawMatrix { n: p.cols(), d: p.grade(), ..w.clone() };
    let wm = w.build(p.field());
    let stacked = p.stack(&wm).unwrap();
    let (r, rs) = (rank(p), rank(&stacked));
    prop_assert!(r <= rs && rs <= r + wm.rows());
    index_sum_and_oracles(&stacked)
}

pub fn stacking_raises_rank_by_at_most_the_added_rows() -> Result<(), String> {
    let strat = (which(), raw_matrix(2, 3, 2)).prop_flat_map(|(w, p)| {
        let len = 2 * p.n * (p.d + 1);
        let rows = 1..=2usize;
        (Just(w), Just(p.clone()), rows, prop::collection::vec(-2i64..=2, len))
            .prop_map(|(w, p, z, c)| (w, p, RawMatrix { m: z, n: 0, d: 0, coeffs: c }))
    });
    runner(CASES)
        .run(&strat, |(w, raw, extra)| over_field!(w, |f| stacked_rank(&raw.build(&f), &extra)))
        .map_err(|e| e.to_string())
}

pub fn rank_is_smith_length() -> Result<(), String> {
    runner(CASES)
        .run(&(which(), raw_matrix(3, 3, 2)), |(w, raw)| {
            over_field!(w, |f| {
                let p = raw.build(&f);
                prop_assert_eq!(rank(&p), smith_form(&p).len());
                Ok(())
            })
        })
        .map_err(|e| e.to_string())
}
