use crate::common::runner;
use eigencomplete::seqcomb::{gen_majorize, majorize, seq_union};
use proptest::prelude::*;

const CASES: u32 = 1000;

fn nonincreasing(max_len: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

pub fn union_is_majorized_by_its_parts() -> Result<(), String> {
    runner(CASES)
        .run(&(nonincreasing(6, 9), nonincreasing(6, 9)), |(u, b)| {
            let t = gen_majorize(&seq_union(&u, &b), &u, &b).unwrap();
            prop_assert!(t.holds, "{:?} {:?} {:?}", u, b, t);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// A sequence majorizing `a`: move mass from later entries to earlier ones.
fn relaxed(a: &[i64], moves: &[(usize, usize, i64)]) -> Vec<i64> {
    let mut out = a.to_vec();
    for &(i, j, k) in moves {
        if out.is_empty() {
            break;
        }
        let (i, j) = (i % out.len(), j % out.len());
        let (lo, hi) = (i.min(j), i.max(j));
        if lo != hi {
            out[lo] += k;
            out[hi] -= k;
        }
    }
    out
}

pub fn relaxing_the_free_sequence_preserves_generalized_majorization() -> Result<(), String> {
    let strat = (nonincreasing(4, 6), nonincreasing(4, 6), prop::collection::vec((0..8usize, 0..8usize, 0..3i64), 0..4));
    runner(CASES)
        .run(&strat, |(d, b, moves)| {
            let g = seq_union(&d, &b);
            prop_assert!(gen_majorize(&g, &d, &b).unwrap().holds);
            let a_hat = relaxed(&b, &moves);
            prop_assert_eq!(majorize(&b, &a_hat), Ok(true));
            prop_assert!(gen_majorize(&g, &d, &a_hat).unwrap().holds, "{:?} {:?} {:?}", g, d, a_hat);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn degenerate_cases_reduce_to_equality_and_majorization() -> Result<(), String> {
    runner(CASES)
        .run(&(nonincreasing(6, 5), nonincreasing(6, 5)), |(g, d)| {
            prop_assert_eq!(gen_majorize(&g, &d, &[]).map(|t| t.holds).ok(), (g.len() == d.len()).then_some(g == d));
            if g.len() == d.len() {
                prop_assert_eq!(gen_majorize(&g, &[], &d).unwrap().holds, majorize(&g, &d).unwrap());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn trailing_zeros_do_not_change_the_verdict() -> Result<(), String> {
    let strat = (nonincreasing(4, 5), nonincreasing(4, 5), prop::collection::vec(-2i64..=5, 0..=3), 1..=3usize);
    runner(CASES)
        .run(&strat, |(g0, d, mut a, pad)| {
            a.sort_unstable_by(|x, y| y.cmp(x));
            let mut g = g0.clone();
            g.resize(d.len() + a.len(), 0);
            g.sort_unstable_by(|x, y| y.cmp(x));
            let base = gen_majorize(&g, &d, &a).unwrap().holds;
            let (mut g2, mut d2) = (g.clone(), d.clone());
            g2.extend(std::iter::repeat_n(0, pad));
            d2.extend(std::iter::repeat_n(0, pad));
            prop_assert_eq!(gen_majorize(&g2, &d2, &a).unwrap().holds, base, "{:?} {:?} {:?}", g, d, a);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn ordinary_majorization_is_a_preorder_on_equal_lengths() -> Result<(), String> {
    runner(CASES)
        .run(&(nonincreasing(5, 6), 0..5usize, 0..3i64), |(a, i, k)| {
            prop_assert!(majorize(&a, &a).unwrap());
            let b = relaxed(&a, &[(0, i, k)]);
            let c = relaxed(&b, &[(0, i + 1, k)]);
            prop_assert!(majorize(&a, &b).unwrap() && majorize(&b, &c).unwrap() && majorize(&a, &c).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}
