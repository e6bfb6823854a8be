use crate::algebra::{Field, Poly};

use super::PolyMatrix;

/// Normal rank over F(s), by fraction-free (Bareiss) elimination in F[s].
pub fn rank<F: Field>(p: &PolyMatrix<F>) -> usize {
    let mut a = p.to_rows();
    let (m, n) = (p.rows(), p.cols());
    let mut prev = Poly::one(p.field());
    let mut r = 0;
    for k in 0..m.min(n) {
        let Some((pi, pj)) = min_degree_entry(&a, k) else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for i in k + 1..m {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero(p.field());
        }
        prev = a[k][k].clone();
        r += 1;
    }
    r
}

/// Position of a nonzero entry of least degree in the trailing block
/// starting at `(k, k)`; ties go to the first one in row-major order.
fn min_degree_entry<F: Field>(a: &[Vec<Poly<F>>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, e) in row.iter().enumerate().skip(k) {
            if let Some(d) = e.degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Invariant factors `alpha_1 | ... | alpha_r` by elementary row and column
/// operations with least-degree pivoting.
pub fn smith_form<F: Field>(p: &PolyMatrix<F>) -> Vec<Poly<F>> {
    let mut a = p.to_rows();
    let (m, n) = (p.rows(), p.cols());
    let mut out = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_degree_entry(&a, t) else {
                return out;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, rem) = a[i][t].div_rem(&a[t][t]);
                for j in t..n {
                    let sub = q.mul(&a[t][j]);
                    a[i][j] = a[i][j].sub(&sub);
                }
                debug_assert_eq!(a[i][t], rem);
                clean &= rem.is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, rem) = a[t][j].div_rem(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = q.mul(&row[t]);
                    row[j] = row[j].sub(&sub);
                }
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // Pivot isolated; it must also divide the rest of the block.
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[t][t].divides(&a[i][j])));
            match bad_row {
                Some(i) => {
                    for j in t..n {
                        let v = a[t][j].add(&a[i][j]);
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].monic());
    }
    out
}

/// Partial multiplicities at infinity: the `t`-adic valuations of the
/// invariant factors of the grade reversal.
pub fn infinite_multiplicities<F: Field>(p: &PolyMatrix<F>) -> Vec<usize> {
    smith_form(&p.reversal())
        .iter()
        .map(|f| f.valuation().expect("invariant factors are nonzero"))
        .collect()
}
