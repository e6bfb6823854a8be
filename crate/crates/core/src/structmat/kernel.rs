use crate::algebra::Field;

use super::PolyMatrix;

/// Rank of a dense constant matrix by Gaussian elimination.
pub(crate) fn const_rank<F: Field>(field: &F, mut a: Vec<Vec<F::Elem>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, piv);
        let inv = field.inv(&a[r][c]).unwrap();
        for i in r + 1..rows {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.mul(&a[i][c], &inv);
            for j in c..cols {
                let t = field.mul(&factor, &a[r][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Block convolution matrix `T_k` of size `(d+k+1)m x (k+1)n`: its kernel is
/// the space of coefficient vectors of right null vectors of degree `<= k`.
fn convolution<F: Field>(p: &PolyMatrix<F>, coeffs: &[Vec<F::Elem>], k: usize) -> Vec<Vec<F::Elem>> {
    let field = p.field();
    let (m, n, d) = (p.rows(), p.cols(), p.grade());
    let mut t = vec![vec![field.zero(); (k + 1) * n]; (d + k + 1) * m];
    for j in 0..=k {
        for (l, c) in coeffs.iter().enumerate() {
            for a in 0..m {
                for b in 0..n {
                    t[(l + j) * m + a][j * n + b] = c[a * n + b].clone();
                }
            }
        }
    }
    t
}

/// Right minimal indices (degrees of a minimal polynomial basis of the right
/// null space), in decreasing order.
///
/// With `N_k` the kernel dimension of `T_k`, `N_k - N_{k-1}` counts the
/// minimal indices that are `<= k`.
fn right_minimal_indices<F: Field>(p: &PolyMatrix<F>, rank: usize) -> Vec<usize> {
    let n = p.cols();
    let nullity = n - rank;
    let mut out = Vec::with_capacity(nullity);
    if nullity == 0 {
        return out;
    }
    let coeffs: Vec<_> = (0..=p.grade()).map(|k| p.coefficient(k)).collect();
    let bound = rank * p.grade();
    let (mut prev_n, mut prev_mu) = (0usize, 0usize);
    for k in 0..=bound {
        let nk = (k + 1) * n - const_rank(p.field(), convolution(p, &coeffs, k));
        let mu = nk - prev_n;
        out.extend(std::iter::repeat_n(k, mu - prev_mu));
        if mu == nullity {
            out.reverse();
            return out;
        }
        prev_n = nk;
        prev_mu = mu;
    }
    unreachable!("minimal indices exceed the degree bound r*d");
}

/// Column and row minimal indices, both decreasing.
pub fn minimal_indices<F: Field>(p: &PolyMatrix<F>) -> (Vec<usize>, Vec<usize>) {
    minimal_indices_with_rank(p, super::rank(p))
}

pub(crate) fn minimal_indices_with_rank<F: Field>(p: &PolyMatrix<F>, rank: usize) -> (Vec<usize>, Vec<usize>) {
    (right_minimal_indices(p, rank), right_minimal_indices(&p.transpose(), rank))
}
