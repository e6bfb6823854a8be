use std::fmt;

use crate::algebra::{Field, HomogFactor, Poly};

use super::kernel::minimal_indices_with_rank;
use super::smith::{infinite_multiplicities, rank, smith_form};
use super::{PolyMatrix, StructError};

/// Complete eigenstructure of a grade-`d` polynomial matrix.
///
/// Fields are private so that every value in circulation satisfies the chain,
/// ordering and index-sum constraints checked by [`Eigenstructure::new`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Eigenstructure<F: Field> {
    grade: usize,
    alphas: Vec<Poly<F>>,
    es: Vec<usize>,
    cmi: Vec<usize>,
    rmi: Vec<usize>,
}

impl<F: Field> Eigenstructure<F> {
    /// Validates an abstractly supplied eigenstructure. The rank is
    /// `alphas.len()`; the sizes are `r + cmi.len()` columns and `r + rmi.len()` rows.
    pub fn new(
        grade: usize,
        alphas: Vec<Poly<F>>,
        es: Vec<usize>,
        cmi: Vec<usize>,
        rmi: Vec<usize>,
    ) -> Result<Self, StructError> {
        if es.len() != alphas.len() {
            return Err(StructError::Invalid(format!(
                "{} invariant factors but {} infinite multiplicities",
                alphas.len(),
                es.len()
            )));
        }
        if alphas.iter().any(|a| !a.is_monic()) {
            return Err(StructError::Invalid("invariant factors must be monic".into()));
        }
        if alphas.windows(2).any(|w| !w[0].divides(&w[1])) {
            return Err(StructError::Invalid("invariant factors must form a divisibility chain".into()));
        }
        if es.windows(2).any(|w| w[0] > w[1]) {
            return Err(StructError::Invalid("infinite multiplicities must be nondecreasing".into()));
        }
        if cmi.windows(2).any(|w| w[0] < w[1]) || rmi.windows(2).any(|w| w[0] < w[1]) {
            return Err(StructError::Invalid("minimal indices must be nonincreasing".into()));
        }
        if alphas.len() + cmi.len() == 0 || alphas.len() + rmi.len() == 0 {
            return Err(StructError::Empty);
        }
        let es_ok = Eigenstructure { grade, alphas, es, cmi, rmi };
        let (lhs, rhs) = es_ok.index_sum();
        if lhs != rhs {
            return Err(StructError::IndexSumViolation { lhs, rhs });
        }
        Ok(es_ok)
    }

    pub fn rank(&self) -> usize {
        self.alphas.len()
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn alphas(&self) -> &[Poly<F>] {
        &self.alphas
    }

    pub fn es(&self) -> &[usize] {
        &self.es
    }

    pub fn cmi(&self) -> &[usize] {
        &self.cmi
    }

    pub fn rmi(&self) -> &[usize] {
        &self.rmi
    }

    pub fn rows(&self) -> usize {
        self.rank() + self.rmi.len()
    }

    pub fn cols(&self) -> usize {
        self.rank() + self.cmi.len()
    }

    /// Number of strictly positive row minimal indices.
    pub fn eta(&self) -> usize {
        self.rmi.iter().filter(|&&u| u > 0).count()
    }

    /// Homogeneous invariant factors `(e_i, alpha_i)`.
    pub fn phis(&self) -> Vec<HomogFactor<F>> {
        self.es
            .iter()
            .zip(&self.alphas)
            .map(|(&e, a)| HomogFactor::new(e, a.clone()))
            .collect()
    }

    pub fn field(&self) -> Option<&F> {
        self.alphas.first().map(Poly::field)
    }

    /// Both sides of the index sum identity: `(sum deg phi + sum c + sum u, r d)`.
    pub fn index_sum(&self) -> (usize, usize) {
        let lhs = self.es.iter().sum::<usize>()
            + self.alphas.iter().map(Poly::deg).sum::<usize>()
            + self.cmi.iter().sum::<usize>()
            + self.rmi.iter().sum::<usize>();
        (lhs, self.rank() * self.grade)
    }

    /// Eigenstructure of the transpose: minimal indices swap sides.
    pub fn transpose(&self) -> Self {
        Eigenstructure { cmi: self.rmi.clone(), rmi: self.cmi.clone(), ..self.clone() }
    }
}

impl<F: Field> fmt::Display for Eigenstructure<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphas: Vec<String> = self.alphas.iter().map(|a| a.to_string()).collect();
        let (lhs, rhs) = self.index_sum();
        write!(
            f,
            "r={}, α=({}), e={}, c={}, u={}, ISD: {}={}",
            self.rank(),
            alphas.join(", "),
            fmt_seq(&self.es),
            fmt_seq(&self.cmi),
            fmt_seq(&self.rmi),
            lhs,
            rhs
        )
    }
}

pub(crate) fn fmt_seq<T: fmt::Display>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "∅".to_string();
    }
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Rank, invariant factors, infinite multiplicities and minimal indices of `p`.
///
/// The index sum identity is asserted before returning; a violation means an
/// internal bug and is reported as [`StructError::IndexSumViolation`].
pub fn eigenstructure<F: Field>(p: &PolyMatrix<F>) -> Result<Eigenstructure<F>, StructError> {
    let r = rank(p);
    let alphas = smith_form(p);
    assert_eq!(alphas.len(), r, "Smith form length disagrees with rank");
    let es = infinite_multiplicities(p);
    let (cmi, rmi) = minimal_indices_with_rank(p, r);
    let out = Eigenstructure { grade: p.grade(), alphas, es, cmi, rmi };
    let (lhs, rhs) = out.index_sum();
    if lhs != rhs {
        return Err(StructError::IndexSumViolation { lhs, rhs });
    }
    Ok(out)
}
