//! Integer sequences, majorization and generalized majorization.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("sequence {0:?} is not nonincreasing")]
    NotNonincreasing(Vec<i64>),
    #[error("sequence {0:?} has a negative entry")]
    Negative(Vec<i64>),
}

/// An entry read with the sentinel convention: positions before the start are
/// `+inf`, positions past the end are `-inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    NegInf,
    Finite(i64),
    PosInf,
}

/// 1-based sentinel read of `xs[i]`.
pub fn at(xs: &[i64], i: i64) -> Bound {
    if i < 1 {
        Bound::PosInf
    } else if i as usize > xs.len() {
        Bound::NegInf
    } else {
        Bound::Finite(xs[i as usize - 1])
    }
}

/// A nonincreasing integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntSeq(Vec<i64>);

impl IntSeq {
    pub fn new(values: Vec<i64>) -> Result<Self, SeqError> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(SeqError::NotNonincreasing(values));
        }
        Ok(IntSeq(values))
    }

    /// Sorts the values into nonincreasing order.
    pub fn sorted(mut values: Vec<i64>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        IntSeq(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at(&self, i: i64) -> Bound {
        at(&self.0, i)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<i64>> for IntSeq {
    type Error = SeqError;
    fn try_from(v: Vec<i64>) -> Result<Self, SeqError> {
        IntSeq::new(v)
    }
}

impl From<IntSeq> for Vec<i64> {
    fn from(s: IntSeq) -> Vec<i64> {
        s.0
    }
}

/// A nonincreasing sequence of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(IntSeq);

impl Partition {
    pub fn new(values: Vec<i64>) -> Result<Self, SeqError> {
        if values.iter().any(|&v| v < 0) {
            return Err(SeqError::Negative(values));
        }
        IntSeq::new(values).map(Partition)
    }

    pub fn values(&self) -> &[i64] {
        self.0.values()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.sum()
    }

    /// Number of strictly positive parts.
    pub fn positive_parts(&self) -> usize {
        self.values().iter().filter(|&&v| v > 0).count()
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = SeqError;
    fn try_from(v: Vec<i64>) -> Result<Self, SeqError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Vec<i64> {
        p.0.into()
    }
}

/// `a ≺ b`: proper prefix sums of `a` bounded by those of `b`, equal totals.
pub fn majorize(a: &[i64], b: &[i64]) -> Result<bool, SeqError> {
    if a.len() != b.len() {
        return Err(SeqError::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let (mut sa, mut sb) = (0i64, 0i64);
    for k in 0..a.len() {
        sa += a[k];
        sb += b[k];
        if k + 1 < a.len() && sa > sb {
            return Ok(false);
        }
    }
    Ok(sa == sb)
}

/// One prefix inequality of the generalized majorization, at threshold `h_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HStep {
    pub j: usize,
    pub h: usize,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// Evaluation record of `g ≺' (d, a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenMajTrace {
    pub holds: bool,
    /// `d_i >= g_{i+s}` for every `i`.
    pub interlace: bool,
    pub steps: Vec<HStep>,
    pub total_lhs: i64,
    pub total_rhs: i64,
}

/// `g ≺' (d, a)` with `len(g) = len(d) + len(a)`.
///
/// The thresholds are `h_j = min{i : d_{i-j+1} < g_i}`, read with sentinels so
/// the scan always stops by `i = m + j`.
pub fn gen_majorize(g: &[i64], d: &[i64], a: &[i64]) -> Result<GenMajTrace, SeqError> {
    let (m, s) = (d.len(), a.len());
    if g.len() != m + s {
        return Err(SeqError::LengthMismatch { expected: m + s, found: g.len() });
    }
    let interlace = (0..m).all(|i| d[i] >= g[i + s]);
    let prefix = |xs: &[i64], k: usize| xs[..k].iter().sum::<i64>();
    let mut steps = Vec::with_capacity(s);
    for j in 1..=s {
        let h = (1..=m + j)
            .find(|&i| at(d, i as i64 - j as i64 + 1) < Bound::Finite(g[i - 1]))
            .expect("d_{m+1} = -inf ends the scan");
        let lhs = prefix(g, h) - prefix(d, h - j);
        let rhs = prefix(a, j);
        steps.push(HStep { j, h, lhs, rhs, holds: lhs <= rhs });
    }
    let total_lhs: i64 = g.iter().sum();
    let total_rhs: i64 = d.iter().sum::<i64>() + a.iter().sum::<i64>();
    let holds = interlace && steps.iter().all(|st| st.holds) && total_lhs == total_rhs;
    Ok(GenMajTrace { holds, interlace, steps, total_lhs, total_rhs })
}

/// Nonincreasing merge of two sequences.
pub fn seq_union(u: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = u.iter().chain(b).copied().collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn majorize_examples() {
        assert_eq!(majorize(&[2, 1], &[3, 0]), Ok(true));
        assert_eq!(majorize(&[4, 1, 0], &[4, 1, 0]), Ok(true));
        assert_eq!(majorize(&[3, 0], &[2, 1]), Ok(false));
        assert!(matches!(majorize(&[1], &[1, 0]), Err(SeqError::LengthMismatch { .. })));
        assert_eq!(majorize(&[], &[]), Ok(true));
    }

    #[test]
    fn gen_majorize_examples() {
        let t = gen_majorize(&[3, 2, 1], &[3, 1], &[2]).unwrap();
        assert!(t.holds);
        assert_eq!(t.steps[0].h, 2);

        assert!(gen_majorize(&[3, 1], &[3, 1], &[]).unwrap().holds);
        assert!(!gen_majorize(&[3, 1], &[2, 2], &[]).unwrap().holds);

        assert!(gen_majorize(&[2, 1], &[], &[3, 0]).unwrap().holds);
        assert!(!gen_majorize(&[3, 0], &[], &[2, 1]).unwrap().holds);
        assert!(gen_majorize(&[1], &[], &[2]).is_ok_and(|t| !t.holds));
        assert!(matches!(gen_majorize(&[1], &[1], &[1]), Err(SeqError::LengthMismatch { .. })));
    }

    #[test]
    fn sentinels() {
        assert_eq!(at(&[5], 0), Bound::PosInf);
        assert_eq!(at(&[5], 2), Bound::NegInf);
        assert!(Bound::NegInf < Bound::Finite(i64::MIN));
        assert!(Bound::Finite(i64::MAX) < Bound::PosInf);
    }

    #[test]
    fn union_examples() {
        assert_eq!(seq_union(&[2, 0], &[1]), vec![2, 1, 0]);
        assert_eq!(seq_union(&[3, 1], &[]), vec![3, 1]);
        assert_eq!(seq_union(&[1, 1], &[1]), vec![1, 1, 1]);
    }

    #[test]
    fn typed_sequences() {
        assert!(IntSeq::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![1, -1]).is_err());
        let p: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(p.positive_parts(), 2);
        assert!(serde_json::from_str::<Partition>("[0,1]").is_err());
        assert_eq!(IntSeq::sorted(vec![1, 3, 2]).values(), &[3, 2, 1]);
    }
}
