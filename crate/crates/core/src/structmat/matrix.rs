use std::fmt;

use crate::algebra::{Field, Poly};

use super::StructError;

/// An `m x n` polynomial matrix with a declared grade.
///
/// The grade is an upper bound on entry degrees and is what the infinite
/// structure is measured against; it is never inferred from the entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    grade: usize,
    entries: Vec<Poly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(field: &F, grade: usize, rows: Vec<Vec<Poly<F>>>) -> Result<Self, StructError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(StructError::Empty);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(StructError::Ragged);
        }
        let entries: Vec<Poly<F>> = rows.into_iter().flatten().collect();
        if let Some(deg) = entries.iter().filter_map(Poly::degree).max() {
            if deg > grade {
                return Err(StructError::GradeExceeded { degree: deg, grade });
            }
        }
        Ok(PolyMatrix { field: field.clone(), rows: m, cols: n, grade, entries })
    }

    /// Builds from integer coefficient arrays (ascending), mapped into the field.
    pub fn from_i64s(field: &F, grade: usize, rows: &[Vec<Vec<i64>>]) -> Result<Self, StructError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| Poly::from_i64s(field, c)).collect())
            .collect();
        Self::new(field, grade, rows)
    }

    pub fn zero(field: &F, rows: usize, cols: usize, grade: usize) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        PolyMatrix {
            field: field.clone(),
            rows,
            cols,
            grade,
            entries: vec![Poly::zero(field); rows * cols],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Poly<F>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly<F>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Largest entry degree, `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { field: self.field.clone(), rows: self.cols, cols: self.rows, grade: self.grade, entries }
    }

    /// The grade reversal `t^d P(1/t)`, written in the same variable.
    pub fn reversal(&self) -> Self {
        let entries = self.entries.iter().map(|p| p.reversed(self.grade)).collect();
        PolyMatrix { entries, ..self.clone() }
    }

    /// Coefficient matrix of `s^k`, row-major.
    pub fn coefficient(&self, k: usize) -> Vec<F::Elem> {
        self.entries.iter().map(|p| p.coeff(k)).collect()
    }

    /// `[P; W]`, keeping the grade of `P`.
    pub fn stack(&self, w: &Self) -> Result<Self, StructError> {
        if w.cols != self.cols {
            return Err(StructError::DimensionMismatch { expected: self.cols, found: w.cols });
        }
        if let Some(deg) = w.degree() {
            if deg > self.grade {
                return Err(StructError::GradeExceeded { degree: deg, grade: self.grade });
            }
        }
        let mut entries = self.entries.clone();
        entries.extend(w.entries.iter().cloned());
        Ok(PolyMatrix {
            field: self.field.clone(),
            rows: self.rows + w.rows,
            cols: self.cols,
            grade: self.grade,
            entries,
        })
    }
}

impl<F: Field> fmt::Debug for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix(grade {}, {self})", self.grade)
    }
}

impl<F: Field> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            f.write_str(&row.join(", "))?;
        }
        f.write_str("]")
    }
}
