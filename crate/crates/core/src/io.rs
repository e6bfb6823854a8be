//! JSON forms of matrices, eigenstructures, prescriptions and problem files.
//!
//! Polynomials are ascending coefficient arrays. Scalars over GF(p) are
//! integers (reduced mod p); over ℚ they are strings such as `"-3/2"`, with
//! plain integers also accepted on input.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{Field, Gfp, HomogFactor, Poly, Rationals};
use crate::completion::{CompletionError, Prescription, Targets, Variant};
use crate::oracle::OracleConfig;
use crate::structmat::{Eigenstructure, PolyMatrix, StructError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bad scalar {0}")]
    Scalar(String),
    #[error("unknown field {0:?} (use Q or GF(p))")]
    Field(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Struct(#[from] StructError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

/// Fields whose scalars have a JSON form.
pub trait JsonScalar: Field {
    fn scalar_to_json(&self, a: &Self::Elem) -> Value;
    fn scalar_from_json(&self, v: &Value) -> Result<Self::Elem, IoError>;
}

impl JsonScalar for Gfp {
    fn scalar_to_json(&self, a: &u32) -> Value {
        Value::from(*a)
    }

    fn scalar_from_json(&self, v: &Value) -> Result<u32, IoError> {
        v.as_i64().map(|i| self.elem(i)).ok_or_else(|| IoError::Scalar(v.to_string()))
    }
}

impl JsonScalar for Rationals {
    fn scalar_to_json(&self, a: &Self::Elem) -> Value {
        Value::from(self.format_elem(a))
    }

    fn scalar_from_json(&self, v: &Value) -> Result<Self::Elem, IoError> {
        match v {
            Value::Number(n) if n.is_i64() => Ok(self.from_i64(n.as_i64().unwrap())),
            Value::String(s) => self.parse(s).map_err(|_| IoError::Scalar(v.to_string())),
            _ => Err(IoError::Scalar(v.to_string())),
        }
    }
}

/// Which field a problem lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Gfp(u32),
}

impl FromStr for FieldSpec {
    type Err = IoError;
    fn from_str(s: &str) -> Result<Self, IoError> {
        let t = s.trim();
        if matches!(t, "Q" | "QQ" | "q" | "rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("GF"))
            .or_else(|| t.strip_prefix("gf"))
            .unwrap_or(t);
        let p: u32 = digits.parse().map_err(|_| IoError::Field(s.to_string()))?;
        Gfp::new(p).map_err(|_| IoError::Field(s.to_string()))?;
        Ok(FieldSpec::Gfp(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Gfp(p) => write!(f, "GF({p})"),
        }
    }
}

pub fn poly_to_json<F: JsonScalar>(p: &Poly<F>) -> Vec<Value> {
    p.coeffs().iter().map(|c| p.field().scalar_to_json(c)).collect()
}

pub fn poly_from_json<F: JsonScalar>(field: &F, v: &[Value]) -> Result<Poly<F>, IoError> {
    let coeffs = v.iter().map(|c| field.scalar_from_json(c)).collect::<Result<_, _>>()?;
    Ok(Poly::new(field, coeffs))
}

fn monic_from_json<F: JsonScalar>(field: &F, v: &[Value], what: &str) -> Result<Poly<F>, IoError> {
    let p = poly_from_json(field, v)?;
    if !p.is_monic() {
        return Err(IoError::Schema(format!("{what} must be monic, got {p}")));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub grade: usize,
    pub rows: Vec<Vec<Vec<Value>>>,
}

impl MatrixJson {
    pub fn from_matrix<F: JsonScalar>(m: &PolyMatrix<F>) -> Self {
        let rows = m.to_rows().iter().map(|r| r.iter().map(poly_to_json).collect()).collect();
        MatrixJson { grade: m.grade(), rows }
    }

    pub fn to_matrix<F: JsonScalar>(&self, field: &F) -> Result<PolyMatrix<F>, IoError> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| poly_from_json(field, e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix::new(field, self.grade, rows)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenstructureJson {
    pub grade: usize,
    pub alphas: Vec<Vec<Value>>,
    pub e: Vec<usize>,
    pub cmi: Vec<usize>,
    pub rmi: Vec<usize>,
}

impl EigenstructureJson {
    pub fn from_eigenstructure<F: JsonScalar>(es: &Eigenstructure<F>) -> Self {
        EigenstructureJson {
            grade: es.grade(),
            alphas: es.alphas().iter().map(poly_to_json).collect(),
            e: es.es().to_vec(),
            cmi: es.cmi().to_vec(),
            rmi: es.rmi().to_vec(),
        }
    }

    pub fn to_eigenstructure<F: JsonScalar>(&self, field: &F) -> Result<Eigenstructure<F>, IoError> {
        let alphas = self
            .alphas
            .iter()
            .map(|a| monic_from_json(field, a, "invariant factor"))
            .collect::<Result<_, _>>()?;
        Ok(Eigenstructure::new(self.grade, alphas, self.e.clone(), self.cmi.clone(), self.rmi.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomogJson {
    pub e: usize,
    pub alpha: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrescriptionJson {
    pub variant: Variant,
    pub z: usize,
    pub x: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<HomogJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<usize>>,
}

impl PrescriptionJson {
    pub fn from_prescription<F: JsonScalar>(p: &Prescription<F>) -> Self {
        let t = p.targets();
        PrescriptionJson {
            variant: p.variant(),
            z: p.z(),
            x: p.x(),
            gamma: t
                .gamma
                .as_ref()
                .map(|g| g.iter().map(|h| HomogJson { e: h.e, alpha: poly_to_json(&h.alpha) }).collect()),
            f: t.f.clone(),
            beta: t.beta.as_ref().map(|b| b.iter().map(poly_to_json).collect()),
            d: t.d.clone(),
            v: t.v.clone(),
        }
    }

    pub fn to_prescription<F: JsonScalar>(&self, field: &F) -> Result<Prescription<F>, IoError> {
        let gamma = match &self.gamma {
            Some(g) => Some(
                g.iter()
                    .map(|h| Ok(HomogFactor::new(h.e, monic_from_json(field, &h.alpha, "gamma finite part")?)))
                    .collect::<Result<Vec<_>, IoError>>()?,
            ),
            None => None,
        };
        let beta = match &self.beta {
            Some(b) => Some(b.iter().map(|p| monic_from_json(field, p, "beta entry")).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        let t = Targets { gamma, f: self.f.clone(), beta, d: self.d.clone(), v: self.v.clone() };
        Ok(Prescription::new(self.variant, self.z, self.x, t)?)
    }
}

/// Input of the `check`, `chain` and `oracle` commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenstructure: Option<EigenstructureJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prescription: Option<PrescriptionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleConfig>,
}

/// The object being completed: a concrete matrix or bare invariants.
#[derive(Debug, Clone)]
pub enum Subject<F: Field> {
    Matrix(PolyMatrix<F>),
    Invariants(Eigenstructure<F>),
}

impl ProblemJson {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        let p: ProblemJson = serde_json::from_str(text)?;
        if p.matrix.is_some() == p.eigenstructure.is_some() {
            return Err(IoError::Schema("exactly one of \"matrix\" and \"eigenstructure\" is required".into()));
        }
        Ok(p)
    }

    /// The field named in the file, overridden by `cli` when given.
    pub fn field_spec(&self, cli: Option<FieldSpec>) -> Result<FieldSpec, IoError> {
        if let Some(f) = cli {
            return Ok(f);
        }
        match (&self.field, &self.oracle) {
            (Some(s), _) => s.parse(),
            (None, Some(o)) => Ok(FieldSpec::Gfp(o.p)),
            (None, None) => Ok(FieldSpec::Rationals),
        }
    }

    pub fn subject<F: JsonScalar>(&self, field: &F) -> Result<Subject<F>, IoError> {
        match (&self.matrix, &self.eigenstructure) {
            (Some(m), None) => Ok(Subject::Matrix(m.to_matrix(field)?)),
            (None, Some(e)) => Ok(Subject::Invariants(e.to_eigenstructure(field)?)),
            _ => Err(IoError::Schema("exactly one of \"matrix\" and \"eigenstructure\" is required".into())),
        }
    }

    pub fn prescription<F: JsonScalar>(&self, field: &F) -> Result<Prescription<F>, IoError> {
        self.prescription
            .as_ref()
            .ok_or_else(|| IoError::Schema("missing \"prescription\"".into()))?
            .to_prescription(field)
    }
}
