use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, HomogFactor, Poly};
use crate::seqcomb::GenMajTrace;
use crate::structmat::Eigenstructure;

use super::CompletionError;

/// Which invariants of the completed matrix are prescribed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Homogeneous invariant factors and both kinds of minimal indices.
    Full,
    InfSing,
    InfCmi,
    InfRmi,
    FinSing,
    FinCmi,
    FinRmi,
    Sing,
    Rmi,
    Cmi,
}

impl Variant {
    pub const ALL: [Variant; 10] = [
        Variant::Full,
        Variant::InfSing,
        Variant::InfCmi,
        Variant::InfRmi,
        Variant::FinSing,
        Variant::FinCmi,
        Variant::FinRmi,
        Variant::Sing,
        Variant::Rmi,
        Variant::Cmi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::InfSing => "inf_sing",
            Variant::InfCmi => "inf_cmi",
            Variant::InfRmi => "inf_rmi",
            Variant::FinSing => "fin_sing",
            Variant::FinCmi => "fin_cmi",
            Variant::FinRmi => "fin_rmi",
            Variant::Sing => "sing",
            Variant::Rmi => "rmi",
            Variant::Cmi => "cmi",
        }
    }

    pub fn wants_gamma(self) -> bool {
        self == Variant::Full
    }

    pub fn wants_f(self) -> bool {
        matches!(self, Variant::InfSing | Variant::InfCmi | Variant::InfRmi)
    }

    pub fn wants_beta(self) -> bool {
        matches!(self, Variant::FinSing | Variant::FinCmi | Variant::FinRmi)
    }

    pub fn wants_d(self) -> bool {
        !matches!(self, Variant::InfRmi | Variant::FinRmi | Variant::Rmi)
    }

    pub fn wants_v(self) -> bool {
        !matches!(self, Variant::InfCmi | Variant::FinCmi | Variant::Cmi)
    }

    /// The variant describing the same problem for the transposed matrix:
    /// column and row minimal indices trade places.
    pub fn transposed(self) -> Variant {
        match self {
            Variant::InfCmi => Variant::InfRmi,
            Variant::InfRmi => Variant::InfCmi,
            Variant::FinCmi => Variant::FinRmi,
            Variant::FinRmi => Variant::FinCmi,
            Variant::Cmi => Variant::Rmi,
            Variant::Rmi => Variant::Cmi,
            other => other,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = CompletionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| CompletionError::InvalidPrescription(format!("unknown variant {s:?}")))
    }
}

/// Prescribed targets; which ones must be present depends on the variant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Targets<F: Field> {
    pub gamma: Option<Vec<HomogFactor<F>>>,
    pub f: Option<Vec<usize>>,
    pub beta: Option<Vec<Poly<F>>>,
    pub d: Option<Vec<usize>>,
    pub v: Option<Vec<usize>>,
}

impl<F: Field> Default for Targets<F> {
    fn default() -> Self {
        Targets { gamma: None, f: None, beta: None, d: None, v: None }
    }
}

/// A row-completion target: add `z` rows, raise the rank by `x`, and give
/// the completed matrix the prescribed invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Prescription<F: Field> {
    variant: Variant,
    z: usize,
    x: usize,
    t: Targets<F>,
}

fn check_presence(name: &str, wanted: bool, present: bool) -> Result<(), CompletionError> {
    match (wanted, present) {
        (true, false) => Err(CompletionError::InvalidPrescription(format!("missing field {name:?}"))),
        (false, true) => Err(CompletionError::InvalidPrescription(format!("field {name:?} not used by this variant"))),
        _ => Ok(()),
    }
}

impl<F: Field> Prescription<F> {
    pub fn new(variant: Variant, z: usize, x: usize, t: Targets<F>) -> Result<Self, CompletionError> {
        let bad = |m: &str| Err(CompletionError::InvalidPrescription(m.to_string()));
        if z == 0 {
            return bad("at least one row must be added (z >= 1)");
        }
        if x > z {
            return bad("rank increase x exceeds the number of added rows z");
        }
        check_presence("gamma", variant.wants_gamma(), t.gamma.is_some())?;
        check_presence("f", variant.wants_f(), t.f.is_some())?;
        check_presence("beta", variant.wants_beta(), t.beta.is_some())?;
        check_presence("d", variant.wants_d(), t.d.is_some())?;
        check_presence("v", variant.wants_v(), t.v.is_some())?;
        if let Some(g) = &t.gamma {
            if g.windows(2).any(|w| !w[0].divides(&w[1])) {
                return bad("gamma must be a divisibility chain");
            }
        }
        if let Some(f) = &t.f {
            if f.windows(2).any(|w| w[0] > w[1]) {
                return bad("f must be nondecreasing");
            }
        }
        if let Some(b) = &t.beta {
            if b.iter().any(|p| !p.is_monic()) {
                return bad("beta entries must be monic");
            }
            if b.windows(2).any(|w| !w[0].divides(&w[1])) {
                return bad("beta must be a divisibility chain");
            }
        }
        for (name, seq) in [("d", &t.d), ("v", &t.v)] {
            if let Some(s) = seq {
                if s.windows(2).any(|w| w[0] < w[1]) {
                    return bad(&format!("{name} must be nonincreasing"));
                }
            }
        }
        Ok(Prescription { variant, z, x, t })
    }

    pub fn full(z: usize, x: usize, gamma: Vec<HomogFactor<F>>, d: Vec<usize>, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::Full, z, x, Targets { gamma: Some(gamma), d: Some(d), v: Some(v), ..Targets::default() })
    }

    pub fn inf_sing(z: usize, x: usize, f: Vec<usize>, d: Vec<usize>, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::InfSing, z, x, Targets { f: Some(f), d: Some(d), v: Some(v), ..Targets::default() })
    }

    pub fn inf_cmi(z: usize, x: usize, f: Vec<usize>, d: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::InfCmi, z, x, Targets { f: Some(f), d: Some(d), ..Targets::default() })
    }

    pub fn inf_rmi(z: usize, x: usize, f: Vec<usize>, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::InfRmi, z, x, Targets { f: Some(f), v: Some(v), ..Targets::default() })
    }

    pub fn fin_sing(z: usize, x: usize, beta: Vec<Poly<F>>, d: Vec<usize>, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::FinSing, z, x, Targets { beta: Some(beta), d: Some(d), v: Some(v), ..Targets::default() })
    }

    pub fn fin_cmi(z: usize, x: usize, beta: Vec<Poly<F>>, d: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::FinCmi, z, x, Targets { beta: Some(beta), d: Some(d), ..Targets::default() })
    }

    pub fn fin_rmi(z: usize, x: usize, beta: Vec<Poly<F>>, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::FinRmi, z, x, Targets { beta: Some(beta), v: Some(v), ..Targets::default() })
    }

    pub fn sing(z: usize, x: usize, d: Vec<usize>, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::Sing, z, x, Targets { d: Some(d), v: Some(v), ..Targets::default() })
    }

    pub fn rmi(z: usize, x: usize, v: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::Rmi, z, x, Targets { v: Some(v), ..Targets::default() })
    }

    pub fn cmi(z: usize, x: usize, d: Vec<usize>) -> Result<Self, CompletionError> {
        Self::new(Variant::Cmi, z, x, Targets { d: Some(d), ..Targets::default() })
    }

    /// The invariants of an actual completion, restricted to what `variant` prescribes.
    pub fn project(variant: Variant, z: usize, base_rank: usize, completed: &Eigenstructure<F>) -> Result<Self, CompletionError> {
        let x = completed
            .rank()
            .checked_sub(base_rank)
            .ok_or_else(|| CompletionError::InvalidPrescription("completion lowers the rank".into()))?;
        let t = Targets {
            gamma: variant.wants_gamma().then(|| completed.phis()),
            f: variant.wants_f().then(|| completed.es().to_vec()),
            beta: variant.wants_beta().then(|| completed.alphas().to_vec()),
            d: variant.wants_d().then(|| completed.cmi().to_vec()),
            v: variant.wants_v().then(|| completed.rmi().to_vec()),
        };
        Self::new(variant, z, x, t)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn targets(&self) -> &Targets<F> {
        &self.t
    }

    pub fn gamma(&self) -> Option<&[HomogFactor<F>]> {
        self.t.gamma.as_deref()
    }

    pub fn f(&self) -> Option<&[usize]> {
        self.t.f.as_deref()
    }

    pub fn beta(&self) -> Option<&[Poly<F>]> {
        self.t.beta.as_deref()
    }

    pub fn d(&self) -> Option<&[usize]> {
        self.t.d.as_deref()
    }

    pub fn v(&self) -> Option<&[usize]> {
        self.t.v.as_deref()
    }

    /// Same targets for the transposed problem (column completion).
    pub fn transposed(&self) -> Self {
        let t = Targets { d: self.t.v.clone(), v: self.t.d.clone(), ..self.t.clone() };
        Prescription { variant: self.variant.transposed(), z: self.z, x: self.x, t }
    }

    /// Checks sizes against the matrix being completed.
    pub fn validate_against(&self, base: &Eigenstructure<F>) -> Result<(), CompletionError> {
        let (r, m, n) = (base.rank(), base.rows(), base.cols());
        let bad = |m: String| Err(CompletionError::InvalidPrescription(m));
        if self.x > (n - r).min(self.z) {
            return bad(format!("x = {} exceeds min(z, n - r) = {}", self.x, (n - r).min(self.z)));
        }
        let rr = r + self.x;
        let lens = [
            ("gamma", self.t.gamma.as_ref().map(Vec::len), rr),
            ("f", self.t.f.as_ref().map(Vec::len), rr),
            ("beta", self.t.beta.as_ref().map(Vec::len), rr),
            ("d", self.t.d.as_ref().map(Vec::len), n - rr),
            ("v", self.t.v.as_ref().map(Vec::len), m + self.z - rr),
        ];
        for (name, len, want) in lens {
            if let Some(len) = len {
                if len != want {
                    return bad(format!("{name} has length {len}, expected {want}"));
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Prescription<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::structmat::fmt_seq;
        write!(f, "{} z={} x={}", self.variant, self.z, self.x)?;
        if let Some(g) = &self.t.gamma {
            let parts: Vec<String> = g.iter().map(|h| h.to_string()).collect();
            write!(f, " γ=({})", parts.join(", "))?;
        }
        if let Some(v) = &self.t.f {
            write!(f, " f={}", fmt_seq(v))?;
        }
        if let Some(b) = &self.t.beta {
            let parts: Vec<String> = b.iter().map(|p| p.to_string()).collect();
            write!(f, " β=({})", parts.join(", "))?;
        }
        if let Some(v) = &self.t.d {
            write!(f, " d={}", fmt_seq(v))?;
        }
        if let Some(v) = &self.t.v {
            write!(f, " v={}", fmt_seq(v))?;
        }
        Ok(())
    }
}

/// Verdict of one condition with both sides rendered for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub id: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<GenMajTrace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSeq {
    pub name: String,
    pub values: Vec<i64>,
}

/// Outcome of a feasibility predicate.
///
/// `field_caveat` marks a positive verdict whose sufficiency argument needs
/// an algebraically closed field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub variant: Variant,
    pub feasible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<NamedValue>,
    pub sequences: Vec<NamedSeq>,
    pub conditions: Vec<Condition>,
    pub field_caveat: bool,
}

impl FeasibilityReport {
    pub fn constant_value(&self) -> Option<i64> {
        self.constant.as_ref().map(|c| c.value)
    }

    pub fn sequence(&self, name: &str) -> Option<&[i64]> {
        self.sequences.iter().find(|s| s.name == name).map(|s| s.values.as_slice())
    }

    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for FeasibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.feasible, self.field_caveat) {
            (false, _) => "infeasible",
            (true, false) => "feasible",
            (true, true) => "feasible (needs an algebraically closed field)",
        };
        writeln!(f, "{}: {verdict}", self.variant)?;
        if let Some(c) = &self.constant {
            writeln!(f, "  {} = {}", c.name, c.value)?;
        }
        for s in &self.sequences {
            writeln!(f, "  {} = {:?}", s.name, s.values)?;
        }
        for c in &self.conditions {
            let mark = if c.holds { "ok  " } else { "FAIL" };
            writeln!(f, "  [{mark}] {:<26} {}  vs  {}", c.id, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

/// Which chain a constructive proof produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chain<F: Field> {
    Beta(Vec<Poly<F>>),
    F(Vec<usize>),
    Gamma(Vec<HomogFactor<F>>),
}

/// Output of a chain construction: the staircase parameters for a positive
/// constant, the middle element, and the chain itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConstruction<F: Field> {
    pub constant: i64,
    pub g: Option<usize>,
    pub h: Option<usize>,
    pub w: Option<usize>,
    pub tau: String,
    pub chain: Chain<F>,
}

impl<F: Field> fmt::Display for ChainConstruction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chain = match &self.chain {
            Chain::Beta(b) => {
                let p: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("β=({})", p.join(", "))
            }
            Chain::F(v) => format!("f={}", crate::structmat::fmt_seq(v)),
            Chain::Gamma(g) => {
                let p: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                format!("γ=({})", p.join(", "))
            }
        };
        match (self.g, self.h, self.w) {
            (Some(g), Some(h), Some(w)) => {
                write!(f, "constant={} g={g} h={h} w={w} τ={} {chain}", self.constant, self.tau)
            }
            _ => write!(f, "constant={} τ={} {chain}", self.constant, self.tau),
        }
    }
}
