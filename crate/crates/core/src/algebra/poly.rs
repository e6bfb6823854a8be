use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use super::AlgebraError;

/// A univariate polynomial in `s` over an exact field.
///
/// Coefficients are stored in ascending order with no trailing zeros, so the
/// zero polynomial is the empty vector. Its degree is the sentinel `None`;
/// [`Poly::deg`] traps on it rather than letting a `-inf` leak into a sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn from_i64s(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * s^k`.
    pub fn monomial(field: &F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// The indeterminate `s`.
    pub fn s(field: &F) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    /// `s^k`.
    pub fn s_pow(field: &F, k: usize) -> Self {
        Self::monomial(field, field.one(), k)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `s^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a nonzero polynomial.
    ///
    /// Panics on the zero polynomial: its degree is `-inf` and must never
    /// enter an integer sum.
    pub fn deg(&self) -> usize {
        self.degree()
            .expect("degree of the zero polynomial used in arithmetic")
    }

    pub fn lead(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|c| self.field.is_one(c))
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(c) => {
                let ci = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&ci)
            }
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Poly { field: f.clone(), coeffs: self.coeffs.iter().map(|a| f.neg(a)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(f, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = f.mul(a, b);
                out[i + j] = f.add(&out[i + j], &t);
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = &self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(divisor.lead().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if f.is_zero(&rem[k]) {
                continue;
            }
            let q = f.mul(&rem[k], &lead_inv);
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&q, dc);
                rem[k - dd + j] = f.sub(&rem[k - dd + j], &t);
            }
            quot[k - dd] = q;
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// `self | other`. Every polynomial divides zero; zero divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.rem(self).is_zero()
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| f.mul(c, &f.from_i64(k as i64)))
            .collect();
        Self::new(f, coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// Lowest power of `s` with a nonzero coefficient (the `s`-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        let f = &self.field;
        self.coeffs.iter().position(|c| !f.is_zero(c))
    }

    /// Coefficients reversed inside a window of `width + 1` slots, i.e.
    /// `s^width * p(1/s)`.
    pub fn reversed(&self, width: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= width), "reversal window too small");
        let f = &self.field;
        let mut coeffs = vec![f.zero(); width + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[width - k] = c.clone();
        }
        Self::new(f, coeffs)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut acc = Self::one(&self.field).rem(modulus);
        let mut base = self.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Canonical order: by degree, then coefficients from the top down.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

/// Monic greatest common divisor; `gcd(p, 0) = monic(p)`.
pub fn poly_gcd<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>, AlgebraError> {
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Monic least common multiple of two nonzero polynomials.
pub fn poly_lcm<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>, AlgebraError> {
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let g = poly_gcd(p, q)?;
    let prod = p.mul(q);
    Ok(prod.exact_div(&g).expect("gcd divides the product").monic())
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Descending human form such as `s^2+1` or `-s+3/2`.
impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_descending(self, "s"))
    }
}

pub(crate) fn format_descending<F: Field>(p: &Poly<F>, var: &str) -> String {
    let field = p.field();
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let negative = field.is_negative(c);
        let mag = if negative { field.neg(c) } else { c.clone() };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag_str = field.format_elem(&mag);
        let unit = field.is_one(&mag);
        match k {
            0 => out.push_str(&mag_str),
            _ => {
                if !unit {
                    if mag_str.contains('/') {
                        out.push_str(&format!("({mag_str})"));
                    } else {
                        out.push_str(&mag_str);
                    }
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gfp, Rationals};

    #[test]
    fn gcd_over_gf5_splits_s2_plus_1() {
        let f = Gfp::new(5).unwrap();
        let a = Poly::from_i64s(&f, &[1, 0, 1]);
        let b = Poly::from_i64s(&f, &[2, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), Poly::from_i64s(&f, &[2, 1]));
    }

    #[test]
    fn gcd_with_unit_and_zero() {
        let q = Rationals;
        let p = Poly::from_i64s(&q, &[2, 0, 4]);
        assert!(poly_gcd(&p, &Poly::one(&q)).unwrap().is_one());
        assert_eq!(poly_gcd(&p, &Poly::zero(&q)).unwrap(), p.monic());
        assert_eq!(
            poly_gcd(&Poly::zero(&q), &Poly::zero(&q)),
            Err(AlgebraError::BothZero)
        );
    }

    #[test]
    fn gcd_over_q_coprime() {
        let q = Rationals;
        let a = Poly::from_i64s(&q, &[1, 0, 1]);
        let b = Poly::from_i64s(&q, &[1, 1]);
        assert!(poly_gcd(&a, &b).unwrap().is_one());
    }

    #[test]
    fn lcm_examples() {
        let q = Rationals;
        let s = Poly::s(&q);
        let s1 = Poly::from_i64s(&q, &[1, 1]);
        assert_eq!(poly_lcm(&s, &s1).unwrap(), Poly::from_i64s(&q, &[0, 1, 1]));
        let p = Poly::from_i64s(&q, &[3, 0, 6]);
        assert_eq!(poly_lcm(&p, &p).unwrap(), p.monic());
        assert_eq!(poly_lcm(&p, &Poly::zero(&q)), Err(AlgebraError::ZeroInput));

        let f = Gfp::new(5).unwrap();
        let a = Poly::from_i64s(&f, &[2, 1]);
        let b = Poly::from_i64s(&f, &[1, 0, 1]);
        assert_eq!(poly_lcm(&a, &b).unwrap(), b);
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn zero_degree_traps() {
        let _ = Poly::zero(&Rationals).deg();
    }

    #[test]
    fn display_is_descending() {
        let q = Rationals;
        assert_eq!(Poly::from_i64s(&q, &[1, 0, 1]).to_string(), "s^2+1");
        assert_eq!(Poly::from_i64s(&q, &[-1, 2, -1]).to_string(), "-s^2+2s-1");
        let half = Poly::new(&q, vec![q.ratio(1, 2), q.ratio(-3, 2)]);
        assert_eq!(half.to_string(), "-(3/2)s+1/2");
        assert_eq!(Poly::zero(&q).to_string(), "0");
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = Gfp::new(3).unwrap();
        let a = Poly::from_i64s(&f, &[1, 2, 0, 1, 2]);
        let b = Poly::from_i64s(&f, &[2, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().is_none_or(|d| d < 2));
    }
}
