use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::{self, Factorization};
use super::poly::Poly;
use super::AlgebraError;

/// An exact field, given as a lightweight descriptor object.
///
/// Elements are plain values; every operation goes through the descriptor so
/// that runtime parameters (the modulus of GF(p)) never need to be stored in
/// each element.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// All elements in a fixed order, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Sign used by pretty-printers; always false outside ordered fields.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// Splits a monic polynomial into monic irreducible factors with
    /// multiplicities. Factors the field cannot split are reported as
    /// `unsplit` blocks.
    fn factor(&self, f: &Poly<Self>) -> Factorization<Self>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gfp {
    p: u32,
}

impl Gfp {
    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if p < 2 || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Gfp { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    fn pow(&self, base: u32, mut exp: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u32;
    while (k as u64) * (k as u64) <= p as u64 {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field for Gfp {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.elem(v)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p as u64 - 2))
        }
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }
    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }
    fn factor(&self, f: &Poly<Self>) -> Factorization<Self> {
        factor::factor_gfp(f)
    }
}

/// The rational numbers, with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Rationals;

impl Rationals {
    pub fn ratio(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Parses `"num/den"` or a bare integer.
    pub fn parse(&self, s: &str) -> Result<BigRational, AlgebraError> {
        let bad = || AlgebraError::BadScalar(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(num, den))
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn factor(&self, f: &Poly<Self>) -> Factorization<Self> {
        factor::factor_rational(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gfp_rejects_composites() {
        assert!(Gfp::new(4).is_err());
        assert!(Gfp::new(1).is_err());
        assert!(Gfp::new(7).is_ok());
    }

    #[test]
    fn gfp_inverse_roundtrip() {
        let f = Gfp::new(5).unwrap();
        for a in 1..5u32 {
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn rationals_parse_lowest_terms() {
        let q = Rationals;
        let a = q.parse("6/-4").unwrap();
        assert_eq!(q.format_elem(&a), "-3/2");
        assert_eq!(q.format_elem(&q.parse("7").unwrap()), "7");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }
}
