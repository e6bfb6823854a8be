use std::fmt;

use super::field::Field;
use super::poly::{poly_lcm, Poly};

/// A monic homogeneous factor `t^e * t^deg(alpha) * alpha(s/t)`.
///
/// The pair `(e, alpha)` determines the factor completely: `alpha` carries
/// the finite part and `e` the power of `t` (the part at infinity).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomogFactor<F: Field> {
    pub e: usize,
    pub alpha: Poly<F>,
}

impl<F: Field> HomogFactor<F> {
    /// Panics unless `alpha` is monic.
    pub fn new(e: usize, alpha: Poly<F>) -> Self {
        assert!(alpha.is_monic(), "finite part of a homogeneous factor must be monic");
        HomogFactor { e, alpha }
    }

    pub fn unit(field: &F) -> Self {
        HomogFactor { e: 0, alpha: Poly::one(field) }
    }

    pub fn is_unit(&self) -> bool {
        self.e == 0 && self.alpha.is_one()
    }

    pub fn degree(&self) -> usize {
        self.e + self.alpha.deg()
    }

    /// `self | other` in F[s, t].
    pub fn divides(&self, other: &Self) -> bool {
        self.e <= other.e && self.alpha.divides(&other.alpha)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        HomogFactor {
            e: self.e.max(other.e),
            alpha: poly_lcm(&self.alpha, &other.alpha).expect("monic factors are nonzero"),
        }
    }
}

/// Degree of the homogeneous lcm of two factors.
pub fn hlcm_deg<F: Field>(phi: &HomogFactor<F>, gamma: &HomogFactor<F>) -> usize {
    phi.e.max(gamma.e)
        + poly_lcm(&phi.alpha, &gamma.alpha)
            .expect("monic factors are nonzero")
            .deg()
}

/// Renders the homogeneous polynomial itself, e.g. `s+2t` or `t(s^2+t^2)`.
impl<F: Field> fmt::Display for HomogFactor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.alpha.field();
        let d = self.alpha.deg();
        let mut body = String::new();
        for (k, c) in self.alpha.coeffs().iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let negative = field.is_negative(c);
            let mag = if negative { field.neg(c) } else { c.clone() };
            if negative {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            let tpow = d - k;
            let mut mono = String::new();
            if k > 0 {
                mono.push('s');
                if k > 1 {
                    mono.push_str(&format!("^{k}"));
                }
            }
            if tpow > 0 {
                mono.push('t');
                if tpow > 1 {
                    mono.push_str(&format!("^{tpow}"));
                }
            }
            if !field.is_one(&mag) || mono.is_empty() {
                let m = field.format_elem(&mag);
                if m.contains('/') && !mono.is_empty() {
                    body.push_str(&format!("({m})"));
                } else {
                    body.push_str(&m);
                }
            }
            body.push_str(&mono);
        }
        let tpart = match self.e {
            0 => String::new(),
            1 => "t".to_string(),
            e => format!("t^{e}"),
        };
        match (tpart.is_empty(), d == 0) {
            (true, _) => f.write_str(&body),
            (false, true) => f.write_str(&tpart),
            (false, false) => write!(f, "{tpart}({body})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Gfp, Rationals};

    #[test]
    fn hlcm_degree_examples() {
        let q = Rationals;
        let phi = HomogFactor::new(0, Poly::from_i64s(&q, &[1, 0, 1]));
        assert_eq!(hlcm_deg(&phi, &HomogFactor::unit(&q)), 2);
        let a = HomogFactor::new(1, Poly::s(&q));
        let b = HomogFactor::new(0, Poly::from_i64s(&q, &[1, 1]));
        assert_eq!(hlcm_deg(&a, &b), 3);
        assert_eq!(hlcm_deg(&HomogFactor::unit(&q), &HomogFactor::unit(&q)), 0);
    }

    #[test]
    fn divisibility_is_componentwise() {
        let q = Rationals;
        let a = HomogFactor::new(1, Poly::s(&q));
        let b = HomogFactor::new(2, Poly::from_i64s(&q, &[0, 1, 1]));
        let c = HomogFactor::new(0, Poly::from_i64s(&q, &[0, 1, 1]));
        assert!(a.divides(&b));
        assert!(!a.divides(&c));
        assert!(c.divides(&b));
    }

    #[test]
    fn display_homogeneous() {
        let f = Gfp::new(5).unwrap();
        assert_eq!(HomogFactor::new(0, Poly::from_i64s(&f, &[2, 1])).to_string(), "s+2t");
        assert_eq!(HomogFactor::new(0, Poly::from_i64s(&f, &[1, 0, 1])).to_string(), "s^2+t^2");
        assert_eq!(HomogFactor::new(2, Poly::one(&f)).to_string(), "t^2");
        assert_eq!(HomogFactor::new(1, Poly::s(&f)).to_string(), "t(s)");
        assert_eq!(HomogFactor::<Gfp>::unit(&f).to_string(), "1");
    }
}
