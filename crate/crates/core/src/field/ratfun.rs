//! Rational functions in one transcendental `q` over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// A reduced fraction `num / den` of integer polynomials in `q`.
///
/// Canonical form: `num` and `den` are coprime in Q[q], the integer content
/// of the pair is 1, `den` has a positive leading coefficient, and zero is
/// stored as `0/1`. Two canonical values are equal iff their fields match.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFun::from_int(BigInt::one())
    }

    pub fn from_int(c: BigInt) -> Self {
        RatFun { num: IntPoly::constant(c), den: IntPoly::one() }
    }

    pub fn from_ratio(n: BigInt, d: BigInt) -> Result<Self> {
        RatFun::normalize(IntPoly::constant(n), IntPoly::constant(d))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFun { num: m, den: IntPoly::one() }
        } else {
            RatFun { num: IntPoly::one(), den: m }
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Brings `num/den` to canonical form.
    pub fn normalize(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let (mut num, mut den) = (num, den);
        let g = IntPoly::gcd_primitive(&num, &den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        Ok(RatFun { num, den })
    }

    fn from_parts(num: IntPoly, den: IntPoly) -> Self {
        RatFun::normalize(num, den).expect("nonzero denominator")
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return RatFun { num: self.num.add(&other.num), den: IntPoly::one() };
            }
            return RatFun::from_parts(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFun::from_parts(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFun { num: self.num.mul(&other.num), den: IntPoly::one() };
        }
        // Cross-cancel before multiplying to keep the gcd work small.
        let g1 = IntPoly::gcd_primitive(&self.num, &other.den);
        let g2 = IntPoly::gcd_primitive(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            RatFun { num, den }
        } else {
            RatFun { num: num.div_scalar_exact(&c), den: den.div_scalar_exact(&c) }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RatFun { num, den })
    }

    /// Evaluates at an integer point, `None` at a pole.
    pub fn eval_i64(&self, q: i64) -> Option<num_rational::BigRational> {
        let d = self.den.eval_i64(q);
        if d.is_zero() {
            return None;
        }
        Some(num_rational::BigRational::new(self.num.eval_i64(q), d))
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &IntPoly| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
