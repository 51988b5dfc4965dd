//! Exact coefficient fields: the rationals, prime fields and Q(q).

mod parse;
pub mod poly;
pub mod ratfun;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use poly::IntPoly;
pub use ratfun::RatFun;

/// Which exact field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
    /// Rational functions in a transcendental `q`.
    RatFun,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(&self, n: BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n)),
            Field::Prime(p) => Scalar::Prime { value: reduce_mod(&n, p), modulus: p },
            Field::RatFun => Scalar::RatFun(RatFun::from_int(n)),
        }
    }

    /// `n/d` in this field.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Scalar> {
        self.from_i64(n).checked_div(&self.from_i64(d))
    }

    /// The indeterminate `q`; only Q(q) has one.
    pub fn q(&self) -> Result<Scalar> {
        self.q_pow(1)
    }

    pub fn q_pow(&self, k: i64) -> Result<Scalar> {
        match self {
            Field::RatFun => Ok(Scalar::RatFun(RatFun::q_pow(k))),
            _ => Err(Error::Parse(format!("field {self} has no indeterminate q"))),
        }
    }

    /// Parses an exact coefficient expression such as `1/(q-q^-1)` or `-3/4`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        parse::parse_scalar(*self, s)
    }

    pub fn of(s: &Scalar) -> Field {
        match s {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
            Scalar::RatFun(_) => Field::RatFun,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
            Field::RatFun => write!(f, "Q(q)"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `Qq`, `Q(q)`, `F<p>`, `GF(<p>)`, `Fp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        match t {
            "Q" | "QQ" | "rational" => return Ok(Field::Rational),
            "Qq" | "Q(q)" | "ratfun" => return Ok(Field::RatFun),
            _ => {}
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("Fp:"))
            .or_else(|| t.strip_prefix('F'));
        match digits.and_then(|d| d.parse::<u64>().ok()) {
            Some(p) => Field::prime(p),
            None => Err(Error::Parse(format!("unknown field '{s}'"))),
        }
    }
}

fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    r.to_u64().unwrap()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// An exact field element. All values are kept in canonical form, so
/// structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
    RatFun(RatFun),
}

impl Scalar {
    pub fn field(&self) -> Field {
        Field::of(self)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::RatFun(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::RatFun(r) => r.is_one(),
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch { left: self.field().to_string(), right: other.field().to_string() }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: p2 }) if p == p2 => {
                Scalar::Prime { value: ((*a as u128 + *b as u128) % *p as u128) as u64, modulus: *p }
            }
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Scalar::RatFun(a.add(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: p2 }) if p == p2 => {
                Scalar::Prime { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            (Scalar::RatFun(a), Scalar::RatFun(b)) => Scalar::RatFun(a.mul(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime { value: (modulus - value) % modulus, modulus: *modulus },
            Scalar::RatFun(a) => Scalar::RatFun(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => {
                Scalar::Prime { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
            Scalar::RatFun(a) => Scalar::RatFun(a.inv()?),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = self.field().one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(out)
    }

    /// Canonical string used in reports and golden files.
    pub fn to_report_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::RatFun(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operator forms panic on a field mismatch; every element of one computation
// lives in a single field, so a mismatch is a programming error there.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_add(&rhs.neg()).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

/// Rational numbers as a lossless embedding into any characteristic-zero field.
pub fn embed_rational(field: Field, r: &BigRational) -> Result<Scalar> {
    let n = field.from_bigint(r.numer().clone());
    let d = field.from_bigint(r.denom().clone());
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    n.checked_div(&d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_add() {
        let f = Field::Rational;
        let a = f.ratio(1, 2).unwrap();
        let b = f.ratio(1, 3).unwrap();
        assert_eq!(&a + &b, f.ratio(5, 6).unwrap());
    }

    #[test]
    fn ratfun_product() {
        let f = Field::RatFun;
        let q = f.q().unwrap();
        let one = f.one();
        let prod = &(&q + &one) * &(&q - &one);
        assert_eq!(prod, f.parse_scalar("q^2-1").unwrap());
    }

    #[test]
    fn ratfun_inverse_of_q_minus_qinv() {
        let f = Field::RatFun;
        let x = f.parse_scalar("q - q^-1").unwrap();
        // Independent route: (q^2-1)/q built from polynomial parts.
        let built =
            Scalar::RatFun(RatFun::normalize(IntPoly::from_i64s(&[-1, 0, 1]), IntPoly::from_i64s(&[0, 1])).unwrap());
        assert_eq!(x, built);
        let inv = x.inv().unwrap();
        let expect =
            Scalar::RatFun(RatFun::normalize(IntPoly::from_i64s(&[0, 1]), IntPoly::from_i64s(&[-1, 0, 1])).unwrap());
        assert_eq!(inv, expect);
        assert_eq!(inv.to_string(), "q/(q^2-1)");
    }

    #[test]
    fn normalize_examples() {
        let r = RatFun::normalize(IntPoly::from_i64s(&[-1, 0, 1]), IntPoly::from_i64s(&[-1, 1])).unwrap();
        assert_eq!(r, RatFun::normalize(IntPoly::from_i64s(&[1, 1]), IntPoly::one()).unwrap());
        let z = RatFun::normalize(IntPoly::zero(), IntPoly::from_i64s(&[0, 0, 0, 1])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.den(), &IntPoly::one());
        // 2 / ((q^2-1)/q) = 2q/(q^2-1)
        let two = Field::RatFun.from_i64(2);
        let d = Field::RatFun.parse_scalar("(q^2-1)/q").unwrap();
        let r = two.checked_div(&d).unwrap();
        assert_eq!(r, Field::RatFun.parse_scalar("2*q/(q^2-1)").unwrap());
        if let Scalar::RatFun(rf) = &r {
            assert_eq!(rf.num(), &IntPoly::from_i64s(&[0, 2]));
            assert_eq!(rf.den(), &IntPoly::from_i64s(&[-1, 0, 1]));
        }
        assert!(matches!(RatFun::normalize(IntPoly::one(), IntPoly::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn negative_denominator_is_flipped() {
        let r = RatFun::normalize(IntPoly::from_i64s(&[1]), IntPoly::from_i64s(&[1, -1])).unwrap();
        assert_eq!(r.den(), &IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(r.num(), &IntPoly::from_i64s(&[-1]));
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(Field::Rational.zero().inv(), Err(Error::DivisionByZero)));
        let a = Field::Rational.one();
        let b = Field::prime(2).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn field_names_parse() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("F2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("GF(5)".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("Qq".parse::<Field>().unwrap(), Field::RatFun);
        assert!("F4".parse::<Field>().is_err());
    }
}
