//! Exact scalar arithmetic over the rationals or a prime field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Choice of coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("coefficient {num}/{den} is undefined over a field of characteristic {p}")]
    UndefinedCoefficient { num: i64, den: i64, p: u64 },
}

/// A scalar, tagged by which kind of field it lives in. Elements of a prime
/// field are stored as their least nonnegative residue.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

/// Exact field arithmetic for a fixed [`FieldSpec`]. Prime moduli are
/// validated at construction; all operations are total except inversion of
/// zero and lifting fractions whose denominator vanishes modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    spec: FieldSpec,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field {
            spec: FieldSpec::Rationals,
        }
    }

    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field {
            spec: FieldSpec::Prime(p),
        })
    }

    pub fn new(spec: FieldSpec) -> Result<Field, FieldError> {
        match spec {
            FieldSpec::Rationals => Ok(Field::rationals()),
            FieldSpec::Prime(p) => Field::prime(p),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u64 {
        match self.spec {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Residue(1),
        }
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self.spec {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Residue((n.rem_euclid(p as i64)) as u64),
        }
    }

    /// Lifts the fraction `num/den` into the field. Over a prime field this
    /// fails when `p | den` (e.g. `1/2` over F₂), which is exactly the
    /// characteristic restriction surfaced to callers.
    pub fn from_fraction(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        match self.spec {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Prime(p) => {
                if den.rem_euclid(p as i64) == 0 {
                    return Err(FieldError::UndefinedCoefficient { num, den, p });
                }
                let n = self.from_integer(num);
                let d = self.from_integer(den);
                Ok(self.mul(&n, &self.inv(&d).expect("nonzero denominator")))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.spec, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue((x + y) % p)
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self.spec, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (FieldSpec::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.spec, a, b) {
            (FieldSpec::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (FieldSpec::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        match (self.spec, a) {
            (FieldSpec::Rationals, Scalar::Rational(x)) => Ok(Scalar::Rational(x.recip())),
            (FieldSpec::Prime(p), Scalar::Residue(x)) => {
                // Fermat: x^(p-2) mod p.
                let mut base = *x as u128;
                let mut exp = p - 2;
                let m = p as u128;
                let mut acc: u128 = 1;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Ok(Scalar::Residue(acc as u64))
            }
            _ => panic!("scalar kind does not match field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// All nonzero field elements, for exhaustive enumeration over small
    /// prime fields. Unsupported over the rationals.
    pub fn nonzero_elements(&self) -> Option<Vec<Scalar>> {
        match self.spec {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((1..p).map(Scalar::Residue).collect()),
        }
    }
}

impl Scalar {
    /// True for 1; used when rendering linear combinations.
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue(r) => *r == 1,
        }
    }

    /// Rationals with negative numerator render with a leading minus sign;
    /// residues never do.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue(_) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Residue(r) => write!(f, "{}", r),
        }
    }
}
