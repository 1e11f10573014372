//! Exact field arithmetic: arbitrary-precision rationals and prime-field
//! residues. Equality is decidable and every operation is exact.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::HopfError;

/// The base field: the rationals, or the prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Prime field of order `p`; rejects composites.
    pub fn prime(p: u64) -> Result<Self, HopfError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(HopfError::NotAPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{}", p),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. The variant encodes the field; mixing fields in
/// one expression is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Residue { modulus: u64, value: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Residue { modulus: p, value: 0 },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Residue { modulus: p, value: r }
            }
        }
    }

    /// `a/b` in the field; in `F_p` this is `a * b^{-1} mod p`.
    pub fn from_fraction(field: FieldSpec, num: i64, den: i64) -> Result<Self, HopfError> {
        let n = Scalar::from_i64(field, num);
        let d = Scalar::from_i64(field, den);
        n.div(&d)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { modulus: p, value: a }, Scalar::Residue { modulus: q, value: b }) => {
                assert_eq!(p, q, "field mismatch in scalar arithmetic");
                Scalar::Residue {
                    modulus: *p,
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { modulus: p, value: a } => Scalar::Residue {
                modulus: *p,
                value: if *a == 0 { 0 } else { p - a },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { modulus: p, value: a }, Scalar::Residue { modulus: q, value: b }) => {
                assert_eq!(p, q, "field mismatch in scalar arithmetic");
                Scalar::Residue {
                    modulus: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("field mismatch in scalar arithmetic"),
        }
    }

    pub fn inv(&self) -> Result<Scalar, HopfError> {
        if self.is_zero() {
            return Err(HopfError::NotInvertible(": zero scalar".into()));
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { modulus: p, value: a } => Scalar::Residue {
                modulus: *p,
                value: mod_inverse(*a, *p),
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, HopfError> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Modular inverse by the extended Euclidean algorithm; `p` prime, `a != 0`.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "not invertible mod p");
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{}", value),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = FieldSpec::Rationals;
        let half = Scalar::from_fraction(q, 1, 2).unwrap();
        let third = Scalar::from_fraction(q, 1, 3).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum, Scalar::from_fraction(q, 5, 6).unwrap());
        assert_eq!(half.mul(&half).add(&half.mul(&half)), half);
    }

    #[test]
    fn prime_field_inverse() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = Scalar::from_i64(f5, 2);
        let inv = two.inv().unwrap();
        assert_eq!(two.mul(&inv), Scalar::one(f5));
        assert_eq!(Scalar::from_fraction(f5, 1, 2).unwrap(), Scalar::from_i64(f5, 3));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn negatives_wrap_in_prime_field() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(Scalar::from_i64(f5, -1), Scalar::from_i64(f5, 4));
        assert_eq!(Scalar::from_i64(f5, 3).neg(), Scalar::from_i64(f5, 2));
    }
}
