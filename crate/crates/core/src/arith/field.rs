use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest supported prime modulus; residues multiply without overflow in `u64`.
const MAX_MODULUS: u64 = u32::MAX as u64;

/// A coefficient field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    modulus: Option<u64>,
}

impl Field {
    pub const RATIONALS: Field = Field { modulus: None };

    /// The prime field `F_p`. Fails unless `p` is a prime below `2^32`.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { modulus: Some(p) })
    }

    /// `0` for ℚ, `p` for `F_p`.
    pub fn characteristic(&self) -> u64 {
        self.modulus.unwrap_or(0)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_rationals(&self) -> bool {
        self.modulus.is_none()
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// Image of an integer.
    pub fn int(&self, v: i64) -> Scalar {
        match self.modulus {
            None => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(v)))),
            Some(p) => Scalar(Repr::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            }),
        }
    }

    /// Image of an arbitrary-precision integer.
    pub fn big_int(&self, v: &BigInt) -> Scalar {
        match self.modulus {
            None => Scalar(Repr::Rational(BigRational::from_integer(v.clone()))),
            Some(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar(Repr::Residue {
                    value: r.to_u64().unwrap_or(0),
                    modulus: p,
                })
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.int(den);
        let inv = d.inv().ok_or(Error::DivisionByZero)?;
        Ok(&self.int(num) * &inv)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => f.write_str("QQ"),
            Some(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`], always stored in canonical form: reduced
/// rationals with positive denominator, or residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rational(_) => Field::RATIONALS,
            Repr::Residue { modulus, .. } => Field {
                modulus: Some(*modulus),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// The rational value, when the field is ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    /// The residue in `[0, p)`, when the field is `F_p`.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rational(_) => None,
            Repr::Residue { value, .. } => Some(*value),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_negative(),
            Repr::Residue { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn mismatch() -> ! {
    panic!("scalar arithmetic across different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Residue {
                    value: (a + b) % p,
                    modulus: *p,
                })
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a - b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Residue {
                    value: (a + p - b) % p,
                    modulus: *p,
                })
            }
            _ => mismatch(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Residue {
                    value: a * b % p,
                    modulus: *p,
                })
            }
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(-a)),
            Repr::Residue { value, modulus } => Scalar(Repr::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composite_moduli() {
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert!(Field::prime(13).is_ok());
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Field::RATIONALS;
        let a = q.ratio(6, -4).unwrap();
        let r = a.as_rational().unwrap();
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(q.ratio(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn residues_are_canonical() {
        let f3 = Field::prime(3).unwrap();
        assert!(f3.int(3).is_zero());
        assert_eq!(f3.int(-1).residue(), Some(2));
        assert_eq!(f3.ratio(1, 2).unwrap().residue(), Some(2));
    }

    fn scalar(field: Field) -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(move |(n, d)| match field.modulus() {
            None => field.ratio(n, d).unwrap(),
            Some(_) => field.int(n * d),
        })
    }

    #[allow(clippy::eq_op)]
    fn check_axioms(a: Scalar, b: Scalar, c: Scalar) {
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a + &b, &b + &a);
        assert!((&a - &a).is_zero());
        if let Some(ai) = a.inv() {
            assert!((&a * &ai).is_one());
        } else {
            assert!(a.is_zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms_rationals(a in scalar(Field::RATIONALS), b in scalar(Field::RATIONALS), c in scalar(Field::RATIONALS)) {
            check_axioms(a, b, c);
        }

        #[test]
        fn field_axioms_gf7(a in scalar(Field::prime(7).unwrap()), b in scalar(Field::prime(7).unwrap()), c in scalar(Field::prime(7).unwrap())) {
            check_axioms(a, b, c);
        }

        #[test]
        fn field_axioms_gf65521(a in scalar(Field::prime(65521).unwrap()), b in scalar(Field::prime(65521).unwrap()), c in scalar(Field::prime(65521).unwrap())) {
            check_axioms(a, b, c);
        }
    }
}
