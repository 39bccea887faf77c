use alloc::collections::BTreeMap;
use core::fmt;

use super::field::{Field, Scalar};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Exponent of a Laurent monomial `x^a y^b z^c` with `a, b` unrestricted and
/// `0 <= c < δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentExponent {
    pub a: i64,
    pub b: i64,
    pub c: u32,
}

impl LaurentExponent {
    pub fn degree(&self) -> i64 {
        self.a + self.b + self.c as i64
    }
}

impl fmt::Display for LaurentExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^({})*y^({})*z^{}", self.a, self.b, self.c)
    }
}

/// An element of `R_{xy}` in z-reduced form: a finite sum of Laurent monomials
/// with `z`-exponent below the curve degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentElement {
    field: Field,
    delta: u32,
    terms: BTreeMap<LaurentExponent, Scalar>,
}

impl LaurentElement {
    pub fn zero(field: Field, delta: u32) -> LaurentElement {
        LaurentElement {
            field,
            delta,
            terms: BTreeMap::new(),
        }
    }

    /// `p / (x^x_power y^y_power)` for a z-reduced polynomial `p`.
    pub fn from_fraction(p: &Polynomial, x_power: u32, y_power: u32, delta: u32) -> Result<Self> {
        let mut out = LaurentElement::zero(p.field(), delta);
        for (m, c) in p.terms() {
            let [a, b, zc] = m.exponents();
            out.insert(
                LaurentExponent {
                    a: a as i64 - x_power as i64,
                    b: b as i64 - y_power as i64,
                    c: zc,
                },
                c.clone(),
            )?;
        }
        Ok(out)
    }

    /// Adds `c · x^a y^b z^c`; fails if the `z` exponent is not reduced.
    pub fn insert(&mut self, e: LaurentExponent, c: Scalar) -> Result<()> {
        if e.c >= self.delta {
            return Err(Error::ShapeMismatch);
        }
        if c.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if c.is_zero() {
            return Ok(());
        }
        let sum = match self.terms.get(&e) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentExponent, &Scalar)> + '_ {
        self.terms.iter()
    }

    /// `Some(k)` when every term has ring degree `k`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(LaurentExponent::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn checked_add(&self, other: &LaurentElement) -> Result<LaurentElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.delta != other.delta {
            return Err(Error::ShapeMismatch);
        }
        let mut out = self.clone();
        for (e, c) in other.terms.iter() {
            out.insert(*e, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> LaurentElement {
        let mut out = LaurentElement::zero(self.field, self.delta);
        if c.is_zero() {
            return out;
        }
        for (e, a) in self.terms.iter() {
            out.terms.insert(*e, a * c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_polynomial;

    #[test]
    fn fraction_shifts_exponents() {
        let p = parse_polynomial("x*z^2 + y^3", Field::RATIONALS).unwrap();
        let u = LaurentElement::from_fraction(&p, 2, 2, 3).unwrap();
        assert_eq!(u.homogeneous_degree(), Some(-1));
        let exps: alloc::vec::Vec<_> = u.terms().map(|(e, _)| *e).collect();
        assert!(exps.contains(&LaurentExponent { a: -1, b: -2, c: 2 }));
        assert!(exps.contains(&LaurentExponent { a: -2, b: 1, c: 0 }));
    }

    #[test]
    fn unreduced_z_is_rejected() {
        let p = parse_polynomial("z^3", Field::RATIONALS).unwrap();
        assert!(LaurentElement::from_fraction(&p, 0, 0, 3).is_err());
    }

    #[test]
    fn mixed_degrees_are_not_homogeneous() {
        let p = parse_polynomial("x + y^2", Field::RATIONALS).unwrap();
        let u = LaurentElement::from_fraction(&p, 1, 1, 3).unwrap();
        assert_eq!(u.homogeneous_degree(), None);
    }
}
