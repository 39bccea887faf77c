use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Scalar};
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// The polynomial ring a [`Polynomial`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    /// `K[x, y]`
    XY,
    /// `K[x, y, z]`
    XYZ,
}

impl Ambient {
    pub fn variable_count(&self) -> usize {
        match self {
            Ambient::XY => 2,
            Ambient::XYZ => 3,
        }
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        match self {
            Ambient::XY => m.exponent(2) == 0,
            Ambient::XYZ => true,
        }
    }
}

/// A multivariate polynomial with exact coefficients.
///
/// Terms are kept in a map ordered by graded reverse lex, zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    ambient: Ambient,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field, ambient: Ambient) -> Polynomial {
        Polynomial {
            field,
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field, ambient: Ambient) -> Polynomial {
        Polynomial::constant(field.one(), ambient)
    }

    pub fn constant(c: Scalar, ambient: Ambient) -> Polynomial {
        let field = c.field();
        let mut p = Polynomial::zero(field, ambient);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    /// `c * m`; fails if `m` uses a variable outside the ambient ring.
    pub fn term(c: Scalar, m: Monomial, ambient: Ambient) -> Result<Polynomial> {
        if !ambient.admits(&m) {
            return Err(Error::UnknownVariable {
                position: 0,
                name: "z".into(),
            });
        }
        let mut p = Polynomial::zero(c.field(), ambient);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        Ok(p)
    }

    /// The monomial `m` with coefficient one.
    pub fn monomial(field: Field, ambient: Ambient, m: Monomial) -> Polynomial {
        assert!(ambient.admits(&m), "monomial outside ambient ring");
        let mut p = Polynomial::zero(field, ambient);
        p.terms.insert(m, field.one());
        p
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I>(field: Field, ambient: Ambient, terms: I) -> Result<Polynomial>
    where
        I: IntoIterator<Item = (Scalar, Monomial)>,
    {
        let mut p = Polynomial::zero(field, ambient);
        for (c, m) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            if !ambient.admits(&m) {
                return Err(Error::AmbientMismatch);
            }
            p.add_term(c, m);
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.last_key_value().map(|(m, _)| *m)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// Maximum total degree of the support; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `Some(d)` for a nonzero homogeneous polynomial of degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.total_degree()
        } else {
            None
        }
    }

    /// Largest exponent of variable `index` in the support.
    pub fn max_exponent(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, c: Scalar, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<Scalar> {
        self.terms.remove(m)
    }

    /// `self -= c * m * g` in place.
    pub(crate) fn sub_scaled(&mut self, c: &Scalar, m: Monomial, g: &Polynomial) {
        for (gm, gc) in g.terms.iter() {
            self.add_term(-(c * gc), m * *gm);
        }
    }

    /// `self += c * m * g` in place.
    pub(crate) fn add_scaled(&mut self, c: &Scalar, m: Monomial, g: &Polynomial) {
        for (gm, gc) in g.terms.iter() {
            self.add_term(c * gc, m * *gm);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut p = Polynomial::zero(self.field, self.ambient);
        if c.is_zero() {
            return p;
        }
        for (m, a) in self.terms.iter() {
            p.terms.insert(*m, a * c);
        }
        p
    }

    pub fn mul_term(&self, c: &Scalar, m: Monomial) -> Polynomial {
        let mut p = Polynomial::zero(self.field, self.ambient);
        if c.is_zero() {
            return p;
        }
        for (gm, a) in self.terms.iter() {
            p.terms.insert(*gm * m, a * c);
        }
        p
    }

    /// Divides every term by the monic leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient().and_then(Scalar::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(c.clone(), *m);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(-c, *m);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.field, self.ambient);
        for (m, c) in self.terms.iter() {
            out.add_scaled(c, *m, other);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.ambient);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-embeds the polynomial into another ambient ring; fails when `z`
    /// occurs and the target is `K[x, y]`.
    pub fn to_ambient(&self, ambient: Ambient) -> Result<Polynomial> {
        if self.terms.keys().any(|m| !ambient.admits(m)) {
            return Err(Error::AmbientMismatch);
        }
        Ok(Polynomial {
            field: self.field,
            ambient,
            terms: self.terms.clone(),
        })
    }

    /// Substitutes polynomials for `x`, `y`, `z`.
    pub fn compose(&self, images: &[Polynomial; 3]) -> Result<Polynomial> {
        let ambient = images[0].ambient;
        for img in images.iter() {
            if img.field != self.field {
                return Err(Error::FieldMismatch);
            }
            if img.ambient != ambient {
                return Err(Error::AmbientMismatch);
            }
        }
        let mut out = Polynomial::zero(self.field, ambient);
        for (m, c) in self.terms.iter() {
            let e = m.exponents();
            let mut t = Polynomial::constant(c.clone(), ambient);
            for (img, k) in images.iter().zip(e.iter()) {
                if *k > 0 {
                    t = &t * &img.pow(*k);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Splits into homogeneous parts, keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Polynomial> {
        let mut parts: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            parts
                .entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.field, self.ambient))
                .terms
                .insert(*m, c.clone());
        }
        parts
    }

    /// Coefficients of the powers of `z`: `self = Σ z^c · part[c]`, with each
    /// part free of `z` and returned in the `K[x, y]` ambient.
    pub fn z_parts(&self) -> BTreeMap<u32, Polynomial> {
        let mut parts: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in self.terms.iter() {
            let [a, b, zc] = m.exponents();
            parts
                .entry(zc)
                .or_insert_with(|| Polynomial::zero(self.field, Ambient::XY))
                .terms
                .insert(Monomial::new(a, b, 0), c.clone());
        }
        parts
    }

    /// Partial derivative with respect to variable `index` (0 = x, 1 = y, 2 = z).
    pub fn derivative(&self, index: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.field, self.ambient);
        for (m, c) in self.terms.iter() {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents();
            exps[index] -= 1;
            let factor = self.field.int(e as i64);
            out.add_term(c * &factor, Monomial::new(exps[0], exps[1], exps[2]));
        }
        out
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.terms.keys().rev().copied().collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut p = Polynomial::zero(self.field, self.ambient);
        for (m, c) in self.terms.iter() {
            p.terms.insert(*m, -c);
        }
        p
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let (neg, abs) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_polynomial;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, Field::RATIONALS).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q("x+y") * &q("x-y"), q("x^2-y^2"));
    }

    #[test]
    fn additive_identity() {
        let p = q("x^2*y - 3*z^3");
        let zero = Polynomial::zero(Field::RATIONALS, Ambient::XYZ);
        assert_eq!(&p + &zero, p);
    }

    #[test]
    fn characteristic_kills_multiples() {
        let f3 = Field::prime(3).unwrap();
        let three_x = parse_polynomial("3*x", f3).unwrap();
        assert!(three_x.is_zero());
        let x = parse_polynomial("x", f3).unwrap();
        assert!((&(&x + &x) + &x).is_zero());
    }

    #[test]
    fn mixed_operands_are_rejected() {
        let a = q("x");
        let b = parse_polynomial("x", Field::prime(5).unwrap()).unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::FieldMismatch));
        let c = a.to_ambient(Ambient::XY).unwrap();
        assert_eq!(a.checked_mul(&c), Err(Error::AmbientMismatch));
    }

    #[test]
    fn degrees() {
        assert_eq!(q("x^4").total_degree(), Some(4));
        assert_eq!(q("x^3+y^3+z^3").total_degree(), Some(3));
        assert_eq!(q("x - x").total_degree(), None);
        assert_eq!(q("x^2 + y").homogeneous_degree(), None);
        assert!(q("0").is_homogeneous());
    }

    #[test]
    fn display_is_descending_grevlex() {
        assert_eq!(q("z^3 + y^3 + x^3").to_string(), "x^3 + y^3 + z^3");
        assert_eq!(q("-x*y + 1/2*z^2").to_string(), "-x*y + 1/2*z^2");
        let f3 = Field::prime(3).unwrap();
        assert_eq!(parse_polynomial("-x", f3).unwrap().to_string(), "2*x");
    }

    #[test]
    fn z_parts_split_by_power() {
        let p = q("x*z^2 + y*z^2 + x^3");
        let parts = p.z_parts();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&2], q("x+y").to_ambient(Ambient::XY).unwrap());
    }

    #[test]
    fn compose_linear_change() {
        let p = q("x^2 + z");
        let x = q("x");
        let y = q("y");
        let z = q("z + x");
        assert_eq!(p.compose(&[x, y, z]).unwrap(), q("x^2 + x + z"));
    }
}
