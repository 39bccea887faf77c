//! The cone `R = K[x,y,z]/(F)` over a plane curve `Y = V(F)`.
//!
//! `F` is normalized to be monic in `z`, so `R` is a free `K[x, y]`-module with
//! basis `1, z, …, z^{δ-1}` and every element has a unique z-reduced normal
//! form. `H^1(Y, O_Y(k))` is modelled on the cover `{x ≠ 0}, {y ≠ 0}` by the
//! Laurent monomials `x^a y^b z^c` with `a, b ≤ -1` and `c < δ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Ambient, Field, LaurentElement, LaurentExponent, Monomial, Polynomial, Scalar};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Limits};

/// `dim_K R_k` for a plane curve of degree `delta`.
pub fn h0_dim(delta: u32, k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    fn pairs(n: i64) -> i64 {
        if n < 2 {
            0
        } else {
            n * (n - 1) / 2
        }
    }
    (pairs(k + 2) - pairs(k - delta as i64 + 2)) as u64
}

/// `dim_K H^1(Y, O_Y(k))` for a plane curve of degree `delta`.
pub fn h1_dim(delta: u32, k: i64) -> u64 {
    (0..delta as i64).map(|c| (c - k - 1).max(0) as u64).sum()
}

/// Genus of a smooth plane curve of degree `delta`.
pub fn plane_genus(delta: u32) -> u64 {
    let d = delta as u64;
    if d < 3 {
        0
    } else {
        (d - 1) * (d - 2) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceRing {
    field: Field,
    delta: u32,
    input_equation: Polynomial,
    equation: Polynomial,
    /// `z^δ ≡ tail` modulo `F`.
    tail: Polynomial,
    /// `(α, β)` of the substitution `x ← x + αz, y ← y + βz`, if one was needed.
    shift: Option<(Scalar, Scalar)>,
    smooth: bool,
}

impl HypersurfaceRing {
    /// Builds the ring of a homogeneous form of degree at least one.
    ///
    /// If the `z^δ` coefficient of `F` vanishes, the first shift
    /// `x ← x + αz, y ← y + βz` with `F(α, β, 1) ≠ 0` is applied, trying
    /// small `(α, β)` in a fixed order. Smoothness is checked with the
    /// Jacobian criterion and recorded; a singular curve is not an error here.
    pub fn new(f: &Polynomial, limits: &Limits) -> Result<HypersurfaceRing> {
        if f.is_zero() {
            return Err(Error::ZeroElement);
        }
        let f = f.to_ambient(Ambient::XYZ)?;
        let delta = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if delta == 0 {
            return Err(Error::InvalidDegreeData("curve degree must be at least 1".into()));
        }
        let field = f.field();
        let top = Monomial::variable(2, delta);

        let mut shift = None;
        let mut shifted = f.clone();
        if f.coefficient(&top).is_zero() {
            let (s, g) = find_monic_shift(&f, delta)?;
            shift = Some(s);
            shifted = g;
        }
        let lc = shifted.coefficient(&top);
        let equation = shifted.scale(&lc.inv().ok_or(Error::DivisionByZero)?);
        let mut tail = equation.clone();
        tail.remove_term(&top);
        let tail = -&tail;

        let smooth = jacobian_is_primary(&equation, limits)?;
        Ok(HypersurfaceRing {
            field,
            delta,
            input_equation: f,
            equation,
            tail,
            shift,
            smooth,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    /// `(δ - 1)(δ - 2) / 2`.
    pub fn genus(&self) -> u64 {
        plane_genus(self.delta)
    }

    /// The normalized equation, monic in `z`, in ring coordinates.
    pub fn equation(&self) -> &Polynomial {
        &self.equation
    }

    /// The equation as supplied.
    pub fn input_equation(&self) -> &Polynomial {
        &self.input_equation
    }

    pub fn coordinate_shift(&self) -> Option<&(Scalar, Scalar)> {
        self.shift.as_ref()
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    pub fn ensure_smooth(&self) -> Result<()> {
        if self.smooth {
            Ok(())
        } else {
            Err(Error::SingularCurve)
        }
    }

    pub fn h0_dim(&self, k: i64) -> u64 {
        h0_dim(self.delta, k)
    }

    pub fn h1_dim(&self, k: i64) -> u64 {
        h1_dim(self.delta, k)
    }

    /// Rewrites a polynomial given in input coordinates into ring
    /// coordinates (the identity unless a shift was needed).
    pub fn to_ring_coordinates(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let p = p.to_ambient(Ambient::XYZ)?;
        let Some((alpha, beta)) = &self.shift else {
            return Ok(p);
        };
        let var = |i| Polynomial::monomial(self.field, Ambient::XYZ, Monomial::variable(i, 1));
        let z = var(2);
        let images = [&var(0) + &z.scale(alpha), &var(1) + &z.scale(beta), z.clone()];
        p.compose(&images)
    }

    /// The z-reduced normal form: every `z`-exponent below `δ`.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = p.to_ambient(Ambient::XYZ)?;
        loop {
            let next = out
                .terms()
                .filter(|(m, _)| m.exponent(2) >= self.delta)
                .max_by_key(|(m, _)| m.exponent(2))
                .map(|(m, c)| (*m, c.clone()));
            let Some((m, c)) = next else {
                return Ok(out);
            };
            out.remove_term(&m);
            let rest = m
                .checked_div(&Monomial::variable(2, self.delta))
                .expect("z power divides");
            out.add_scaled(&c, rest, &self.tail);
        }
    }

    pub fn is_reduced(&self, p: &Polynomial) -> bool {
        p.terms().all(|(m, _)| m.exponent(2) < self.delta)
    }

    /// Product in `R`, z-reduced.
    pub fn multiply(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        let p = self.reduce(p)?;
        let q = self.reduce(q)?;
        self.reduce(&p.checked_mul(&q)?)
    }

    /// Monomials `x^a y^b z^c` with `c < δ` and `a + b + c = m`, a
    /// `K`-basis of `R_m`, in decreasing monomial order.
    pub fn monomial_basis(&self, m: u32) -> Vec<Polynomial> {
        let mut monos = Vec::new();
        for c in 0..self.delta.min(m + 1) {
            for a in 0..=(m - c) {
                monos.push(Monomial::new(a, m - c - a, c));
            }
        }
        monos.sort_by(|a, b| b.cmp(a));
        monos
            .into_iter()
            .map(|mono| Polynomial::monomial(self.field, Ambient::XYZ, mono))
            .collect()
    }

    /// `p / (x^N y^M)` as a Laurent element, after z-reduction of `p`.
    pub fn laurent(&self, p: &Polynomial, x_power: u32, y_power: u32) -> Result<LaurentElement> {
        let p = self.reduce(p)?;
        LaurentElement::from_fraction(&p, x_power, y_power, self.delta)
    }

    /// The class of a homogeneous Laurent element of degree `k` in
    /// `H^1(Y, O_Y(k))`: terms with `a ≥ 0` or `b ≥ 0` are dropped.
    pub fn cech_reduce(&self, u: &LaurentElement, k: i64) -> Result<CechClass> {
        if u.field() != self.field {
            return Err(Error::FieldMismatch);
        }
        if u.delta() != self.delta {
            return Err(Error::ShapeMismatch);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in u.terms() {
            if e.degree() != k {
                return Err(Error::NotHomogeneous);
            }
            if e.a <= -1 && e.b <= -1 {
                terms.insert(*e, c.clone());
            }
        }
        Ok(CechClass {
            field: self.field,
            delta: self.delta,
            degree: k,
            terms,
        })
    }
}

fn find_monic_shift(f: &Polynomial, delta: u32) -> Result<((Scalar, Scalar), Polynomial)> {
    let field = f.field();
    let top = Monomial::variable(2, delta);
    // a nonzero form of degree δ cannot vanish on a (δ+1) × (δ+1) grid
    let mut bound = delta as u64;
    if let Some(p) = field.modulus() {
        bound = bound.min(p - 1);
    }
    let mut candidates = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            candidates.push((a, b));
        }
    }
    candidates.sort_by_key(|&(a, b)| (a.max(b), b, a));
    let var = |i| Polynomial::monomial(field, Ambient::XYZ, Monomial::variable(i, 1));
    let z = var(2);
    for (a, b) in candidates.into_iter().skip(1) {
        let alpha = field.int(a as i64);
        let beta = field.int(b as i64);
        let images = [&var(0) + &z.scale(&alpha), &var(1) + &z.scale(&beta), z.clone()];
        let g = f.compose(&images)?;
        if !g.coefficient(&top).is_zero() {
            return Ok(((alpha, beta), g));
        }
    }
    Err(Error::NoMonicCoordinate)
}

/// Jacobian criterion: `(F, ∂F/∂x, ∂F/∂y, ∂F/∂z)` contains a power of each
/// variable.
fn jacobian_is_primary(f: &Polynomial, limits: &Limits) -> Result<bool> {
    let mut gens = Vec::with_capacity(4);
    gens.push(f.clone());
    for i in 0..3 {
        let d = f.derivative(i);
        if !d.is_zero() {
            gens.push(d);
        }
    }
    let gb = GroebnerBasis::of_ideal(&gens, limits)?;
    Ok(gb.has_pure_powers(&[0, 1, 2]))
}

/// An element of `H^1(Y, O_Y(k))` in the Laurent monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechClass {
    field: Field,
    delta: u32,
    degree: i64,
    terms: BTreeMap<LaurentExponent, Scalar>,
}

impl CechClass {
    pub fn zero(field: Field, delta: u32, degree: i64) -> CechClass {
        CechClass {
            field,
            delta,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> i64 {
        self.degree
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

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentExponent, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &LaurentExponent) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn to_laurent(&self) -> LaurentElement {
        let mut u = LaurentElement::zero(self.field, self.delta);
        for (e, c) in self.terms.iter() {
            u.insert(*e, c.clone()).expect("basis exponents are reduced");
        }
        u
    }

    pub fn checked_add(&self, other: &CechClass) -> Result<CechClass> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.delta != other.delta || self.degree != other.degree {
            return Err(Error::ShapeMismatch);
        }
        let mut terms = self.terms.clone();
        for (e, c) in other.terms.iter() {
            let sum = match terms.get(e) {
                Some(old) => old + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(e);
            } else {
                terms.insert(*e, sum);
            }
        }
        Ok(CechClass { terms, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> CechClass {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, a)| (*e, a * c)).collect()
        };
        CechClass { terms, ..self.clone() }
    }
}

impl fmt::Display for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, abs) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "x^{}*y^{}", e.a, e.b)?;
            match e.c {
                0 => {}
                1 => f.write_str("*z")?,
                c => write!(f, "*z^{c}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_polynomial, parse_polynomial_in};
    use proptest::prelude::*;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, Field::RATIONALS).unwrap()
    }

    fn ring(s: &str, field: Field) -> HypersurfaceRing {
        HypersurfaceRing::new(&parse_polynomial(s, field).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn fermat_cubic_over_rationals() {
        let r = ring("x^3 + y^3 + z^3", Field::RATIONALS);
        assert_eq!(r.delta(), 3);
        assert_eq!(r.genus(), 1);
        assert!(r.is_smooth());
        assert!(r.coordinate_shift().is_none());
        assert_eq!(r.reduce(&q("z^3")).unwrap(), q("-x^3 - y^3"));
    }

    #[test]
    fn fermat_cubic_in_characteristic_three_is_singular() {
        let r = ring("x^3 + y^3 + z^3", Field::prime(3).unwrap());
        assert!(!r.is_smooth());
        assert_eq!(r.ensure_smooth().unwrap_err(), Error::SingularCurve);
    }

    #[test]
    fn a_line_is_smooth_of_genus_zero() {
        let r = ring("z", Field::RATIONALS);
        assert_eq!(r.delta(), 1);
        assert_eq!(r.genus(), 0);
        assert!(r.is_smooth());
        assert_eq!(r.reduce(&q("x*z + y")).unwrap(), q("y"));
    }

    #[test]
    fn missing_top_power_is_shifted_away() {
        let r = ring("x^3 + y^3 + x*z^2", Field::RATIONALS);
        let (alpha, beta) = r.coordinate_shift().unwrap().clone();
        assert!(alpha.is_one());
        assert!(beta.is_zero());
        assert!(r.equation().coefficient(&Monomial::new(0, 0, 3)).is_one());
        // the shifted equation is the image of the input one
        assert_eq!(
            r.to_ring_coordinates(r.input_equation()).unwrap().monic(),
            r.equation().monic()
        );
    }

    #[test]
    fn no_monic_coordinate_over_the_two_element_field() {
        let f = parse_polynomial("x^2*y + x*y^2", Field::prime(2).unwrap()).unwrap();
        assert_eq!(
            HypersurfaceRing::new(&f, &Limits::default()).unwrap_err(),
            Error::NoMonicCoordinate
        );
    }

    #[test]
    fn nodal_cubic_is_singular() {
        let r = ring("x^3 + y^3 - x*y*z", Field::RATIONALS);
        assert!(!r.is_smooth());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(h0_dim(5, 2), 6);
        assert_eq!(h0_dim(3, 3), 9);
        for d in 1..9 {
            assert_eq!(h0_dim(d, 0), 1);
        }
        assert_eq!(h1_dim(3, 0), 1);
        assert_eq!(h1_dim(3, -2), 6);
        assert_eq!(h1_dim(5, 1), 3);
    }

    #[test]
    fn monomial_basis_has_the_right_size() {
        let r = ring("x^3 + y^3 + z^3", Field::RATIONALS);
        for m in 0..10 {
            assert_eq!(r.monomial_basis(m).len() as u64, r.h0_dim(m as i64));
        }
    }

    #[test]
    fn serre_duality_and_riemann_roch() {
        for delta in 1..=8u32 {
            let g = plane_genus(delta) as i64;
            for k in -10..=10i64 {
                assert_eq!(h1_dim(delta, k), h0_dim(delta, delta as i64 - 3 - k));
                let chi = h0_dim(delta, k) as i64 - h1_dim(delta, k) as i64;
                assert_eq!(chi, delta as i64 * k + 1 - g);
            }
        }
    }

    #[test]
    fn cech_reduce_examples() {
        let r = ring("x^3 + y^3 + z^3", Field::RATIONALS);
        let u = r.laurent(&q("1"), 1, 1).unwrap();
        let c = r.cech_reduce(&u, -2).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.coefficient(&LaurentExponent { a: -1, b: -1, c: 0 }).is_one());

        // a global element dies
        let u = r.laurent(&q("x^2*z + y*z^2"), 0, 0).unwrap();
        assert!(r.cech_reduce(&u, 3).unwrap().is_zero());

        let u = r.laurent(&q("x^3*y^2 + 1"), 2, 3).unwrap();
        assert_eq!(r.cech_reduce(&u, -2).unwrap_err(), Error::NotHomogeneous);
    }

    #[test]
    fn class_display() {
        let r = ring("x^3 + y^3 + z^3", Field::RATIONALS);
        let u = r.laurent(&q("2*z"), 1, 2).unwrap();
        assert_eq!(r.cech_reduce(&u, -2).unwrap().to_string(), "2*x^-1*y^-2*z");
        assert_eq!(CechClass::zero(Field::RATIONALS, 3, 0).to_string(), "0");
    }

    fn gf7_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..5, 0u32..5, 0u32..6, -3i64..4), 0..6).prop_map(|ts| {
            let field = Field::prime(7).unwrap();
            Polynomial::from_terms(
                field,
                Ambient::XYZ,
                ts.into_iter()
                    .map(|(a, b, c, k)| (field.int(k), Monomial::new(a, b, c))),
            )
            .unwrap()
        })
    }

    fn homogeneous_laurent(delta: u32) -> impl Strategy<Value = (LaurentElement, i64)> {
        let field = Field::prime(7).unwrap();
        (-4i64..3, prop::collection::vec((-4i64..4, 0..delta, 1i64..7), 0..8)).prop_map(move |(k, ts)| {
            let mut u = LaurentElement::zero(field, delta);
            for (a, c, coeff) in ts {
                let b = k - a - c as i64;
                u.insert(LaurentExponent { a, b, c }, field.int(coeff)).unwrap();
            }
            (u, k)
        })
    }

    proptest! {
        #[test]
        fn reduction_respects_products(p in gf7_poly(), s in gf7_poly()) {
            let r = ring("x^3 + y^3 + z^3", Field::prime(7).unwrap());
            let direct = r.reduce(&(&p * &s)).unwrap();
            let staged = r.multiply(&p, &s).unwrap();
            prop_assert!(r.is_reduced(&direct));
            prop_assert_eq!(direct, staged);
        }

        #[test]
        fn cech_reduce_is_idempotent_and_ignores_regular_terms(
            (u, k) in homogeneous_laurent(3),
            (v, kv) in homogeneous_laurent(3),
        ) {
            let r = ring("x^3 + y^3 + z^3", Field::prime(7).unwrap());
            let c = r.cech_reduce(&u, k).unwrap();
            prop_assert_eq!(&r.cech_reduce(&c.to_laurent(), k).unwrap(), &c);

            // only keep the terms of v that are regular on one chart, shifted to degree k
            let mut w = LaurentElement::zero(u.field(), 3);
            for (e, a) in v.terms() {
                let e = LaurentExponent { a: e.a + (k - kv), ..*e };
                if e.a >= 0 || e.b >= 0 {
                    w.insert(e, a.clone()).unwrap();
                }
            }
            let sum = u.checked_add(&w).unwrap();
            prop_assert_eq!(r.cech_reduce(&sum, k).unwrap(), c);
        }

        #[test]
        fn cech_reduce_is_linear(
            (u, k) in homogeneous_laurent(4),
            (v, kv) in homogeneous_laurent(4),
            lambda in 0i64..7,
        ) {
            let field = Field::prime(7).unwrap();
            let f = parse_polynomial_in("x^4 + y^4 + z^4", field, Ambient::XYZ).unwrap();
            let r = HypersurfaceRing::new(&f, &Limits::default()).unwrap();
            let mut v_k = LaurentElement::zero(field, 4);
            for (e, a) in v.terms() {
                v_k.insert(LaurentExponent { a: e.a + (k - kv), ..*e }, a.clone()).unwrap();
            }
            let l = field.int(lambda);
            let lhs = r.cech_reduce(&u.checked_add(&v_k.scale(&l)).unwrap(), k).unwrap();
            let rhs = r
                .cech_reduce(&u, k)
                .unwrap()
                .checked_add(&r.cech_reduce(&v_k, k).unwrap().scale(&l))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
