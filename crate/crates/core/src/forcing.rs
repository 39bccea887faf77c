//! Splitting data of the relation module and forcing classes.
//!
//! For generators `f_1, …, f_n` of an ideal in `R` the relation sheaf sits in
//! `0 → Syz(m) → ⊕ O_Y(m - d_i) → O_Y(m) → 0`. The image of `f_0 ∈ R_m` under
//! the connecting map is its forcing class. When the generators lie in
//! `K[x, y]`, the relation module is free over `K[x, y]` (Hilbert–Burch) and
//! stays free after base change to `R`, so `Syz ≅ ⊕ O_Y(-b_j)` and the class
//! splits into components `c_j ∈ H^1(Y, O_Y(m - b_j))`.

use alloc::vec::Vec;

use crate::arith::{Ambient, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{membership_with, syzygies, CoordinateSolver, GroebnerBasis, Limits, Membership, SyzygyMatrix};
use crate::hypersurface::{CechClass, HypersurfaceRing};

/// Default cap on the exponents `N`, `M` with `x^N, y^M` in the ideal.
pub const DEFAULT_DENOMINATOR_CAP: u32 = 64;

/// An `R_+`-primary homogeneous ideal of a hypersurface ring.
#[derive(Clone, Debug)]
pub struct IdealData {
    ring: HypersurfaceRing,
    /// In ring coordinates, z-reduced.
    generators: Vec<Polynomial>,
    degrees: Vec<u32>,
    /// Basis of `(f_1, …, f_n, F)` in `K[x, y, z]`.
    basis: GroebnerBasis,
    limits: Limits,
}

impl IdealData {
    /// Validates the generators (nonzero, homogeneous of positive degree) and
    /// the primary certificate: powers of `x`, `y` and `z` lie in
    /// `(f_1, …, f_n) + (F)`.
    pub fn new(ring: HypersurfaceRing, generators: &[Polynomial], limits: &Limits) -> Result<IdealData> {
        if generators.is_empty() {
            return Err(Error::WrongGeneratorCount { expected: 1, found: 0 });
        }
        let mut gens = Vec::with_capacity(generators.len());
        let mut degrees = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                return Err(Error::ZeroElement);
            }
            let d = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            if d == 0 {
                return Err(Error::InvalidDegreeData("generator degrees must be positive".into()));
            }
            let g = ring.reduce(&ring.to_ring_coordinates(g)?)?;
            if g.is_zero() {
                return Err(Error::ZeroElement);
            }
            gens.push(g);
            degrees.push(d);
        }
        let mut with_f = gens.clone();
        with_f.push(ring.equation().clone());
        let basis = GroebnerBasis::of_ideal(&with_f, limits)?;
        if !basis.has_pure_powers(&[0, 1, 2]) {
            return Err(Error::NotPrimary);
        }
        Ok(IdealData {
            ring,
            generators: gens,
            degrees,
            basis,
            limits: *limits,
        })
    }

    pub fn ring(&self) -> &HypersurfaceRing {
        &self.ring
    }

    /// Generators in ring coordinates.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Membership of `f` (input coordinates) in the ideal of `R`. Witnesses
    /// are z-reduced and satisfy `f ≡ Σ w_i f_i` modulo `F`.
    pub fn membership(&self, f: &Polynomial) -> Result<Membership> {
        let f = self.ring.to_ring_coordinates(f)?;
        self.membership_in_ring(&f)
    }

    pub(crate) fn membership_in_ring(&self, f: &Polynomial) -> Result<Membership> {
        let m = membership_with(&self.basis, f)?;
        if !m.member {
            return Ok(m);
        }
        let mut witnesses = m.witnesses;
        witnesses.pop();
        let witnesses = witnesses
            .iter()
            .map(|w| self.ring.reduce(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Membership {
            member: true,
            witnesses,
        })
    }

    /// Checks `target ≡ Σ w_i f_i` in `R`.
    pub fn verifies(&self, target: &Polynomial, witnesses: &[Polynomial]) -> Result<bool> {
        if witnesses.len() != self.generators.len() {
            return Err(Error::ShapeMismatch);
        }
        let mut acc = self.ring.reduce(target)?;
        for (w, g) in witnesses.iter().zip(self.generators.iter()) {
            acc = acc.checked_sub(&w.checked_mul(g)?)?;
        }
        Ok(self.ring.reduce(&acc)?.is_zero())
    }

    /// The least `N ≤ cap` with `v^N` in the ideal, for `v` = x (0) or y (1).
    pub fn power_witness(&self, variable: usize, cap: u32) -> Result<PowerWitness> {
        for n in 1..=cap {
            if let Some(w) = self.power_witness_at(variable, n)? {
                return Ok(w);
            }
        }
        Err(Error::DenominatorCapExceeded { cap })
    }

    /// A witness for `v^n` if it lies in the ideal.
    pub fn power_witness_at(&self, variable: usize, n: u32) -> Result<Option<PowerWitness>> {
        if variable > 1 {
            return Err(Error::OutOfRange {
                index: variable as i64,
                min: 0,
                max: 1,
            });
        }
        let target = Polynomial::monomial(self.ring.field(), Ambient::XYZ, Monomial::variable(variable, n));
        let m = self.membership_in_ring(&target)?;
        Ok(m.member.then_some(PowerWitness {
            variable,
            power: n,
            coefficients: m.witnesses,
        }))
    }
}

/// `v^power = Σ coefficients[i] · f_i` in `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerWitness {
    pub variable: usize,
    pub power: u32,
    pub coefficients: Vec<Polynomial>,
}

/// A free basis of the relation module over `K[x, y]` and its twists.
#[derive(Clone, Debug)]
pub struct SplittingData {
    basis: SyzygyMatrix,
    solver: CoordinateSolver,
}

impl SplittingData {
    pub const PROVENANCE: &'static str = "hilbert-burch over two-variable subring";

    /// Requires every generator to lie in `K[x, y]`.
    pub fn new(ideal: &IdealData) -> Result<SplittingData> {
        let gens = ideal
            .generators
            .iter()
            .map(|g| g.to_ambient(Ambient::XY))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::SplittingNotEstablished)?;
        let basis = match syzygies(&gens, true, &ideal.limits) {
            Ok(b) => b,
            Err(Error::NotPrimary) => return Err(Error::SplittingNotEstablished),
            Err(e) => return Err(e),
        };
        let twist_sum: i64 = basis.column_twists().iter().sum();
        let degree_sum: i64 = ideal.degrees.iter().map(|d| *d as i64).sum();
        if twist_sum != degree_sum || !basis.annihilates_generators() {
            return Err(Error::BasisNotFree);
        }
        let solver = CoordinateSolver::new(&basis, &ideal.limits)?;
        Ok(SplittingData { basis, solver })
    }

    pub fn basis(&self) -> &SyzygyMatrix {
        &self.basis
    }

    /// `b_1 ≥ … ≥ b_{n-1}`: `Syz(0) ≅ ⊕ O_Y(-b_j)`.
    pub fn twists(&self) -> Vec<i64> {
        self.basis.column_twists()
    }

    /// The twists `a_j` of the dual bundle, `⊕ O_Y(a_j)`; they equal `b_j`.
    pub fn dual_twists(&self) -> Vec<i64> {
        self.twists()
    }

    pub fn provenance(&self) -> &'static str {
        Self::PROVENANCE
    }
}

/// Components `c_j ∈ H^1(Y, O_Y(m - b_j))` of the forcing class of `f_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingClass {
    pub degree: i64,
    pub twists: Vec<i64>,
    pub components: Vec<CechClass>,
    pub x_power: u32,
    pub y_power: u32,
}

impl ForcingClass {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(class_is_zero)
    }
}

pub fn class_is_zero(c: &CechClass) -> bool {
    c.is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcingOptions {
    pub cap: u32,
    /// Use this power of `x` instead of the least one.
    pub x_power: Option<u32>,
    pub y_power: Option<u32>,
}

impl Default for ForcingOptions {
    fn default() -> Self {
        ForcingOptions {
            cap: DEFAULT_DENOMINATOR_CAP,
            x_power: None,
            y_power: None,
        }
    }
}

/// Precomputed witnesses for `x^N` and `y^M`; computes forcing classes of
/// many elements of the same ideal.
#[derive(Clone, Debug)]
pub struct Forcing<'a> {
    ideal: &'a IdealData,
    split: &'a SplittingData,
    x: PowerWitness,
    y: PowerWitness,
}

impl<'a> Forcing<'a> {
    pub fn new(ideal: &'a IdealData, split: &'a SplittingData, options: &ForcingOptions) -> Result<Self> {
        let pick = |variable: usize, forced: Option<u32>| -> Result<PowerWitness> {
            match forced {
                None => ideal.power_witness(variable, options.cap),
                Some(n) if n > options.cap => Err(Error::DenominatorCapExceeded { cap: options.cap }),
                Some(n) => ideal
                    .power_witness_at(variable, n)?
                    .ok_or(Error::PreconditionMissing("requested power is not in the ideal")),
            }
        };
        let x = pick(0, options.x_power)?;
        let y = pick(1, options.y_power)?;
        Self::with_witnesses(ideal, split, x, y)
    }

    /// Uses caller-supplied witnesses; they are verified.
    pub fn with_witnesses(
        ideal: &'a IdealData,
        split: &'a SplittingData,
        x: PowerWitness,
        y: PowerWitness,
    ) -> Result<Self> {
        for (w, v) in [(&x, 0), (&y, 1)] {
            let target = Polynomial::monomial(ideal.ring.field(), Ambient::XYZ, Monomial::variable(v, w.power));
            if w.variable != v || !ideal.verifies(&target, &w.coefficients)? {
                return Err(Error::NotARelation);
            }
        }
        Ok(Forcing { ideal, split, x, y })
    }

    /// Witnesses already checked by [`Forcing::new`] or [`Forcing::with_witnesses`].
    pub(crate) fn from_checked(
        ideal: &'a IdealData,
        split: &'a SplittingData,
        x: PowerWitness,
        y: PowerWitness,
    ) -> Self {
        Forcing { ideal, split, x, y }
    }

    pub fn x_witness(&self) -> &PowerWitness {
        &self.x
    }

    pub fn y_witness(&self) -> &PowerWitness {
        &self.y
    }

    /// Forcing class of `f0`, given in input coordinates.
    pub fn class_of(&self, f0: &Polynomial) -> Result<ForcingClass> {
        let ring = &self.ideal.ring;
        let f0 = ring.to_ring_coordinates(f0)?;
        self.class_in_ring(&f0)
    }

    pub(crate) fn class_in_ring(&self, f0: &Polynomial) -> Result<ForcingClass> {
        let ring = &self.ideal.ring;
        if f0.is_zero() {
            return Err(Error::ZeroElement);
        }
        let m = f0.homogeneous_degree().ok_or(Error::NotHomogeneous)? as i64;
        let f0 = ring.reduce(f0)?;
        let field = ring.field();
        let (n, mm) = (self.x.power, self.y.power);
        let xn = Monomial::variable(0, n);
        let ym = Monomial::variable(1, mm);
        let one = field.one();

        // numerator of the Čech difference of the two local lifts
        let mut relation = Vec::with_capacity(self.ideal.len());
        for (hx, hy) in self.x.coefficients.iter().zip(self.y.coefficients.iter()) {
            let mut r = hx.mul_term(&one, ym);
            r.sub_scaled(&one, xn, hy);
            relation.push(ring.multiply(&r, &f0)?);
        }

        let twists = self.split.twists();
        let delta = ring.delta();
        let mut lifts: Vec<Polynomial> = (0..twists.len())
            .map(|_| Polynomial::zero(field, Ambient::XYZ))
            .collect();
        let parts: Vec<_> = relation.iter().map(Polynomial::z_parts).collect();
        for c in 0..delta {
            let slice: Vec<Polynomial> = parts
                .iter()
                .map(|p| {
                    p.get(&c)
                        .cloned()
                        .unwrap_or_else(|| Polynomial::zero(field, Ambient::XY))
                })
                .collect();
            if slice.iter().all(Polynomial::is_zero) {
                continue;
            }
            let coords = self.split.solver.coordinates(&slice)?;
            for (u, part) in lifts.iter_mut().zip(coords) {
                let part = part.to_ambient(Ambient::XYZ)?.mul_term(&one, Monomial::variable(2, c));
                *u = u.checked_add(&part)?;
            }
        }

        let components = lifts
            .iter()
            .zip(twists.iter())
            .map(|(u, b)| {
                let laurent = ring.laurent(u, n, mm)?;
                ring.cech_reduce(&laurent, m - b)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ForcingClass {
            degree: m,
            twists,
            components,
            x_power: n,
            y_power: mm,
        })
    }
}

/// Forcing class of `f0` with the least denominators.
pub fn forcing_class(ideal: &IdealData, split: &SplittingData, f0: &Polynomial) -> Result<ForcingClass> {
    Forcing::new(ideal, split, &ForcingOptions::default())?.class_of(f0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_polynomial, Field, Scalar};
    use proptest::prelude::*;

    fn setup(field: Field, curve: &str, gens: &[&str]) -> (IdealData, SplittingData) {
        let limits = Limits::default();
        let ring = HypersurfaceRing::new(&parse_polynomial(curve, field).unwrap(), &limits).unwrap();
        let gens: Vec<_> = gens.iter().map(|g| parse_polynomial(g, field).unwrap()).collect();
        let ideal = IdealData::new(ring, &gens, &limits).unwrap();
        let split = SplittingData::new(&ideal).unwrap();
        (ideal, split)
    }

    fn fermat(field: Field) -> (IdealData, SplittingData) {
        setup(field, "x^3 + y^3 + z^3", &["x^4", "x*y", "y^2"])
    }

    #[test]
    fn splitting_of_the_fermat_example() {
        let (ideal, split) = fermat(Field::RATIONALS);
        assert_eq!(split.twists(), vec![5, 3]);
        assert_eq!(split.dual_twists(), vec![5, 3]);
        assert_eq!(ideal.degrees(), &[4, 2, 2]);
        assert_eq!(split.provenance(), "hilbert-burch over two-variable subring");
    }

    #[test]
    fn parameter_pair_has_the_koszul_twist() {
        let (_, split) = setup(Field::RATIONALS, "x^3 + y^3 + z^3", &["x^2 + y^2", "x*y^3"]);
        assert_eq!(split.twists(), vec![6]);
    }

    #[test]
    fn generators_with_z_do_not_split() {
        let limits = Limits::default();
        let ring =
            HypersurfaceRing::new(&parse_polynomial("x^3 + y^3 + z^3", Field::RATIONALS).unwrap(), &limits).unwrap();
        let gens: Vec<_> = ["x^2", "y^2", "z^2"]
            .iter()
            .map(|g| parse_polynomial(g, Field::RATIONALS).unwrap())
            .collect();
        let ideal = IdealData::new(ring, &gens, &limits).unwrap();
        assert_eq!(SplittingData::new(&ideal).unwrap_err(), Error::SplittingNotEstablished);
    }

    #[test]
    fn non_primary_ideal_is_rejected() {
        let limits = Limits::default();
        let ring =
            HypersurfaceRing::new(&parse_polynomial("x^3 + y^3 + z^3", Field::RATIONALS).unwrap(), &limits).unwrap();
        let gens = [parse_polynomial("x", Field::RATIONALS).unwrap()];
        assert_eq!(IdealData::new(ring, &gens, &limits).unwrap_err(), Error::NotPrimary);
    }

    #[test]
    fn generator_has_zero_class() {
        let (ideal, split) = fermat(Field::RATIONALS);
        for g in ["x^4", "x*y", "y^2"] {
            let c = forcing_class(&ideal, &split, &parse_polynomial(g, Field::RATIONALS).unwrap()).unwrap();
            assert!(c.is_zero());
        }
    }

    #[test]
    fn fermat_example_components() {
        let (ideal, split) = fermat(Field::RATIONALS);
        let c = forcing_class(&ideal, &split, &parse_polynomial("y*z^2", Field::RATIONALS).unwrap()).unwrap();
        assert_eq!(c.components[0].degree(), -2);
        assert!(class_is_zero(&c.components[0]));

        let c = forcing_class(&ideal, &split, &parse_polynomial("x*z^2", Field::RATIONALS).unwrap()).unwrap();
        assert_eq!(c.components[0].degree(), -2);
        assert!(!class_is_zero(&c.components[0]));
    }

    #[test]
    fn cap_is_enforced() {
        let (ideal, split) = fermat(Field::RATIONALS);
        let opts = ForcingOptions {
            cap: 3,
            ..ForcingOptions::default()
        };
        assert_eq!(
            Forcing::new(&ideal, &split, &opts).unwrap_err(),
            Error::DenominatorCapExceeded { cap: 3 }
        );
    }

    #[test]
    fn class_is_zero_examples() {
        assert!(class_is_zero(&CechClass::zero(Field::RATIONALS, 3, -2)));
        let (ideal, _) = fermat(Field::RATIONALS);
        let u = ideal
            .ring()
            .laurent(&Polynomial::one(Field::RATIONALS, Ambient::XYZ), 1, 1)
            .unwrap();
        assert!(!class_is_zero(&ideal.ring().cech_reduce(&u, -2).unwrap()));
    }

    #[test]
    fn other_witness_gives_the_same_class() {
        let field = Field::prime(7).unwrap();
        let (ideal, split) = fermat(field);
        let base = Forcing::new(&ideal, &split, &ForcingOptions::default()).unwrap();
        // add a relation to the x-witness: h + y^k · s is another witness
        let mut x = base.x_witness().clone();
        let col = &split.basis().columns()[1];
        let shift = x.power as i64 - col.degree();
        assert!(shift >= 0);
        for (h, s) in x.coefficients.iter_mut().zip(col.entries()) {
            let s = s.to_ambient(Ambient::XYZ).unwrap();
            *h = &*h + &s.mul_term(&field.int(3), Monomial::variable(1, shift as u32));
        }
        let other = Forcing::with_witnesses(&ideal, &split, x, base.y_witness().clone()).unwrap();
        for ring_elem in ideal.ring().monomial_basis(3) {
            assert_eq!(base.class_of(&ring_elem).unwrap(), other.class_of(&ring_elem).unwrap());
        }
    }

    fn gf_element(field: Field, basis_len: usize) -> impl Strategy<Value = Vec<i64>> {
        let p = field.characteristic() as i64;
        prop::collection::vec(0..p, basis_len)
    }

    fn combine(ring: &HypersurfaceRing, degree: u32, coeffs: &[i64]) -> Polynomial {
        let field = ring.field();
        let mut out = Polynomial::zero(field, Ambient::XYZ);
        for (b, c) in ring.monomial_basis(degree).iter().zip(coeffs) {
            out = &out + &b.scale(&field.int(*c));
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn zero_class_iff_ideal_member(degree in 2u32..7, coeffs in gf_element(Field::prime(5).unwrap(), 30), sparse in any::<bool>()) {
            let field = Field::prime(5).unwrap();
            let (ideal, split) = fermat(field);
            let forcing = Forcing::new(&ideal, &split, &ForcingOptions::default()).unwrap();
            let len = ideal.ring().monomial_basis(degree).len();
            let mut coeffs = coeffs[..len].to_vec();
            if sparse {
                for (i, c) in coeffs.iter_mut().enumerate() {
                    if i % 3 != 0 { *c = 0; }
                }
            }
            let f0 = combine(ideal.ring(), degree, &coeffs);
            prop_assume!(!f0.is_zero());
            let class = forcing.class_of(&f0).unwrap();
            let member = ideal.membership(&f0).unwrap().member;
            prop_assert_eq!(class.is_zero(), member);
            for (c, b) in class.components.iter().zip(class.twists.iter()) {
                if ideal.ring().h1_dim(class.degree - b) == 0 {
                    prop_assert!(c.is_zero());
                }
            }
        }

        #[test]
        fn larger_denominators_give_the_same_class(degree in 2u32..6, coeffs in gf_element(Field::prime(7).unwrap(), 30)) {
            let field = Field::prime(7).unwrap();
            let (ideal, split) = fermat(field);
            let least = Forcing::new(&ideal, &split, &ForcingOptions::default()).unwrap();
            let bumped = Forcing::new(&ideal, &split, &ForcingOptions {
                x_power: Some(least.x_witness().power + 1),
                y_power: Some(least.y_witness().power + 2),
                ..ForcingOptions::default()
            }).unwrap();
            let len = ideal.ring().monomial_basis(degree).len();
            let f0 = combine(ideal.ring(), degree, &coeffs[..len]);
            prop_assume!(!f0.is_zero());
            let a = least.class_of(&f0).unwrap();
            let b = bumped.class_of(&f0).unwrap();
            prop_assert_eq!(a.components, b.components);
        }

        #[test]
        fn class_is_linear(
            degree in 2u32..6,
            c1 in gf_element(Field::prime(7).unwrap(), 30),
            c2 in gf_element(Field::prime(7).unwrap(), 30),
            lambda in 1i64..7,
        ) {
            let field = Field::prime(7).unwrap();
            let (ideal, split) = fermat(field);
            let forcing = Forcing::new(&ideal, &split, &ForcingOptions::default()).unwrap();
            let len = ideal.ring().monomial_basis(degree).len();
            let f = combine(ideal.ring(), degree, &c1[..len]);
            let g = combine(ideal.ring(), degree, &c2[..len]);
            let l: Scalar = field.int(lambda);
            let sum = &f + &g.scale(&l);
            prop_assume!(!f.is_zero() && !g.is_zero() && !sum.is_zero());
            let cf = forcing.class_of(&f).unwrap();
            let cg = forcing.class_of(&g).unwrap();
            let cs = forcing.class_of(&sum).unwrap();
            for j in 0..cs.components.len() {
                let expected = cf.components[j].checked_add(&cg.components[j].scale(&l)).unwrap();
                prop_assert_eq!(&cs.components[j], &expected);
            }
        }
    }
}
