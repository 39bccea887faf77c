use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::arith::parse_polynomial_in;
use crate::arith::{Ambient, Field, ModuleVector, Polynomial};
use crate::error::Error;

fn xy(s: &str) -> Polynomial {
    parse_polynomial_in(s, Field::RATIONALS, Ambient::XY).unwrap()
}

fn xyz(s: &str) -> Polynomial {
    parse_polynomial_in(s, Field::RATIONALS, Ambient::XYZ).unwrap()
}

fn gb_polys(gb: &GroebnerBasis) -> Vec<Polynomial> {
    gb.elements().iter().map(|e| e.entry(0).clone()).collect()
}

#[test]
fn variables_are_already_a_basis() {
    let gb = GroebnerBasis::of_ideal(&[xy("x"), xy("y")], &Limits::default()).unwrap();
    assert_eq!(gb_polys(&gb), vec![xy("y"), xy("x")]);
    assert!(gb.is_groebner());
    assert!(gb.is_reduced());
}

#[test]
fn hand_elimination_example() {
    let gb = GroebnerBasis::of_ideal(&[xy("x^2 - y^2"), xy("x^2 + y^2")], &Limits::default()).unwrap();
    let mut polys = gb_polys(&gb);
    polys.sort_by_key(|p| p.leading_monomial());
    assert_eq!(polys, vec![xy("y^2"), xy("x^2")]);
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let gens = [xy("x^4"), xy("x*y"), xy("y^2")];
    let gb = GroebnerBasis::of_ideal(&gens, &Limits::default()).unwrap();
    let mut polys = gb_polys(&gb);
    polys.sort_by_key(|p| p.leading_monomial());
    let mut expected = gens.to_vec();
    expected.sort_by_key(|p| p.leading_monomial());
    assert_eq!(polys, expected);
}

#[test]
fn transformation_rows_reproduce_elements() {
    let gens = [xyz("x^2 - y*z"), xyz("x*y - z^2"), xyz("y^2 - x*z")];
    let gb = GroebnerBasis::of_ideal(&gens, &Limits::default()).unwrap();
    for (g, row) in gb.elements().iter().zip(gb.transform()) {
        let mut acc = Polynomial::zero(Field::RATIONALS, Ambient::XYZ);
        for (c, f) in row.iter().zip(gens.iter()) {
            acc = &acc + &(c * f);
        }
        assert_eq!(&acc, g.entry(0));
    }
    assert!(gb.is_groebner());
}

#[test]
fn normal_form_examples() {
    let gb = GroebnerBasis::of_ideal(&[xyz("x")], &Limits::default()).unwrap();
    let (rem, q) = gb.reduce(&xyz("x^2")).unwrap();
    assert!(rem.is_zero());
    assert_eq!(q, vec![xyz("x")]);

    let gb = GroebnerBasis::of_ideal(&[xyz("x"), xyz("y")], &Limits::default()).unwrap();
    let (rem, _) = gb.reduce(&xyz("z")).unwrap();
    assert_eq!(rem, xyz("z"));

    let gb = GroebnerBasis::of_ideal(&[xy("x^4"), xy("x*y"), xy("y^2")], &Limits::default()).unwrap();
    let syz_value = &(&xy("y") * &xy("x^4")) - &(&xy("x^3") * &xy("x*y"));
    let (rem, _) = gb.reduce(&syz_value).unwrap();
    assert!(rem.is_zero());
}

#[test]
fn normal_form_rejects_shape_mismatch() {
    let gb = GroebnerBasis::of_ideal(&[xy("x")], &Limits::default()).unwrap();
    let v = ModuleVector::new(vec![xy("x"), xy("y")], vec![0, 0], 1).unwrap();
    assert_eq!(gb.normal_form(&v).unwrap_err(), Error::ShapeMismatch);
}

#[test]
fn membership_examples() {
    let gens = [xy("x^4"), xy("x*y"), xy("y^2")];
    let m = ideal_membership(&xy("x^6"), &gens, &Limits::default()).unwrap();
    assert!(m.member);
    assert_eq!(m.witnesses, vec![xy("x^2"), xy("0"), xy("0")]);

    let m = ideal_membership(&xy("x"), &[xy("x^2"), xy("y")], &Limits::default()).unwrap();
    assert!(!m.member);
}

#[test]
fn pair_cap_is_enforced() {
    let gens = [xyz("x^2 - y*z"), xyz("x*y - z^2"), xyz("y^2 - x*z")];
    let err = GroebnerBasis::of_ideal(&gens, &Limits { max_pairs: 0 }).unwrap_err();
    assert!(matches!(err, Error::ResourceExhausted { .. }));
}

#[test]
fn hilbert_burch_columns_for_the_indep_example() {
    let gens = [xy("x^4"), xy("x*y"), xy("y^2")];
    let syz = syzygies(&gens, true, &Limits::default()).unwrap();
    assert!(syz.is_free_basis());
    assert_eq!(syz.column_twists(), vec![5, 3]);
    assert!(syz.annihilates_generators());
    assert_eq!(syz.columns()[0].entries(), &[xy("y"), xy("-x^3"), xy("0")]);
    assert_eq!(syz.columns()[1].entries(), &[xy("0"), xy("y"), xy("-x")]);
}

#[test]
fn koszul_relation_for_a_regular_sequence() {
    let gens = [xy("x^2 + y^2"), xy("x*y^2")];
    let syz = syzygies(&gens, true, &Limits::default()).unwrap();
    assert_eq!(syz.column_twists(), vec![5]);
    let col = syz.columns()[0].entries();
    assert_eq!(col[0], xy("x*y^2"));
    assert_eq!(col[1], xy("-x^2 - y^2"));
}

#[test]
fn free_basis_needs_primary_generators() {
    let gens = [xy("x^2"), xy("x*y")];
    assert_eq!(
        syzygies(&gens, true, &Limits::default()).unwrap_err(),
        Error::NotPrimary
    );
    let gens = [xyz("x^2"), xyz("y^2"), xyz("z^2")];
    assert_eq!(
        syzygies(&gens, true, &Limits::default()).unwrap_err(),
        Error::NotPrimary
    );
    // without the request the Koszul relations come back
    let syz = syzygies(&gens, false, &Limits::default()).unwrap();
    assert_eq!(syz.columns().len(), 3);
    assert!(syz.annihilates_generators());
    assert!(!syz.is_free_basis());
}

#[test]
fn coordinates_in_the_free_basis() {
    let gens = [xy("x^4"), xy("x*y"), xy("y^2")];
    let syz = syzygies(&gens, true, &Limits::default()).unwrap();
    let limits = Limits::default();
    let c1 = syz.columns()[0].entries().to_vec();
    assert_eq!(module_coordinates(&c1, &syz, &limits).unwrap(), vec![xy("1"), xy("0")]);

    let r: Vec<Polynomial> = syz.columns()[1].entries().iter().map(|p| p * &xy("y")).collect();
    assert_eq!(module_coordinates(&r, &syz, &limits).unwrap(), vec![xy("0"), xy("y")]);

    let r: Vec<Polynomial> = syz.columns()[0]
        .entries()
        .iter()
        .zip(syz.columns()[1].entries())
        .map(|(a, b)| &(a * &xy("x")) + b)
        .collect();
    assert_eq!(module_coordinates(&r, &syz, &limits).unwrap(), vec![xy("x"), xy("1")]);

    let not_relation = vec![xy("1"), xy("0"), xy("0")];
    assert_eq!(
        module_coordinates(&not_relation, &syz, &limits).unwrap_err(),
        Error::NotARelation
    );
}

#[test]
fn coordinates_need_a_free_basis() {
    let gens = [xyz("x^2"), xyz("y^2"), xyz("z^2")];
    let syz = syzygies(&gens, false, &Limits::default()).unwrap();
    let r = syz.columns()[0].entries().to_vec();
    assert_eq!(
        module_coordinates(&r, &syz, &Limits::default()).unwrap_err(),
        Error::BasisNotFree
    );
}

#[test]
fn module_basis_under_schreyer_order() {
    let gens = [xy("x^4"), xy("x*y"), xy("y^2")];
    let vectors: Vec<ModuleVector> = gens
        .iter()
        .map(|g| ModuleVector::from_polynomial(g.clone()).unwrap())
        .collect();
    let base = buchberger(&vectors, MonomialOrder::GrevLex, &Limits::default()).unwrap();
    let syz = syzygies(&gens, true, &Limits::default()).unwrap();
    let leads = (0..gens.len())
        .map(|i| ModuleTerm {
            monomial: gens[i].leading_monomial().unwrap(),
            position: 0,
        })
        .collect();
    let order = MonomialOrder::Schreyer(SchreyerData {
        leads,
        base_shifts: base.shifts().to_vec(),
    });
    let gb = buchberger(syz.columns(), order, &Limits::default()).unwrap();
    assert!(gb.is_groebner());
    for c in syz.columns() {
        assert!(gb.normal_form(c).unwrap().0.is_zero());
    }
}
