use alloc::vec::Vec;
use core::fmt;

use super::buchberger::{buchberger, run, GroebnerBasis, Limits};
use super::order::MonomialOrder;
use crate::arith::{Ambient, ModuleVector, Polynomial};
use crate::error::{Error, Result};

/// Syzygies of `f_1, …, f_n` as columns of an `n × c` matrix.
///
/// Row `i` has twist `d_i = deg f_i`; column `j` has twist `b_j` and entry
/// `(i, j)` is zero or homogeneous of degree `b_j - d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyMatrix {
    generators: Vec<Polynomial>,
    row_twists: Vec<i64>,
    columns: Vec<ModuleVector>,
    free_basis: bool,
}

impl SyzygyMatrix {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn columns(&self) -> &[ModuleVector] {
        &self.columns
    }

    pub fn column_twists(&self) -> Vec<i64> {
        self.columns.iter().map(ModuleVector::degree).collect()
    }

    pub fn entry(&self, row: usize, column: usize) -> &Polynomial {
        self.columns[column].entry(row)
    }

    /// Whether the columns were certified to be a free basis of the relation
    /// module (exactly `n - 1` minimal columns over `K[x, y]`).
    pub fn is_free_basis(&self) -> bool {
        self.free_basis
    }

    /// Every column satisfies `Σ_i s_i f_i = 0`.
    pub fn annihilates_generators(&self) -> bool {
        self.columns
            .iter()
            .all(|c| c.dot(&self.generators).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// Builds a matrix from explicit columns; the columns are checked to be
    /// homogeneous relations. The result is not certified free.
    pub fn from_columns(generators: Vec<Polynomial>, columns: Vec<ModuleVector>) -> Result<Self> {
        let row_twists = generator_degrees(&generators)?;
        for c in &columns {
            if c.twists() != row_twists.as_slice() {
                return Err(Error::ShapeMismatch);
            }
            if !c.dot(&generators)?.is_zero() {
                return Err(Error::NotARelation);
            }
        }
        let free_basis = false;
        Ok(SyzygyMatrix {
            generators,
            row_twists,
            columns,
            free_basis,
        })
    }
}

impl fmt::Display for SyzygyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.columns.iter().enumerate() {
            writeln!(f, "column {} (twist {}): {}", j + 1, c.degree(), c)?;
        }
        Ok(())
    }
}

fn generator_degrees(gens: &[Polynomial]) -> Result<Vec<i64>> {
    if gens.is_empty() {
        return Err(Error::ShapeMismatch);
    }
    gens.iter()
        .map(|g| {
            if g.is_zero() {
                Err(Error::ZeroElement)
            } else {
                g.homogeneous_degree().map(|d| d as i64).ok_or(Error::NotHomogeneous)
            }
        })
        .collect()
}

/// Computes the relation module of homogeneous generators.
///
/// Syzygies are read off the reductions to zero of a Buchberger run that keeps
/// every S-pair, then pruned to a minimal homogeneous generating set.
/// With `require_free_basis`, the generators must lie in `K[x, y]` and be
/// `(x, y)`-primary, and the result is certified to have exactly `n - 1`
/// columns (a free basis); otherwise [`Error::NotPrimary`] is returned.
pub fn syzygies(generators: &[Polynomial], require_free_basis: bool, limits: &Limits) -> Result<SyzygyMatrix> {
    let row_twists = generator_degrees(generators)?;
    let ambient = generators[0].ambient();
    let inputs = generators
        .iter()
        .map(|g| ModuleVector::from_polynomial(g.clone()))
        .collect::<Result<Vec<_>>>()?;
    let out = run(&inputs, MonomialOrder::GrevLex, limits, true)?;

    if require_free_basis {
        let primary = ambient == Ambient::XY && out.basis.has_pure_powers(&[0, 1]);
        if !primary {
            return Err(Error::NotPrimary);
        }
    }

    let mut raw = Vec::with_capacity(out.syzygies.len());
    for (coeffs, degree) in out.syzygies {
        raw.push(ModuleVector::new(coeffs, row_twists.clone(), degree)?);
    }
    let mut columns = minimalize(raw, limits)?;
    for c in columns.iter_mut() {
        *c = normalize_sign(c);
    }
    // highest twist first
    columns.sort_by_key(|c| core::cmp::Reverse(c.degree()));

    let n = generators.len();
    let free_basis = require_free_basis && columns.len() + 1 == n;
    if require_free_basis && !free_basis {
        return Err(Error::NotPrimary);
    }
    Ok(SyzygyMatrix {
        generators: generators.to_vec(),
        row_twists,
        columns,
        free_basis,
    })
}

/// Keeps a minimal homogeneous generating subset: columns are visited by
/// increasing degree and kept only if they are not in the span of those
/// already kept. Kept columns are then reduced against the span of the
/// strictly lower-degree ones.
fn minimalize(mut columns: Vec<ModuleVector>, limits: &Limits) -> Result<Vec<ModuleVector>> {
    columns.sort_by_key(ModuleVector::degree);
    let mut kept: Vec<ModuleVector> = Vec::new();
    let mut gb: Option<GroebnerBasis> = None;
    for c in columns {
        if let Some(gb) = &gb {
            let (rem, _) = gb.normal_form(&c)?;
            if rem.is_zero() {
                continue;
            }
        }
        kept.push(c);
        gb = Some(buchberger(&kept, MonomialOrder::TermOverPosition, limits)?);
    }

    let mut cleaned: Vec<ModuleVector> = Vec::with_capacity(kept.len());
    for (j, c) in kept.iter().enumerate() {
        let lower: Vec<ModuleVector> = kept[..j].iter().filter(|k| k.degree() < c.degree()).cloned().collect();
        if lower.is_empty() {
            cleaned.push(c.clone());
            continue;
        }
        let gb = buchberger(&lower, MonomialOrder::TermOverPosition, limits)?;
        let (rem, _) = gb.normal_form(c)?;
        cleaned.push(rem);
    }
    Ok(cleaned)
}

/// Scales so that the first nonzero entry has leading coefficient one.
fn normalize_sign(c: &ModuleVector) -> ModuleVector {
    let lc = c.entries().iter().find_map(|p| p.leading_coefficient().cloned());
    match lc.and_then(|s| s.inv()) {
        Some(inv) => {
            let entries = c.entries().iter().map(|p| p.scale(&inv)).collect();
            ModuleVector::new(entries, c.twists().to_vec(), c.degree()).expect("scaling keeps shape")
        }
        None => c.clone(),
    }
}

/// Solves `r = Σ_j u_j · column_j` in a free syzygy basis.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    generators: Vec<Polynomial>,
    gb: GroebnerBasis,
    columns: usize,
}

impl CoordinateSolver {
    pub fn new(basis: &SyzygyMatrix, limits: &Limits) -> Result<Self> {
        if !basis.is_free_basis() || basis.columns.is_empty() {
            return Err(Error::BasisNotFree);
        }
        let gb = buchberger(&basis.columns, MonomialOrder::TermOverPosition, limits)?;
        Ok(CoordinateSolver {
            generators: basis.generators.clone(),
            gb,
            columns: basis.columns.len(),
        })
    }

    /// Coordinates of the relation `r` (given entrywise, need not be
    /// homogeneous) in the column basis.
    pub fn coordinates(&self, r: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if r.len() != self.generators.len() {
            return Err(Error::ShapeMismatch);
        }
        let mut dot = Polynomial::zero(self.generators[0].field(), self.generators[0].ambient());
        for (a, f) in r.iter().zip(self.generators.iter()) {
            dot = dot.checked_add(&a.checked_mul(f)?)?;
        }
        if !dot.is_zero() {
            return Err(Error::NotARelation);
        }
        let (rem, quotients) = self.gb.divide_entries(r)?;
        if rem.iter().any(|p| !p.is_zero()) {
            return Err(Error::BasisNotFree);
        }
        let coords = self.gb.lift(&quotients);
        debug_assert_eq!(coords.len(), self.columns);
        Ok(coords)
    }
}

/// Coordinates of a relation in a free syzygy basis; see [`CoordinateSolver`].
pub fn module_coordinates(r: &[Polynomial], basis: &SyzygyMatrix, limits: &Limits) -> Result<Vec<Polynomial>> {
    CoordinateSolver::new(basis, limits)?.coordinates(r)
}

/// Result of an ideal membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// When `member`, `f = Σ witnesses[i] · gens[i]`.
    pub witnesses: Vec<Polynomial>,
}

/// Tests `f ∈ (gens)` in the ambient polynomial ring.
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial], limits: &Limits) -> Result<Membership> {
    let gb = GroebnerBasis::of_ideal(gens, limits)?;
    membership_with(&gb, f)
}

/// Membership against a precomputed ideal basis.
pub fn membership_with(gb: &GroebnerBasis, f: &Polynomial) -> Result<Membership> {
    let (rem, quotients) = gb.reduce(f)?;
    let member = rem.is_zero();
    let witnesses = if member { gb.lift(&quotients) } else { Vec::new() };
    Ok(Membership { member, witnesses })
}
