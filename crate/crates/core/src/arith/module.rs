use alloc::vec::Vec;
use core::fmt;

use super::field::Field;
use super::poly::{Ambient, Polynomial};
use crate::error::{Error, Result};

/// A homogeneous element of the graded free module `⊕ S(-d_i)`.
///
/// Entry `i` is zero or homogeneous of degree `degree - twists[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    entries: Vec<Polynomial>,
    twists: Vec<i64>,
    degree: i64,
}

impl ModuleVector {
    pub fn new(entries: Vec<Polynomial>, twists: Vec<i64>, degree: i64) -> Result<Self> {
        if entries.is_empty() || entries.len() != twists.len() {
            return Err(Error::ShapeMismatch);
        }
        let (field, ambient) = (entries[0].field(), entries[0].ambient());
        for (p, t) in entries.iter().zip(twists.iter()) {
            if p.field() != field {
                return Err(Error::FieldMismatch);
            }
            if p.ambient() != ambient {
                return Err(Error::AmbientMismatch);
            }
            if p.is_zero() {
                continue;
            }
            match p.homogeneous_degree() {
                Some(d) if d as i64 + t == degree => {}
                _ => return Err(Error::NotHomogeneous),
            }
        }
        Ok(ModuleVector {
            entries,
            twists,
            degree,
        })
    }

    /// Infers the degree from the first nonzero entry.
    pub fn from_entries(entries: Vec<Polynomial>, twists: Vec<i64>) -> Result<Self> {
        let degree = entries
            .iter()
            .zip(twists.iter())
            .find_map(|(p, t)| p.total_degree().map(|d| d as i64 + t))
            .ok_or(Error::ZeroElement)?;
        ModuleVector::new(entries, twists, degree)
    }

    /// A homogeneous polynomial as a vector of rank one.
    pub fn from_polynomial(p: Polynomial) -> Result<Self> {
        let degree = p.homogeneous_degree().ok_or(if p.is_zero() {
            Error::ZeroElement
        } else {
            Error::NotHomogeneous
        })?;
        ModuleVector::new(alloc::vec![p], alloc::vec![0], degree as i64)
    }

    pub fn zero(field: Field, ambient: Ambient, twists: Vec<i64>, degree: i64) -> Self {
        let entries = twists.iter().map(|_| Polynomial::zero(field, ambient)).collect();
        ModuleVector {
            entries,
            twists,
            degree,
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Polynomial> {
        self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn ambient(&self) -> Ambient {
        self.entries[0].ambient()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// `Σ entries[i] · row[i]`.
    pub fn dot(&self, row: &[Polynomial]) -> Result<Polynomial> {
        if row.len() != self.entries.len() {
            return Err(Error::ShapeMismatch);
        }
        let mut acc = Polynomial::zero(self.field(), self.ambient());
        for (e, r) in self.entries.iter().zip(row.iter()) {
            acc = acc.checked_add(&e.checked_mul(r)?)?;
        }
        Ok(acc)
    }

    pub fn checked_add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        if self.twists != other.twists {
            return Err(Error::ShapeMismatch);
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleVector {
            entries,
            twists: self.twists.clone(),
            degree,
        })
    }

    /// `p · self` for a homogeneous polynomial `p`.
    pub fn scale_by(&self, p: &Polynomial) -> Result<ModuleVector> {
        let d = match p.homogeneous_degree() {
            Some(d) => d as i64,
            None if p.is_zero() => 0,
            None => return Err(Error::NotHomogeneous),
        };
        let entries = self
            .entries
            .iter()
            .map(|e| e.checked_mul(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleVector {
            entries,
            twists: self.twists.clone(),
            degree: self.degree + d,
        })
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}
