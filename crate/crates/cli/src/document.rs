//! The input document: JSON, validated in full before any computation.

use serde::Deserialize;
use tightclosure_core::bounds::{Characteristic, Flags};
use tightclosure_core::hypersurface::plane_genus;
use tightclosure_core::{parse_polynomial, Field, Polynomial};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema_version: u32,
    #[serde(default)]
    pub field: FieldSpec,
    pub hypersurface: Option<String>,
    #[serde(default)]
    pub generators: Vec<String>,
    pub degrees: Option<Vec<u32>>,
    pub delta: Option<u32>,
    pub twists: Option<Vec<i64>>,
    pub characteristic: Option<CharacteristicSpec>,
    pub element: Option<String>,
    #[serde(default)]
    pub flags: FlagSpec,
    pub sweep: Option<RangeSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(FieldName),
    Prime { prime: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldName {
    Rationals,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Named(FieldName::Rationals)
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CharacteristicSpec {
    Named(CharacteristicName),
    Prime { prime: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharacteristicName {
    Zero,
    LargePrime,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagSpec {
    #[serde(default)]
    pub semistable: bool,
    #[serde(default)]
    pub strongly_semistable: bool,
    #[serde(default)]
    pub indecomposable: bool,
    pub genus: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangeSpec {
    pub lo: i64,
    pub hi: i64,
}

/// A validated document with every polynomial parsed.
#[derive(Debug)]
pub struct Problem {
    pub field: Field,
    pub hypersurface: Option<Polynomial>,
    pub generators: Vec<Polynomial>,
    pub degrees: Option<Vec<u32>>,
    pub delta: Option<u32>,
    pub genus: Option<u64>,
    pub twists: Option<Vec<i64>>,
    pub characteristic: Option<Characteristic>,
    pub flags: Flags,
    pub element: Option<Polynomial>,
    pub sweep: Option<(i64, i64)>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn parse_document(text: &str) -> Result<Problem, CliError> {
    let doc: ProblemDocument = serde_json::from_str(text).map_err(|e| input(format!("invalid document: {e}")))?;
    doc.validate()
}

pub fn parse_range(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || input(format!("range `{text}` is not of the form lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(input(format!("range `{text}` is empty")));
    }
    Ok((lo, hi))
}

pub fn parse_element(text: &str, field: Field) -> Result<Polynomial, CliError> {
    let p = parse_polynomial(text, field).map_err(|e| CliError::at("element", e))?;
    if p.is_zero() {
        return Err(input("element: must be nonzero"));
    }
    if !p.is_homogeneous() {
        return Err(input("element: must be homogeneous"));
    }
    Ok(p)
}

impl ProblemDocument {
    pub fn validate(self) -> Result<Problem, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(input(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let field = match self.field {
            FieldSpec::Named(FieldName::Rationals) => Field::RATIONALS,
            FieldSpec::Prime { prime } => Field::prime(prime).map_err(|e| CliError::at("field", e))?,
        };

        let hypersurface = match &self.hypersurface {
            None => None,
            Some(text) => {
                let f = parse_polynomial(text, field).map_err(|e| CliError::at("hypersurface", e))?;
                if f.is_zero() || !f.is_homogeneous() || f.homogeneous_degree() == Some(0) {
                    return Err(input("hypersurface: must be a homogeneous form of positive degree"));
                }
                Some(f)
            }
        };

        let mut generators = Vec::with_capacity(self.generators.len());
        for (i, text) in self.generators.iter().enumerate() {
            let g = parse_polynomial(text, field).map_err(|e| CliError::at(&format!("generators[{i}]"), e))?;
            match g.homogeneous_degree() {
                Some(d) if d > 0 && !g.is_zero() => generators.push(g),
                _ => {
                    return Err(input(format!(
                        "generators[{i}]: must be a nonzero homogeneous form of positive degree"
                    )))
                }
            }
        }

        if let Some(degrees) = &self.degrees {
            if !generators.is_empty() {
                let actual: Vec<u32> = generators.iter().filter_map(|g| g.homogeneous_degree()).collect();
                if &actual != degrees {
                    return Err(input(format!(
                        "degrees {degrees:?} disagree with the generator degrees {actual:?}"
                    )));
                }
            }
            if degrees.contains(&0) {
                return Err(input("degrees: must be positive"));
            }
        }

        let curve_degree = hypersurface.as_ref().and_then(|f| f.homogeneous_degree());
        if let (Some(d), Some(c)) = (self.delta, curve_degree) {
            if d != c {
                return Err(input(format!("delta {d} disagrees with the hypersurface degree {c}")));
            }
        }
        let delta = curve_degree.or(self.delta);
        if delta == Some(0) {
            return Err(input("delta: must be positive"));
        }

        if let (Some(g), Some(d)) = (self.flags.genus, curve_degree) {
            if g != plane_genus(d) {
                return Err(input(format!(
                    "flags.genus {g} disagrees with the genus {} of a smooth plane curve of degree {d}",
                    plane_genus(d)
                )));
            }
        }

        let characteristic = self.characteristic.map(|c| match c {
            CharacteristicSpec::Named(CharacteristicName::Zero) => Ok(Characteristic::Zero),
            CharacteristicSpec::Named(CharacteristicName::LargePrime) => Ok(Characteristic::LargePrime),
            CharacteristicSpec::Prime { prime } => Field::prime(prime)
                .map(|_| Characteristic::Prime(prime))
                .map_err(|e| CliError::at("characteristic", e)),
        });
        let characteristic = characteristic.transpose()?;
        if let (Some(c), Some(p)) = (characteristic, field.modulus()) {
            if c != Characteristic::Prime(p) {
                return Err(input(format!("characteristic disagrees with the field GF({p})")));
            }
        }

        let element = self.element.as_deref().map(|t| parse_element(t, field)).transpose()?;

        let sweep = match self.sweep {
            None => None,
            Some(RangeSpec { lo, hi }) if lo >= 0 && lo <= hi => Some((lo, hi)),
            Some(RangeSpec { lo, hi }) => {
                return Err(input(format!("sweep: need 0 <= lo <= hi, got {lo}..{hi}")));
            }
        };

        Ok(Problem {
            field,
            hypersurface,
            generators,
            degrees: self.degrees,
            delta,
            genus: self.flags.genus,
            twists: self.twists,
            characteristic,
            flags: Flags {
                semistable: self.flags.semistable,
                strongly_semistable: self.flags.strongly_semistable,
                indecomposable: self.flags.indecomposable,
            },
            element,
            sweep,
        })
    }
}

impl Problem {
    /// Generator degrees, from the generators or the explicit list.
    pub fn generator_degrees(&self) -> Option<Vec<u32>> {
        if self.generators.is_empty() {
            self.degrees.clone()
        } else {
            Some(self.generators.iter().filter_map(|g| g.homogeneous_degree()).collect())
        }
    }

    pub fn default_characteristic(&self) -> Characteristic {
        self.characteristic.unwrap_or(match self.field.modulus() {
            None => Characteristic::Zero,
            Some(p) => Characteristic::Prime(p),
        })
    }
}
