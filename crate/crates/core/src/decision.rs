//! Tight closure membership verdicts.
//!
//! An element `f_0 ∈ R_m` is first tested for membership in the ideal. If the
//! relation module splits as `⊕ O_Y(-b_j)`, then `f_0 ∈ I^*` iff for every `j`
//! either `m ≥ b_j` or the forcing class component `c_j` vanishes. Otherwise
//! the degree bounds are consulted and the verdict may stay undecided.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::Polynomial;
use crate::bounds::{full_report, BoundKind, BoundReport, Characteristic, Citation, DegreeData, Flags};
use crate::error::{Error, Result};
use crate::forcing::{Forcing, ForcingClass, ForcingOptions, IdealData, PowerWitness, SplittingData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    InIdeal,
    InTightClosureNotIdeal,
    NotInTightClosure,
    Undecided,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [
        Verdict::InIdeal,
        Verdict::InTightClosureNotIdeal,
        Verdict::NotInTightClosure,
        Verdict::Undecided,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::InIdeal => "InIdeal",
            Verdict::InTightClosureNotIdeal => "InTightClosureNotIdeal",
            Verdict::NotInTightClosure => "NotInTightClosure",
            Verdict::Undecided => "Undecided",
        }
    }

    /// In the tight closure (which contains the ideal).
    pub fn in_tight_closure(&self) -> Option<bool> {
        match self {
            Verdict::InIdeal | Verdict::InTightClosureNotIdeal => Some(true),
            Verdict::NotInTightClosure => Some(false),
            Verdict::Undecided => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One step of a justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub citation: Citation,
    pub detail: String,
}

impl Step {
    fn new(citation: Citation, detail: String) -> Step {
        Step { citation, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub degree: i64,
    pub steps: Vec<Step>,
    /// The verdict rests on a result proven in characteristic zero or for
    /// `p ≫ 0`.
    pub characteristic_caveat: bool,
    /// `f_0 = Σ witnesses[i] · f_i` in `R`, for [`Verdict::InIdeal`].
    pub witnesses: Option<Vec<Polynomial>>,
    pub forcing_class: Option<ForcingClass>,
    /// Attached when the bounds were consulted.
    pub report: Option<BoundReport>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    pub forcing: ForcingOptions,
    /// Overrides the characteristic of the coefficient field, e.g. to
    /// [`Characteristic::LargePrime`].
    pub characteristic: Option<Characteristic>,
    pub flags: Flags,
}

/// Decides membership for many elements of one ideal.
#[derive(Clone, Debug)]
pub struct DecisionEngine {
    ideal: IdealData,
    split: Option<(SplittingData, PowerWitness, PowerWitness)>,
    degree_data: Option<DegreeData>,
}

impl DecisionEngine {
    /// Fails with [`Error::SingularCurve`] on a singular curve. A relation
    /// module that is not known to split is not an error.
    pub fn new(ideal: IdealData, options: &EngineOptions) -> Result<DecisionEngine> {
        ideal.ring().ensure_smooth()?;
        let split = match SplittingData::new(&ideal) {
            Ok(s) => {
                let f = Forcing::new(&ideal, &s, &options.forcing)?;
                let (x, y) = (f.x_witness().clone(), f.y_witness().clone());
                Some((s, x, y))
            }
            Err(Error::SplittingNotEstablished) => None,
            Err(e) => return Err(e),
        };
        let characteristic = options.characteristic.unwrap_or(match ideal.ring().field().modulus() {
            None => Characteristic::Zero,
            Some(p) => Characteristic::Prime(p),
        });
        let degree_data = if ideal.len() >= 2 {
            let d = DegreeData::new(
                ideal.degrees(),
                ideal.ring().delta(),
                ideal.ring().genus(),
                characteristic,
            )?
            .with_flags(options.flags);
            Some(match &split {
                Some((s, _, _)) => d.with_twists(&s.dual_twists())?,
                None => d,
            })
        } else {
            None
        };
        Ok(DecisionEngine {
            ideal,
            split,
            degree_data,
        })
    }

    pub fn ideal(&self) -> &IdealData {
        &self.ideal
    }

    pub fn splitting(&self) -> Option<&SplittingData> {
        self.split.as_ref().map(|(s, _, _)| s)
    }

    pub fn degree_data(&self) -> Option<&DegreeData> {
        self.degree_data.as_ref()
    }

    pub fn report(&self) -> Option<BoundReport> {
        self.degree_data.as_ref().map(full_report)
    }

    /// Verdict for `f0`, given in input coordinates.
    pub fn decide(&self, f0: &Polynomial) -> Result<Decision> {
        let f = self.ideal.ring().to_ring_coordinates(f0)?;
        self.decide_in_ring(&f)
    }

    fn decide_in_ring(&self, f0: &Polynomial) -> Result<Decision> {
        if f0.is_zero() {
            return Err(Error::ZeroElement);
        }
        let m = f0.homogeneous_degree().ok_or(Error::NotHomogeneous)? as i64;
        let mut decision = Decision {
            verdict: Verdict::Undecided,
            degree: m,
            steps: Vec::new(),
            characteristic_caveat: false,
            witnesses: None,
            forcing_class: None,
            report: None,
        };

        let membership = self.ideal.membership_in_ring(f0)?;
        if membership.member {
            debug_assert!(self.ideal.verifies(f0, &membership.witnesses)?);
            decision.verdict = Verdict::InIdeal;
            decision.steps.push(Step::new(
                Citation::IdealMembership,
                String::from("normal form modulo the ideal and F is zero; witnesses verified"),
            ));
            decision.witnesses = Some(membership.witnesses);
            return Ok(decision);
        }
        decision.steps.push(Step::new(
            Citation::IdealMembership,
            String::from("nonzero normal form modulo the ideal and F"),
        ));

        if let Some((split, x, y)) = &self.split {
            let forcing = Forcing::from_checked(&self.ideal, split, x.clone(), y.clone());
            let class = forcing.class_in_ring(f0)?;
            let mut all = true;
            for (j, (c, b)) in class.components.iter().zip(class.twists.iter()).enumerate() {
                let ok = m >= *b || c.is_zero();
                all &= ok;
                let state = if c.is_zero() { "zero" } else { "nonzero" };
                let relation = if m >= *b { ">=" } else { "<" };
                decision.steps.push(Step::new(
                    Citation::ForcingClassVanishing,
                    format!(
                        "component {} in H^1(O_Y({})) is {state}; m = {m} {relation} b_{} = {b}",
                        j + 1,
                        m - b,
                        j + 1
                    ),
                ));
            }
            decision.verdict = if all {
                Verdict::InTightClosureNotIdeal
            } else {
                Verdict::NotInTightClosure
            };
            decision.steps.push(Step::new(
                Citation::SplitSummandCriterion,
                format!("relation module splits with twists {:?}", class.twists),
            ));
            decision.characteristic_caveat = true;
            decision.forcing_class = Some(class);
            return Ok(decision);
        }

        let degrees = self.ideal.degrees();
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        let n = sorted.len();
        if n >= 2 && m >= (sorted[n - 2] + sorted[n - 1]) as i64 {
            decision.verdict = Verdict::InTightClosureNotIdeal;
            decision.steps.push(Step::new(
                Citation::TopTwoDegreeInclusion,
                format!("m = {m} >= d_(n-1) + d_n = {}", sorted[n - 2] + sorted[n - 1]),
            ));
            return Ok(decision);
        }
        if m < sorted[0] as i64 {
            decision.verdict = Verdict::NotInTightClosure;
            decision.steps.push(Step::new(
                Citation::MinDegreeExclusion,
                format!("m = {m} < d_1 = {}", sorted[0]),
            ));
            return Ok(decision);
        }

        let Some(report) = self.report() else {
            decision
                .steps
                .push(Step::new(Citation::DegreeFallback, String::from("no bound applies")));
            return Ok(decision);
        };
        let hit = [report.inclusion, report.exclusion]
            .into_iter()
            .flatten()
            .find(|b| b.admits(m));
        match hit {
            Some(b) => {
                decision.verdict = match b.kind {
                    BoundKind::Inclusion => Verdict::InTightClosureNotIdeal,
                    BoundKind::Exclusion => Verdict::NotInTightClosure,
                };
                decision.characteristic_caveat = b.characteristic_caveat;
                decision.steps.push(Step::new(
                    b.citation,
                    format!("m = {m} is within the bound (degree {})", b.degree()),
                ));
            }
            None => {
                decision.steps.push(Step::new(
                    Citation::DegreeFallback,
                    match (report.exclusion_degree(), report.inclusion_degree()) {
                        (Some(e), Some(i)) => {
                            format!("no bound covers m = {m}: exclusion below {e}, inclusion from {i}")
                        }
                        (Some(e), None) => format!("no bound covers m = {m}: exclusion below {e}, no inclusion bound"),
                        (None, Some(i)) => format!("no bound covers m = {m}: no exclusion bound, inclusion from {i}"),
                        (None, None) => format!("no bound covers m = {m}"),
                    },
                ));
            }
        }
        decision.report = Some(report);
        Ok(decision)
    }

    /// Decides every monomial of a basis of `R_m` for `lo ≤ m ≤ hi`.
    pub fn sweep(&self, lo: i64, hi: i64) -> Result<Vec<SweepRow>> {
        if lo > hi {
            return Err(Error::EmptyRange);
        }
        if lo < 0 {
            return Err(Error::OutOfRange {
                index: lo,
                min: 0,
                max: i64::MAX,
            });
        }
        let mut rows = Vec::new();
        for m in lo..=hi {
            let mut row = SweepRow {
                degree: m,
                in_ideal: 0,
                in_tight_closure_not_ideal: 0,
                not_in_tight_closure: 0,
                undecided: 0,
            };
            for f in self.ideal.ring().monomial_basis(m as u32) {
                match self.decide_in_ring(&f)?.verdict {
                    Verdict::InIdeal => row.in_ideal += 1,
                    Verdict::InTightClosureNotIdeal => row.in_tight_closure_not_ideal += 1,
                    Verdict::NotInTightClosure => row.not_in_tight_closure += 1,
                    Verdict::Undecided => row.undecided += 1,
                }
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// Verdict counts over a monomial basis of `R_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub degree: i64,
    pub in_ideal: usize,
    pub in_tight_closure_not_ideal: usize,
    pub not_in_tight_closure: usize,
    pub undecided: usize,
}

impl SweepRow {
    pub fn total(&self) -> usize {
        self.in_ideal + self.in_tight_closure_not_ideal + self.not_in_tight_closure + self.undecided
    }

    pub fn count(&self, v: Verdict) -> usize {
        match v {
            Verdict::InIdeal => self.in_ideal,
            Verdict::InTightClosureNotIdeal => self.in_tight_closure_not_ideal,
            Verdict::NotInTightClosure => self.not_in_tight_closure,
            Verdict::Undecided => self.undecided,
        }
    }
}

pub fn decide(ideal: &IdealData, f0: &Polynomial) -> Result<Decision> {
    DecisionEngine::new(ideal.clone(), &EngineOptions::default())?.decide(f0)
}

pub fn degree_sweep(ideal: &IdealData, lo: i64, hi: i64) -> Result<Vec<SweepRow>> {
    if lo > hi {
        return Err(Error::EmptyRange);
    }
    DecisionEngine::new(ideal.clone(), &EngineOptions::default())?.sweep(lo, hi)
}
