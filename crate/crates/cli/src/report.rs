//! Machine-readable reports and their plain-text rendering.
//!
//! Field order in these structs is the key order of the JSON output.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use tightclosure_core::bounds::{
    Bound, BoundKind, BoundReport, Characteristic, Estimate, Flags, SlopeEstimates, Vanishing, CHARACTERISTIC_CAVEAT,
};
use tightclosure_core::decision::{Decision, SweepRow};
use tightclosure_core::{Field, Polynomial};

use crate::document::SCHEMA_VERSION;

pub fn field_json(field: Field) -> Value {
    match field.modulus() {
        None => json!("rationals"),
        Some(p) => json!({ "prime": p }),
    }
}

pub fn characteristic_json(c: Characteristic) -> Value {
    match c {
        Characteristic::Zero => json!("zero"),
        Characteristic::LargePrime => json!("large-prime"),
        Characteristic::Prime(p) => json!({ "prime": p }),
    }
}

fn characteristic_text(c: Characteristic) -> String {
    match c {
        Characteristic::Zero => "0".into(),
        Characteristic::LargePrime => "p >> 0".into(),
        Characteristic::Prime(p) => p.to_string(),
    }
}

fn caveat(on: bool) -> Option<&'static str> {
    on.then_some(CHARACTERISTIC_CAVEAT)
}

fn polys(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

#[derive(Serialize)]
pub struct FlagsJson {
    pub semistable: bool,
    pub strongly_semistable: bool,
    pub indecomposable: bool,
}

impl From<Flags> for FlagsJson {
    fn from(f: Flags) -> Self {
        FlagsJson {
            semistable: f.semistable,
            strongly_semistable: f.strongly_semistable,
            indecomposable: f.indecomposable,
        }
    }
}

#[derive(Serialize)]
pub struct BoundJson {
    pub kind: &'static str,
    pub relation: &'static str,
    pub threshold: String,
    pub degree: i64,
    pub admits: String,
    pub citation: &'static str,
    pub characteristic_caveat: bool,
}

impl From<&Bound> for BoundJson {
    fn from(b: &Bound) -> Self {
        let (kind, admits) = match b.kind {
            BoundKind::Inclusion => ("inclusion", format!("m >= {}", b.degree())),
            BoundKind::Exclusion => ("exclusion", format!("m <= {}", b.degree() - 1)),
        };
        BoundJson {
            kind,
            relation: b.relation.symbol(),
            threshold: b.threshold.to_string(),
            degree: b.degree(),
            admits,
            citation: b.citation.tag(),
            characteristic_caveat: b.characteristic_caveat,
        }
    }
}

impl BoundJson {
    fn line(&self) -> String {
        let what = match self.kind {
            "inclusion" => "R_m lies in I*",
            _ => "I* agrees with I in degree m",
        };
        format!(
            "{} for {} (threshold {} {}) [{}]",
            what, self.admits, self.relation, self.threshold, self.citation
        )
    }
}

#[derive(Serialize)]
pub struct VanishingJson {
    pub k: i64,
    pub applicable: bool,
    pub citation: &'static str,
}

impl From<&Vanishing> for VanishingJson {
    fn from(v: &Vanishing) -> Self {
        VanishingJson {
            k: v.k,
            applicable: v.applicable,
            citation: v.citation.tag(),
        }
    }
}

#[derive(Serialize)]
pub struct EstimateJson {
    pub value: String,
    pub strict: bool,
    pub citation: &'static str,
}

impl From<&Estimate> for EstimateJson {
    fn from(e: &Estimate) -> Self {
        EstimateJson {
            value: e.value.to_string(),
            strict: e.strict,
            citation: e.citation.tag(),
        }
    }
}

#[derive(Serialize)]
pub struct SlopesJson {
    pub mu: EstimateJson,
    pub mu_min_lower: EstimateJson,
    pub mu_min_upper: EstimateJson,
    pub mu_max_lower: EstimateJson,
    pub mu_max_upper: EstimateJson,
    pub exact: bool,
    pub transferred: bool,
}

impl From<&SlopeEstimates> for SlopesJson {
    fn from(s: &SlopeEstimates) -> Self {
        SlopesJson {
            mu: (&s.mu).into(),
            mu_min_lower: (&s.mu_min_lower).into(),
            mu_min_upper: (&s.mu_min_upper).into(),
            mu_max_lower: (&s.mu_max_lower).into(),
            mu_max_upper: (&s.mu_max_upper).into(),
            exact: s.exact,
            transferred: s.transferred,
        }
    }
}

#[derive(Serialize)]
pub struct BestJson {
    pub inclusion: Option<BoundJson>,
    pub exclusion: Option<BoundJson>,
}

impl From<&BoundReport> for BestJson {
    fn from(r: &BoundReport) -> Self {
        BestJson {
            inclusion: r.inclusion.as_ref().map(Into::into),
            exclusion: r.exclusion.as_ref().map(Into::into),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub degrees: Vec<u32>,
    pub delta: u32,
    pub genus: u64,
    pub characteristic: Value,
    pub flags: FlagsJson,
    pub twists: Option<Vec<i64>>,
    pub twists_source: Option<&'static str>,
    pub slopes: SlopesJson,
    pub inclusion: Option<BoundJson>,
    pub exclusion: Option<BoundJson>,
    pub vanishing: Option<VanishingJson>,
    pub generic: BestJson,
    pub bounds: Vec<BoundJson>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
    pub characteristic_caveat: Option<&'static str>,
}

pub struct BoundsInput {
    pub degrees: Vec<u32>,
    pub delta: u32,
    pub genus: u64,
    pub characteristic: Characteristic,
    pub flags: Flags,
    pub twists: Option<Vec<i64>>,
    pub twists_source: Option<&'static str>,
}

impl BoundsReport {
    pub fn new(
        input: BoundsInput,
        slopes: &SlopeEstimates,
        report: &BoundReport,
        generic: &BoundReport,
        warnings: Vec<String>,
    ) -> Self {
        BoundsReport {
            schema_version: SCHEMA_VERSION,
            command: "bounds",
            degrees: input.degrees,
            delta: input.delta,
            genus: input.genus,
            characteristic: characteristic_json(input.characteristic),
            flags: input.flags.into(),
            twists: input.twists,
            twists_source: input.twists_source,
            slopes: slopes.into(),
            inclusion: report.inclusion.as_ref().map(Into::into),
            exclusion: report.exclusion.as_ref().map(Into::into),
            vanishing: report.vanishing.as_ref().map(Into::into),
            generic: generic.into(),
            bounds: report.bounds.iter().map(Into::into).collect(),
            notes: report.notes.clone(),
            warnings,
            characteristic_caveat: caveat(report.characteristic_caveat()),
        }
    }

    pub fn text(&self, characteristic: Characteristic) -> String {
        let mut s = String::new();
        let degrees: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(
            s,
            "degrees ({}), curve degree {}, genus {}, characteristic {}",
            degrees.join(", "),
            self.delta,
            self.genus,
            characteristic_text(characteristic)
        );
        if let Some(t) = &self.twists {
            let _ = writeln!(
                s,
                "splitting twists {:?} ({})",
                t,
                self.twists_source.unwrap_or("given")
            );
        }
        match &self.inclusion {
            Some(b) => _ = writeln!(s, "inclusion: {}", b.line()),
            None => _ = writeln!(s, "inclusion: none"),
        }
        match &self.exclusion {
            Some(b) => _ = writeln!(s, "exclusion: {}", b.line()),
            None => _ = writeln!(s, "exclusion: none"),
        }
        if let Some(v) = &self.vanishing {
            let state = if v.applicable { "applies" } else { "hypotheses not met" };
            let _ = writeln!(s, "vanishing: I* = I + R_(>= {}) ({state}) [{}]", v.k, v.citation);
        }
        if let Some(b) = &self.generic.inclusion {
            let _ = writeln!(s, "generic inclusion: {}", b.line());
        }
        let _ = writeln!(s, "all bounds:");
        for b in &self.bounds {
            let _ = writeln!(s, "  {} {}", b.kind, b.line());
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        if let Some(c) = self.characteristic_caveat {
            let _ = writeln!(s, "caveat: {c}");
        }
        s
    }
}

#[derive(Serialize)]
pub struct ColumnJson {
    pub twist: i64,
    pub entries: Vec<String>,
}

#[derive(Serialize)]
pub struct SyzygyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub field: Value,
    pub generators: Vec<String>,
    pub generator_degrees: Vec<i64>,
    pub row_labels: Vec<String>,
    pub columns: Vec<ColumnJson>,
    pub certified: bool,
    pub twists: Option<Vec<i64>>,
    pub dual_twists: Option<Vec<i64>>,
    pub provenance: Option<&'static str>,
    pub coordinate_shift: Option<[String; 2]>,
    pub warning: Option<String>,
}

impl SyzygyReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "generators: {}", self.generators.join(", "));
        if let Some([a, b]) = &self.coordinate_shift {
            let _ = writeln!(s, "coordinates: x -> x + ({a})*z, y -> y + ({b})*z");
        }
        let _ = writeln!(s, "relations ({} columns):", self.columns.len());
        for (j, c) in self.columns.iter().enumerate() {
            let _ = writeln!(s, "  column {} (twist {}):", j + 1, c.twist);
            for (label, e) in self.row_labels.iter().zip(&c.entries) {
                let _ = writeln!(s, "    {label}: {e}");
            }
        }
        if self.certified {
            let _ = writeln!(s, "splitting certified ({})", self.provenance.unwrap_or(""));
            if let (Some(b), Some(a)) = (&self.twists, &self.dual_twists) {
                let _ = writeln!(s, "twists b_j: {b:?}");
                let _ = writeln!(s, "dual twists a_j: {a:?}");
            }
        } else {
            let _ = writeln!(s, "splitting not certified");
        }
        if let Some(w) = &self.warning {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }
}

#[derive(Serialize)]
pub struct StepJson {
    pub citation: &'static str,
    pub detail: String,
}

#[derive(Serialize)]
pub struct ComponentJson {
    pub twist: i64,
    pub cohomology_degree: i64,
    pub zero: bool,
    pub class: String,
}

#[derive(Serialize)]
pub struct ForcingJson {
    pub x_power: u32,
    pub y_power: u32,
    pub components: Vec<ComponentJson>,
}

#[derive(Serialize)]
pub struct DecideReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub field: Value,
    pub element: String,
    pub degree: i64,
    pub verdict: &'static str,
    pub in_tight_closure: Option<bool>,
    pub steps: Vec<StepJson>,
    pub witnesses: Option<Vec<String>>,
    pub forcing_class: Option<ForcingJson>,
    pub bounds: Option<BestJson>,
    pub characteristic_caveat: Option<&'static str>,
}

impl DecideReport {
    pub fn new(field: Field, element: &Polynomial, d: &Decision) -> Self {
        DecideReport {
            schema_version: SCHEMA_VERSION,
            command: "decide",
            field: field_json(field),
            element: element.to_string(),
            degree: d.degree,
            verdict: d.verdict.name(),
            in_tight_closure: d.verdict.in_tight_closure(),
            steps: d
                .steps
                .iter()
                .map(|s| StepJson {
                    citation: s.citation.tag(),
                    detail: s.detail.clone(),
                })
                .collect(),
            witnesses: d.witnesses.as_deref().map(polys),
            forcing_class: d.forcing_class.as_ref().map(|c| ForcingJson {
                x_power: c.x_power,
                y_power: c.y_power,
                components: c
                    .components
                    .iter()
                    .zip(&c.twists)
                    .map(|(k, b)| ComponentJson {
                        twist: *b,
                        cohomology_degree: k.degree(),
                        zero: k.is_zero(),
                        class: k.to_string(),
                    })
                    .collect(),
            }),
            bounds: d.report.as_ref().map(Into::into),
            characteristic_caveat: caveat(d.characteristic_caveat),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "element {} (degree {})", self.element, self.degree);
        let _ = writeln!(s, "verdict: {}", self.verdict);
        for (i, step) in self.steps.iter().enumerate() {
            let _ = writeln!(s, "  {}. {} [{}]", i + 1, step.detail, step.citation);
        }
        if let Some(w) = &self.witnesses {
            let _ = writeln!(s, "witnesses: {}", w.join(", "));
        }
        if let Some(f) = &self.forcing_class {
            let _ = writeln!(s, "forcing class (denominators x^{} y^{}):", f.x_power, f.y_power);
            for (j, c) in f.components.iter().enumerate() {
                let _ = writeln!(s, "  c_{} in H^1(O({})): {}", j + 1, c.cohomology_degree, c.class);
            }
        }
        if let Some(c) = self.characteristic_caveat {
            let _ = writeln!(s, "caveat: {c}");
        }
        s
    }
}

#[derive(Serialize)]
pub struct SweepRowJson {
    pub degree: i64,
    pub monomials: usize,
    pub in_ideal: usize,
    pub in_tight_closure_not_ideal: usize,
    pub not_in_tight_closure: usize,
    pub undecided: usize,
}

impl From<&SweepRow> for SweepRowJson {
    fn from(r: &SweepRow) -> Self {
        SweepRowJson {
            degree: r.degree,
            monomials: r.total(),
            in_ideal: r.in_ideal,
            in_tight_closure_not_ideal: r.in_tight_closure_not_ideal,
            not_in_tight_closure: r.not_in_tight_closure,
            undecided: r.undecided,
        }
    }
}

#[derive(Serialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub field: Value,
    pub range: [i64; 2],
    pub rows: Vec<SweepRowJson>,
    pub characteristic_caveat: Option<&'static str>,
}

impl SweepReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let mut parts = Vec::new();
            for (n, what) in [
                (r.in_ideal, "in I"),
                (r.in_tight_closure_not_ideal, "in I* but not I"),
                (r.not_in_tight_closure, "not in I*"),
                (r.undecided, "undecided"),
            ] {
                if n > 0 {
                    parts.push(format!("{n} {what}"));
                }
            }
            let summary = if r.not_in_tight_closure + r.undecided == 0 {
                "R_m lies in I*"
            } else if r.in_tight_closure_not_ideal + r.undecided == 0 {
                "I* agrees with I"
            } else {
                "mixed"
            };
            let _ = writeln!(
                s,
                "m = {}: {} monomials, {} ({summary})",
                r.degree,
                r.monomials,
                parts.join(", ")
            );
        }
        if let Some(c) = self.characteristic_caveat {
            let _ = writeln!(s, "caveat: {c}");
        }
        s
    }
}

#[derive(Serialize)]
pub struct CohomologyRow {
    pub twist: i64,
    pub h0: u64,
    pub h1: u64,
}

#[derive(Serialize)]
pub struct CohomologyReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub delta: u32,
    pub genus: u64,
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "plane curve of degree {}, genus {}", self.delta, self.genus);
        let _ = writeln!(s, "{:>6} {:>10} {:>10}", "k", "h0(O(k))", "h1(O(k))");
        for r in &self.rows {
            let _ = writeln!(s, "{:>6} {:>10} {:>10}", r.twist, r.h0, r.h1);
        }
        s
    }
}
