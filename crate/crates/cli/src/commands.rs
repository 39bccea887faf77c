use tightclosure_core::bounds::{
    charp_transfer, full_report, generic_bounds, genus_bounds_n3, slope_estimates, Characteristic, DegreeData,
};
use tightclosure_core::decision::{DecisionEngine, EngineOptions};
use tightclosure_core::forcing::{ForcingOptions, IdealData, SplittingData, DEFAULT_DENOMINATOR_CAP};
use tightclosure_core::groebner::{syzygies, Limits, SyzygyMatrix};
use tightclosure_core::hypersurface::{h0_dim, h1_dim, plane_genus};
use tightclosure_core::{Ambient, Error, HypersurfaceRing, Polynomial};

use crate::document::{parse_element, Problem, SCHEMA_VERSION};
use crate::error::CliError;
use crate::report::{
    field_json, BoundsInput, BoundsReport, CohomologyReport, CohomologyRow, ColumnJson, DecideReport, SweepReport,
    SyzygyReport,
};

/// Options given on the command line rather than in the document.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub max_pairs: Option<usize>,
    pub max_denominator_exp: Option<u32>,
}

impl Options {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(n) = self.max_pairs {
            l.max_pairs = n;
        }
        l
    }

    fn forcing(&self) -> ForcingOptions {
        ForcingOptions {
            cap: self.max_denominator_exp.unwrap_or(DEFAULT_DENOMINATOR_CAP),
            ..ForcingOptions::default()
        }
    }
}

fn require<T: Clone>(v: &Option<T>, what: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| CliError::Input(format!("the document has no {what}")))
}

/// Errors that only cost us optional information become warnings; resource
/// limits still abort.
fn soften(e: Error, what: &str, warnings: &mut Vec<String>) -> Result<(), CliError> {
    match CliError::from(e) {
        r @ CliError::Resource(_) => Err(r),
        other => {
            warnings.push(format!("{what}: {}", other.message()));
            Ok(())
        }
    }
}

fn ring(p: &Problem, limits: &Limits) -> Result<HypersurfaceRing, CliError> {
    let f = require(&p.hypersurface, "hypersurface")?;
    HypersurfaceRing::new(&f, limits).map_err(|e| CliError::at("hypersurface", e))
}

fn ideal(p: &Problem, limits: &Limits) -> Result<IdealData, CliError> {
    if p.generators.is_empty() {
        return Err(CliError::Input("the document has no generators".into()));
    }
    let ring = ring(p, limits)?;
    IdealData::new(ring, &p.generators, limits).map_err(|e| CliError::at("generators", e))
}

fn xy_generators(p: &Problem) -> Option<Vec<Polynomial>> {
    p.generators.iter().map(|g| g.to_ambient(Ambient::XY).ok()).collect()
}

fn computed_twists(p: &Problem, limits: &Limits, warnings: &mut Vec<String>) -> Result<Option<Vec<i64>>, CliError> {
    if p.generators.len() < 2 {
        return Ok(None);
    }
    if p.hypersurface.is_some() {
        let ideal = match ideal(p, limits) {
            Ok(i) => i,
            Err(CliError::Resource(m)) => return Err(CliError::Resource(m)),
            Err(e) => {
                warnings.push(format!("twists not computed: {e}"));
                return Ok(None);
            }
        };
        return match SplittingData::new(&ideal) {
            Ok(s) => Ok(Some(s.dual_twists())),
            Err(e) => soften(e, "twists not computed", warnings).map(|_| None),
        };
    }
    let Some(gens) = xy_generators(p) else {
        warnings.push("twists not computed: generators involve z and no hypersurface is given".into());
        return Ok(None);
    };
    match syzygies(&gens, true, limits) {
        Ok(s) => Ok(Some(s.column_twists())),
        Err(e) => soften(e, "twists not computed", warnings).map(|_| None),
    }
}

pub fn bounds(p: &Problem, opts: &Options) -> Result<(BoundsReport, Characteristic), CliError> {
    let limits = opts.limits();
    let degrees = p
        .generator_degrees()
        .ok_or_else(|| CliError::Input("bounds need generators or a degree list".into()))?;
    let delta = p
        .delta
        .ok_or_else(|| CliError::Input("bounds need a hypersurface or delta".into()))?;
    let genus = p.genus.unwrap_or_else(|| plane_genus(delta));
    let characteristic = p.default_characteristic();
    let mut warnings = Vec::new();

    let mut d = DegreeData::new(&degrees, delta, genus, characteristic)
        .map_err(|e| CliError::at("degrees", e))?
        .with_flags(p.flags);
    let (twists, source) = match &p.twists {
        Some(t) => (Some(t.clone()), Some("input")),
        None => {
            let t = computed_twists(p, &limits, &mut warnings)?;
            let source = t.as_ref().map(|_| "computed");
            (t, source)
        }
    };
    if let Some(t) = &twists {
        d = d.with_twists(t).map_err(|e| CliError::at("twists", e))?;
    }
    if d.n() == 3 && p.flags.indecomposable {
        if let Err(e) = genus_bounds_n3(&d) {
            warnings.push(format!("rank-two genus bounds not applied: {e}"));
        }
    }

    let report = full_report(&d);
    let generic = generic_bounds(&d);
    let mut slopes = slope_estimates(&d);
    if characteristic == Characteristic::LargePrime {
        slopes = charp_transfer(&slopes);
    }
    let input = BoundsInput {
        degrees: d.degrees().to_vec(),
        delta,
        genus,
        characteristic,
        flags: p.flags,
        twists: d.twists().map(|t| t.to_vec()),
        twists_source: source,
    };
    Ok((
        BoundsReport::new(input, &slopes, &report, &generic, warnings),
        characteristic,
    ))
}

fn columns(m: &SyzygyMatrix) -> Vec<ColumnJson> {
    m.columns()
        .iter()
        .zip(m.column_twists())
        .map(|(c, twist)| ColumnJson {
            twist,
            entries: c.entries().iter().map(|e| e.to_string()).collect(),
        })
        .collect()
}

pub fn syzygy(p: &Problem, opts: &Options) -> Result<SyzygyReport, CliError> {
    let limits = opts.limits();
    if p.generators.is_empty() {
        return Err(CliError::Input("the document has no generators".into()));
    }
    let mut report = SyzygyReport {
        schema_version: SCHEMA_VERSION,
        command: "syzygy",
        field: field_json(p.field),
        generators: p.generators.iter().map(|g| g.to_string()).collect(),
        generator_degrees: p
            .generators
            .iter()
            .filter_map(|g| g.homogeneous_degree().map(i64::from))
            .collect(),
        row_labels: Vec::new(),
        columns: Vec::new(),
        certified: false,
        twists: None,
        dual_twists: None,
        provenance: None,
        coordinate_shift: None,
        warning: None,
    };

    // Generators as the relation computation sees them, and F when it has
    // to be adjoined.
    let mut gens = p.generators.clone();
    let mut equation = None;

    if p.hypersurface.is_some() {
        let ring = ring(p, &limits)?;
        report.coordinate_shift = ring.coordinate_shift().map(|(a, b)| [a.to_string(), b.to_string()]);
        equation = Some(ring.equation().clone());
        match IdealData::new(ring.clone(), &p.generators, &limits) {
            Ok(ideal) => {
                gens = ideal.generators().to_vec();
                match SplittingData::new(&ideal) {
                    Ok(s) => {
                        report.row_labels = gens.iter().map(|g| g.to_string()).collect();
                        report.columns = columns(s.basis());
                        report.certified = true;
                        report.twists = Some(s.twists());
                        report.dual_twists = Some(s.dual_twists());
                        report.provenance = Some(s.provenance());
                        return Ok(report);
                    }
                    Err(Error::SplittingNotEstablished) => {
                        report.warning = Some("splitting not established".into());
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Err(e @ Error::NotPrimary) => {
                report.warning = Some(format!("splitting not established: {e}"));
                gens = p
                    .generators
                    .iter()
                    .map(|g| ring.to_ring_coordinates(g))
                    .collect::<Result<_, _>>()?;
            }
            Err(e) => return Err(CliError::at("generators", e)),
        }
    } else if let Some(xy) = xy_generators(p) {
        match syzygies(&xy, true, &limits) {
            Ok(s) => {
                report.row_labels = xy.iter().map(|g| g.to_string()).collect();
                report.columns = columns(&s);
                report.certified = true;
                report.twists = Some(s.column_twists());
                report.dual_twists = Some(s.column_twists());
                report.provenance = Some(SplittingData::PROVENANCE);
                return Ok(report);
            }
            Err(Error::NotPrimary) => {
                report.warning = Some("splitting not established: generators are not (x, y)-primary".into());
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        report.warning = Some("splitting not established: no hypersurface given, relations over K[x, y, z]".into());
    }

    let mut rows = gens;
    if let Some(f) = &equation {
        rows.push(f.clone());
    }
    let s = syzygies(&rows, false, &limits)?;
    report.row_labels = rows.iter().map(|g| g.to_string()).collect();
    if equation.is_some() {
        if let Some(last) = report.row_labels.last_mut() {
            *last = format!("F = {last}");
        }
    }
    report.columns = columns(&s);
    Ok(report)
}

fn engine(p: &Problem, opts: &Options) -> Result<DecisionEngine, CliError> {
    let limits = opts.limits();
    let ideal = ideal(p, &limits)?;
    let options = EngineOptions {
        forcing: opts.forcing(),
        characteristic: p.characteristic,
        flags: p.flags,
    };
    Ok(DecisionEngine::new(ideal, &options)?)
}

pub fn decide(p: &Problem, opts: &Options, element: Option<&str>) -> Result<DecideReport, CliError> {
    let f0 = match element {
        Some(text) => parse_element(text, p.field)?,
        None => p
            .element
            .clone()
            .ok_or_else(|| CliError::Input("no element: pass --element or set `element`".into()))?,
    };
    let engine = engine(p, opts)?;
    let decision = engine.decide(&f0).map_err(|e| CliError::at("element", e))?;
    Ok(DecideReport::new(p.field, &f0, &decision))
}

pub fn sweep(p: &Problem, opts: &Options, range: Option<(i64, i64)>) -> Result<SweepReport, CliError> {
    let (lo, hi) = range
        .or(p.sweep)
        .ok_or_else(|| CliError::Input("no range: pass --range or set `sweep`".into()))?;
    if lo < 0 {
        return Err(CliError::Input(format!("sweep degrees must be nonnegative, got {lo}")));
    }
    let engine = engine(p, opts)?;
    let rows = engine.sweep(lo, hi)?;
    let caveat = engine.splitting().is_some() || engine.report().is_some_and(|r| r.characteristic_caveat());
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        command: "sweep",
        field: field_json(p.field),
        range: [lo, hi],
        rows: rows.iter().map(Into::into).collect(),
        characteristic_caveat: caveat.then_some(tightclosure_core::bounds::CHARACTERISTIC_CAVEAT),
    })
}

pub fn cohomology(p: &Problem, range: Option<(i64, i64)>) -> Result<CohomologyReport, CliError> {
    let delta = p
        .delta
        .ok_or_else(|| CliError::Input("cohomology needs a hypersurface or delta".into()))?;
    let (lo, hi) = range.unwrap_or((-3, 2 * delta as i64));
    Ok(CohomologyReport {
        schema_version: SCHEMA_VERSION,
        command: "cohomology",
        delta,
        genus: plane_genus(delta),
        rows: (lo..=hi)
            .map(|k| CohomologyRow {
                twist: k,
                h0: h0_dim(delta, k),
                h1: h1_dim(delta, k),
            })
            .collect(),
    })
}
