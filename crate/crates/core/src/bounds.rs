//! Slope estimates and degree bounds for tight closure of primary ideals.
//!
//! For generators of degrees `d_1 ≤ … ≤ d_n` on a curve with `deg O_Y(1) = δ`
//! the dual relation bundle `F(0)` has slope `μ = δ Σd_i / (n - 1)`. Upper
//! bounds on its maximal slope give degrees `m` from which all of `R_m` lies in
//! the tight closure; lower bounds on its minimal slope give degrees below
//! which the tight closure adds nothing to the ideal.
//!
//! Thresholds are exact rationals. They become integer degrees only in
//! [`Bound::degree`], respecting whether the inequality is strict.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::hypersurface::plane_genus;

const MAX_DEGREE: u32 = 1_000_000;
const MAX_GENERATORS: usize = 10_000;

/// Characteristic of the coefficient field, as far as the theorems care.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Zero,
    Prime(u64),
    /// A statement about all sufficiently large primes.
    LargePrime,
}

/// Structural facts about the relation bundle supplied by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Flags {
    pub semistable: bool,
    pub strongly_semistable: bool,
    pub indecomposable: bool,
}

/// Where a bound or estimate comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Citation {
    IdealMembership,
    ForcingClassVanishing,
    SplitSummandCriterion,
    PresentingSequenceSlope,
    TopTwoSlopeBound,
    MaxDegreeSlope,
    MinDegreeSlope,
    SplitExactSlope,
    SemistableSlope,
    RankTwoGenusSlope,
    MaxSlopeInclusion,
    MinSlopeExclusion,
    TopTwoDegreeInclusion,
    MinDegreeExclusion,
    SplitTwistInclusion,
    SplitTwistExclusion,
    SemistableVanishing,
    StronglySemistableVanishing,
    ParameterVanishing,
    RankTwoGenusInclusion,
    RankTwoGenusExclusion,
    GenericFiberTransfer,
    MinimalDegreeSplit,
    AmpleSplit,
    DegreeFallback,
}

impl Citation {
    pub const ALL: [Citation; 25] = [
        Citation::IdealMembership,
        Citation::ForcingClassVanishing,
        Citation::SplitSummandCriterion,
        Citation::PresentingSequenceSlope,
        Citation::TopTwoSlopeBound,
        Citation::MaxDegreeSlope,
        Citation::MinDegreeSlope,
        Citation::SplitExactSlope,
        Citation::SemistableSlope,
        Citation::RankTwoGenusSlope,
        Citation::MaxSlopeInclusion,
        Citation::MinSlopeExclusion,
        Citation::TopTwoDegreeInclusion,
        Citation::MinDegreeExclusion,
        Citation::SplitTwistInclusion,
        Citation::SplitTwistExclusion,
        Citation::SemistableVanishing,
        Citation::StronglySemistableVanishing,
        Citation::ParameterVanishing,
        Citation::RankTwoGenusInclusion,
        Citation::RankTwoGenusExclusion,
        Citation::GenericFiberTransfer,
        Citation::MinimalDegreeSplit,
        Citation::AmpleSplit,
        Citation::DegreeFallback,
    ];

    /// Stable machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Citation::IdealMembership => "ideal-membership",
            Citation::ForcingClassVanishing => "forcing-class-vanishing",
            Citation::SplitSummandCriterion => "split-summand-criterion",
            Citation::PresentingSequenceSlope => "presenting-sequence-slope",
            Citation::TopTwoSlopeBound => "top-two-slope-bound",
            Citation::MaxDegreeSlope => "max-degree-slope",
            Citation::MinDegreeSlope => "min-degree-slope",
            Citation::SplitExactSlope => "split-exact-slope",
            Citation::SemistableSlope => "semistable-slope",
            Citation::RankTwoGenusSlope => "rank-two-genus-slope",
            Citation::MaxSlopeInclusion => "max-slope-inclusion",
            Citation::MinSlopeExclusion => "min-slope-exclusion",
            Citation::TopTwoDegreeInclusion => "top-two-degree-inclusion",
            Citation::MinDegreeExclusion => "min-degree-exclusion",
            Citation::SplitTwistInclusion => "split-twist-inclusion",
            Citation::SplitTwistExclusion => "split-twist-exclusion",
            Citation::SemistableVanishing => "semistable-vanishing",
            Citation::StronglySemistableVanishing => "strongly-semistable-vanishing",
            Citation::ParameterVanishing => "parameter-vanishing",
            Citation::RankTwoGenusInclusion => "rank-two-genus-inclusion",
            Citation::RankTwoGenusExclusion => "rank-two-genus-exclusion",
            Citation::GenericFiberTransfer => "generic-fiber-transfer",
            Citation::MinimalDegreeSplit => "minimal-degree-split",
            Citation::AmpleSplit => "ample-split",
            Citation::DegreeFallback => "degree-fallback",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Citation> {
        Citation::ALL.iter().copied().find(|c| c.tag() == tag)
    }
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Numerical data of a primary ideal on a plane-curve cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    degrees: Vec<u32>,
    delta: u32,
    genus: u64,
    characteristic: Characteristic,
    twists: Option<Vec<i64>>,
    flags: Flags,
}

impl DegreeData {
    /// Degrees are sorted; each must be at least one and there must be at
    /// least two of them.
    pub fn new(degrees: &[u32], delta: u32, genus: u64, characteristic: Characteristic) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::InvalidDegreeData("at least two generators are needed".into()));
        }
        if degrees.len() > MAX_GENERATORS {
            return Err(Error::InvalidDegreeData("too many generators".into()));
        }
        if degrees.iter().any(|d| *d == 0 || *d > MAX_DEGREE) {
            return Err(Error::InvalidDegreeData(
                "generator degrees must be in 1..=1000000".into(),
            ));
        }
        if delta == 0 || delta > MAX_DEGREE {
            return Err(Error::InvalidDegreeData("curve degree must be in 1..=1000000".into()));
        }
        if genus > 1_000_000_000_000 {
            return Err(Error::InvalidDegreeData("genus is too large".into()));
        }
        if let Characteristic::Prime(p) = characteristic {
            if p < 2 {
                return Err(Error::NotPrime(p));
            }
        }
        let mut degrees = degrees.to_vec();
        degrees.sort_unstable();
        Ok(DegreeData {
            degrees,
            delta,
            genus,
            characteristic,
            twists: None,
            flags: Flags::default(),
        })
    }

    /// Genus filled in as `(δ - 1)(δ - 2) / 2`.
    pub fn plane_curve(degrees: &[u32], delta: u32, characteristic: Characteristic) -> Result<Self> {
        DegreeData::new(degrees, delta, plane_genus(delta), characteristic)
    }

    /// Twists `a_j` of a splitting `F(0) = ⊕ O_Y(a_j)`; there must be `n - 1`
    /// of them summing to `Σ d_i`.
    pub fn with_twists(mut self, twists: &[i64]) -> Result<Self> {
        if twists.len() + 1 != self.degrees.len() {
            return Err(Error::InvalidDegreeData(
                "expected one twist fewer than generators".into(),
            ));
        }
        if twists.iter().sum::<i64>() != self.degree_sum() {
            return Err(Error::InvalidDegreeData(
                "twists must sum to the sum of the degrees".into(),
            ));
        }
        let mut twists = twists.to_vec();
        twists.sort_unstable_by(|a, b| b.cmp(a));
        self.twists = Some(twists);
        Ok(self)
    }

    pub fn with_flags(mut self, flags: Flags) -> Self {
        self.flags = flags;
        self
    }

    pub fn with_characteristic(mut self, characteristic: Characteristic) -> Self {
        self.characteristic = characteristic;
        self
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn twists(&self) -> Option<&[i64]> {
        self.twists.as_deref()
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().map(|d| *d as i64).sum()
    }

    fn min_degree(&self) -> i64 {
        self.degrees[0] as i64
    }

    fn max_degree(&self) -> i64 {
        *self.degrees.last().expect("n >= 2") as i64
    }

    fn top_two(&self) -> i64 {
        let n = self.degrees.len();
        (self.degrees[n - 2] + self.degrees[n - 1]) as i64
    }

    /// The relation bundle is known to be semistable in the sense needed
    /// for the given characteristic (rank one is always fine).
    fn vanishing_flag(&self) -> Option<Citation> {
        if self.n() == 2 {
            return Some(Citation::ParameterVanishing);
        }
        match self.characteristic {
            Characteristic::Zero if self.flags.semistable || self.flags.strongly_semistable => {
                Some(Citation::SemistableVanishing)
            }
            Characteristic::LargePrime if self.flags.semistable || self.flags.strongly_semistable => {
                Some(Citation::GenericFiberTransfer)
            }
            Characteristic::Prime(_) if self.flags.strongly_semistable => Some(Citation::StronglySemistableVanishing),
            _ => None,
        }
    }
}

/// A slope value with the direction of the estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Estimate {
    pub value: Rational64,
    /// The bounded quantity is strictly on the far side of `value`.
    pub strict: bool,
    pub citation: Citation,
}

impl Estimate {
    fn at(value: Rational64, citation: Citation) -> Self {
        Estimate {
            value,
            strict: false,
            citation,
        }
    }
}

/// Estimates for the slopes of the dual relation bundle `F(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlopeEstimates {
    pub delta: u32,
    pub mu: Estimate,
    pub mu_min_lower: Estimate,
    pub mu_min_upper: Estimate,
    pub mu_max_lower: Estimate,
    pub mu_max_upper: Estimate,
    /// `mu_min` and `mu_max` are known exactly.
    pub exact: bool,
    /// The estimates bound the Frobenius-stable slopes of a reduction mod `p ≫ 0`.
    pub transferred: bool,
}

fn int(v: i64) -> Rational64 {
    Rational64::from_integer(v)
}

pub fn slope_estimates(d: &DegreeData) -> SlopeEstimates {
    let delta = d.delta as i64;
    let n = d.n() as i64;
    let mu = Rational64::new(delta * d.degree_sum(), n - 1);
    let mu_e = Estimate::at(mu, Citation::PresentingSequenceSlope);
    let mut est = SlopeEstimates {
        delta: d.delta,
        mu: mu_e,
        mu_min_lower: Estimate::at(int(delta * d.min_degree()), Citation::MinDegreeSlope),
        mu_min_upper: mu_e,
        mu_max_lower: Estimate::at(int(delta * d.max_degree()), Citation::MaxDegreeSlope),
        mu_max_upper: Estimate::at(int(delta * d.top_two()), Citation::TopTwoSlopeBound),
        exact: false,
        transferred: false,
    };

    if let Some(a) = d.twists() {
        let hi = Estimate::at(int(delta * a[0]), Citation::SplitExactSlope);
        let lo = Estimate::at(int(delta * a[a.len() - 1]), Citation::SplitExactSlope);
        est.mu_max_lower = hi;
        est.mu_max_upper = hi;
        est.mu_min_lower = lo;
        est.mu_min_upper = lo;
        est.exact = true;
    } else if n == 2 || d.flags.semistable || d.flags.strongly_semistable {
        let e = Estimate::at(mu, Citation::SemistableSlope);
        est.mu_max_lower = e;
        est.mu_max_upper = e;
        est.mu_min_lower = e;
        est.mu_min_upper = e;
        est.exact = true;
    } else if n == 3
        && d.flags.indecomposable
        && d.genus >= 1
        && matches!(d.characteristic, Characteristic::Zero | Characteristic::LargePrime)
    {
        let slack = int(d.genus as i64 - 1);
        if mu + slack < est.mu_max_upper.value {
            est.mu_max_upper = Estimate::at(mu + slack, Citation::RankTwoGenusSlope);
        }
        if mu - slack > est.mu_min_lower.value {
            est.mu_min_lower = Estimate::at(mu - slack, Citation::RankTwoGenusSlope);
        }
    }
    est
}

/// Estimates for the reduction modulo `p ≫ 0`: the minimal slope stays above
/// `⌈μ_min⌉ - 1` and the maximal slope below `⌊μ_max⌋ + 1`, also after any
/// Frobenius pullback.
pub fn charp_transfer(generic: &SlopeEstimates) -> SlopeEstimates {
    let mu = generic.mu;
    let lo = generic.mu_min_lower.value.ceil() - int(1);
    let hi = generic.mu_max_upper.value.floor() + int(1);
    SlopeEstimates {
        mu_min_lower: Estimate {
            value: lo,
            strict: true,
            citation: Citation::GenericFiberTransfer,
        },
        mu_max_upper: Estimate {
            value: hi,
            strict: true,
            citation: Citation::GenericFiberTransfer,
        },
        mu_min_upper: mu,
        mu_max_lower: mu,
        exact: false,
        transferred: true,
        ..*generic
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `R_m ⊆ I^*` for every admissible `m`.
    Inclusion,
    /// `I^* ∩ R_m = I ∩ R_m` for every admissible `m`.
    Exclusion,
}

/// The admissible degrees of a bound, in terms of its threshold `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    AtLeast,
    LessThan,
    AtMost,
}

impl Relation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::LessThan => "<",
            Relation::AtMost => "<=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub kind: BoundKind,
    pub relation: Relation,
    pub threshold: Rational64,
    pub citation: Citation,
    /// Proven only in characteristic zero or for `p ≫ 0`, and the data is
    /// not in characteristic zero.
    pub characteristic_caveat: bool,
}

impl Bound {
    fn inclusion(threshold: Rational64, citation: Citation, caveat: bool) -> Bound {
        Bound {
            kind: BoundKind::Inclusion,
            relation: Relation::AtLeast,
            threshold,
            citation,
            characteristic_caveat: caveat,
        }
    }

    fn exclusion(threshold: Rational64, strict_estimate: bool, citation: Citation, caveat: bool) -> Bound {
        Bound {
            kind: BoundKind::Exclusion,
            relation: if strict_estimate {
                Relation::AtMost
            } else {
                Relation::LessThan
            },
            threshold,
            citation,
            characteristic_caveat: caveat,
        }
    }

    /// For an inclusion, the least admissible degree; for an exclusion, the
    /// least degree that is not admissible.
    pub fn degree(&self) -> i64 {
        let t = self.threshold;
        match self.relation {
            Relation::AtLeast | Relation::LessThan => t.ceil().to_integer(),
            Relation::AtMost => t.floor().to_integer() + 1,
        }
    }

    pub fn admits(&self, m: i64) -> bool {
        match self.kind {
            BoundKind::Inclusion => m >= self.degree(),
            BoundKind::Exclusion => m < self.degree(),
        }
    }
}

/// The caveat printed with results valid in characteristic zero or `p ≫ 0`.
pub const CHARACTERISTIC_CAVEAT: &str = "valid in characteristic 0; in characteristic p valid for p >> 0";

/// `I^* = I + R_{≥k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vanishing {
    pub k: i64,
    /// The hypotheses are met; otherwise `k` is only advisory.
    pub applicable: bool,
    pub citation: Citation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundReport {
    /// The best inclusion: the smallest degree.
    pub inclusion: Option<Bound>,
    /// The best exclusion: the largest degree.
    pub exclusion: Option<Bound>,
    pub vanishing: Option<Vanishing>,
    /// Every bound that was evaluated.
    pub bounds: Vec<Bound>,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn push(&mut self, b: Bound) {
        match b.kind {
            BoundKind::Inclusion => {
                if self.inclusion.is_none_or(|cur| b.degree() < cur.degree()) {
                    self.inclusion = Some(b);
                }
            }
            BoundKind::Exclusion => {
                if self.exclusion.is_none_or(|cur| b.degree() > cur.degree()) {
                    self.exclusion = Some(b);
                }
            }
        }
        self.bounds.push(b);
    }

    fn merge(&mut self, other: BoundReport) {
        for b in other.bounds {
            self.push(b);
        }
        if self.vanishing.is_none() {
            self.vanishing = other.vanishing;
        }
        self.notes.extend(other.notes);
    }

    pub fn inclusion_degree(&self) -> Option<i64> {
        self.inclusion.map(|b| b.degree())
    }

    pub fn exclusion_degree(&self) -> Option<i64> {
        self.exclusion.map(|b| b.degree())
    }

    pub fn characteristic_caveat(&self) -> bool {
        self.bounds.iter().any(|b| b.characteristic_caveat)
    }
}

fn caveat(d: &DegreeData) -> bool {
    d.characteristic != Characteristic::Zero
}

/// Inclusion from `μ_max ≤ δ(d_{n-1} + d_n)`, valid in every
/// characteristic; exclusion below the least generator degree.
pub fn generic_bounds(d: &DegreeData) -> BoundReport {
    let mut r = BoundReport::default();
    r.push(Bound::inclusion(
        int(d.top_two()),
        Citation::TopTwoDegreeInclusion,
        false,
    ));
    r.push(Bound::exclusion(
        int(d.min_degree()),
        false,
        Citation::MinDegreeExclusion,
        caveat(d),
    ));
    r
}

/// Bounds from the twists of a split bundle: `R_{≥ max a} ⊆ I^*` and
/// `I^* ⊆ I + R_{≥ min a}`.
pub fn split_bounds(d: &DegreeData) -> Result<BoundReport> {
    let a = d.twists().ok_or(Error::MissingTwists)?;
    let mut r = BoundReport::default();
    r.push(Bound::inclusion(int(a[0]), Citation::SplitTwistInclusion, caveat(d)));
    r.push(Bound::exclusion(
        int(a[a.len() - 1]),
        false,
        Citation::SplitTwistExclusion,
        caveat(d),
    ));
    Ok(r)
}

/// `k = ⌈Σ d_i / (n - 1)⌉`; applicable when the bundle is (strongly)
/// semistable as the characteristic requires.
pub fn vanishing_bound(d: &DegreeData) -> Vanishing {
    let k = Rational64::new(d.degree_sum(), d.n() as i64 - 1).ceil().to_integer();
    match d.vanishing_flag() {
        Some(Citation::GenericFiberTransfer) | None => Vanishing {
            k,
            applicable: false,
            citation: Citation::SemistableVanishing,
        },
        Some(c) => Vanishing {
            k,
            applicable: true,
            citation: c,
        },
    }
}

/// Bounds for three generators with an indecomposable relation bundle in
/// characteristic zero: inclusion for `m ≥ Σd/2 + (g-1)/δ`, exclusion for
/// `m < Σd/2 - (g-1)/δ`.
pub fn genus_bounds_n3(d: &DegreeData) -> Result<BoundReport> {
    if d.n() != 3 {
        return Err(Error::WrongGeneratorCount {
            expected: 3,
            found: d.n(),
        });
    }
    if !d.flags.indecomposable {
        return Err(Error::PreconditionMissing("indecomposable"));
    }
    if d.characteristic != Characteristic::Zero {
        return Err(Error::PreconditionMissing("characteristic zero"));
    }
    if d.genus == 0 {
        return Err(Error::InvalidDegreeData(
            "rank-two bundles on a genus zero curve always split".into(),
        ));
    }
    let half = Rational64::new(d.degree_sum(), 2);
    let slack = Rational64::new(d.genus as i64 - 1, d.delta as i64);
    let mut r = BoundReport::default();
    r.push(Bound::inclusion(half + slack, Citation::RankTwoGenusInclusion, false));
    r.push(Bound::exclusion(
        half - slack,
        false,
        Citation::RankTwoGenusExclusion,
        false,
    ));
    if plane_genus(d.delta) == d.genus && d.delta >= 3 {
        r.notes.push(
            "exclusion uses the exact genus; the closed-form plane-curve offset (δ+3)/2 is not applied, \
             the offset implied by the genus is (δ-3)/2"
                .into(),
        );
    }
    Ok(r)
}

/// `δ (d_1 + … + d_s)`, the minimal degree of a rank-`s` subsheaf of the
/// split bundle `⊕ O_Y(d_i)`.
pub fn mindeg_split(d: &DegreeData, s: usize) -> Result<i64> {
    if s == 0 || s > d.n() {
        return Err(Error::OutOfRange {
            index: s as i64,
            min: 1,
            max: d.n() as i64,
        });
    }
    Ok(d.delta as i64 * d.degrees[..s].iter().map(|x| *x as i64).sum::<i64>())
}

/// A split bundle `⊕ O_Y(a_j)` is ample iff every twist is positive.
pub fn ample_split(twists: &[i64]) -> bool {
    twists.iter().all(|a| *a > 0)
}

/// Bounds derived from slope estimates: `m δ ≥ μ̄_max` gives inclusion and
/// `m δ < μ̄_min` gives exclusion.
pub fn slope_bounds(est: &SlopeEstimates, caveat: bool) -> BoundReport {
    let delta = int(est.delta as i64);
    let mut r = BoundReport::default();
    r.push(Bound::inclusion(
        est.mu_max_upper.value / delta,
        Citation::MaxSlopeInclusion,
        false,
    ));
    r.push(Bound::exclusion(
        est.mu_min_lower.value / delta,
        est.mu_min_lower.strict,
        Citation::MinSlopeExclusion,
        caveat,
    ));
    r
}

/// Every bound whose hypotheses are met, with the best inclusion and
/// exclusion selected.
pub fn full_report(d: &DegreeData) -> BoundReport {
    let mut r = generic_bounds(d);
    let large_prime = d.characteristic == Characteristic::LargePrime;
    let fixed_prime = matches!(d.characteristic, Characteristic::Prime(_));

    if let Ok(s) = split_bounds(d) {
        r.merge(s);
    }

    let v = vanishing_bound(d);
    if v.applicable {
        let t = Rational64::new(d.degree_sum(), d.n() as i64 - 1);
        r.push(Bound::inclusion(t, v.citation, false));
        r.push(Bound::exclusion(t, false, v.citation, false));
    }
    r.vanishing = Some(v);

    if d.n() == 3 && d.flags.indecomposable && d.genus >= 1 && d.characteristic == Characteristic::Zero {
        if let Ok(g) = genus_bounds_n3(d) {
            r.merge(g);
        }
    }

    let est = slope_estimates(d);
    if large_prime {
        let mut t = slope_bounds(&charp_transfer(&est), true);
        for b in t.bounds.iter_mut() {
            b.citation = Citation::GenericFiberTransfer;
        }
        let t = BoundReport {
            inclusion: None,
            exclusion: None,
            ..t
        };
        r.merge(t);
    } else if !fixed_prime {
        r.merge(slope_bounds(&est, false));
    }
    if let (Some(i), Some(e)) = (r.inclusion_degree(), r.exclusion_degree()) {
        debug_assert!(e <= i, "exclusion {e} above inclusion {i}");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn data(degrees: &[u32], delta: u32) -> DegreeData {
        DegreeData::plane_curve(degrees, delta, Characteristic::Zero).unwrap()
    }

    fn example_95() -> DegreeData {
        DegreeData::new(&[100, 100, 100], 5, 6, Characteristic::Zero)
            .unwrap()
            .with_flags(Flags {
                indecomposable: true,
                ..Flags::default()
            })
    }

    #[test]
    fn slope_examples() {
        let d = data(&[2, 2, 4], 3);
        let s = slope_estimates(&d);
        assert_eq!(s.mu.value, r(12, 1));
        assert_eq!(s.mu_max_upper.value, r(18, 1));
        assert_eq!(s.mu_max_lower.value, r(12, 1));
        assert_eq!(s.mu_min_lower.value, r(6, 1));

        let s = slope_estimates(&d.clone().with_twists(&[5, 3]).unwrap());
        assert_eq!(s.mu_max_upper.value, r(15, 1));
        assert_eq!(s.mu_min_lower.value, r(9, 1));
        assert!(s.exact);

        let d = data(&[1, 1, 1], 1).with_flags(Flags {
            semistable: true,
            ..Flags::default()
        });
        let s = slope_estimates(&d);
        assert_eq!(s.mu_min_lower.value, r(3, 2));
        assert_eq!(s.mu_max_upper.value, r(3, 2));

        let s = slope_estimates(&data(&[3, 4], 2));
        assert_eq!(s.mu_min_lower.value, r(14, 1));
        assert_eq!(s.mu_max_upper.value, r(14, 1));
    }

    #[test]
    fn generic_examples() {
        let g = generic_bounds(&data(&[2, 2, 4], 3));
        assert_eq!(g.inclusion_degree(), Some(6));
        assert_eq!(g.exclusion_degree(), Some(2));
        assert_eq!(generic_bounds(&example_95()).inclusion_degree(), Some(200));
        let g = generic_bounds(&data(&[1, 1], 1));
        assert_eq!((g.inclusion_degree(), g.exclusion_degree()), (Some(2), Some(1)));
        assert_eq!(g.inclusion.unwrap().citation.tag(), "top-two-degree-inclusion");
    }

    #[test]
    fn split_examples() {
        let d = data(&[2, 2, 4], 3).with_twists(&[5, 3]).unwrap();
        let s = split_bounds(&d).unwrap();
        assert_eq!((s.inclusion_degree(), s.exclusion_degree()), (Some(5), Some(3)));

        let d = data(&[3, 4], 3).with_twists(&[7]).unwrap();
        let s = split_bounds(&d).unwrap();
        assert_eq!((s.inclusion_degree(), s.exclusion_degree()), (Some(7), Some(7)));

        let d = data(&[2, 3, 3], 3).with_twists(&[4, 4]).unwrap();
        let s = split_bounds(&d).unwrap();
        assert_eq!((s.inclusion_degree(), s.exclusion_degree()), (Some(4), Some(4)));

        assert_eq!(split_bounds(&data(&[2, 2], 3)).unwrap_err(), Error::MissingTwists);
        assert!(data(&[2, 2, 4], 3).with_twists(&[5, 4]).is_err());
    }

    #[test]
    fn vanishing_examples() {
        let v = vanishing_bound(&data(&[3, 5], 4));
        assert_eq!(v.k, 8);
        assert!(v.applicable);
        assert_eq!(v.citation.tag(), "parameter-vanishing");
        assert_eq!(vanishing_bound(&example_95()).k, 150);
        assert!(!vanishing_bound(&example_95()).applicable);
        assert_eq!(vanishing_bound(&data(&[1, 1, 2], 3)).k, 2);
    }

    #[test]
    fn genus_examples() {
        let g = genus_bounds_n3(&example_95()).unwrap();
        assert_eq!(g.inclusion_degree(), Some(151));
        assert_eq!(g.exclusion_degree(), Some(149));
        let e = g.exclusion.unwrap();
        assert_eq!(e.threshold, r(149, 1));
        assert!(e.admits(148));
        assert!(!e.admits(149));

        let d = DegreeData::new(&[2, 2, 2], 3, 1, Characteristic::Zero)
            .unwrap()
            .with_flags(Flags {
                indecomposable: true,
                ..Flags::default()
            });
        let g = genus_bounds_n3(&d).unwrap();
        assert_eq!((g.inclusion_degree(), g.exclusion_degree()), (Some(3), Some(3)));

        assert_eq!(
            DegreeData::plane_curve(&[100, 100, 100], 5, Characteristic::Zero)
                .unwrap()
                .genus(),
            6
        );
        assert!(matches!(
            genus_bounds_n3(&data(&[1, 1], 3)).unwrap_err(),
            Error::WrongGeneratorCount { .. }
        ));
        assert_eq!(
            genus_bounds_n3(&data(&[1, 1, 1], 3)).unwrap_err(),
            Error::PreconditionMissing("indecomposable")
        );
        let zero_genus = DegreeData::new(&[1, 1, 1], 2, 0, Characteristic::Zero)
            .unwrap()
            .with_flags(Flags {
                indecomposable: true,
                ..Flags::default()
            });
        assert!(genus_bounds_n3(&zero_genus).is_err());
    }

    #[test]
    fn full_report_for_example_95() {
        let rep = full_report(&example_95());
        assert_eq!(rep.inclusion_degree(), Some(151));
        assert_eq!(rep.exclusion_degree(), Some(149));
        assert_eq!(rep.inclusion.unwrap().citation.tag(), "rank-two-genus-inclusion");
        assert!(rep.notes.iter().any(|n| n.contains("(δ-3)/2")));
        assert!(!rep.characteristic_caveat());
    }

    #[test]
    fn transfer_examples() {
        let d = data(&[2, 2, 4], 3).with_twists(&[5, 3]).unwrap();
        let t = charp_transfer(&slope_estimates(&d));
        assert_eq!(t.mu_min_lower.value, r(8, 1));
        assert!(t.mu_min_lower.strict);

        let d = DegreeData::new(&[100, 100, 100], 5, 6, Characteristic::LargePrime)
            .unwrap()
            .with_flags(Flags {
                semistable: true,
                ..Flags::default()
            });
        let rep = slope_bounds(&charp_transfer(&slope_estimates(&d)), true);
        assert_eq!(rep.inclusion_degree(), Some(151));
        let e = rep.exclusion.unwrap();
        assert!(e.admits(149));
        assert!(!e.admits(150));

        let d = d.with_flags(Flags {
            indecomposable: true,
            ..Flags::default()
        });
        let t = charp_transfer(&slope_estimates(&d));
        assert_eq!(t.mu_max_upper.value, r(756, 1));
        assert_eq!(t.mu_min_lower.value, r(744, 1));
    }

    #[test]
    fn mindeg_and_ample() {
        let d = data(&[2, 2, 4], 3);
        assert_eq!(mindeg_split(&d, 1).unwrap(), 6);
        assert_eq!(mindeg_split(&d, 2).unwrap(), 12);
        assert_eq!(mindeg_split(&d, 3).unwrap(), 24);
        assert!(mindeg_split(&d, 0).is_err());
        assert!(mindeg_split(&d, 4).is_err());
        assert!(ample_split(&[1, 2]));
        assert!(!ample_split(&[0, 2]));
        assert!(!ample_split(&[-1]));
    }

    #[test]
    fn tags_round_trip() {
        for c in Citation::ALL {
            assert_eq!(Citation::from_tag(c.tag()), Some(c));
        }
    }

    fn degree_data() -> impl Strategy<Value = DegreeData> {
        (prop::collection::vec(1u32..40, 2..6), 1u32..9).prop_map(|(ds, delta)| data(&ds, delta))
    }

    /// Degree data with the twists of an actual relation module: a random
    /// `(x, y)`-primary monomial ideal of `K[x, y]`.
    fn split_data() -> impl Strategy<Value = DegreeData> {
        (
            1u32..8,
            1u32..8,
            prop::collection::vec((0u32..7, 0u32..7), 0..4),
            1u32..7,
        )
            .prop_filter_map("needs two generators", |(a, b, mixed, delta)| {
                use crate::arith::{Ambient, Field, Monomial, Polynomial};
                use crate::groebner::{syzygies, Limits};
                let mut monos = vec![Monomial::new(a, 0, 0), Monomial::new(0, b, 0)];
                for (i, j) in mixed {
                    let m = Monomial::new(i + 1, j + 1, 0);
                    if !monos.iter().any(|g| g.divides(&m)) {
                        monos.retain(|g| !m.divides(g));
                        monos.push(m);
                    }
                }
                let gens: Vec<Polynomial> = monos
                    .iter()
                    .map(|m| Polynomial::monomial(Field::RATIONALS, Ambient::XY, *m))
                    .collect();
                let syz = syzygies(&gens, true, &Limits::default()).ok()?;
                let degrees: Vec<u32> = monos.iter().map(Monomial::degree).collect();
                data(&degrees, delta).with_twists(&syz.column_twists()).ok()
            })
    }

    proptest! {
        #[test]
        fn slope_is_sandwiched(d in degree_data()) {
            let s = slope_estimates(&d);
            prop_assert!(int(d.delta() as i64 * d.degrees()[0] as i64) <= s.mu.value);
            prop_assert!(s.mu.value <= int(d.delta() as i64 * d.top_two()));
            prop_assert!(s.mu_min_lower.value <= s.mu.value);
            prop_assert!(s.mu.value <= s.mu_max_upper.value);
        }

        #[test]
        fn split_slopes_are_sandwiched(d in split_data()) {
            let a = d.twists().unwrap();
            let delta = d.delta() as i64;
            let s = slope_estimates(&d);
            prop_assert!(int(delta * a[a.len() - 1]) <= s.mu.value);
            prop_assert!(s.mu.value <= int(delta * a[0]));
            prop_assert_eq!(a.iter().sum::<i64>(), d.degree_sum());
        }

        #[test]
        fn generic_inclusion_dominates_split(d in split_data()) {
            let g = generic_bounds(&d).inclusion_degree().unwrap();
            let s = split_bounds(&d).unwrap().inclusion_degree().unwrap();
            prop_assert!(g >= s);
        }

        #[test]
        fn parameter_case_agrees(d1 in 1u32..10, d2 in 1u32..10, delta in 1u32..8) {
            let d = data(&[d1, d2], delta).with_twists(&[(d1 + d2) as i64]).unwrap();
            let k = (d1 + d2) as i64;
            prop_assert_eq!(vanishing_bound(&d).k, k);
            prop_assert_eq!(generic_bounds(&d).inclusion_degree(), Some(k));
            let s = split_bounds(&d).unwrap();
            prop_assert_eq!(s.inclusion_degree(), Some(k));
            prop_assert_eq!(s.exclusion_degree(), Some(k));
        }

        #[test]
        fn genus_one_collapses_to_vanishing(ds in prop::collection::vec(1u32..60, 3)) {
            let sum: u32 = ds.iter().sum();
            prop_assume!(sum.is_multiple_of(2));
            let d = DegreeData::new(&ds, 3, 1, Characteristic::Zero).unwrap().with_flags(Flags {
                indecomposable: true,
                ..Flags::default()
            });
            let g = genus_bounds_n3(&d).unwrap();
            let k = vanishing_bound(&d).k;
            prop_assert_eq!(g.inclusion_degree(), Some(k));
            prop_assert_eq!(g.exclusion_degree(), Some(k));
        }

        #[test]
        fn inclusion_is_monotone(d in degree_data(), i in 0usize..6, bump in 1u32..5) {
            let mut ds = d.degrees().to_vec();
            let i = i % ds.len();
            ds[i] += bump;
            let bigger = data(&ds, d.delta());
            prop_assert!(generic_bounds(&bigger).inclusion_degree() >= generic_bounds(&d).inclusion_degree());
            prop_assert!(full_report(&bigger).inclusion_degree() >= full_report(&d).inclusion_degree());
        }

        #[test]
        fn report_is_consistent(d in degree_data(), flags in (any::<bool>(), any::<bool>()), lp in any::<bool>()) {
            let d = d
                .with_flags(Flags { semistable: flags.0, strongly_semistable: false, indecomposable: flags.1 })
                .with_characteristic(if lp { Characteristic::LargePrime } else { Characteristic::Zero });
            let rep = full_report(&d);
            prop_assert!(rep.exclusion_degree().unwrap() <= rep.inclusion_degree().unwrap());
        }
    }
}
