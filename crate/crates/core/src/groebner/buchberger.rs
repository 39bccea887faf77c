use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::order::{ModuleTerm, MonomialOrder};
use crate::arith::{Ambient, Field, ModuleVector, Polynomial, Scalar};
use crate::error::{Error, Result};

/// Resource limits for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of S-pairs processed in one run.
    pub max_pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 100_000 }
    }
}

/// A reduced Gröbner basis of a graded submodule (or ideal) together with the
/// transformation matrix expressing each element in the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: Field,
    ambient: Ambient,
    shifts: Vec<i64>,
    input_count: usize,
    elements: Vec<ModuleVector>,
    leads: Vec<ModuleTerm>,
    transform: Vec<Vec<Polynomial>>,
}

pub(crate) fn leading_term<'a>(
    order: &MonomialOrder,
    shifts: &[i64],
    comps: &'a [Polynomial],
) -> Option<(ModuleTerm, &'a Scalar)> {
    let mut best: Option<(ModuleTerm, &Scalar)> = None;
    for (i, p) in comps.iter().enumerate() {
        if let Some((m, c)) = p.leading_term() {
            let t = ModuleTerm {
                monomial: *m,
                position: i,
            };
            let better = match &best {
                None => true,
                Some((b, _)) => order.compare(shifts, &t, b) == Ordering::Greater,
            };
            if better {
                best = Some((t, c));
            }
        }
    }
    best
}

/// Full division of `p` by monic elements with the given leads; returns the
/// remainder and one quotient per divisor.
fn divide(
    order: &MonomialOrder,
    shifts: &[i64],
    leads: &[ModuleTerm],
    divisors: &[&[Polynomial]],
    mut p: Vec<Polynomial>,
) -> (Vec<Polynomial>, Vec<Polynomial>) {
    let field = p[0].field();
    let ambient = p[0].ambient();
    let mut remainder: Vec<Polynomial> = p.iter().map(|_| Polynomial::zero(field, ambient)).collect();
    let mut quotients: Vec<Polynomial> = leads.iter().map(|_| Polynomial::zero(field, ambient)).collect();
    while let Some((t, c)) = leading_term(order, shifts, &p) {
        let c = c.clone();
        let divisor = leads
            .iter()
            .position(|l| l.position == t.position && l.monomial.divides(&t.monomial));
        match divisor {
            Some(k) => {
                let m = t
                    .monomial
                    .checked_div(&leads[k].monomial)
                    .expect("divisibility checked");
                for (pi, gi) in p.iter_mut().zip(divisors[k].iter()) {
                    pi.sub_scaled(&c, m, gi);
                }
                quotients[k].add_term(c, m);
            }
            None => {
                p[t.position].remove_term(&t.monomial);
                remainder[t.position].add_term(c, t.monomial);
            }
        }
    }
    (remainder, quotients)
}

struct Work {
    comps: Vec<Polynomial>,
    coeffs: Vec<Polynomial>,
    degree: i64,
    lead: ModuleTerm,
}

enum Task {
    Input(usize),
    Pair(usize, usize),
}

/// Output of a Buchberger run that also tracks syzygies.
pub(crate) struct Run {
    pub basis: GroebnerBasis,
    /// Generators of the syzygy module of the inputs, each as coefficient
    /// vector with its degree.
    pub syzygies: Vec<(Vec<Polynomial>, i64)>,
}

fn check_inputs(generators: &[ModuleVector]) -> Result<(Field, Ambient, Vec<i64>)> {
    let first = generators.first().ok_or(Error::ShapeMismatch)?;
    let (field, ambient) = (first.field(), first.ambient());
    let shifts = first.twists().to_vec();
    for g in generators {
        if g.twists() != shifts.as_slice() {
            return Err(Error::ShapeMismatch);
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if g.ambient() != ambient {
            return Err(Error::AmbientMismatch);
        }
    }
    Ok((field, ambient, shifts))
}

/// Buchberger's algorithm with the normal selection strategy.
///
/// With `track_syzygies` every S-pair is reduced (no criteria), and the
/// coefficient vectors of all reductions to zero are returned; together they
/// generate the syzygy module of the inputs.
pub(crate) fn run(
    generators: &[ModuleVector],
    order: MonomialOrder,
    limits: &Limits,
    track_syzygies: bool,
) -> Result<Run> {
    let (field, ambient, shifts) = check_inputs(generators)?;
    let n = generators.len();
    let rank = shifts.len();
    let unit = |i: usize| -> Vec<Polynomial> {
        (0..n)
            .map(|j| {
                if i == j {
                    Polynomial::one(field, ambient)
                } else {
                    Polynomial::zero(field, ambient)
                }
            })
            .collect()
    };

    let mut basis: Vec<Work> = Vec::new();
    let mut syzygies = Vec::new();
    let mut queue: BTreeMap<(i64, u8, usize), Task> = BTreeMap::new();
    let mut seq = 0usize;
    for (i, g) in generators.iter().enumerate() {
        queue.insert((g.degree(), 0, i), Task::Input(i));
    }
    let mut pairs_done = 0usize;

    while let Some((&key, _)) = queue.first_key_value() {
        let task = queue.remove(&key).expect("key present");
        let degree = key.0;
        let (comps, coeffs) = match task {
            Task::Input(i) => (generators[i].entries().to_vec(), unit(i)),
            Task::Pair(l, k) => {
                pairs_done += 1;
                if pairs_done > limits.max_pairs {
                    return Err(Error::ResourceExhausted {
                        what: "S-pairs",
                        limit: limits.max_pairs,
                    });
                }
                let (gl, gk) = (&basis[l], &basis[k]);
                let lcm = gl.lead.monomial.lcm(&gk.lead.monomial);
                let ml = lcm.checked_div(&gl.lead.monomial).expect("lcm");
                let mk = lcm.checked_div(&gk.lead.monomial).expect("lcm");
                let one = field.one();
                let mut comps: Vec<Polynomial> = gl.comps.iter().map(|p| p.mul_term(&one, ml)).collect();
                for (c, g) in comps.iter_mut().zip(gk.comps.iter()) {
                    c.sub_scaled(&one, mk, g);
                }
                let mut coeffs: Vec<Polynomial> = gl.coeffs.iter().map(|p| p.mul_term(&one, ml)).collect();
                for (c, g) in coeffs.iter_mut().zip(gk.coeffs.iter()) {
                    c.sub_scaled(&one, mk, g);
                }
                (comps, coeffs)
            }
        };

        let leads: Vec<ModuleTerm> = basis.iter().map(|w| w.lead).collect();
        let divisors: Vec<&[Polynomial]> = basis.iter().map(|w| w.comps.as_slice()).collect();
        let (remainder, quotients) = divide(&order, &shifts, &leads, &divisors, comps);
        let mut coeffs = coeffs;
        for (q, w) in quotients.iter().zip(basis.iter()) {
            if q.is_zero() {
                continue;
            }
            for (c, t) in coeffs.iter_mut().zip(w.coeffs.iter()) {
                *c = &*c - &(q * t);
            }
        }

        match leading_term(&order, &shifts, &remainder) {
            None => {
                if track_syzygies && coeffs.iter().any(|c| !c.is_zero()) {
                    syzygies.push((coeffs, degree));
                }
            }
            Some((lead, lc)) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                let comps: Vec<Polynomial> = remainder.iter().map(|p| p.scale(&inv)).collect();
                let coeffs: Vec<Polynomial> = coeffs.iter().map(|p| p.scale(&inv)).collect();
                let k = basis.len();
                for (l, w) in basis.iter().enumerate() {
                    if w.lead.position != lead.position {
                        continue;
                    }
                    if rank == 1 && !track_syzygies && w.lead.monomial.is_coprime(&lead.monomial) {
                        continue;
                    }
                    let lcm = w.lead.monomial.lcm(&lead.monomial);
                    let d = lcm.degree() as i64 + shifts[lead.position];
                    queue.insert((d, 1, seq), Task::Pair(l, k));
                    seq += 1;
                }
                basis.push(Work {
                    comps,
                    coeffs,
                    degree,
                    lead,
                });
            }
        }
    }

    let basis = interreduce(basis, &order, &shifts);
    let mut elements = Vec::with_capacity(basis.len());
    let mut leads = Vec::with_capacity(basis.len());
    let mut transform = Vec::with_capacity(basis.len());
    for w in basis {
        elements.push(ModuleVector::new(w.comps, shifts.clone(), w.degree)?);
        leads.push(w.lead);
        transform.push(w.coeffs);
    }
    Ok(Run {
        basis: GroebnerBasis {
            order,
            field,
            ambient,
            shifts,
            input_count: n,
            elements,
            leads,
            transform,
        },
        syzygies,
    })
}

/// Drops redundant elements, reduces tails and sorts by (degree, lead).
fn interreduce(mut basis: Vec<Work>, order: &MonomialOrder, shifts: &[i64]) -> Vec<Work> {
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (li, lj) = (basis[i].lead, basis[j].lead);
            if li.position == lj.position && lj.monomial.divides(&li.monomial) && (lj.monomial != li.monomial || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut idx = 0;
    basis.retain(|_| {
        let k = keep[idx];
        idx += 1;
        k
    });

    for i in 0..basis.len() {
        let others: Vec<usize> = (0..basis.len()).filter(|&j| j != i).collect();
        let leads: Vec<ModuleTerm> = others.iter().map(|&j| basis[j].lead).collect();
        let divisors: Vec<&[Polynomial]> = others.iter().map(|&j| basis[j].comps.as_slice()).collect();
        let (remainder, quotients) = divide(order, shifts, &leads, &divisors, basis[i].comps.clone());
        let mut coeffs = basis[i].coeffs.clone();
        for (q, &j) in quotients.iter().zip(others.iter()) {
            if q.is_zero() {
                continue;
            }
            for (c, t) in coeffs.iter_mut().zip(basis[j].coeffs.iter()) {
                *c = &*c - &(q * t);
            }
        }
        basis[i].comps = remainder;
        basis[i].coeffs = coeffs;
    }

    basis.sort_by(|a, b| {
        a.degree
            .cmp(&b.degree)
            .then_with(|| order.compare(shifts, &a.lead, &b.lead))
    });
    basis
}

/// Computes a reduced Gröbner basis of the submodule generated by `generators`.
pub fn buchberger(generators: &[ModuleVector], order: MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    Ok(run(generators, order, limits, false)?.basis)
}

impl GroebnerBasis {
    /// Gröbner basis of the ideal generated by homogeneous polynomials.
    pub fn of_ideal(generators: &[Polynomial], limits: &Limits) -> Result<GroebnerBasis> {
        let vectors = generators
            .iter()
            .map(|g| ModuleVector::from_polynomial(g.clone()))
            .collect::<Result<Vec<_>>>()?;
        buchberger(&vectors, MonomialOrder::GrevLex, limits)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[ModuleVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_terms(&self) -> &[ModuleTerm] {
        &self.leads
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn input_count(&self) -> usize {
        self.input_count
    }

    /// Row `k`: `elements[k] = Σ_i transform[k][i] · input_i`.
    pub fn transform(&self) -> &[Vec<Polynomial>] {
        &self.transform
    }

    /// Division of an arbitrary vector of entries; returns the remainder and
    /// one quotient per basis element.
    pub fn divide_entries(&self, entries: &[Polynomial]) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
        if entries.len() != self.shifts.len() {
            return Err(Error::ShapeMismatch);
        }
        for e in entries {
            if e.field() != self.field {
                return Err(Error::FieldMismatch);
            }
            if e.ambient() != self.ambient {
                return Err(Error::AmbientMismatch);
            }
        }
        let divisors: Vec<&[Polynomial]> = self.elements.iter().map(ModuleVector::entries).collect();
        Ok(divide(
            &self.order,
            &self.shifts,
            &self.leads,
            &divisors,
            entries.to_vec(),
        ))
    }

    /// `v = Σ quotients[k] · elements[k] + remainder`, with no remainder term
    /// divisible by a leading term.
    pub fn normal_form(&self, v: &ModuleVector) -> Result<(ModuleVector, Vec<Polynomial>)> {
        if v.twists() != self.shifts.as_slice() {
            return Err(Error::ShapeMismatch);
        }
        let (rem, quotients) = self.divide_entries(v.entries())?;
        Ok((ModuleVector::new(rem, self.shifts.clone(), v.degree())?, quotients))
    }

    /// Normal form of a polynomial against a basis of an ideal.
    pub fn reduce(&self, p: &Polynomial) -> Result<(Polynomial, Vec<Polynomial>)> {
        let (mut rem, quotients) = self.divide_entries(core::slice::from_ref(p))?;
        Ok((rem.remove(0), quotients))
    }

    /// Maps quotients on the basis to coefficients on the input generators.
    pub fn lift(&self, quotients: &[Polynomial]) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = (0..self.input_count)
            .map(|_| Polynomial::zero(self.field, self.ambient))
            .collect();
        for (q, row) in quotients.iter().zip(self.transform.iter()) {
            if q.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(row.iter()) {
                *o = &*o + &(q * t);
            }
        }
        out
    }

    /// Whether the leading terms contain a pure power of each listed variable
    /// in every component, i.e. the quotient is finite dimensional in those
    /// variables.
    pub fn has_pure_powers(&self, variables: &[usize]) -> bool {
        (0..self.shifts.len()).all(|pos| {
            variables.iter().all(|&v| {
                self.leads
                    .iter()
                    .any(|l| l.position == pos && l.monomial.pure_power_of() == Some(v))
                    || self.leads.iter().any(|l| l.position == pos && l.monomial.is_one())
            })
        })
    }

    /// Every S-pair of the basis reduces to zero.
    pub fn is_groebner(&self) -> bool {
        for k in 0..self.elements.len() {
            for l in 0..k {
                let (lk, ll) = (self.leads[k], self.leads[l]);
                if lk.position != ll.position {
                    continue;
                }
                let lcm = lk.monomial.lcm(&ll.monomial);
                let mk = lcm.checked_div(&lk.monomial).expect("lcm");
                let ml = lcm.checked_div(&ll.monomial).expect("lcm");
                let gk = self.elements[k].entries();
                let gl = self.elements[l].entries();
                let lck = self.elements[k].entries()[lk.position].coefficient(&lk.monomial);
                let lcl = self.elements[l].entries()[ll.position].coefficient(&ll.monomial);
                let s: Vec<Polynomial> = gk
                    .iter()
                    .zip(gl.iter())
                    .map(|(a, b)| {
                        let mut t = a.mul_term(&lcl, mk);
                        t.sub_scaled(&lck, ml, b);
                        t
                    })
                    .collect();
                match self.divide_entries(&s) {
                    Ok((rem, _)) if rem.iter().all(Polynomial::is_zero) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// No leading term divides another and no tail term is divisible by a
    /// leading term.
    pub fn is_reduced(&self) -> bool {
        for (k, g) in self.elements.iter().enumerate() {
            for (pos, p) in g.entries().iter().enumerate() {
                for (m, _) in p.terms() {
                    let is_lead = pos == self.leads[k].position && *m == self.leads[k].monomial;
                    let hit = self
                        .leads
                        .iter()
                        .enumerate()
                        .any(|(j, l)| l.position == pos && l.monomial.divides(m) && !(is_lead && j == k));
                    if hit {
                        return false;
                    }
                }
            }
        }
        true
    }
}
