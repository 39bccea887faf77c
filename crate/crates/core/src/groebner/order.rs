use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::arith::Monomial;

/// A term `m · e_position` of a free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModuleTerm {
    pub monomial: Monomial,
    pub position: usize,
}

/// Monomial orders on ring and module terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lex, `x > y > z`. On modules this behaves like
    /// [`MonomialOrder::TermOverPosition`].
    GrevLex,
    /// Shifted degree first, then grevlex on the monomial, then position with
    /// lower index larger.
    TermOverPosition,
    /// The order induced on `⊕ S e_k` by a generating set: `m e_k` is compared
    /// through the term-over-position order of `m · lead(g_k)` in the base
    /// module, ties broken by index.
    Schreyer(SchreyerData),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerData {
    pub leads: Vec<ModuleTerm>,
    pub base_shifts: Vec<i64>,
}

fn top_cmp(shifts: &[i64], a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
    let da = a.monomial.degree() as i64 + shifts.get(a.position).copied().unwrap_or(0);
    let db = b.monomial.degree() as i64 + shifts.get(b.position).copied().unwrap_or(0);
    da.cmp(&db)
        .then_with(|| a.monomial.cmp(&b.monomial))
        .then_with(|| b.position.cmp(&a.position))
}

impl MonomialOrder {
    /// Compares two module terms; `shifts` are the degree twists of the free
    /// module the terms live in.
    pub fn compare(&self, shifts: &[i64], a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        match self {
            MonomialOrder::GrevLex | MonomialOrder::TermOverPosition => top_cmp(shifts, a, b),
            MonomialOrder::Schreyer(data) => {
                let la = data.leads[a.position];
                let lb = data.leads[b.position];
                let ta = ModuleTerm {
                    monomial: a.monomial * la.monomial,
                    position: la.position,
                };
                let tb = ModuleTerm {
                    monomial: b.monomial * lb.monomial,
                    position: lb.position,
                };
                top_cmp(&data.base_shifts, &ta, &tb).then_with(|| b.position.cmp(&a.position))
            }
        }
    }
}
