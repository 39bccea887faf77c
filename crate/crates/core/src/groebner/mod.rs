//! Gröbner bases for graded ideals and submodules of free modules.

mod buchberger;
mod order;
mod syzygy;

pub use buchberger::{buchberger, GroebnerBasis, Limits};
pub use order::{ModuleTerm, MonomialOrder, SchreyerData};
pub use syzygy::{
    ideal_membership, membership_with, module_coordinates, syzygies, CoordinateSolver, Membership, SyzygyMatrix,
};

#[cfg(test)]
mod tests;
