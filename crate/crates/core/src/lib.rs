//! Exact graded commutative algebra for tight closure computations on cones over
//! smooth plane curves.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`arith`]: coefficient fields (ℚ and prime fields), graded polynomials in
//!   `x, y, z`, Laurent elements localized at `xy`, and graded module vectors.
//! * [`groebner`]: Buchberger's algorithm for ideals and graded submodules of
//!   free modules, with transformation matrices, normal forms with quotients,
//!   syzygies and coordinates in a free syzygy basis.
//! * [`hypersurface`]: the ring `K[x,y,z]/(F)` viewed as a free `K[x,y]`-module,
//!   line bundle cohomology dimensions, and the Čech model of `H^1`.
//! * [`forcing`]: splitting data of the relation module and the forcing class of
//!   a candidate element.
//! * [`bounds`]: slope estimates and inclusion/exclusion degree bounds.
//! * [`decision`]: the membership verdict for a candidate element.
//!
//! ```
//! use tightclosure_core::decision::{DecisionEngine, EngineOptions, Verdict};
//! use tightclosure_core::forcing::IdealData;
//! use tightclosure_core::groebner::Limits;
//! use tightclosure_core::{parse_polynomial, Field, HypersurfaceRing};
//!
//! # fn main() -> tightclosure_core::Result<()> {
//! let k = Field::prime(7)?;
//! let limits = Limits::default();
//! let ring = HypersurfaceRing::new(&parse_polynomial("x^3 + y^3 + z^3", k)?, &limits)?;
//! let gens = ["x^4", "x*y", "y^2"].map(|g| parse_polynomial(g, k).unwrap());
//! let ideal = IdealData::new(ring, &gens, &limits)?;
//! let engine = DecisionEngine::new(ideal, &EngineOptions::default())?;
//! assert_eq!(engine.decide(&parse_polynomial("y*z^2", k)?)?.verdict, Verdict::InTightClosureNotIdeal);
//! # Ok(())
//! # }
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod decision;
mod error;
pub mod forcing;
pub mod groebner;
pub mod hypersurface;

pub use arith::{parse_polynomial, Ambient, Field, LaurentElement, ModuleVector, Monomial, Polynomial, Scalar};
pub use bounds::{BoundReport, Characteristic, Citation, DegreeData, SlopeEstimates};
pub use decision::{decide, degree_sweep, Decision, DecisionEngine, SweepRow, Verdict};
pub use error::{Error, Result};
pub use forcing::{ForcingClass, IdealData, SplittingData};
pub use groebner::{GroebnerBasis, Limits, MonomialOrder, SyzygyMatrix};
pub use hypersurface::{CechClass, HypersurfaceRing};
