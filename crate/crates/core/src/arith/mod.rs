//! Coefficient fields and graded polynomial arithmetic.

mod field;
mod laurent;
mod module;
mod monomial;
mod parse;
mod poly;

pub use field::{Field, Scalar};
pub use laurent::{LaurentElement, LaurentExponent};
pub use module::ModuleVector;
pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_polynomial_in};
pub use poly::{Ambient, Polynomial};
