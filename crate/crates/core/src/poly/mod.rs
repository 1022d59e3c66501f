//! Exact sparse Laurent polynomials over the integers.

mod laurent;
mod matrix;
mod monomial;
mod parse;

pub use laurent::LaurentPoly;
pub use matrix::{PolyMatrix, MINOR_EXPANSION_LIMIT};
pub use monomial::{Monomial, Var};
pub use parse::parse_poly;

use std::collections::BTreeMap;

use crate::error::Result;

/// Sum of two polynomials.
pub fn add(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a + b
}

/// Product of two polynomials.
pub fn mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    a * b
}

pub fn determinant(m: &PolyMatrix) -> Result<LaurentPoly> {
    m.determinant()
}

pub fn substitute(p: &LaurentPoly, assignment: &BTreeMap<Var, LaurentPoly>) -> Result<LaurentPoly> {
    p.substitute(assignment)
}

pub fn monomial_quotient(p: &LaurentPoly, m: &Monomial) -> LaurentPoly {
    p.monomial_quotient(m)
}
