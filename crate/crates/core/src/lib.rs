//! Exact engine for flagged Schur polynomials, Schubert polynomials and the
//! determinantal identities that connect them through nonintersecting
//! lattice paths.

pub mod catalan;
pub mod error;
pub mod lattice;
pub mod perms;
pub mod poly;
pub mod schubert;
pub mod search;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{LaurentPoly, Monomial, PolyMatrix, Var};
