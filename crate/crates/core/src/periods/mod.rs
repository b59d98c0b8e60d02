//! A-hypergeometric data and tautological differential systems for the
//! period integrals of the double-cover families.

mod gkz;
pub mod golden;
mod operator;
mod taut;

pub use gkz::{gkz_data, gkz_from_groups, GkzData, Side};
pub use operator::{parse_operators, serialize_operators, DiffOperator, Term};
pub use taut::{coefficient_vars, monomials, taut_system, CoeffVar, TautSystem};
