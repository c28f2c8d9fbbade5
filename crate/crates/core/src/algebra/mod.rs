//! Exact arithmetic: fields, variables, monomials, term orders and polynomials.

pub mod field;
pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod text;

pub use field::{Coeff, Field, DEFAULT_PRIME};
pub use monomial::{Monomial, VariableId};
pub use order::{compare_monomials, OrderChoice, OrderKind, Ring, TermOrder};
pub use polynomial::{Polynomial, Term};
