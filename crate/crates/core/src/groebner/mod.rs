//! Division, S-pair verification and completion, and the Macaulay-matrix
//! Hilbert function oracle.

pub mod buchberger;
pub mod division;
pub mod macaulay;

pub use buchberger::{buchberger_complete, s_polynomial, verify_groebner, GbStatus, GroebnerReport, Limits};
pub use division::{normal_form, order_divisors, reduce_deterministic, DivisionResult, Reducer};
pub use macaulay::{macaulay_hilbert, macaulay_hilbert_upto};
