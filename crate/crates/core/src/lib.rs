//! Exact verification machinery for double determinantal ideals: minors of
//! block-concatenated generic matrices, Gröbner-basis checks under diagonal
//! term orders, Stanley–Reisner combinatorics of the initial ideals, and
//! replayable liaison induction certificates.

pub mod algebra;
pub mod combinatorics;
pub mod dimension;
pub mod error;
pub mod grid;
pub mod groebner;
pub mod ideals;
pub mod liaison;

pub use error::{Error, Result};
