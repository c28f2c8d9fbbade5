//! Monomial ideals, Stanley–Reisner complexes, vertex decomposability and
//! Hilbert functions of monomial quotients.

pub mod complex;
pub mod hilbert;
pub mod ideal;
pub mod vd;

pub use complex::{height, krull_dim, stanley_reisner, SimplicialComplex};
pub use hilbert::{hilbert_by_counting, hilbert_function_monomial, hilbert_function_upto, monomial_count};
pub use ideal::{minimalize, MonomialIdeal};
pub use vd::{is_vertex_decomposable, verify_vd_certificate, VdCertificate, VdNode, VdOutcome, VdStep};
