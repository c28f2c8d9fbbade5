//! Step-by-step replay of the liaison induction with per-step certificates.

mod bdl;
mod certificate;
mod chain;
mod replay;

pub use bdl::{verify_basic_double_link, verify_link_deletion};
pub use certificate::{BaseTag, Check, CheckStatus, InductionTrace, StepCertificate, TRACE_SCHEMA};
pub use chain::{verify_lemma_chain, ChainResult, DegreeCheck, HilbertTable, LemmaChainInstance};
pub use replay::{
    detect_trivial_step, replay_induction, replay_paths, trivial_step_witness, ReplayOptions, ReplayPath,
};
