//! Hyperfocal subalgebras, the stable-basis pipeline on blocks and
//! necessary conditions for basic Morita equivalence.

mod hyperfocal;
mod morita;
mod thm14;

pub use hyperfocal::{search_hyperfocal, verify_hyperfocal, HyperfocalCandidate, HyperfocalCheck, HyperfocalSearch};
pub use morita::{local_point_data, morita_necessary_check, source_conjugation, LocalPointData, MoritaCheckReport};
pub use thm14::{
    corollary15_suite, run_thm14, ConjectureReport, ConjectureVerdict, NilpotentSuiteReport, Stage, StageStatus,
};
