//! Endomorphism algebras of comodules, the An/Ke correspondence, internal
//! coproducts, socles, the E-prime and fully coprime classes, and checks of
//! the identities relating a coalgebra to its dual algebra.

mod endo;
mod flags;
mod report;
mod spectrum;
mod suite;

pub use endo::EndoAlgebra;
pub use flags::{hypothesis_flags, HypothesisFlags};
pub use report::{analyze, AnalysisReport, Membership};
pub use spectrum::{
    coradical, cp_corad, cpspec, dual_ring_decision, ep_classes, ep_corad, fully_invariant_lattice,
    is_fully_coprime, is_fully_cosemiprime, is_irreducible_comodule, is_regular, right_ideal_lattice, socle,
    subcomodule_lattice, sum_all, CoprimeTable, EpClasses, Lattice, Method,
};
pub use suite::{comodule_suite, theorem_suite, SuiteReport, TheoremCheck, Verdict};
