//! Algebraic and combinatorial invariants: unmixedness, chordality, matroid
//! tests, reduced homology and the Cohen–Macaulay property.

mod chordal;
mod homology;
pub mod linalg;
mod matroid;
mod unmixed;

pub(crate) use chordal::is_chordal_within;
pub use chordal::{is_chordal, is_chordless_cycle, Chordality};
pub use homology::{
    is_cohen_macaulay, reduced_homology, BettiVector, CmOutcome, Field, DEFAULT_FACE_CAP,
};
pub use matroid::{find_nonpure_induced_subcomplex, is_matroid, MatroidOutcome};
pub use unmixed::{
    blowup_unmixed_conditions, check_blowup_unmixed, conditions_hold, is_unmixed, BlowupCheck,
    BlowupKind, LinearCondition, UnmixedReport,
};
