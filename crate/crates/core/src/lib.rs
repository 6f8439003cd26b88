//! Knuth-Bendix completion for string rewriting systems and the
//! noncommutative Buchberger algorithm for two-sided ideals of the free
//! algebra, together with a checker that runs both procedures side by side
//! and verifies that they agree pass by pass when the ideal basis is
//! `{ l - r : (l, r) in R }`.

pub mod correspondence;
pub mod error;
pub mod limits;
pub mod ncpoly;
pub mod rewriting;
pub mod words;

pub use correspondence::{
    basis_to_rules, lockstep_complete, rules_to_basis, verify_algebra_iso, CorrespondenceReport, IsoCheckReport,
    IsoVerdict, Verdict,
};
pub use error::{CorrespondenceError, PolyError, RewriteError, WordError};
pub use limits::{CompletionLimits, LimitKind};
pub use ncpoly::{Basis, BuchbergerOutcome, Field, NcPolynomial, Scalar};
pub use rewriting::{CriticalPair, Disposition, KbOutcome, KbTrace, RewriteSystem, Rule};
pub use words::{find_matches, Alphabet, Letter, MatchKind, Mode, MonomialOrder, OverlapMatch, Word};
