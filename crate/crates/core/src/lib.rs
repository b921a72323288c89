//! Exact analysis of generalized Borda (positional scoring) voting rules.
//!
//! Given a profile of weighted strict rankings, this crate answers the
//! question "which candidates can win under *some* scoring?" for two
//! families of rules: scorings with strictly increasing score vectors, and
//! scorings that are merely nondecreasing (with the top score above the
//! bottom one). Every answer comes with a checkable artifact: an explicit
//! witness scoring when the candidate is eligible, or a convex combination
//! of rival score vectors that dominates the candidate's own when it is
//! not.
//!
//! All arithmetic is exact. Estimates, linear programs, witnesses and
//! certificates use arbitrary-precision rationals, so argmax sets and
//! dominance relations are decided without rounding.
//!
//! The crate is `no_std` (it requires `alloc`); IO, file formats and the
//! command-line front end live in the companion `deborda` crate.
//!
//! ```
//! use deborda_core::eligibility::{eligible, eligible_set, Mode};
//! use deborda_core::profile::Profile;
//!
//! let profile = Profile::parse(
//!     "2: a > b > c\n6: b > a > c\n7: c > a > b\n1: c > b > a",
//! )?;
//!
//! // Candidate b tops the pairwise Pareto comparison with both rivals,
//! // yet no scoring makes it a winner:
//! assert_eq!(eligible_set(&profile, Mode::Strict)?, vec![0, 2]); // a and c
//!
//! let verdict = eligible(&profile, 1, Mode::Strict)?;
//! assert!(!verdict.eligible);
//! // ... and the verdict carries a convex mix of the rivals' score
//! // vectors dominating b's own as the proof.
//! assert!(verdict.certificate.is_some());
//! # Ok::<(), Box<dyn core::error::Error>>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod eligibility;
pub mod hull;
pub mod lp;
pub mod oracle;
pub mod profile;
pub mod rational;
pub mod scorevec;
pub mod tally;

pub use eligibility::{DominanceCertificate, EligibilityVerdict, Mode, WeightVector, Witness};
pub use profile::{Ballot, Candidate, CandidateId, Profile};
pub use rational::Rational;
pub use scorevec::{ScoreSet, ScoreVector};
pub use tally::{NamedRule, Scoring, Tally};
