//! Scorings, estimates and winner sets.
//!
//! A scoring assigns `s_0 <= s_1 <= ... <= s_{p-1}` points per rank
//! position, from the bottom place up, with `s_0 < s_{p-1}`. A candidate's
//! estimate is the weighted sum of the points earned over all ballots; the
//! winners are the candidates attaining the exact rational maximum.

use alloc::vec::Vec;
use core::fmt;

use crate::profile::{CandidateId, Profile};
use crate::rational::{Rational, rat, rat_u64};
use num_traits::Zero;

/// A system of scores: nondecreasing with `s_0 < s_{p-1}`.
///
/// `strict` scorings are strictly increasing; the distinction picks the
/// rule family a scoring belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scoring {
    scores: Vec<Rational>,
    strict: bool,
}

/// The classical members of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedRule {
    /// `(0, 1, ..., p-1)`.
    Standard,
    /// `(0, ..., 0, 1)`: only first places count.
    Plurality,
    /// `(-1, 0, ..., 0)`: fewest last places wins.
    Antiplurality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScoringError {
    TooShort { found: usize },
    NotNondecreasing { position: usize },
    AllEqual,
}

impl fmt::Display for ScoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScoringError::TooShort { found } => {
                write!(f, "a scoring needs at least 2 entries, found {found}")
            }
            ScoringError::NotNondecreasing { position } => {
                write!(f, "scores must be nondecreasing (violated at index {position})")
            }
            ScoringError::AllEqual => {
                write!(f, "the top score must exceed the bottom score")
            }
        }
    }
}

impl core::error::Error for ScoringError {}

impl Scoring {
    /// Validate and classify a score vector.
    pub fn new(scores: Vec<Rational>) -> Result<Self, ScoringError> {
        if scores.len() < 2 {
            return Err(ScoringError::TooShort {
                found: scores.len(),
            });
        }
        let mut strict = true;
        for k in 1..scores.len() {
            if scores[k] < scores[k - 1] {
                return Err(ScoringError::NotNondecreasing { position: k });
            }
            if scores[k] == scores[k - 1] {
                strict = false;
            }
        }
        if scores[0] == scores[scores.len() - 1] {
            return Err(ScoringError::AllEqual);
        }
        Ok(Scoring { scores, strict })
    }

    /// One of the classical rules for `p` candidates.
    pub fn named(rule: NamedRule, p: usize) -> Result<Self, ScoringError> {
        if p < 2 {
            return Err(ScoringError::TooShort { found: p });
        }
        let scores: Vec<Rational> = match rule {
            NamedRule::Standard => (0..p).map(|k| rat(k as i64)).collect(),
            NamedRule::Plurality => {
                let mut s = alloc::vec![rat(0); p];
                s[p - 1] = rat(1);
                s
            }
            NamedRule::Antiplurality => {
                let mut s = alloc::vec![rat(0); p];
                s[0] = rat(-1);
                s
            }
        };
        Scoring::new(scores)
    }

    pub fn scores(&self) -> &[Rational] {
        &self.scores
    }

    /// Number of positions `p`.
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Translate so that `s_0 = 0`; the winner set is unchanged.
    pub fn normalized(&self) -> Scoring {
        let base = self.scores[0].clone();
        Scoring {
            scores: self.scores.iter().map(|s| s - &base).collect(),
            strict: self.strict,
        }
    }

    /// Consecutive differences `d_j = s_j - s_{j-1}`, `j = 1..p-1`.
    pub fn differences(&self) -> Vec<Rational> {
        (1..self.scores.len())
            .map(|j| &self.scores[j] - &self.scores[j - 1])
            .collect()
    }
}

/// Estimates for every candidate plus the exact argmax set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub estimates: Vec<Rational>,
    /// Sorted ids of all candidates attaining the maximum; never empty.
    pub winners: Vec<CandidateId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TallyError {
    CandidateOutOfRange { id: CandidateId, p: usize },
    ArityMismatch { scoring: usize, candidates: usize },
}

impl fmt::Display for TallyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TallyError::CandidateOutOfRange { id, p } => {
                write!(f, "candidate id {id} out of range for {p} candidates")
            }
            TallyError::ArityMismatch {
                scoring,
                candidates,
            } => write!(
                f,
                "scoring has {scoring} entries but the profile has {candidates} candidates"
            ),
        }
    }
}

impl core::error::Error for TallyError {}

fn check_arity(profile: &Profile, scoring: &Scoring) -> Result<(), TallyError> {
    if scoring.len() != profile.num_candidates() {
        return Err(TallyError::ArityMismatch {
            scoring: scoring.len(),
            candidates: profile.num_candidates(),
        });
    }
    Ok(())
}

/// The estimate of one candidate: the top position earns `s_{p-1}`, the
/// bottom earns `s_0`, summed over ballots with weights.
pub fn borda_estimate(
    profile: &Profile,
    scoring: &Scoring,
    a: CandidateId,
) -> Result<Rational, TallyError> {
    check_arity(profile, scoring)?;
    let p = profile.num_candidates();
    if a >= p {
        return Err(TallyError::CandidateOutOfRange { id: a, p });
    }
    let mut total = Rational::zero();
    for ballot in profile.ballots() {
        let pos = ballot.order.iter().position(|&x| x == a).unwrap();
        total += &scoring.scores()[p - 1 - pos] * rat_u64(ballot.weight);
    }
    Ok(total)
}

/// Estimates of all candidates and the winner set (all exact ties kept).
pub fn winners(profile: &Profile, scoring: &Scoring) -> Result<Tally, TallyError> {
    check_arity(profile, scoring)?;
    let p = profile.num_candidates();
    let mut estimates = alloc::vec![Rational::zero(); p];
    for ballot in profile.ballots() {
        let w = rat_u64(ballot.weight);
        for (pos, &id) in ballot.order.iter().enumerate() {
            estimates[id] += &scoring.scores()[p - 1 - pos] * &w;
        }
    }
    let best = estimates.iter().max().unwrap().clone();
    let winners = (0..p).filter(|&a| estimates[a] == best).collect();
    Ok(Tally { estimates, winners })
}
