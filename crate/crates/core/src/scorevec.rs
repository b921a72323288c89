//! Cumulative score vectors.
//!
//! For a candidate `a`, `r_k(a)` counts the voters who place `a` within
//! their top `k` positions, for `k = 1..p-1`. The always-`n` "top p" count
//! is omitted; the eligibility geometry lives in dimension `p - 1`.

use alloc::vec::Vec;
use core::fmt;

use crate::profile::{CandidateId, Profile};
use crate::rational::{Rational, rat_u64};

/// The `(p-1)`-component cumulative placement vector `r(a)`.
///
/// Components are nondecreasing and bounded by the voter count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector(Vec<u64>);

impl ScoreVector {
    pub fn components(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Components promoted to exact rationals, for the LP boundary.
    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&r| rat_u64(r)).collect()
    }
}

/// All `p` score vectors of a profile, indexed by candidate id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreSet {
    vectors: Vec<ScoreVector>,
}

impl ScoreSet {
    pub fn vector(&self, a: CandidateId) -> &ScoreVector {
        &self.vectors[a]
    }

    pub fn vectors(&self) -> &[ScoreVector] {
        &self.vectors
    }

    pub fn num_candidates(&self) -> usize {
        self.vectors.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScoreVecError {
    CandidateOutOfRange { id: CandidateId, p: usize },
}

impl fmt::Display for ScoreVecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScoreVecError::CandidateOutOfRange { id, p } => {
                write!(f, "candidate id {id} out of range for {p} candidates")
            }
        }
    }
}

impl core::error::Error for ScoreVecError {}

/// Compute `r(a)`: `r_k(a)` is the total weight of ballots placing `a`
/// within the top `k` positions, `k = 1..p-1`.
pub fn score_vector(profile: &Profile, a: CandidateId) -> Result<ScoreVector, ScoreVecError> {
    let p = profile.num_candidates();
    if a >= p {
        return Err(ScoreVecError::CandidateOutOfRange { id: a, p });
    }
    // Weight landing on each position, then prefix sums.
    let mut at_position = alloc::vec![0u64; p];
    for ballot in profile.ballots() {
        let pos = ballot.order.iter().position(|&x| x == a).unwrap();
        at_position[pos] += ballot.weight;
    }
    let mut cumulative = Vec::with_capacity(p - 1);
    let mut total = 0u64;
    for &w in &at_position[..p - 1] {
        total += w;
        cumulative.push(total);
    }
    Ok(ScoreVector(cumulative))
}

/// Score vectors of all candidates.
pub fn score_set(profile: &Profile) -> ScoreSet {
    let vectors = (0..profile.num_candidates())
        .map(|a| score_vector(profile, a).unwrap())
        .collect();
    ScoreSet { vectors }
}
