//! Brute-force verification oracle.
//!
//! Enumerates every integer scoring with `s_0 = 0` and entries bounded by
//! `M`, computes the winners of each with plain integer arithmetic, and
//! unions the winner sets. The result is a sound under-approximation of
//! the eligible set: every oracle winner has an eligibility witness, but a
//! witness may need weights above any fixed bound. The winner computation
//! here is deliberately independent of the tally, score-vector and LP
//! modules.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::eligibility::Mode;
use crate::profile::{CandidateId, Profile};
use crate::rational::{BigInt, Rational};
use crate::tally::Scoring;

/// Outcome of a bounded enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub mode: Mode,
    pub bound: u64,
    pub scorings_tried: u64,
    /// Candidates winning under at least one enumerated scoring.
    pub eligible: BTreeSet<CandidateId>,
    /// First winning scoring per candidate, in lexicographic order of
    /// `(s_1, ..., s_{p-1})`.
    pub witnesses: BTreeMap<CandidateId, Scoring>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    ZeroBound,
    EnumerationTooLarge { count: BigInt, limit: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::ZeroBound => write!(f, "enumeration bound must be at least 1"),
            OracleError::EnumerationTooLarge { count, limit } => {
                write!(f, "{count} scorings to enumerate exceeds the limit of {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Refuse enumerations beyond this many scorings.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of scorings the enumeration will visit.
fn scoring_count(p: usize, bound: u64, mode: Mode) -> BigInt {
    let k = (p - 1) as u64;
    match mode {
        // Strictly increasing tuples drawn from 1..=bound.
        Mode::Strict => {
            if bound < k {
                BigInt::ZERO
            } else {
                binomial(bound, k)
            }
        }
        // Nondecreasing tuples from 0..=bound, minus the all-zero one.
        Mode::Weak => binomial(bound + k, k) - 1,
    }
}

/// Winners by direct integer summation, independent of the tally module.
fn integer_winners(profile: &Profile, scores: &[u64]) -> Vec<CandidateId> {
    let p = profile.num_candidates();
    let mut estimates = alloc::vec![0u128; p];
    for ballot in profile.ballots() {
        for (pos, &id) in ballot.order.iter().enumerate() {
            estimates[id] += ballot.weight as u128 * scores[p - 1 - pos] as u128;
        }
    }
    let best = *estimates.iter().max().unwrap();
    (0..p).filter(|&a| estimates[a] == best).collect()
}

fn enumerate(
    current: &mut Vec<u64>,
    position: usize,
    bound: u64,
    strict: bool,
    visit: &mut dyn FnMut(&[u64]),
) {
    let p = current.len();
    if position == p {
        if current[p - 1] >= 1 {
            visit(current);
        }
        return;
    }
    let previous = current[position - 1];
    let start = if strict { previous + 1 } else { previous };
    for value in start..=bound {
        current[position] = value;
        enumerate(current, position + 1, bound, strict, visit);
    }
}

/// Union the winner sets of all integer scorings with `s_0 = 0` and
/// entries up to `bound`, in the given mode's family.
pub fn oracle_eligible(
    profile: &Profile,
    mode: Mode,
    bound: u64,
) -> Result<OracleReport, OracleError> {
    if bound == 0 {
        return Err(OracleError::ZeroBound);
    }
    let p = profile.num_candidates();
    let count = scoring_count(p, bound, mode);
    if count > BigInt::from(ENUMERATION_LIMIT) {
        return Err(OracleError::EnumerationTooLarge {
            count,
            limit: ENUMERATION_LIMIT,
        });
    }

    let mut eligible = BTreeSet::new();
    let mut witnesses: BTreeMap<CandidateId, Scoring> = BTreeMap::new();
    let mut tried = 0u64;
    let mut current = alloc::vec![0u64; p];
    enumerate(&mut current, 1, bound, mode == Mode::Strict, &mut |s| {
        tried += 1;
        for winner in integer_winners(profile, s) {
            eligible.insert(winner);
            witnesses.entry(winner).or_insert_with(|| {
                let scores = s
                    .iter()
                    .map(|&v| Rational::from_integer(BigInt::from(v)))
                    .collect();
                Scoring::new(scores).expect("enumerated scorings are valid")
            });
        }
    });

    Ok(OracleReport {
        mode,
        bound,
        scorings_tried: tried,
        eligible,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eligibility::eligible_set;
    use crate::rational::rat;
    use crate::tally::winners;

    const DEMO: &str = "2: a > b > c\n6: b > a > c\n7: c > a > b\n1: c > b > a";

    #[test]
    fn demo_profile_strict_enumeration_matches_lp() {
        let pr = Profile::parse(DEMO).unwrap();
        let report = oracle_eligible(&pr, Mode::Strict, 20).unwrap();
        // C(20, 2) strictly increasing pairs below the bound.
        assert_eq!(report.scorings_tried, 190);
        let by_lp: BTreeSet<_> = eligible_set(&pr, Mode::Strict)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(report.eligible, by_lp);
    }

    #[test]
    fn demo_profile_weak_bound_one() {
        let pr = Profile::parse(DEMO).unwrap();
        let report = oracle_eligible(&pr, Mode::Weak, 1).unwrap();
        // Exactly (0,0,1) and (0,1,1) qualify at this bound.
        assert_eq!(report.scorings_tried, 2);
        assert!(report.eligible.contains(&2));
        assert!(report.eligible.contains(&0));
        assert_eq!(
            report.witnesses.get(&2).unwrap().scores(),
            &[rat(0), rat(0), rat(1)]
        );
        assert_eq!(
            report.witnesses.get(&0).unwrap().scores(),
            &[rat(0), rat(1), rat(1)]
        );
    }

    #[test]
    fn witnesses_replay_through_tally() {
        let pr = Profile::parse(DEMO).unwrap();
        for mode in [Mode::Strict, Mode::Weak] {
            let report = oracle_eligible(&pr, mode, 6).unwrap();
            for (&candidate, scoring) in &report.witnesses {
                let t = winners(&pr, scoring).unwrap();
                assert!(t.winners.contains(&candidate));
            }
        }
    }

    #[test]
    fn enumeration_guard() {
        let pr = Profile::parse("1: a > b > c > d > e").unwrap();
        let err = oracle_eligible(&pr, Mode::Weak, 1000).unwrap_err();
        match err {
            OracleError::EnumerationTooLarge { limit, .. } => {
                assert_eq!(limit, ENUMERATION_LIMIT)
            }
            other => panic!("expected guard error, got {other:?}"),
        }
        assert_eq!(
            oracle_eligible(&pr, Mode::Weak, 0),
            Err(OracleError::ZeroBound)
        );
    }

    #[test]
    fn strict_bound_below_dimension_tries_nothing() {
        let pr = Profile::parse("1: a > b > c").unwrap();
        let report = oracle_eligible(&pr, Mode::Strict, 1).unwrap();
        assert_eq!(report.scorings_tried, 0);
        assert!(report.eligible.is_empty());
    }

    #[test]
    fn counts_match_the_closed_forms() {
        let pr = Profile::parse("1: a > b > c").unwrap();
        for bound in 1..=6 {
            let strict = oracle_eligible(&pr, Mode::Strict, bound).unwrap();
            assert_eq!(
                BigInt::from(strict.scorings_tried),
                scoring_count(3, bound, Mode::Strict)
            );
            let weak = oracle_eligible(&pr, Mode::Weak, bound).unwrap();
            assert_eq!(
                BigInt::from(weak.scorings_tried),
                scoring_count(3, bound, Mode::Weak)
            );
        }
    }
}
