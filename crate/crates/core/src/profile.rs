//! Candidates, ballots and weighted preference profiles.
//!
//! A profile is a fixed roster of candidates plus a multiset of strict
//! rankings, each carrying a positive voter count. Ballots with identical
//! rankings are merged on construction, so a `Profile` is always in a
//! canonical internal form: merged ballots, sorted by ranking.
//!
//! The line-oriented text format is
//!
//! ```text
//! # comment to end of line
//! 2: a > b > c
//! 6: b > a > c
//! ```
//!
//! one ballot per line as `<weight> ":" <label> (">" <label>)*`. The first
//! ballot fixes the candidate roster and every later ballot must rank
//! exactly the same candidates; dense ids follow sorted label order.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Dense candidate index, `0..p`.
pub type CandidateId = usize;

/// A candidate: dense id plus its text label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub id: CandidateId,
    pub label: String,
}

/// A group of voters sharing one strict ranking.
///
/// `order[0]` is the most preferred candidate. `order` is always a
/// permutation of `0..p` and `weight` is at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ballot {
    pub order: Vec<CandidateId>,
    pub weight: u64,
}

/// An immutable preference profile: `p >= 2` candidates, `n >= 1` voters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    candidates: Vec<Candidate>,
    ballots: Vec<Ballot>,
    voters: u64,
}

/// Construction error for [`Profile::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProfileError {
    TooFewCandidates { found: usize },
    NoBallots,
    InvalidLabel { label: String },
    DuplicateLabel { label: String },
    ZeroWeight,
    NotAPermutation,
    WeightOverflow,
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProfileError::TooFewCandidates { found } => {
                write!(f, "a profile needs at least 2 candidates, found {found}")
            }
            ProfileError::NoBallots => write!(f, "a profile needs at least one ballot"),
            ProfileError::InvalidLabel { label } => {
                write!(f, "invalid candidate label {label:?}")
            }
            ProfileError::DuplicateLabel { label } => {
                write!(f, "duplicate candidate label {label:?}")
            }
            ProfileError::ZeroWeight => write!(f, "ballot weight must be at least 1"),
            ProfileError::NotAPermutation => {
                write!(f, "ballot order must rank every candidate exactly once")
            }
            ProfileError::WeightOverflow => write!(f, "total voter count overflows"),
        }
    }
}

impl core::error::Error for ProfileError {}

/// Parse error for the text format, with the 1-based offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// No `:` separating the weight from the ranking.
    MissingSeparator,
    /// The weight token is not a nonnegative integer.
    InvalidWeight { token: String },
    /// The weight is zero.
    ZeroWeight,
    /// An empty label token (e.g. `a > > b`).
    EmptyLabel,
    /// A label containing whitespace.
    InvalidLabel { label: String },
    /// The same candidate appears twice in one ballot.
    DuplicateInBallot { label: String },
    /// A label that is not part of the roster fixed by the first ballot.
    UnknownLabel { label: String },
    /// A ballot that does not rank every roster candidate.
    IncompleteBallot { missing: String },
    /// Fewer than two candidates in the first ballot.
    TooFewCandidates { found: usize },
    /// No ballot lines at all.
    EmptyProfile,
    /// Summed weights overflow the voter counter.
    WeightOverflow,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MissingSeparator => {
                write!(f, "expected '<weight>:' before the ranking")
            }
            ParseErrorKind::InvalidWeight { token } => {
                write!(f, "invalid ballot weight {token:?}")
            }
            ParseErrorKind::ZeroWeight => write!(f, "ballot weight must be at least 1"),
            ParseErrorKind::EmptyLabel => write!(f, "empty candidate label"),
            ParseErrorKind::InvalidLabel { label } => {
                write!(f, "invalid candidate label {label:?}")
            }
            ParseErrorKind::DuplicateInBallot { label } => {
                write!(f, "candidate {label:?} appears twice in one ballot")
            }
            ParseErrorKind::UnknownLabel { label } => {
                write!(f, "unknown candidate {label:?}")
            }
            ParseErrorKind::IncompleteBallot { missing } => {
                write!(f, "ballot does not rank candidate {missing:?}")
            }
            ParseErrorKind::TooFewCandidates { found } => {
                write!(f, "a profile needs at least 2 candidates, found {found}")
            }
            ParseErrorKind::EmptyProfile => write!(f, "profile contains no ballots"),
            ParseErrorKind::WeightOverflow => write!(f, "total voter count overflows"),
        }
    }
}

impl core::error::Error for ParseError {}

fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label.contains(['>', '#'])
        && !label.chars().any(char::is_whitespace)
}

impl Profile {
    /// Build a profile from a label roster and ballots over dense ids.
    ///
    /// Ballots with equal orders are merged by summing weights; the stored
    /// ballot list is sorted by order.
    pub fn new(
        labels: Vec<String>,
        ballots: Vec<(Vec<CandidateId>, u64)>,
    ) -> Result<Self, ProfileError> {
        let p = labels.len();
        if p < 2 {
            return Err(ProfileError::TooFewCandidates { found: p });
        }
        let mut seen = BTreeMap::new();
        for label in &labels {
            if !valid_label(label) {
                return Err(ProfileError::InvalidLabel {
                    label: label.clone(),
                });
            }
            if seen.insert(label.clone(), ()).is_some() {
                return Err(ProfileError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        if ballots.is_empty() {
            return Err(ProfileError::NoBallots);
        }
        let mut merged: BTreeMap<Vec<CandidateId>, u64> = BTreeMap::new();
        let mut voters: u64 = 0;
        for (order, weight) in ballots {
            if weight == 0 {
                return Err(ProfileError::ZeroWeight);
            }
            if order.len() != p {
                return Err(ProfileError::NotAPermutation);
            }
            let mut placed = alloc::vec![false; p];
            for &id in &order {
                if id >= p || placed[id] {
                    return Err(ProfileError::NotAPermutation);
                }
                placed[id] = true;
            }
            let slot = merged.entry(order).or_insert(0);
            *slot = slot
                .checked_add(weight)
                .ok_or(ProfileError::WeightOverflow)?;
            voters = voters
                .checked_add(weight)
                .ok_or(ProfileError::WeightOverflow)?;
        }
        Ok(Self::assemble(labels, merged, voters))
    }

    /// Parse the line-oriented text format.
    ///
    /// `#` starts a comment, blank lines are skipped, identical rankings
    /// are merged. Every error carries the offending line number.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, CandidateId> = BTreeMap::new();
        let mut merged: BTreeMap<Vec<CandidateId>, u64> = BTreeMap::new();
        let mut voters: u64 = 0;
        let mut last_line = 0;

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            last_line = line;
            let err = |kind| ParseError { line, kind };

            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((weight_tok, ranking)) = content.split_once(':') else {
                return Err(err(ParseErrorKind::MissingSeparator));
            };
            let weight_tok = weight_tok.trim();
            let weight: u64 = weight_tok.parse().map_err(|_| {
                err(ParseErrorKind::InvalidWeight {
                    token: weight_tok.to_string(),
                })
            })?;
            if weight == 0 {
                return Err(err(ParseErrorKind::ZeroWeight));
            }

            let tokens: Vec<&str> = ranking.split('>').map(str::trim).collect();
            for tok in &tokens {
                if tok.is_empty() {
                    return Err(err(ParseErrorKind::EmptyLabel));
                }
                if !valid_label(tok) {
                    return Err(err(ParseErrorKind::InvalidLabel {
                        label: tok.to_string(),
                    }));
                }
            }

            let order: Vec<CandidateId> = if labels.is_empty() {
                // First ballot fixes the roster; dense ids follow sorted
                // label order, so equal profiles canonicalize identically
                // no matter how the input lines were arranged.
                for tok in &tokens {
                    if index.insert(tok.to_string(), 0).is_some() {
                        return Err(err(ParseErrorKind::DuplicateInBallot {
                            label: tok.to_string(),
                        }));
                    }
                }
                labels = index.keys().cloned().collect();
                for (id, label) in labels.iter().enumerate() {
                    *index.get_mut(label).unwrap() = id;
                }
                if labels.len() < 2 {
                    return Err(err(ParseErrorKind::TooFewCandidates {
                        found: labels.len(),
                    }));
                }
                tokens.iter().map(|tok| index[*tok]).collect()
            } else {
                let p = labels.len();
                let mut placed = alloc::vec![false; p];
                let mut order = Vec::with_capacity(p);
                for tok in &tokens {
                    let Some(&id) = index.get(*tok) else {
                        return Err(err(ParseErrorKind::UnknownLabel {
                            label: tok.to_string(),
                        }));
                    };
                    if placed[id] {
                        return Err(err(ParseErrorKind::DuplicateInBallot {
                            label: tok.to_string(),
                        }));
                    }
                    placed[id] = true;
                    order.push(id);
                }
                if order.len() < p {
                    let missing = placed.iter().position(|&x| !x).unwrap();
                    return Err(err(ParseErrorKind::IncompleteBallot {
                        missing: labels[missing].clone(),
                    }));
                }
                order
            };

            let slot = merged.entry(order).or_insert(0);
            *slot = slot
                .checked_add(weight)
                .ok_or_else(|| err(ParseErrorKind::WeightOverflow))?;
            voters = voters
                .checked_add(weight)
                .ok_or_else(|| err(ParseErrorKind::WeightOverflow))?;
        }

        if labels.is_empty() {
            return Err(ParseError {
                line: last_line.max(1),
                kind: ParseErrorKind::EmptyProfile,
            });
        }
        Ok(Self::assemble(labels, merged, voters))
    }

    fn assemble(
        labels: Vec<String>,
        merged: BTreeMap<Vec<CandidateId>, u64>,
        voters: u64,
    ) -> Self {
        let candidates = labels
            .into_iter()
            .enumerate()
            .map(|(id, label)| Candidate { id, label })
            .collect();
        let ballots = merged
            .into_iter()
            .map(|(order, weight)| Ballot { order, weight })
            .collect();
        Profile {
            candidates,
            ballots,
            voters,
        }
    }

    /// Deterministic round-trippable text: one merged ballot per line,
    /// sorted lexicographically by ranking.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for ballot in &self.ballots {
            out.push_str(&ballot.weight.to_string());
            out.push(':');
            for (k, &id) in ballot.order.iter().enumerate() {
                out.push_str(if k == 0 { " " } else { " > " });
                out.push_str(&self.candidates[id].label);
            }
            out.push('\n');
        }
        out
    }

    /// Number of candidates `p`.
    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    /// Total voter count `n` (sum of ballot weights).
    pub fn num_voters(&self) -> u64 {
        self.voters
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn label(&self, id: CandidateId) -> &str {
        &self.candidates[id].label
    }

    pub fn candidate_by_label(&self, label: &str) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.label == label)
    }
}
