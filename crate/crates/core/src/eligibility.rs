//! Eligibility: which candidates can win under *some* scoring.
//!
//! A candidate is eligible for the strict family (strictly increasing
//! scorings) exactly when its score vector lies on the Pareto boundary of
//! the convex hull of all score vectors, and eligible for the weak family
//! (nondecreasing scorings with top above bottom) exactly when it lies on
//! the weak Pareto boundary. Both directions are decided by exact linear
//! programs:
//!
//! * the *witness* program searches for positive (resp. nonnegative,
//!   nonzero) coefficients making the candidate's estimate maximal; a
//!   feasible point is turned into an explicit scoring via partial sums;
//! * the *certificate* program searches for a convex combination of rival
//!   score vectors dominating the candidate's own.
//!
//! The two programs are independent implementations of the two directions
//! of the same boundary criterion, so agreement is a built-in cross-check:
//! every verdict carries either a witness scoring that replays to a win
//! through the tally module, or a dominance certificate that re-verifies
//! by exact substitution. A candidate with neither signals an internal
//! inconsistency and is reported as an error, never as a verdict.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lp::{LinearProgram, LpOutcome, Relation, solve};
use crate::profile::{CandidateId, Profile};
use crate::rational::{BigInt, Rational, rat};
use crate::scorevec::{ScoreSet, score_set};
use crate::tally::{Scoring, winners};

/// Which scoring family a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Strictly increasing scorings.
    Strict,
    /// Nondecreasing scorings with the top score above the bottom one.
    Weak,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Weak => "weak",
        })
    }
}

/// Consecutive score differences `d_j = s_j - s_{j-1}`, validated for a
/// mode: strictly positive for [`Mode::Strict`], nonnegative and not all
/// zero for [`Mode::Weak`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    differences: Vec<Rational>,
    mode: Mode,
}

impl WeightVector {
    pub fn new(differences: Vec<Rational>, mode: Mode) -> Result<Self, EligibilityError> {
        if differences.is_empty() {
            return Err(EligibilityError::InvalidWeights);
        }
        let ok = match mode {
            Mode::Strict => differences.iter().all(Signed::is_positive),
            Mode::Weak => {
                differences.iter().all(|d| !d.is_negative())
                    && differences.iter().any(Signed::is_positive)
            }
        };
        if !ok {
            return Err(EligibilityError::InvalidWeights);
        }
        Ok(WeightVector { differences, mode })
    }

    pub fn differences(&self) -> &[Rational] {
        &self.differences
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

/// An eligibility proof: the exact rational weights found by the witness
/// program plus the integer scoring built from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub weights: WeightVector,
    pub scoring: Scoring,
}

/// An ineligibility proof: a convex combination of rival score vectors
/// whose mix dominates the candidate's own vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceCertificate {
    mode: Mode,
    /// One weight per candidate; the certified candidate's own is zero.
    weights: Vec<Rational>,
    /// `sum_x weights[x] * r(x)`.
    dominating_point: Vec<Rational>,
}

impl DominanceCertificate {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn dominating_point(&self) -> &[Rational] {
        &self.dominating_point
    }

    /// Exact re-substitution: simplex weights, the stated mix, and the
    /// mode's dominance relation over the candidate's score vector.
    pub fn verify(&self, scores: &ScoreSet, candidate: CandidateId) -> bool {
        let p = scores.num_candidates();
        if candidate >= p || self.weights.len() != p {
            return false;
        }
        if !self.weights[candidate].is_zero() {
            return false;
        }
        if self.weights.iter().any(Signed::is_negative) {
            return false;
        }
        let total: Rational = self.weights.iter().sum();
        if total != rat(1) {
            return false;
        }
        let dim = p - 1;
        if self.dominating_point.len() != dim {
            return false;
        }
        let mut mix = alloc::vec![Rational::zero(); dim];
        for x in 0..p {
            if self.weights[x].is_zero() {
                continue;
            }
            for (k, r) in scores.vector(x).to_rationals().into_iter().enumerate() {
                mix[k] += &self.weights[x] * r;
            }
        }
        if mix != self.dominating_point {
            return false;
        }
        let own = scores.vector(candidate).to_rationals();
        match self.mode {
            Mode::Strict => {
                mix.iter().zip(&own).all(|(y, r)| y >= r) && mix != own
            }
            Mode::Weak => mix.iter().zip(&own).all(|(y, r)| y > r),
        }
    }
}

/// The decision for one candidate and one mode: exactly one of `witness`
/// and `certificate` is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EligibilityVerdict {
    pub candidate: CandidateId,
    pub mode: Mode,
    pub eligible: bool,
    pub witness: Option<Witness>,
    pub certificate: Option<DominanceCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EligibilityError {
    CandidateOutOfRange { id: CandidateId, p: usize },
    /// Weight differences violating their mode's sign conditions.
    InvalidWeights,
    /// No dominating mix exists: the candidate is eligible, so there is
    /// no certificate to construct.
    NotDominated,
    /// The witness and certificate programs disagreed, or a produced
    /// artifact failed its exact re-check. Indicates a bug, never an
    /// input problem.
    Inconsistency(&'static str),
}

impl fmt::Display for EligibilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EligibilityError::CandidateOutOfRange { id, p } => {
                write!(f, "candidate id {id} out of range for {p} candidates")
            }
            EligibilityError::InvalidWeights => {
                write!(f, "weight differences violate the mode's sign conditions")
            }
            EligibilityError::NotDominated => {
                write!(f, "candidate is not dominated; no certificate exists")
            }
            EligibilityError::Inconsistency(what) => {
                write!(f, "internal consistency failure: {what}")
            }
        }
    }
}

impl core::error::Error for EligibilityError {}

/// Decide eligibility of `candidate` for `mode`, with a witness scoring
/// or a dominance certificate attached.
pub fn eligible(
    profile: &Profile,
    candidate: CandidateId,
    mode: Mode,
) -> Result<EligibilityVerdict, EligibilityError> {
    let p = profile.num_candidates();
    if candidate >= p {
        return Err(EligibilityError::CandidateOutOfRange { id: candidate, p });
    }
    let scores = score_set(profile);
    verdict_with_scores(profile, &scores, candidate, mode)
}

/// All eligible candidates for `mode`, in id order. Never empty: the
/// winner of any fixed valid scoring is eligible.
pub fn eligible_set(profile: &Profile, mode: Mode) -> Result<Vec<CandidateId>, EligibilityError> {
    let scores = score_set(profile);
    let mut set = Vec::new();
    for candidate in 0..profile.num_candidates() {
        if verdict_with_scores(profile, &scores, candidate, mode)?.eligible {
            set.push(candidate);
        }
    }
    Ok(set)
}

/// Verdicts for every candidate, computed over one shared score set.
pub fn all_verdicts(
    profile: &Profile,
    mode: Mode,
) -> Result<Vec<EligibilityVerdict>, EligibilityError> {
    let scores = score_set(profile);
    (0..profile.num_candidates())
        .map(|candidate| verdict_with_scores(profile, &scores, candidate, mode))
        .collect()
}

fn verdict_with_scores(
    profile: &Profile,
    scores: &ScoreSet,
    candidate: CandidateId,
    mode: Mode,
) -> Result<EligibilityVerdict, EligibilityError> {
    match solve(&witness_program(scores, candidate, mode)) {
        Ok(LpOutcome::Optimal { solution, .. }) => {
            // The program's variables weigh the score-vector components
            // r_1..r_{p-1}; the score differences d_1..d_{p-1} read the
            // same vector from the other end.
            let differences: Vec<Rational> = solution.into_iter().rev().collect();
            let weights = WeightVector::new(differences, mode).map_err(|_| {
                EligibilityError::Inconsistency("witness weights violate mode bounds")
            })?;
            let scoring = witness_scoring(&weights);
            let tally = winners(profile, &scoring).map_err(|_| {
                EligibilityError::Inconsistency("witness scoring has wrong arity")
            })?;
            if !tally.winners.contains(&candidate) {
                return Err(EligibilityError::Inconsistency(
                    "witness scoring does not elect the candidate",
                ));
            }
            Ok(EligibilityVerdict {
                candidate,
                mode,
                eligible: true,
                witness: Some(Witness { weights, scoring }),
                certificate: None,
            })
        }
        Ok(LpOutcome::Infeasible { .. }) => {
            let certificate = certificate_with_scores(scores, candidate, mode).map_err(|e| {
                match e {
                    EligibilityError::NotDominated => EligibilityError::Inconsistency(
                        "no witness and no dominating mix for the same candidate",
                    ),
                    other => other,
                }
            })?;
            Ok(EligibilityVerdict {
                candidate,
                mode,
                eligible: false,
                witness: None,
                certificate: Some(certificate),
            })
        }
        Ok(LpOutcome::Unbounded) => Err(EligibilityError::Inconsistency(
            "witness feasibility program reported unbounded",
        )),
        Err(_) => Err(EligibilityError::Inconsistency(
            "witness program failed to solve",
        )),
    }
}

/// Feasibility program for the witness direction: coefficients on the
/// score-vector components under which `candidate`'s estimate is maximal.
fn witness_program(scores: &ScoreSet, candidate: CandidateId, mode: Mode) -> LinearProgram {
    let p = scores.num_candidates();
    let dim = p - 1;
    let own = scores.vector(candidate).to_rationals();
    let mut program = LinearProgram::maximize(alloc::vec![Rational::zero(); dim]);
    for rival in 0..p {
        if rival == candidate || scores.vector(rival) == scores.vector(candidate) {
            // Equal vectors yield the zero row; candidates sharing a
            // vector share verdicts.
            continue;
        }
        let other = scores.vector(rival).to_rationals();
        let coeffs: Vec<Rational> = own.iter().zip(&other).map(|(a, b)| a - b).collect();
        program.add_constraint(coeffs, Relation::Ge, Rational::zero());
    }
    match mode {
        Mode::Strict => {
            // Positivity up to scale: the domination rows are homogeneous,
            // so any positive solution rescales to components >= 1.
            for k in 0..dim {
                program.set_lower(k, rat(1));
            }
        }
        Mode::Weak => {
            for k in 0..dim {
                program.set_lower(k, Rational::zero());
            }
            program.add_constraint(alloc::vec![rat(1); dim], Relation::Eq, rat(1));
        }
    }
    program
}

/// Build the scoring with `s_0 = 0` and `s_k = d_1 + ... + d_k`, rescaled
/// to the smallest integer form.
pub fn witness_scoring(weights: &WeightVector) -> Scoring {
    let mut partial = Rational::zero();
    let mut scores = alloc::vec![Rational::zero()];
    for d in weights.differences() {
        partial += d;
        scores.push(partial.clone());
    }
    let scale = scores
        .iter()
        .fold(BigInt::from(1), |acc, s| acc.lcm(s.denom()));
    let scale = Rational::from_integer(scale);
    let mut integral: Vec<BigInt> = scores.iter().map(|s| (s * &scale).to_integer()).collect();
    let gcd = integral
        .iter()
        .fold(BigInt::ZERO, |acc, v| acc.gcd(v));
    if gcd > BigInt::from(1) {
        for v in integral.iter_mut() {
            *v = &*v / &gcd;
        }
    }
    let scores = integral.into_iter().map(Rational::from_integer).collect();
    Scoring::new(scores).expect("partial sums of valid weights form a valid scoring")
}

/// Construct a dominance certificate for an ineligible candidate.
///
/// Returns [`EligibilityError::NotDominated`] when the candidate is in
/// fact eligible (no dominating mix exists).
pub fn dominance_certificate(
    profile: &Profile,
    candidate: CandidateId,
    mode: Mode,
) -> Result<DominanceCertificate, EligibilityError> {
    let p = profile.num_candidates();
    if candidate >= p {
        return Err(EligibilityError::CandidateOutOfRange { id: candidate, p });
    }
    let scores = score_set(profile);
    certificate_with_scores(&scores, candidate, mode)
}

fn certificate_with_scores(
    scores: &ScoreSet,
    candidate: CandidateId,
    mode: Mode,
) -> Result<DominanceCertificate, EligibilityError> {
    let p = scores.num_candidates();
    let dim = p - 1;
    let rivals: Vec<CandidateId> = (0..p).filter(|&x| x != candidate).collect();
    let own = scores.vector(candidate).to_rationals();

    // Variables: one simplex weight per rival, then the slack block
    // (per-component surpluses in strict mode, one uniform margin in weak
    // mode). The objective maximizes the total slack; a certificate
    // exists exactly when the optimum is positive.
    let slack_vars = match mode {
        Mode::Strict => dim,
        Mode::Weak => 1,
    };
    let num_vars = rivals.len() + slack_vars;
    let mut objective = alloc::vec![Rational::zero(); num_vars];
    for c in objective.iter_mut().skip(rivals.len()) {
        *c = rat(1);
    }
    let mut program = LinearProgram::maximize(objective);

    for k in 0..dim {
        let mut coeffs = alloc::vec![Rational::zero(); num_vars];
        for (col, &x) in rivals.iter().enumerate() {
            coeffs[col] = scores.vector(x).to_rationals()[k].clone();
        }
        match mode {
            Mode::Strict => {
                coeffs[rivals.len() + k] = rat(-1);
                program.add_constraint(coeffs, Relation::Eq, own[k].clone());
            }
            Mode::Weak => {
                coeffs[rivals.len()] = rat(-1);
                program.add_constraint(coeffs, Relation::Ge, own[k].clone());
            }
        }
    }
    let mut simplex_row = alloc::vec![Rational::zero(); num_vars];
    for c in simplex_row.iter_mut().take(rivals.len()) {
        *c = rat(1);
    }
    program.add_constraint(simplex_row, Relation::Eq, rat(1));
    for col in 0..rivals.len() {
        program.set_lower(col, Rational::zero());
    }
    if mode == Mode::Strict {
        for k in 0..dim {
            program.set_lower(rivals.len() + k, Rational::zero());
        }
    }
    // Weak mode's margin variable stays free so the program is always
    // feasible; only a positive optimum certifies dominance.

    match solve(&program) {
        Ok(LpOutcome::Optimal { solution, value }) => {
            if !value.is_positive() {
                return Err(EligibilityError::NotDominated);
            }
            let mut weights = alloc::vec![Rational::zero(); p];
            for (col, &x) in rivals.iter().enumerate() {
                weights[x] = solution[col].clone();
            }
            let mut dominating_point = alloc::vec![Rational::zero(); dim];
            for &x in &rivals {
                if weights[x].is_zero() {
                    continue;
                }
                for (k, r) in scores.vector(x).to_rationals().into_iter().enumerate() {
                    dominating_point[k] += &weights[x] * r;
                }
            }
            let certificate = DominanceCertificate {
                mode,
                weights,
                dominating_point,
            };
            if !certificate.verify(scores, candidate) {
                return Err(EligibilityError::Inconsistency(
                    "dominance certificate failed re-substitution",
                ));
            }
            Ok(certificate)
        }
        Ok(LpOutcome::Infeasible { .. }) => Err(EligibilityError::NotDominated),
        Ok(LpOutcome::Unbounded) => Err(EligibilityError::Inconsistency(
            "certificate program reported unbounded",
        )),
        Err(_) => Err(EligibilityError::Inconsistency(
            "certificate program failed to solve",
        )),
    }
}
