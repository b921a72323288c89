//! Stable JSON documents printed by the subcommands.
//!
//! Shapes are fixed, maps are keyed and ordered by candidate label, and
//! every rational renders as its reduced `"p/q"` string (bare integer
//! when the denominator is 1), so byte-identical inputs give
//! byte-identical documents.

use std::collections::BTreeMap;

use serde::Serialize;

use deborda_core::eligibility::{EligibilityVerdict, Mode, all_verdicts, eligible, eligible_set};
use deborda_core::hull::HullGeometry;
use deborda_core::oracle::oracle_eligible;
use deborda_core::profile::{CandidateId, Profile};
use deborda_core::scorevec::score_set;
use deborda_core::tally::{Scoring, winners};

use crate::AppError;

fn labels(profile: &Profile, ids: &[CandidateId]) -> Vec<String> {
    ids.iter().map(|&a| profile.label(a).to_string()).collect()
}

#[derive(Debug, Serialize)]
pub struct WinnersDoc {
    pub scoring: Vec<String>,
    pub strict: bool,
    pub estimates: BTreeMap<String, String>,
    pub winners: Vec<String>,
}

pub fn winners_doc(profile: &Profile, scoring: &Scoring) -> Result<WinnersDoc, AppError> {
    let tally = winners(profile, scoring)?;
    Ok(WinnersDoc {
        scoring: scoring.scores().iter().map(|s| s.to_string()).collect(),
        strict: scoring.is_strict(),
        estimates: tally
            .estimates
            .iter()
            .enumerate()
            .map(|(a, e)| (profile.label(a).to_string(), e.to_string()))
            .collect(),
        winners: labels(profile, &tally.winners),
    })
}

/// `score-vectors` output: label to integer vector, sorted by label.
pub fn score_vectors_doc(profile: &Profile) -> BTreeMap<String, Vec<u64>> {
    let rs = score_set(profile);
    (0..profile.num_candidates())
        .map(|a| {
            (
                profile.label(a).to_string(),
                rs.vector(a).components().to_vec(),
            )
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct WitnessDoc {
    /// Consecutive score differences found by the witness program.
    pub weights: Vec<String>,
    /// The integer scoring built from them.
    pub scoring: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CertificateDoc {
    /// Convex weights over the rivals (the candidate's own is omitted).
    pub weights: BTreeMap<String, String>,
    /// The dominating mix of rival score vectors.
    pub dominating_point: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct VerdictDoc {
    pub candidate: String,
    pub mode: String,
    pub eligible: bool,
    pub witness: Option<WitnessDoc>,
    pub certificate: Option<CertificateDoc>,
}

pub fn verdict_doc(profile: &Profile, verdict: &EligibilityVerdict) -> VerdictDoc {
    VerdictDoc {
        candidate: profile.label(verdict.candidate).to_string(),
        mode: verdict.mode.to_string(),
        eligible: verdict.eligible,
        witness: verdict.witness.as_ref().map(|w| WitnessDoc {
            weights: w
                .weights
                .differences()
                .iter()
                .map(|d| d.to_string())
                .collect(),
            scoring: w.scoring.scores().iter().map(|s| s.to_string()).collect(),
        }),
        certificate: verdict.certificate.as_ref().map(|cert| CertificateDoc {
            weights: cert
                .weights()
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != verdict.candidate)
                .map(|(x, w)| (profile.label(x).to_string(), w.to_string()))
                .collect(),
            dominating_point: cert
                .dominating_point()
                .iter()
                .map(|y| y.to_string())
                .collect(),
        }),
    }
}

pub fn single_verdict_doc(
    profile: &Profile,
    candidate: CandidateId,
    mode: Mode,
) -> Result<VerdictDoc, AppError> {
    let verdict = eligible(profile, candidate, mode)?;
    Ok(verdict_doc(profile, &verdict))
}

pub fn all_verdicts_doc(profile: &Profile, mode: Mode) -> Result<Vec<VerdictDoc>, AppError> {
    let verdicts = all_verdicts(profile, mode)?;
    Ok(verdicts.iter().map(|v| verdict_doc(profile, v)).collect())
}

#[derive(Debug, Serialize)]
pub struct CertifyDoc {
    pub candidate: String,
    pub mode: String,
    pub certificate: CertificateDoc,
}

#[derive(Debug, Serialize)]
pub struct OracleDoc {
    pub mode: String,
    pub bound: u64,
    pub scorings_tried: u64,
    pub oracle_eligible: Vec<String>,
    pub lp_eligible: Vec<String>,
    /// First winning scoring per candidate, in enumeration order.
    pub witnesses: BTreeMap<String, Vec<String>>,
    pub subset_check: String,
    pub equality_check: Option<String>,
}

pub struct OracleOutcome {
    pub doc: OracleDoc,
    pub subset_holds: bool,
    pub equality_holds: bool,
}

/// Run the enumeration, compare against the LP set, and report.
pub fn oracle_outcome(
    profile: &Profile,
    mode: Mode,
    bound: u64,
    check_equality: bool,
) -> Result<OracleOutcome, AppError> {
    let report = oracle_eligible(profile, mode, bound)?;
    let by_lp = eligible_set(profile, mode)?;
    let subset_holds = report.eligible.iter().all(|a| by_lp.contains(a));
    let oracle_ids: Vec<CandidateId> = report.eligible.iter().copied().collect();
    let equality_holds = oracle_ids == by_lp;
    let doc = OracleDoc {
        mode: mode.to_string(),
        bound,
        scorings_tried: report.scorings_tried,
        oracle_eligible: labels(profile, &oracle_ids),
        lp_eligible: labels(profile, &by_lp),
        witnesses: report
            .witnesses
            .iter()
            .map(|(&a, s)| {
                (
                    profile.label(a).to_string(),
                    s.scores().iter().map(|v| v.to_string()).collect(),
                )
            })
            .collect(),
        subset_check: pass_fail(subset_holds),
        equality_check: check_equality.then(|| pass_fail(equality_holds)),
    };
    Ok(OracleOutcome {
        doc,
        subset_holds,
        equality_holds,
    })
}

fn pass_fail(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

#[derive(Debug, Serialize)]
pub struct PlotDoc {
    pub points: BTreeMap<String, [u64; 2]>,
    pub hull: Vec<[u64; 2]>,
    pub pareto_chain: Vec<[u64; 2]>,
    pub weak_pareto_chain: Vec<[u64; 2]>,
    /// Candidates whose score vector lies on the Pareto boundary.
    pub boundary: Vec<String>,
    pub weak_boundary: Vec<String>,
}

pub fn plot_doc(profile: &Profile, geometry: &HullGeometry) -> PlotDoc {
    PlotDoc {
        points: geometry
            .points
            .iter()
            .enumerate()
            .map(|(a, &pt)| (profile.label(a).to_string(), pt))
            .collect(),
        hull: geometry.hull.clone(),
        pareto_chain: geometry.strict_chain.clone(),
        weak_pareto_chain: geometry.weak_chain.clone(),
        boundary: labels(profile, &geometry.strict_boundary),
        weak_boundary: labels(profile, &geometry.weak_boundary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use deborda_core::tally::NamedRule;

    const DEMO: &str = "2: a > b > c\n6: b > a > c\n7: c > a > b\n1: c > b > a";

    #[test]
    fn winners_document_shape() {
        let pr = Profile::parse(DEMO).unwrap();
        let s = Scoring::named(NamedRule::Standard, 3).unwrap();
        let doc = winners_doc(&pr, &s).unwrap();
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["winners"], serde_json::json!(["a"]));
        assert_eq!(json["estimates"]["a"], "17");
        assert_eq!(json["estimates"]["b"], "15");
        assert_eq!(json["estimates"]["c"], "16");
        assert_eq!(json["strict"], true);
    }

    #[test]
    fn verdict_documents_are_exclusive() {
        let pr = Profile::parse(DEMO).unwrap();
        let docs = all_verdicts_doc(&pr, Mode::Strict).unwrap();
        assert_eq!(docs.len(), 3);
        for doc in &docs {
            assert_eq!(doc.eligible, doc.witness.is_some());
            assert_eq!(!doc.eligible, doc.certificate.is_some());
        }
        assert!(docs[0].eligible);
        assert!(!docs[1].eligible);
        assert!(docs[2].eligible);
        let cert = docs[1].certificate.as_ref().unwrap();
        assert_eq!(cert.weights.len(), 2);
        assert!(cert.weights.contains_key("a"));
        assert!(cert.weights.contains_key("c"));
    }

    #[test]
    fn oracle_outcome_on_demo_profile() {
        let pr = Profile::parse(DEMO).unwrap();
        let out = oracle_outcome(&pr, Mode::Strict, 20, true).unwrap();
        assert!(out.subset_holds);
        assert!(out.equality_holds);
        assert_eq!(out.doc.oracle_eligible, vec!["a", "c"]);
        assert_eq!(out.doc.lp_eligible, vec!["a", "c"]);
        assert_eq!(out.doc.subset_check, "PASS");
        assert_eq!(out.doc.equality_check.as_deref(), Some("PASS"));
    }

    #[test]
    fn rationals_render_as_reduced_strings() {
        let pr = Profile::parse(DEMO).unwrap();
        let s = crate::formats::parse_scoring_arg("0,1/2,1").unwrap();
        let doc = winners_doc(&pr, &s).unwrap();
        assert_eq!(doc.scoring, vec!["0", "1/2", "1"]);
        // Estimate of b: 6*1 + (2+1)*(1/2) = 15/2.
        assert_eq!(doc.estimates["b"], "15/2");
    }
}
