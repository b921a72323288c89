//! Profile file formats and argument parsing.
//!
//! Two interchangeable profile encodings: the line-oriented text grammar
//! (the default) and a JSON mirror
//!
//! ```json
//! {"candidates": ["a", "b", "c"],
//!  "ballots": [{"weight": 2, "order": ["a", "b", "c"]}]}
//! ```
//!
//! Both assign dense candidate ids in sorted label order, so a profile
//! canonicalizes identically whichever format it came from.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use deborda_core::profile::Profile;
use deborda_core::rational::Rational;
use deborda_core::tally::Scoring;

use crate::AppError;

/// On-disk profile encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ProfileFormat {
    Text,
    Json,
}

/// The JSON mirror of a profile.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonProfile {
    pub candidates: Vec<String>,
    pub ballots: Vec<JsonBallot>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JsonBallot {
    pub weight: u64,
    pub order: Vec<String>,
}

impl JsonProfile {
    pub fn from_profile(profile: &Profile) -> Self {
        JsonProfile {
            candidates: profile
                .candidates()
                .iter()
                .map(|c| c.label.clone())
                .collect(),
            ballots: profile
                .ballots()
                .iter()
                .map(|b| JsonBallot {
                    weight: b.weight,
                    order: b
                        .order
                        .iter()
                        .map(|&id| profile.label(id).to_string())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn into_profile(self) -> Result<Profile, AppError> {
        // Ids by sorted label order, matching the text parser.
        let mut labels = self.candidates;
        labels.sort_unstable();
        let index = |label: &str| -> Result<usize, AppError> {
            labels
                .binary_search_by(|l| l.as_str().cmp(label))
                .map_err(|_| AppError::Domain(format!("unknown candidate {label:?} in ballot")))
        };
        let mut ballots = Vec::with_capacity(self.ballots.len());
        for ballot in &self.ballots {
            let order = ballot
                .order
                .iter()
                .map(|l| index(l))
                .collect::<Result<Vec<_>, _>>()?;
            ballots.push((order, ballot.weight));
        }
        Profile::new(labels, ballots).map_err(|e| AppError::Domain(e.to_string()))
    }
}

/// Parse a profile from text in either format.
pub fn parse_profile_str(input: &str, format: ProfileFormat) -> Result<Profile, AppError> {
    match format {
        ProfileFormat::Text => {
            Profile::parse(input).map_err(|e| AppError::Domain(e.to_string()))
        }
        ProfileFormat::Json => {
            let mirror: JsonProfile = serde_json::from_str(input)
                .map_err(|e| AppError::Domain(format!("invalid profile JSON: {e}")))?;
            mirror.into_profile()
        }
    }
}

/// Read and parse a profile file.
pub fn load_profile(path: &Path, format: ProfileFormat) -> Result<Profile, AppError> {
    let input = fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_profile_str(&input, format)
}

/// Parse a `--scoring` argument: comma-separated integers or `p/q`
/// fractions, e.g. `0,1,2` or `0,1/2,2`.
pub fn parse_scoring_arg(arg: &str) -> Result<Scoring, AppError> {
    let mut scores = Vec::new();
    for token in arg.split(',') {
        let token = token.trim();
        let value: Rational = token
            .parse()
            .map_err(|_| AppError::Domain(format!("invalid score {token:?}")))?;
        scores.push(value);
    }
    Scoring::new(scores).map_err(|e| AppError::Domain(e.to_string()))
}
