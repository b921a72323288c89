//! IO, file formats and report documents for the `deborda` command line.
//!
//! The algorithmic core lives in `deborda-core`; this crate adds the text
//! and JSON profile formats, the stable JSON output documents of each
//! subcommand, and the SVG hull plot.

pub mod formats;
pub mod render;
pub mod report;

use std::fmt;

/// Errors bucketed by exit status: usage problems exit 2, domain problems
/// exit 1, internal consistency failures exit 3.
#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Domain(_) => 1,
            AppError::Usage(_) => 2,
            AppError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) => write!(f, "{msg}"),
            AppError::Domain(msg) => write!(f, "{msg}"),
            AppError::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl std::error::Error for AppError {}

impl From<deborda_core::eligibility::EligibilityError> for AppError {
    fn from(e: deborda_core::eligibility::EligibilityError) -> Self {
        use deborda_core::eligibility::EligibilityError;
        match e {
            EligibilityError::Inconsistency(_) => AppError::Internal(e.to_string()),
            _ => AppError::Domain(e.to_string()),
        }
    }
}

impl From<deborda_core::tally::TallyError> for AppError {
    fn from(e: deborda_core::tally::TallyError) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<deborda_core::tally::ScoringError> for AppError {
    fn from(e: deborda_core::tally::ScoringError) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<deborda_core::hull::HullError> for AppError {
    fn from(e: deborda_core::hull::HullError) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<deborda_core::oracle::OracleError> for AppError {
    fn from(e: deborda_core::oracle::OracleError) -> Self {
        AppError::Domain(e.to_string())
    }
}
