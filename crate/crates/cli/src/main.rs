//! `deborda`: who can win a fixed election under *some* positional
//! scoring rule?
//!
//! Every subcommand reads a preference profile, prints a JSON document on
//! stdout and reports problems on stderr. Exit statuses: 0 success, 1
//! domain errors, 2 usage errors, 3 internal consistency failures.

use std::fs;
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use deborda::formats::{ProfileFormat, load_profile, parse_scoring_arg};
use deborda::render::plot_hull;
use deborda::report;
use deborda::AppError;
use deborda_core::eligibility::{Mode, eligible};
use deborda_core::profile::Profile;
use deborda_core::tally::{NamedRule, Scoring};

#[derive(Parser)]
#[command(
    name = "deborda",
    version,
    about = "Exact winner and eligibility analysis for positional scoring rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Preference profile file (required by every subcommand)
    #[arg(long, global = true, value_name = "FILE")]
    profile: Option<PathBuf>,

    /// Profile file encoding
    #[arg(long, global = true, value_enum, default_value_t = ProfileFormat::Text)]
    format: ProfileFormat,

    /// Print progress details on stderr
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    Weak,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Weak => Mode::Weak,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Standard,
    Plurality,
    Antiplurality,
}

impl From<RuleArg> for NamedRule {
    fn from(r: RuleArg) -> NamedRule {
        match r {
            RuleArg::Standard => NamedRule::Standard,
            RuleArg::Plurality => NamedRule::Plurality,
            RuleArg::Antiplurality => NamedRule::Antiplurality,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Estimates and the winner set under one scoring
    Winners {
        /// Comma-separated scores, integers or p/q fractions (e.g. "0,1,2")
        #[arg(long)]
        scoring: Option<String>,
        /// A classical rule instead of an explicit scoring
        #[arg(long, value_enum)]
        rule: Option<RuleArg>,
    },
    /// Cumulative score vector of every candidate
    ScoreVectors,
    /// Eligibility verdicts with witness scorings or dominance certificates
    Eligible {
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        /// Restrict the report to one candidate
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Dominance certificate of an ineligible candidate
    Certify {
        #[arg(long)]
        candidate: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
    },
    /// Cross-check the eligibility engine against brute-force enumeration
    OracleCheck {
        #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
        mode: ModeArg,
        /// Largest score value to enumerate
        #[arg(long)]
        bound: u64,
        /// Also require oracle and engine to agree exactly
        #[arg(long)]
        require_equality: bool,
    },
    /// Hull picture of a three-candidate profile: SVG plus JSON twin
    Plot {
        /// Output SVG path; the JSON twin lands next to it
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(error) = run(cli) {
        eprintln!("error: {error}");
        std::process::exit(error.exit_code());
    }
}

fn emit<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents serialize")
    );
}

fn resolve_candidate(profile: &Profile, label: &str) -> Result<usize, AppError> {
    profile
        .candidate_by_label(label)
        .map(|c| c.id)
        .ok_or_else(|| AppError::Domain(format!("no candidate labeled {label:?}")))
}

fn run(cli: Cli) -> Result<(), AppError> {
    let path = cli
        .profile
        .as_deref()
        .ok_or_else(|| AppError::Usage("--profile <FILE> is required".to_string()))?;
    let profile = load_profile(path, cli.format)?;
    if cli.verbose > 0 {
        eprintln!(
            "loaded profile: {} candidates, {} voters, {} ballot groups",
            profile.num_candidates(),
            profile.num_voters(),
            profile.ballots().len()
        );
    }

    match cli.command {
        Command::Winners { scoring, rule } => {
            let scoring: Scoring = match (scoring, rule) {
                (Some(arg), None) => parse_scoring_arg(&arg)?,
                (None, Some(rule)) => {
                    Scoring::named(rule.into(), profile.num_candidates())?
                }
                _ => {
                    return Err(AppError::Usage(
                        "provide exactly one of --scoring and --rule".to_string(),
                    ));
                }
            };
            emit(&report::winners_doc(&profile, &scoring)?);
        }
        Command::ScoreVectors => {
            emit(&report::score_vectors_doc(&profile));
        }
        Command::Eligible { mode, candidate } => match candidate {
            Some(label) => {
                let id = resolve_candidate(&profile, &label)?;
                emit(&report::single_verdict_doc(&profile, id, mode.into())?);
            }
            None => {
                emit(&report::all_verdicts_doc(&profile, mode.into())?);
            }
        },
        Command::Certify { candidate, mode } => {
            let id = resolve_candidate(&profile, &candidate)?;
            let verdict = eligible(&profile, id, mode.into())?;
            match verdict.certificate {
                Some(_) => {
                    let doc = report::verdict_doc(&profile, &verdict);
                    emit(&report::CertifyDoc {
                        candidate: doc.candidate,
                        mode: doc.mode,
                        certificate: doc.certificate.expect("ineligible verdicts carry one"),
                    });
                }
                None => {
                    return Err(AppError::Domain(format!(
                        "candidate {candidate:?} is eligible; no dominance certificate exists"
                    )));
                }
            }
        }
        Command::OracleCheck {
            mode,
            bound,
            require_equality,
        } => {
            let outcome =
                report::oracle_outcome(&profile, mode.into(), bound, require_equality)?;
            if cli.verbose > 0 {
                eprintln!("enumerated {} scorings", outcome.doc.scorings_tried);
            }
            emit(&outcome.doc);
            if !outcome.subset_holds {
                return Err(AppError::Internal(
                    "oracle found a winner the eligibility engine rejects".to_string(),
                ));
            }
            if require_equality && !outcome.equality_holds {
                return Err(AppError::Domain(format!(
                    "oracle and engine disagree at bound {bound}"
                )));
            }
        }
        Command::Plot { output } => {
            let plot = plot_hull(&profile)?;
            let twin = output.with_extension("json");
            let json_text =
                serde_json::to_string_pretty(&plot.json).expect("documents serialize");
            fs::write(&output, &plot.svg).map_err(|e| {
                AppError::Usage(format!("cannot write {}: {e}", output.display()))
            })?;
            fs::write(&twin, format!("{json_text}\n")).map_err(|e| {
                AppError::Usage(format!("cannot write {}: {e}", twin.display()))
            })?;
            if cli.verbose > 0 {
                eprintln!("wrote {} and {}", output.display(), twin.display());
            }
            println!("{json_text}");
        }
    }
    Ok(())
}
