//! `opinion`: score remarks, collaborate corpora, validate lexicons, and
//! track evaluation history.
//!
//! Exit codes: 0 success, 2 lexicon problems, 3 input problems (corpus,
//! weights, history store), 4 nothing to collaborate.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use opinion_core::chrono::SecondsFormat;
use opinion_core::{
    append_history, classify, evaluate_student_with, format_value, format_value_with,
    group_by_student, history, parse_corpus, render_report, render_report_with, score_remark_with,
    AggregateError, CorpusFormat, HolderWeight, Lexicon, Precision, Remark, ReportFormat,
    ScoreOptions, SystemClock,
};

#[derive(Parser)]
#[command(
    name = "opinion",
    version,
    about = "Lexicon-based opinion scoring over free-text remarks"
)]
struct Cli {
    /// Lexicon file (term<TAB>score or term<TAB>NEG per line).
    #[arg(long, env = "OPINION_LEXICON", global = true, value_name = "PATH")]
    lexicon: Option<PathBuf>,

    /// How many following tokens a negation word covers within a sentence.
    #[arg(
        long,
        global = true,
        default_value_t = 3,
        value_parser = clap::value_parser!(u32).range(1..),
        value_name = "N"
    )]
    negation_window: u32,

    /// Round every accumulation step through 32-bit floats, reproducing
    /// single-precision output digits.
    #[arg(long, global = true)]
    float32_compat: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score one remark and print its opinion value and level.
    Score {
        /// Remark text given inline.
        #[arg(long)]
        text: Option<String>,
        /// File containing the remark text.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Evaluate a remark corpus and print per-student reports.
    Collaborate {
        /// Corpus file, JSON or CSV (detected by extension, then content).
        #[arg(long, value_name = "PATH")]
        corpus: PathBuf,
        /// Only evaluate this student.
        #[arg(long, value_name = "ID")]
        student: Option<String>,
        /// JSON file mapping opinion holder ids to positive weights.
        #[arg(long, value_name = "PATH")]
        weights: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Append each evaluation to this history store.
        #[arg(long, value_name = "PATH")]
        store: Option<PathBuf>,
    },
    /// Lexicon maintenance.
    Lexicon {
        #[command(subcommand)]
        command: LexiconCommand,
    },
    /// Evaluation record tracking.
    Track {
        #[command(subcommand)]
        command: TrackCommand,
    },
}

#[derive(Subcommand)]
enum LexiconCommand {
    /// Check a lexicon file and print its summary.
    Validate { path: PathBuf },
}

#[derive(Subcommand)]
enum TrackCommand {
    /// List a student's evaluations in chronological order.
    History {
        #[arg(long, value_name = "PATH")]
        store: PathBuf,
        #[arg(long, value_name = "ID")]
        student: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

struct CmdError {
    code: i32,
    message: String,
}

impl CmdError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {}", err.message);
        process::exit(err.code);
    }
}

fn run(cli: Cli) -> Result<(), CmdError> {
    let options = ScoreOptions {
        negation_window: cli.negation_window as usize,
        precision: if cli.float32_compat {
            Precision::F32
        } else {
            Precision::F64
        },
    };
    match cli.command {
        Command::Score { text, file } => cmd_score(cli.lexicon.as_deref(), &options, text, file),
        Command::Collaborate {
            corpus,
            student,
            weights,
            format,
            store,
        } => cmd_collaborate(
            cli.lexicon.as_deref(),
            &options,
            &corpus,
            student,
            weights,
            format,
            store,
        ),
        Command::Lexicon {
            command: LexiconCommand::Validate { path },
        } => cmd_lexicon_validate(&path),
        Command::Track {
            command: TrackCommand::History { store, student },
        } => cmd_history(&store, &student),
    }
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon, CmdError> {
    let path = path.ok_or_else(|| {
        CmdError::new(2, "no lexicon given: pass --lexicon or set OPINION_LEXICON")
    })?;
    let contents = fs::read_to_string(path)
        .map_err(|e| CmdError::new(2, format!("cannot read lexicon {}: {e}", path.display())))?;
    Lexicon::load(&contents)
        .map_err(|e| CmdError::new(2, format!("invalid lexicon {}: {e}", path.display())))
}

fn cmd_score(
    lexicon_path: Option<&Path>,
    options: &ScoreOptions,
    text: Option<String>,
    file: Option<PathBuf>,
) -> Result<(), CmdError> {
    let lexicon = load_lexicon(lexicon_path)?;
    let text = match (text, file) {
        (Some(text), None) => text,
        (None, Some(path)) => fs::read_to_string(&path)
            .map_err(|e| CmdError::new(3, format!("cannot read remark {}: {e}", path.display())))?,
        _ => return Err(CmdError::new(3, "provide exactly one of --text or --file")),
    };
    let score = score_remark_with(&text, &lexicon, "remark", options);
    match score.value() {
        None => println!("no opinion detected"),
        Some(value) => {
            println!(
                "Opinion value :{}",
                format_value_with(value, options.precision)
            );
            println!(
                "Opinion is {}",
                classify(value)
                    .expect("remark values stay in range")
                    .label()
            );
        }
    }
    Ok(())
}

fn detect_format(path: &Path, contents: &str) -> CorpusFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("json") => CorpusFormat::Json,
        Some(ext) if ext.eq_ignore_ascii_case("csv") => CorpusFormat::Csv,
        _ if contents.trim_start().starts_with('{') => CorpusFormat::Json,
        _ => CorpusFormat::Csv,
    }
}

fn load_weights(path: Option<&Path>) -> Result<Option<Vec<HolderWeight>>, CmdError> {
    let Some(path) = path else {
        return Ok(None);
    };
    let contents = fs::read_to_string(path)
        .map_err(|e| CmdError::new(3, format!("cannot read weights {}: {e}", path.display())))?;
    let table: BTreeMap<String, f64> = serde_json::from_str(&contents)
        .map_err(|e| CmdError::new(3, format!("invalid weights {}: {e}", path.display())))?;
    Ok(Some(
        table
            .into_iter()
            .map(|(holder, weight)| HolderWeight::new(holder, weight))
            .collect(),
    ))
}

fn cmd_collaborate(
    lexicon_path: Option<&Path>,
    options: &ScoreOptions,
    corpus_path: &Path,
    student: Option<String>,
    weights_path: Option<PathBuf>,
    format: OutputFormat,
    store: Option<PathBuf>,
) -> Result<(), CmdError> {
    let lexicon = load_lexicon(lexicon_path)?;
    let contents = fs::read_to_string(corpus_path).map_err(|e| {
        CmdError::new(
            3,
            format!("cannot read corpus {}: {e}", corpus_path.display()),
        )
    })?;
    let corpus_format = detect_format(corpus_path, &contents);
    let remarks = parse_corpus(&contents, corpus_format)
        .map_err(|e| CmdError::new(3, format!("corpus {}: {e}", corpus_path.display())))?;
    let weights = load_weights(weights_path.as_deref())?;

    let groups: Vec<(String, Vec<Remark>)> = match &student {
        Some(id) => group_by_student(&remarks)
            .into_iter()
            .filter(|(student_id, _)| student_id == id)
            .collect(),
        None => group_by_student(&remarks),
    };
    if groups.is_empty() {
        return Err(match student {
            Some(id) => CmdError::new(4, format!("student `{id}` not found in corpus")),
            None => CmdError::new(4, "corpus contains no remarks"),
        });
    }

    let mut reports = Vec::new();
    for (student_id, student_remarks) in &groups {
        match evaluate_student_with(
            student_remarks,
            &lexicon,
            weights.as_deref(),
            options,
            &SystemClock,
        ) {
            Ok(record) => {
                if let Some(store_path) = &store {
                    append_history(store_path, &record)
                        .map_err(|e| CmdError::new(3, e.to_string()))?;
                }
                reports.push((student_id.clone(), record));
            }
            Err(AggregateError::NoContributions) => {
                eprintln!("warning: student {student_id}: no remark produced an opinion value");
            }
            Err(other) => {
                return Err(CmdError::new(3, format!("student {student_id}: {other}")));
            }
        }
    }
    if reports.is_empty() {
        return Err(CmdError::new(4, "no student produced an opinion"));
    }

    match format {
        OutputFormat::Text => {
            let blocks: Vec<String> = reports
                .iter()
                .map(|(student_id, record)| {
                    let body = render_report_with(record, ReportFormat::Text, options.precision);
                    if reports.len() > 1 {
                        format!("Student: {student_id}\n\n{body}")
                    } else {
                        body
                    }
                })
                .collect();
            print!("{}", blocks.join("\n"));
        }
        OutputFormat::Json => {
            for (_, record) in &reports {
                print!("{}", render_report(record, ReportFormat::Json));
            }
        }
    }
    Ok(())
}

fn cmd_lexicon_validate(path: &Path) -> Result<(), CmdError> {
    let contents = fs::read_to_string(path)
        .map_err(|e| CmdError::new(2, format!("cannot read lexicon {}: {e}", path.display())))?;
    let lexicon = Lexicon::load(&contents)
        .map_err(|e| CmdError::new(2, format!("{}: {e}", path.display())))?;
    println!(
        "{} sentiment terms, {} negation terms, sha256 {}",
        lexicon.sentiment_count(),
        lexicon.negation_count(),
        lexicon.source_digest()
    );
    Ok(())
}

fn cmd_history(store: &Path, student: &str) -> Result<(), CmdError> {
    let records = history(store, student).map_err(|e| CmdError::new(3, e.to_string()))?;
    for record in records {
        println!(
            "{}\t{}\t{}",
            record.timestamp.to_rfc3339_opts(SecondsFormat::Secs, true),
            format_value(record.collaborated_value),
            record.collaborated_bucket
        );
    }
    Ok(())
}
