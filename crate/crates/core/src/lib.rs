//! Lexicon-based opinion scoring.
//!
//! The pipeline: load a [`Lexicon`] of sentiment terms (scores 0 to 10,
//! neutral at 5) and negation words; score each remark as the mean of its
//! matched word scores, with negated words pulled 2 points toward neutral
//! ([`score_remark`]); combine per-holder remark values into a collaborated
//! opinion with a weighted mean ([`collaborate`]); and bucket any value into
//! five levels from very low to very high ([`classify`]).
//!
//! ```
//! use opinion_core::{collaborate, score_remark, Lexicon};
//!
//! let lexicon = Lexicon::reference();
//! let remark = "He is a good student but he is not regular in the class \
//!               and is misbehaving at times.";
//! let score = score_remark(remark, &lexicon);
//! assert!((score.value().unwrap() - 13.0 / 3.0).abs() < 1e-9);
//!
//! let opinion = collaborate(&[score], None)?;
//! assert_eq!(opinion.bucket.label(), "low");
//! # Ok::<(), opinion_core::AggregateError>(())
//! ```
//!
//! The [`corpus`] module adds JSON/CSV corpus ingestion, report rendering in
//! the case-study text layout, and an append-only evaluation history.

#![forbid(unsafe_code)]

pub mod aggregate;
pub mod corpus;
pub mod lexicon;
pub mod precision;
pub mod scorer;
pub mod textproc;

pub use chrono;

pub use aggregate::{
    classify, collaborate, collaborate_with, AggregateError, CollaboratedOpinion, Contribution,
    HolderWeight, OpinionBucket,
};
pub use corpus::history::{append_history, history, read_all, HistoryError};
pub use corpus::report::{
    format_value, format_value_with, ordinal, render_report, render_report_with, ReportFormat,
};
pub use corpus::{
    evaluate_student, evaluate_student_with, group_by_student, parse_corpus, Clock, CorpusError,
    CorpusFormat, EvaluationRecord, FixedClock, PerRemark, Remark, SystemClock,
};
pub use lexicon::{
    Lexicon, LexiconError, SentimentEntry, WordClass, NEUTRAL_PIVOT, REFERENCE_LEXICON,
};
pub use precision::Precision;
pub use scorer::{
    adjust_for_negation, score_remark, score_remark_with, MatchedWord, RemarkScore, ScoreOptions,
    ScorerError, DEFAULT_NEGATION_WINDOW,
};
pub use textproc::{
    split_sentences, tokenize, tokenize_remark, tokenize_sentence, Token, TokenKind,
};
