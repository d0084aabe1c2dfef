//! Sentiment lexicon loading, validation, and word lookup.
//!
//! A lexicon file is line-oriented UTF-8:
//!
//! * lines beginning with `#` and blank lines are ignored,
//! * `term<TAB>score` declares a sentiment term with a score in `[0, 10]`,
//! * `term<TAB>NEG` (literal uppercase `NEG`) declares a negation term.
//!
//! Terms are lowercased on load and must be single words. Scores below the
//! neutral pivot 5 carry negative opinion, scores above it positive opinion.

use std::collections::{BTreeMap, BTreeSet};

use sha2::{Digest, Sha256};
use thiserror::Error;

/// Score separating negative (`< 5`) from positive (`> 5`) sentiment terms.
pub const NEUTRAL_PIVOT: f64 = 5.0;

/// The lexicon bundled with this crate (see `data/reference.lex`).
pub const REFERENCE_LEXICON: &str = include_str!("../data/reference.lex");

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    MalformedFile { line: usize, message: String },
    #[error("line {line}: score {score} for term `{term}` is outside [0, 10]")]
    ScoreOutOfRange {
        line: usize,
        term: String,
        score: f64,
    },
    #[error("line {line}: duplicate term `{term}`")]
    DuplicateTerm { line: usize, term: String },
    #[error("lexicon contains no sentiment entries")]
    EmptyLexicon,
}

/// One sentiment row: a normalized term and its score in `[0, 10]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SentimentEntry {
    pub term: String,
    pub score: f64,
}

/// Classification of a normalized word against the lexicon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WordClass {
    Sentiment(f64),
    Negation,
    Unknown,
}

/// Immutable sentiment/negation word table.
///
/// Built only by [`Lexicon::load`], so every instance satisfies the format
/// invariants: scores in `[0, 10]`, lowercase single-word terms, and disjoint
/// sentiment/negation sets. Safe to share across threads once loaded.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    sentiment: BTreeMap<String, f64>,
    negation: BTreeSet<String>,
    source_digest: String,
}

impl Lexicon {
    /// Parse and validate a lexicon document.
    ///
    /// The digest is a SHA-256 over the exact input bytes, taken before any
    /// normalization, so identical files always produce identical digests.
    pub fn load(input: &str) -> Result<Self, LexiconError> {
        let mut sentiment = BTreeMap::new();
        let mut negation = BTreeSet::new();

        for (idx, raw_line) in input.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw_line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split('\t').collect();
            if fields.len() != 2 {
                return Err(LexiconError::MalformedFile {
                    line,
                    message: "expected `term<TAB>score` or `term<TAB>NEG`".to_string(),
                });
            }
            let term_field = fields[0].trim();
            let value_field = fields[1].trim();
            if term_field.is_empty() {
                return Err(LexiconError::MalformedFile {
                    line,
                    message: "empty term".to_string(),
                });
            }
            let term = term_field.to_lowercase();
            if term.chars().any(char::is_whitespace) {
                return Err(LexiconError::MalformedFile {
                    line,
                    message: format!("term `{term}` contains whitespace; terms are single words"),
                });
            }
            if sentiment.contains_key(&term) || negation.contains(&term) {
                return Err(LexiconError::DuplicateTerm { line, term });
            }
            if value_field == "NEG" {
                negation.insert(term);
            } else {
                let score: f64 = value_field
                    .parse()
                    .map_err(|_| LexiconError::MalformedFile {
                        line,
                        message: format!("`{value_field}` is not a decimal score"),
                    })?;
                if !(0.0..=10.0).contains(&score) {
                    return Err(LexiconError::ScoreOutOfRange { line, term, score });
                }
                sentiment.insert(term, score);
            }
        }

        if sentiment.is_empty() {
            return Err(LexiconError::EmptyLexicon);
        }

        Ok(Self {
            sentiment,
            negation,
            source_digest: hex::encode(Sha256::digest(input.as_bytes())),
        })
    }

    /// The bundled starter lexicon.
    pub fn reference() -> Self {
        Self::load(REFERENCE_LEXICON).expect("bundled lexicon is valid")
    }

    /// Exact-match lookup of an already normalized (lowercase) word.
    pub fn lookup(&self, word: &str) -> WordClass {
        if let Some(&score) = self.sentiment.get(word) {
            WordClass::Sentiment(score)
        } else if self.negation.contains(word) {
            WordClass::Negation
        } else {
            WordClass::Unknown
        }
    }

    pub fn sentiment_count(&self) -> usize {
        self.sentiment.len()
    }

    pub fn negation_count(&self) -> usize {
        self.negation.len()
    }

    /// Hex SHA-256 of the bytes this lexicon was loaded from.
    pub fn source_digest(&self) -> &str {
        &self.source_digest
    }

    pub fn sentiment_entries(&self) -> impl Iterator<Item = SentimentEntry> + '_ {
        self.sentiment.iter().map(|(term, &score)| SentimentEntry {
            term: term.clone(),
            score,
        })
    }

    pub fn negation_terms(&self) -> impl Iterator<Item = &str> {
        self.negation.iter().map(String::as_str)
    }

    /// Serialize back to the file format, terms sorted, comments dropped.
    ///
    /// Reloading the result yields the same sentiment map and negation set,
    /// and serializing again reproduces the same bytes.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        for (term, score) in &self.sentiment {
            out.push_str(&format!("{term}\t{score}\n"));
        }
        for term in &self.negation {
            out.push_str(&format!("{term}\tNEG\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SMALL: &str = "good\t7\nregular\t6\nmisbehaving\t2\nnot\tNEG\n";

    #[test]
    fn loads_terms_and_negations() {
        let lex = Lexicon::load(SMALL).unwrap();
        assert_eq!(lex.sentiment_count(), 3);
        assert_eq!(lex.negation_count(), 1);
    }

    #[test]
    fn lookup_classifies_words() {
        let lex = Lexicon::load(SMALL).unwrap();
        assert_eq!(lex.lookup("good"), WordClass::Sentiment(7.0));
        assert_eq!(lex.lookup("not"), WordClass::Negation);
        assert_eq!(lex.lookup("the"), WordClass::Unknown);
    }

    #[test]
    fn lookup_returns_stored_score_unscaled() {
        let lex = Lexicon::load("odd\t3.25\n").unwrap();
        assert_eq!(lex.lookup("odd"), WordClass::Sentiment(3.25));
    }

    #[test]
    fn terms_are_lowercased_on_load() {
        let lex = Lexicon::load("GOOD\t7\nNot\tNEG\n").unwrap();
        assert_eq!(lex.lookup("good"), WordClass::Sentiment(7.0));
        assert_eq!(lex.lookup("not"), WordClass::Negation);
        assert_eq!(lex.lookup("GOOD"), WordClass::Unknown);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let lex = Lexicon::load("# header\n\n  \ngood\t7\n# tail\n").unwrap();
        assert_eq!(lex.sentiment_count(), 1);
    }

    #[test]
    fn score_above_ten_is_rejected() {
        let err = Lexicon::load("bad\t11\n").unwrap_err();
        assert_eq!(
            err,
            LexiconError::ScoreOutOfRange {
                line: 1,
                term: "bad".to_string(),
                score: 11.0
            }
        );
    }

    #[test]
    fn negative_score_is_rejected() {
        let err = Lexicon::load("bad\t-0.5\n").unwrap_err();
        assert!(matches!(err, LexiconError::ScoreOutOfRange { .. }));
    }

    #[test]
    fn non_finite_scores_are_rejected() {
        assert!(matches!(
            Lexicon::load("bad\tinf\n").unwrap_err(),
            LexiconError::ScoreOutOfRange { .. }
        ));
        assert!(matches!(
            Lexicon::load("bad\tNaN\n").unwrap_err(),
            LexiconError::ScoreOutOfRange { .. }
        ));
    }

    #[test]
    fn boundary_scores_are_accepted() {
        let lex = Lexicon::load("floor\t0\nceil\t10\n").unwrap();
        assert_eq!(lex.lookup("floor"), WordClass::Sentiment(0.0));
        assert_eq!(lex.lookup("ceil"), WordClass::Sentiment(10.0));
    }

    #[test]
    fn duplicate_sentiment_term_is_rejected() {
        let err = Lexicon::load("good\t7\nGood\t8\n").unwrap_err();
        assert_eq!(
            err,
            LexiconError::DuplicateTerm {
                line: 2,
                term: "good".to_string()
            }
        );
    }

    #[test]
    fn term_in_both_sections_is_rejected() {
        let err = Lexicon::load("good\t7\ngood\tNEG\n").unwrap_err();
        assert!(matches!(err, LexiconError::DuplicateTerm { line: 2, .. }));
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(Lexicon::load("").unwrap_err(), LexiconError::EmptyLexicon);
        assert_eq!(
            Lexicon::load("not\tNEG\n").unwrap_err(),
            LexiconError::EmptyLexicon
        );
    }

    #[test]
    fn malformed_lines_report_position() {
        let err = Lexicon::load("good\t7\nbad 3\n").unwrap_err();
        assert!(matches!(err, LexiconError::MalformedFile { line: 2, .. }));
        let err = Lexicon::load("good\tseven\n").unwrap_err();
        assert!(matches!(err, LexiconError::MalformedFile { line: 1, .. }));
        let err = Lexicon::load("a\tb\tc\n").unwrap_err();
        assert!(matches!(err, LexiconError::MalformedFile { line: 1, .. }));
    }

    #[test]
    fn lowercase_neg_is_not_a_negation_marker() {
        let err = Lexicon::load("not\tneg\n").unwrap_err();
        assert!(matches!(err, LexiconError::MalformedFile { .. }));
    }

    #[test]
    fn crlf_input_parses() {
        let lex = Lexicon::load("good\t7\r\nnot\tNEG\r\n").unwrap();
        assert_eq!(lex.lookup("good"), WordClass::Sentiment(7.0));
        assert_eq!(lex.lookup("not"), WordClass::Negation);
    }

    #[test]
    fn load_is_deterministic() {
        let a = Lexicon::load(SMALL).unwrap();
        let b = Lexicon::load(SMALL).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.source_digest().len(), 64);
        let c = Lexicon::load("good\t7\n").unwrap();
        assert_ne!(a.source_digest(), c.source_digest());
    }

    #[test]
    fn digest_covers_raw_bytes_not_normalized_form() {
        let upper = Lexicon::load("GOOD\t7\n").unwrap();
        let lower = Lexicon::load("good\t7\n").unwrap();
        assert_ne!(upper.source_digest(), lower.source_digest());
        assert_eq!(upper.lookup("good"), lower.lookup("good"));
    }

    #[test]
    fn reference_lexicon_loads_with_expected_entries() {
        let lex = Lexicon::reference();
        assert!(lex.sentiment_count() >= 7);
        assert!(lex.negation_count() >= 7);
        assert_eq!(lex.lookup("good"), WordClass::Sentiment(7.0));
        assert_eq!(lex.lookup("regular"), WordClass::Sentiment(6.0));
        assert_eq!(lex.lookup("misbehaving"), WordClass::Sentiment(2.0));
        assert_eq!(lex.lookup("hardworking"), WordClass::Sentiment(8.0));
        assert_eq!(lex.lookup("bright"), WordClass::Sentiment(8.0));
        assert_eq!(lex.lookup("diligent"), WordClass::Sentiment(8.0));
        assert_eq!(lex.lookup("obedient"), WordClass::Sentiment(8.0));
        for negator in ["not", "no", "never", "none", "neither", "nor", "cannot"] {
            assert_eq!(lex.lookup(negator), WordClass::Negation, "{negator}");
        }
    }

    #[test]
    fn file_format_round_trips() {
        let lex = Lexicon::reference();
        let serialized = lex.to_file_format();
        let reloaded = Lexicon::load(&serialized).unwrap();
        assert_eq!(
            lex.sentiment_entries().collect::<Vec<_>>(),
            reloaded.sentiment_entries().collect::<Vec<_>>()
        );
        assert_eq!(
            lex.negation_terms().collect::<Vec<_>>(),
            reloaded.negation_terms().collect::<Vec<_>>()
        );
        assert_eq!(serialized, reloaded.to_file_format());
    }

    proptest! {
        #[test]
        fn round_trip_preserves_entries(
            terms in proptest::collection::btree_set("[a-z]{1,10}", 1..20),
            scores in proptest::collection::vec(0u32..=1000, 20),
            negation_split in 0usize..10,
        ) {
            let terms: Vec<String> = terms.into_iter().collect();
            let split = negation_split.min(terms.len().saturating_sub(1));
            let mut file = String::new();
            for (i, term) in terms.iter().enumerate() {
                if i < split {
                    file.push_str(&format!("{term}\tNEG\n"));
                } else {
                    let score = f64::from(scores[i % scores.len()]) / 100.0;
                    file.push_str(&format!("{term}\t{score}\n"));
                }
            }
            let lex = Lexicon::load(&file).unwrap();
            let reloaded = Lexicon::load(&lex.to_file_format()).unwrap();
            prop_assert_eq!(
                lex.sentiment_entries().collect::<Vec<_>>(),
                reloaded.sentiment_entries().collect::<Vec<_>>()
            );
            prop_assert_eq!(
                lex.negation_terms().collect::<Vec<_>>(),
                reloaded.negation_terms().collect::<Vec<_>>()
            );
            prop_assert_eq!(lex.to_file_format(), reloaded.to_file_format());
        }
    }
}
