//! Word-by-word remark scoring with negation adjustment.
//!
//! The scan walks tokens in document order. A negation word arms a flag that
//! covers the next `negation_window` tokens of the same sentence; the first
//! sentiment word seen while armed has its score pulled 2 points toward the
//! neutral pivot and consumes the flag. The remark's opinion value is the
//! mean of all adjusted scores, or [`RemarkScore::is_no_opinion`] when the
//! lexicon matched nothing.

use thiserror::Error;

use crate::lexicon::Lexicon;
use crate::precision::Precision;
use crate::textproc::{tokenize_remark, Token, TokenKind};

/// Default number of following same-sentence tokens a negator covers.
pub const DEFAULT_NEGATION_WINDOW: usize = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScorerError {
    #[error("score {0} is outside [0, 10]")]
    ScoreOutOfRange(f64),
}

/// Scan configuration. `negation_window` of n covers the n tokens after a
/// negator; 0 disables negation entirely.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreOptions {
    pub negation_window: usize,
    pub precision: Precision,
}

impl Default for ScoreOptions {
    fn default() -> Self {
        Self {
            negation_window: DEFAULT_NEGATION_WINDOW,
            precision: Precision::default(),
        }
    }
}

/// One lexicon hit in a remark, before and after negation adjustment.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedWord {
    pub token: Token,
    pub raw_score: f64,
    pub negated: bool,
    pub adjusted_score: f64,
}

/// The opinion extracted from a single remark.
///
/// Values built by [`score_remark`] satisfy: a value is present exactly when
/// `matches` is non-empty, and it equals the mean of the adjusted scores.
/// [`RemarkScore::from_value`] injects an externally computed value with an
/// empty evidence trail.
#[derive(Debug, Clone, PartialEq)]
pub struct RemarkScore {
    value: Option<f64>,
    matches: Vec<MatchedWord>,
    remark_ref: String,
}

impl RemarkScore {
    /// Wrap a value computed elsewhere, with no evidence trail.
    pub fn from_value(remark_ref: impl Into<String>, value: f64) -> Result<Self, ScorerError> {
        if !(0.0..=10.0).contains(&value) {
            return Err(ScorerError::ScoreOutOfRange(value));
        }
        Ok(Self {
            value: Some(value),
            matches: Vec::new(),
            remark_ref: remark_ref.into(),
        })
    }

    /// A remark known to carry no opinion.
    pub fn no_opinion(remark_ref: impl Into<String>) -> Self {
        Self {
            value: None,
            matches: Vec::new(),
            remark_ref: remark_ref.into(),
        }
    }

    /// The opinion value in [0, 10], or `None` for no-opinion remarks.
    pub fn value(&self) -> Option<f64> {
        self.value
    }

    /// True when the lexicon matched no word of the remark.
    pub fn is_no_opinion(&self) -> bool {
        self.value.is_none()
    }

    pub fn matches(&self) -> &[MatchedWord] {
        &self.matches
    }

    pub fn remark_ref(&self) -> &str {
        &self.remark_ref
    }
}

/// Apply the negation adjustment rule to a raw lexicon score.
///
/// Negated scores move 2 points toward (or past) the neutral pivot 5: high
/// scores (> 5) drop by 2, low scores (< 5) rise by 2, exactly 5 stays.
/// The result is clamped to [0, 10]; unnegated scores pass through.
pub fn adjust_for_negation(raw_score: f64, negated: bool) -> Result<f64, ScorerError> {
    if !(0.0..=10.0).contains(&raw_score) {
        return Err(ScorerError::ScoreOutOfRange(raw_score));
    }
    if !negated {
        return Ok(raw_score);
    }
    let adjusted = if raw_score > 5.0 {
        raw_score - 2.0
    } else if raw_score < 5.0 {
        raw_score + 2.0
    } else {
        raw_score
    };
    Ok(adjusted.clamp(0.0, 10.0))
}

/// Score a remark with the default window and precision.
pub fn score_remark(text: &str, lexicon: &Lexicon) -> RemarkScore {
    score_remark_with(text, lexicon, "", &ScoreOptions::default())
}

/// Score a remark, tagging the result with `remark_ref`.
pub fn score_remark_with(
    text: &str,
    lexicon: &Lexicon,
    remark_ref: &str,
    options: &ScoreOptions,
) -> RemarkScore {
    let mut matches = Vec::new();
    // Remaining negation coverage; 0 means disarmed.
    let mut armed: usize = 0;
    let mut current_sentence = 0usize;

    for token in tokenize_remark(text, lexicon) {
        if token.sentence_index != current_sentence {
            current_sentence = token.sentence_index;
            armed = 0;
        }
        match token.kind {
            TokenKind::Negation => {
                armed = options.negation_window;
            }
            TokenKind::Sentiment(raw_score) => {
                let negated = armed > 0;
                armed = 0;
                let adjusted_score = adjust_for_negation(raw_score, negated)
                    .expect("lexicon scores are validated to [0, 10]");
                matches.push(MatchedWord {
                    token,
                    raw_score,
                    negated,
                    adjusted_score,
                });
            }
            TokenKind::Other => {
                armed = armed.saturating_sub(1);
            }
        }
    }

    let value = if matches.is_empty() {
        None
    } else {
        // Clamp so accumulated rounding can never leave the score scale.
        Some(
            options
                .precision
                .mean(matches.iter().map(|m| m.adjusted_score))
                .clamp(0.0, 10.0),
        )
    };

    RemarkScore {
        value,
        matches,
        remark_ref: remark_ref.to_string(),
    }
}
