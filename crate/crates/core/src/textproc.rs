//! Sentence splitting, token normalization, and lexicon classification.
//!
//! Remarks are processed word by word: each whitespace-delimited fragment is
//! stripped of leading/trailing punctuation, lowercased, and classified
//! against the lexicon. Sentence boundaries matter because negation scope
//! never crosses them.

use crate::lexicon::{Lexicon, WordClass};

/// Characters that end a sentence.
const SENTENCE_TERMINATORS: [char; 4] = ['.', '!', '?', ';'];

/// Classification of a token for the scoring pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TokenKind {
    Sentiment(f64),
    Negation,
    Other,
}

/// One normalized word with its provenance in the remark.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    /// The whitespace-delimited fragment as written.
    pub surface: String,
    /// Lowercased form with leading/trailing non-alphanumerics stripped.
    /// Never empty; intra-word apostrophes and hyphens survive.
    pub normalized: String,
    /// 0-based sentence ordinal within the remark.
    pub sentence_index: usize,
    /// 0-based ordinal among the emitted tokens of the sentence.
    pub position: usize,
    pub kind: TokenKind,
}

/// Split a remark into sentences on `.` `!` `?` `;`.
///
/// Terminators are dropped; a trailing unterminated fragment is its own
/// sentence. Fragments that are empty after trimming (as between the dots of
/// an ellipsis) are skipped.
pub fn split_sentences(text: &str) -> Vec<&str> {
    text.split(SENTENCE_TERMINATORS)
        .map(str::trim)
        .filter(|fragment| !fragment.is_empty())
        .collect()
}

/// Tokenize one sentence, classifying each word against the lexicon.
///
/// Splits on whitespace, strips leading/trailing non-alphanumeric characters,
/// lowercases, and drops fragments with nothing left. Emitted tokens carry
/// contiguous positions and the given sentence index.
pub fn tokenize_sentence(sentence: &str, sentence_index: usize, lexicon: &Lexicon) -> Vec<Token> {
    let mut tokens = Vec::new();
    for fragment in sentence.split_whitespace() {
        let stripped = fragment.trim_matches(|c: char| !c.is_alphanumeric());
        if stripped.is_empty() {
            continue;
        }
        let normalized = stripped.to_lowercase();
        let kind = match lexicon.lookup(&normalized) {
            WordClass::Sentiment(score) => TokenKind::Sentiment(score),
            WordClass::Negation => TokenKind::Negation,
            WordClass::Unknown => TokenKind::Other,
        };
        tokens.push(Token {
            surface: fragment.to_string(),
            normalized,
            sentence_index,
            position: tokens.len(),
            kind,
        });
    }
    tokens
}

/// Tokenize a single sentence outside any remark context (sentence index 0).
pub fn tokenize(sentence: &str, lexicon: &Lexicon) -> Vec<Token> {
    tokenize_sentence(sentence, 0, lexicon)
}

/// Split a remark into sentences and tokenize them all, in document order.
pub fn tokenize_remark(text: &str, lexicon: &Lexicon) -> Vec<Token> {
    split_sentences(text)
        .into_iter()
        .enumerate()
        .flat_map(|(index, sentence)| tokenize_sentence(sentence, index, lexicon))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn reference() -> Lexicon {
        Lexicon::reference()
    }

    #[test]
    fn splits_three_sentences() {
        let text = "She is hardworking student. She gives good response in the class and is a bright student. She is very diligent and obedient.";
        let sentences = split_sentences(text);
        assert_eq!(sentences.len(), 3);
        assert_eq!(sentences[0], "She is hardworking student");
        assert_eq!(sentences[2], "She is very diligent and obedient");
    }

    #[test]
    fn empty_input_has_no_sentences() {
        assert!(split_sentences("").is_empty());
        assert!(split_sentences("   ").is_empty());
    }

    #[test]
    fn unterminated_fragment_is_a_sentence() {
        assert_eq!(split_sentences("great"), vec!["great"]);
        assert_eq!(split_sentences("Good. great"), vec!["Good", "great"]);
    }

    #[test]
    fn all_terminators_split() {
        assert_eq!(
            split_sentences("a. b! c? d; e"),
            vec!["a", "b", "c", "d", "e"]
        );
    }

    #[test]
    fn ellipsis_fragments_are_skipped() {
        assert!(split_sentences("...").is_empty());
        assert_eq!(split_sentences("Fine... really"), vec!["Fine", "really"]);
    }

    #[test]
    fn classifies_negation_and_sentiment_words() {
        let tokens = tokenize(
            "he is not regular in the class and is misbehaving at times",
            &reference(),
        );
        let kind_of = |word: &str| {
            tokens
                .iter()
                .find(|t| t.normalized == word)
                .map(|t| t.kind)
                .unwrap()
        };
        assert_eq!(kind_of("not"), TokenKind::Negation);
        assert_eq!(kind_of("regular"), TokenKind::Sentiment(6.0));
        assert_eq!(kind_of("misbehaving"), TokenKind::Sentiment(2.0));
        assert!(tokens
            .iter()
            .filter(|t| !["not", "regular", "misbehaving"].contains(&t.normalized.as_str()))
            .all(|t| t.kind == TokenKind::Other));
    }

    #[test]
    fn strips_punctuation_and_lowercases() {
        let tokens = tokenize("GOOD!!!", &reference());
        assert_eq!(tokens.len(), 1);
        assert_eq!(tokens[0].surface, "GOOD!!!");
        assert_eq!(tokens[0].normalized, "good");
        assert_eq!(tokens[0].kind, TokenKind::Sentiment(7.0));
    }

    #[test]
    fn pure_punctuation_yields_no_tokens() {
        assert!(tokenize("...", &reference()).is_empty());
        assert!(tokenize("-- !! ??", &reference()).is_empty());
    }

    #[test]
    fn intra_word_apostrophes_survive() {
        let lex = Lexicon::load("good\t7\nisn't\tNEG\n").unwrap();
        let tokens = tokenize("he isn't good", &lex);
        assert_eq!(tokens[1].normalized, "isn't");
        assert_eq!(tokens[1].kind, TokenKind::Negation);
    }

    #[test]
    fn edge_apostrophes_are_stripped() {
        let tokens = tokenize("'good'", &reference());
        assert_eq!(tokens[0].normalized, "good");
    }

    #[test]
    fn hyphenated_words_stay_whole() {
        let tokens = tokenize("hard-working student", &reference());
        assert_eq!(tokens[0].normalized, "hard-working");
        assert_eq!(tokens[0].kind, TokenKind::Other);
    }

    #[test]
    fn remark_tokens_carry_sentence_and_position() {
        let tokens = tokenize_remark("Good student. Not regular.", &reference());
        let coords: Vec<(usize, usize, &str)> = tokens
            .iter()
            .map(|t| (t.sentence_index, t.position, t.normalized.as_str()))
            .collect();
        assert_eq!(
            coords,
            vec![
                (0, 0, "good"),
                (0, 1, "student"),
                (1, 0, "not"),
                (1, 1, "regular"),
            ]
        );
    }

    #[test]
    fn positions_stay_contiguous_past_dropped_fragments() {
        let tokens = tokenize("good -- regular", &reference());
        assert_eq!(tokens.len(), 2);
        assert_eq!(tokens[0].position, 0);
        assert_eq!(tokens[1].position, 1);
    }

    proptest! {
        #[test]
        fn case_insensitive_over_ascii(text in "[a-zA-Z,' .!?;-]{0,60}") {
            let lex = reference();
            let upper: Vec<String> = tokenize_remark(&text.to_uppercase(), &lex)
                .into_iter()
                .map(|t| t.normalized)
                .collect();
            let lower: Vec<String> = tokenize_remark(&text, &lex)
                .into_iter()
                .map(|t| t.normalized)
                .collect();
            prop_assert_eq!(upper, lower);
        }

        #[test]
        fn kinds_agree_with_lookup(text in "[a-zA-Z,' .!?;-]{0,60}") {
            let lex = reference();
            for token in tokenize_remark(&text, &lex) {
                let expected = match lex.lookup(&token.normalized) {
                    WordClass::Sentiment(s) => TokenKind::Sentiment(s),
                    WordClass::Negation => TokenKind::Negation,
                    WordClass::Unknown => TokenKind::Other,
                };
                prop_assert_eq!(token.kind, expected);
                prop_assert!(!token.normalized.is_empty());
                prop_assert!(!token.normalized.chars().any(char::is_whitespace));
            }
        }
    }
}
