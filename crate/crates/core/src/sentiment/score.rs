use std::collections::BTreeSet;

use serde::Serialize;

use super::lexicon::Lexicon;

pub const DEFAULT_NEGATORS: [&str; 3] = ["niet", "nooit", "geen"];
pub const DEFAULT_THRESHOLD: f64 = 0.1;

/// Scores are rounded to this many decimals so that products such as
/// `1.6 * -0.4` come out as the decimal value a reader expects.
const DECIMALS: i32 = 12;

fn round(x: f64) -> f64 {
    let p = 10f64.powi(DECIMALS);
    let r = (x * p).round() / p;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Splits after `.`, `!` or `?` when followed by whitespace or the end of text.
pub fn split_sentences(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if matches!(c, '.' | '!' | '?') {
            let at_boundary = chars.peek().is_none_or(|&(_, n)| n.is_whitespace());
            if at_boundary {
                let end = i + c.len_utf8();
                let s = text[start..end].trim();
                if !s.is_empty() {
                    out.push(s);
                }
                start = end;
            }
        }
    }
    let rest = text[start..].trim();
    if !rest.is_empty() {
        out.push(rest);
    }
    out
}

/// Lowercased alphabetic runs.
pub fn word_tokens(sentence: &str) -> Vec<String> {
    sentence
        .split(|c: char| !c.is_alphabetic())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

fn ends_with_exclamation(sentence: &str) -> bool {
    sentence
        .trim_end_matches(|c: char| {
            c.is_whitespace() || matches!(c, '"' | '\'' | '”' | '’' | ')' | '»')
        })
        .ends_with('!')
}

#[derive(Debug, Clone)]
pub struct ScoreOptions {
    pub negators: BTreeSet<String>,
    /// How many tokens before a scored word a negator may occur.
    pub negation_window: usize,
    /// Multiplier for words in a sentence ending in `!`.
    pub exclamation_boost: Option<f64>,
    /// When false every word is scored on its own polarity.
    pub use_intensity: bool,
}

impl Default for ScoreOptions {
    fn default() -> Self {
        Self {
            negators: DEFAULT_NEGATORS.iter().map(|s| s.to_string()).collect(),
            negation_window: 2,
            exclamation_boost: None,
            use_intensity: true,
        }
    }
}

impl ScoreOptions {
    pub fn with_negators<I: IntoIterator<Item = S>, S: Into<String>>(mut self, extra: I) -> Self {
        self.negators
            .extend(extra.into_iter().map(|s| s.into().to_lowercase()));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Match {
    pub sentence: usize,
    /// Token position within the whole text.
    pub token: usize,
    pub word: String,
    pub value: f64,
    pub subjectivity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SentimentScore {
    pub polarity: f64,
    pub subjectivity: f64,
    pub matches: Vec<Match>,
}

impl SentimentScore {
    fn from_matches(matches: Vec<Match>) -> Self {
        if matches.is_empty() {
            return Self {
                polarity: 0.0,
                subjectivity: 0.0,
                matches,
            };
        }
        let n = matches.len() as f64;
        let polarity = matches.iter().map(|m| m.value).sum::<f64>() / n;
        let subjectivity = matches.iter().map(|m| m.subjectivity).sum::<f64>() / n;
        Self {
            polarity: round(polarity.clamp(-1.0, 1.0)),
            subjectivity: round(subjectivity.clamp(0.0, 1.0)),
            matches,
        }
    }
}

/// Applied values for one sentence. `sentence` and `offset` only label the matches.
pub(crate) fn score_tokens(
    tokens: &[String],
    sentence: usize,
    offset: usize,
    exclaimed: bool,
    lexicon: &Lexicon,
    opts: &ScoreOptions,
) -> Vec<Match> {
    let mut out = Vec::new();
    let mut multiplier = 1.0;
    for (j, tok) in tokens.iter().enumerate() {
        let Some(entry) = lexicon.get(tok) else {
            multiplier = 1.0;
            continue;
        };
        let next_scored = tokens.get(j + 1).is_some_and(|t| lexicon.contains(t));
        if opts.use_intensity && entry.intensity != 1.0 && next_scored {
            multiplier *= entry.intensity;
            continue;
        }
        let mut value = if opts.use_intensity {
            multiplier * entry.polarity
        } else {
            entry.polarity
        };
        multiplier = 1.0;
        let negated = tokens[j.saturating_sub(opts.negation_window)..j]
            .iter()
            .any(|t| opts.negators.contains(t));
        if negated {
            value = -value;
        }
        if exclaimed {
            if let Some(b) = opts.exclamation_boost {
                value *= b;
            }
        }
        out.push(Match {
            sentence,
            token: offset + j,
            word: tok.clone(),
            value: round(value.clamp(-1.0, 1.0)),
            subjectivity: entry.subjectivity,
        });
    }
    out
}

/// Tokenized sentences with their global token offsets.
pub(crate) fn sentences(text: &str) -> Vec<(Vec<String>, usize, bool)> {
    let mut offset = 0;
    split_sentences(text)
        .into_iter()
        .map(|s| {
            let toks = word_tokens(s);
            let here = offset;
            offset += toks.len();
            (toks, here, ends_with_exclamation(s))
        })
        .collect()
}

pub fn score_text(text: &str, lexicon: &Lexicon, opts: &ScoreOptions) -> SentimentScore {
    let matches = sentences(text)
        .iter()
        .enumerate()
        .flat_map(|(i, (toks, off, excl))| score_tokens(toks, i, *off, *excl, lexicon, opts))
        .collect();
    SentimentScore::from_matches(matches)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

pub fn classify_polarity(polarity: f64, threshold: f64) -> Polarity {
    if polarity >= threshold {
        Polarity::Positive
    } else {
        Polarity::Negative
    }
}
