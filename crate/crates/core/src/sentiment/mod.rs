//! Lexicon-based sentiment analysis.
//!
//! Scoring follows a subjectivity lexicon of adjectives and adverbs: each
//! match contributes its polarity, intensifiers multiply the next word,
//! negators flip it. On top of that sit entity-windowed assessments for
//! news articles, coverage and statement bias, review evaluation and two
//! lexicon expansion strategies.

pub mod entity;
pub mod expand;
pub mod lexicon;
pub mod reviews;
pub mod score;

pub use entity::{
    coverage, coverage_bias, coverage_report, entity_sentiment, mentions, parse_articles,
    sentiment_timeline, statement_bias, ArticleRecord, EntityOptions, StatementBias, Timeline,
};
pub use expand::{
    expand_distributional, expand_spreading, Cooccurrence, Derivation, Expansion, Provenance,
};
pub use lexicon::{Lexicon, LexiconEntry};
pub use reviews::{evaluate_reviews, parse_reviews, Review, ReviewEvaluation};
pub use score::{
    classify_polarity, score_text, split_sentences, word_tokens, Match, Polarity, ScoreOptions,
    SentimentScore, DEFAULT_NEGATORS, DEFAULT_THRESHOLD,
};
