use std::io::BufRead;

use serde::Serialize;

use super::lexicon::Lexicon;
use super::score::{classify_polarity, score_text, Polarity, ScoreOptions};
use crate::error::{Error, Result};
use crate::metrics::{prf, ConfusionCounts, Prf};

#[derive(Debug, Clone, PartialEq)]
pub struct Review {
    pub stars: u8,
    pub text: String,
}

/// Rows `stars<TAB>text`.
pub fn parse_reviews<R: BufRead>(reader: R) -> Result<Vec<Review>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (stars, text) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(i + 1, "expected `stars<TAB>text`"))?;
        let stars = stars
            .trim()
            .parse::<u8>()
            .map_err(|_| Error::parse(i + 1, format!("stars {stars:?} is not an integer")))?;
        out.push(Review {
            stars,
            text: text.to_string(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReviewEvaluation {
    pub counts: ConfusionCounts,
    pub scores: Prf,
}

/// Scores each review and compares with its star rating: 4–5 stars is
/// positive, 1–2 negative. Three-star reviews must be filtered out beforehand.
pub fn evaluate_reviews(
    reviews: &[Review],
    lexicon: &Lexicon,
    opts: &ScoreOptions,
    threshold: f64,
) -> Result<ReviewEvaluation> {
    let mut pairs = Vec::with_capacity(reviews.len());
    for (i, r) in reviews.iter().enumerate() {
        let actual = match r.stars {
            1 | 2 => false,
            4 | 5 => true,
            3 => return Err(Error::invalid(format!("review {} has 3 stars", i + 1))),
            s => {
                return Err(Error::invalid(format!(
                    "review {} has {s} stars, outside 1..=5",
                    i + 1
                )))
            }
        };
        let predicted = classify_polarity(score_text(&r.text, lexicon, opts).polarity, threshold)
            == Polarity::Positive;
        pairs.push((predicted, actual));
    }
    let counts = ConfusionCounts::from_pairs(pairs);
    Ok(ReviewEvaluation {
        counts,
        scores: prf(counts),
    })
}
