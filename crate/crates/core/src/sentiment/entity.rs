use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use chrono::{Datelike, Duration, NaiveDate};
use serde::{Deserialize, Serialize};

use super::lexicon::Lexicon;
use super::score::{score_tokens, sentences, word_tokens, ScoreOptions};
use crate::error::{Error, Result};
use crate::metrics::sma;

/// One news article. `entities`, when given, overrides mention detection
/// for coverage counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArticleRecord {
    pub source: String,
    pub date: NaiveDate,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entities: Option<Vec<String>>,
}

/// One JSON object per line; blank lines are skipped.
pub fn parse_articles<R: BufRead>(reader: R) -> Result<Vec<ArticleRecord>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: ArticleRecord =
            serde_json::from_str(&line).map_err(|e| Error::parse(i + 1, e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct EntityOptions {
    /// Sentences before and after each mention.
    pub window: usize,
    /// Values with smaller magnitude are discarded.
    pub noise_floor: f64,
    pub score: ScoreOptions,
}

impl Default for EntityOptions {
    fn default() -> Self {
        Self {
            window: 2,
            noise_floor: 0.1,
            score: ScoreOptions::default(),
        }
    }
}

fn contains_run(haystack: &[String], needle: &[String]) -> bool {
    !needle.is_empty() && haystack.windows(needle.len()).any(|w| w == needle)
}

fn entity_tokens(entity: &str) -> Result<Vec<String>> {
    let toks = word_tokens(entity);
    if toks.is_empty() {
        Err(Error::invalid(format!(
            "entity {entity:?} has no word characters"
        )))
    } else {
        Ok(toks)
    }
}

/// Whether the text mentions the entity as a contiguous run of tokens.
pub fn mentions(text: &str, entity: &str) -> Result<bool> {
    let needle = entity_tokens(entity)?;
    Ok(contains_run(&word_tokens(text), &needle))
}

/// Applied lexicon values in the sentences around each mention of `entity`.
/// Overlapping windows count each sentence once.
pub fn entity_sentiment(
    text: &str,
    entity: &str,
    lexicon: &Lexicon,
    opts: &EntityOptions,
) -> Result<Vec<f64>> {
    let needle = entity_tokens(entity)?;
    let sents = sentences(text);
    let mut picked = BTreeSet::new();
    for (i, (toks, _, _)) in sents.iter().enumerate() {
        if contains_run(toks, &needle) {
            let lo = i.saturating_sub(opts.window);
            let hi = (i + opts.window).min(sents.len() - 1);
            picked.extend(lo..=hi);
        }
    }
    Ok(picked
        .into_iter()
        .flat_map(|i| {
            let (toks, off, excl) = &sents[i];
            score_tokens(toks, i, *off, *excl, lexicon, &opts.score)
        })
        .map(|m| m.value)
        .filter(|v| v.abs() >= opts.noise_floor)
        .collect())
}

/// Total variation distance between two distributions over the same keys.
pub fn coverage_bias(real: &BTreeMap<String, f64>, fair: &BTreeMap<String, f64>) -> Result<f64> {
    if !real.keys().eq(fair.keys()) {
        return Err(Error::invalid("distributions cover different keys"));
    }
    for (name, d) in [("real", real), ("fair", fair)] {
        if d.values().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::invalid(format!(
                "{name} distribution has a negative or non-finite share"
            )));
        }
        let s: f64 = d.values().sum();
        if (s - 1.0).abs() > 1e-6 {
            return Err(Error::invalid(format!(
                "{name} distribution sums to {s}, not 1"
            )));
        }
    }
    Ok(0.5 * real.iter().map(|(k, r)| (r - fair[k]).abs()).sum::<f64>())
}

fn article_mentions(a: &ArticleRecord, entity: &str) -> Result<bool> {
    match &a.entities {
        Some(list) => Ok(list.iter().any(|e| e == entity)),
        None => mentions(&a.text, entity),
    }
}

/// Per source: the share of entity mentions that go to each entity. Sources
/// mentioning none of the entities are left out.
pub fn coverage(
    articles: &[ArticleRecord],
    entities: &[String],
) -> Result<BTreeMap<String, BTreeMap<String, f64>>> {
    let mut counts: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
    for a in articles {
        let row = counts
            .entry(a.source.clone())
            .or_insert_with(|| entities.iter().map(|e| (e.clone(), 0.0)).collect());
        for e in entities {
            if article_mentions(a, e)? {
                *row.get_mut(e).unwrap() += 1.0;
            }
        }
    }
    Ok(counts
        .into_iter()
        .filter_map(|(src, row)| {
            let total: f64 = row.values().sum();
            (total > 0.0).then(|| (src, row.into_iter().map(|(e, c)| (e, c / total)).collect()))
        })
        .collect())
}

/// Coverage bias of every source against the fair distribution.
pub fn coverage_report(
    articles: &[ArticleRecord],
    fair: &BTreeMap<String, f64>,
) -> Result<BTreeMap<String, f64>> {
    let entities: Vec<String> = fair.keys().cloned().collect();
    coverage(articles, &entities)?
        .into_iter()
        .map(|(src, real)| Ok((src, coverage_bias(&real, fair)?)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StatementBias {
    pub positive_share: f64,
    pub negative_share: f64,
    pub assessments: usize,
}

/// Positive and negative shares of the assessments linked to each entity.
pub fn statement_bias(
    articles: &[ArticleRecord],
    entities: &[String],
    lexicon: &Lexicon,
    opts: &EntityOptions,
) -> Result<BTreeMap<String, StatementBias>> {
    let mut out = BTreeMap::new();
    for e in entities {
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut total = 0usize;
        for a in articles {
            for v in entity_sentiment(&a.text, e, lexicon, opts)? {
                total += 1;
                if v > 0.0 {
                    pos += 1;
                } else if v < 0.0 {
                    neg += 1;
                }
            }
        }
        let share = |n: usize| {
            if total == 0 {
                0.0
            } else {
                n as f64 / total as f64
            }
        };
        out.insert(
            e.clone(),
            StatementBias {
                positive_share: share(pos),
                negative_share: share(neg),
                assessments: total,
            },
        );
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timeline {
    /// Monday of each week that has at least one assessment.
    pub weeks: Vec<NaiveDate>,
    pub means: Vec<f64>,
    /// Trailing moving average of `means`.
    pub smoothed: Vec<f64>,
}

pub fn week_start(d: NaiveDate) -> NaiveDate {
    d - Duration::days(d.weekday().num_days_from_monday() as i64)
}

/// Weekly mean sentiment for one entity, smoothed with a moving average.
pub fn sentiment_timeline(
    articles: &[ArticleRecord],
    entity: &str,
    lexicon: &Lexicon,
    opts: &EntityOptions,
    smoothing: usize,
) -> Result<Timeline> {
    let mut weekly: BTreeMap<NaiveDate, (f64, usize)> = BTreeMap::new();
    for a in articles {
        for v in entity_sentiment(&a.text, entity, lexicon, opts)? {
            let slot = weekly.entry(week_start(a.date)).or_default();
            slot.0 += v;
            slot.1 += 1;
        }
    }
    let weeks: Vec<NaiveDate> = weekly.keys().copied().collect();
    let means: Vec<f64> = weekly.values().map(|(s, n)| s / *n as f64).collect();
    let smoothed = sma(&means, smoothing)?;
    Ok(Timeline {
        weeks,
        means,
        smoothed,
    })
}
