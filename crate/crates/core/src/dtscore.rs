//! Automatic scoring of divergent-thinking answer sets.
//!
//! Answers are clustered into categories by word overlap. A participant's
//! fluency is their answer count, flexibility the number of categories they
//! touch, originality rewards answers from rare categories and elaboration
//! counts prepositional phrases.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sentiment::{split_sentences, word_tokens};
use crate::vecspace::cluster::{hierarchical, mean, Linkage};
use crate::vecspace::{cosine_distance, count_vector, SparseVector, TextNormalizer};

const DEFAULT_PREPOSITIONS: &str = include_str!("../data/prepositions_en.txt");

pub const DEFAULT_K: usize = 250;
pub const DEFAULT_LOOSE_DROP: usize = 50;
pub const CREATIVE_SIGMA: f64 = 0.95;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Answer {
    pub participant: String,
    pub text: String,
    /// Pre-annotated prepositional-phrase count.
    pub pnp: Option<u32>,
}

/// Rows `participant<TAB>answer[<TAB>pnp_count]`.
pub fn parse_answers<R: BufRead>(reader: R) -> Result<Vec<Answer>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::parse(
                i + 1,
                format!(
                    "expected 2 or 3 tab-separated fields, found {}",
                    fields.len()
                ),
            ));
        }
        let participant = fields[0].trim();
        let text = fields[1].trim();
        if participant.is_empty() || text.is_empty() {
            return Err(Error::parse(
                i + 1,
                "participant and answer must be non-empty",
            ));
        }
        let pnp = match fields.get(2).map(|s| s.trim()) {
            None | Some("") => None,
            Some(s) => Some(s.parse::<u32>().map_err(|_| {
                Error::parse(
                    i + 1,
                    format!("pnp count {s:?} is not a non-negative integer"),
                )
            })?),
        };
        out.push(Answer {
            participant: participant.to_string(),
            text: text.to_string(),
            pnp,
        });
    }
    Ok(out)
}

pub fn default_prepositions() -> BTreeSet<String> {
    DEFAULT_PREPOSITIONS
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

/// Prepositions directly followed by a non-preposition in the same sentence.
/// A run like "out of the" therefore counts once.
pub fn count_pnp_heuristic(text: &str, prepositions: &BTreeSet<String>) -> u32 {
    let mut n = 0;
    for s in split_sentences(text) {
        let toks = word_tokens(s);
        for w in toks.windows(2) {
            if prepositions.contains(&w[0]) && !prepositions.contains(&w[1]) {
                n += 1;
            }
        }
    }
    n
}

/// Answer text → category, plus each category's share of all answers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryModel {
    pub categories: HashMap<String, usize>,
    pub p: BTreeMap<usize, f64>,
    /// Distinct answer texts per category, including singleton categories.
    pub members: BTreeMap<usize, Vec<String>>,
    /// Categories that came from dropped loose clusters.
    pub dropped: usize,
}

impl CategoryModel {
    pub fn category(&self, text: &str) -> Option<usize> {
        self.categories.get(text.trim()).copied()
    }

    pub fn probability(&self, text: &str) -> Option<f64> {
        self.category(text).map(|c| self.p[&c])
    }
}

/// Mean cosine distance of the vectors to their centroid.
pub fn looseness(vectors: &[&SparseVector]) -> f64 {
    let c = mean(vectors);
    vectors
        .iter()
        .map(|v| cosine_distance(v, &c).max(0.0))
        .sum::<f64>()
        / vectors.len().max(1) as f64
}

/// Clusters the distinct answer texts (complete linkage, cosine distance)
/// and turns the `loose_drop` loosest clusters into singleton categories.
pub fn categorize(
    answers: &[Answer],
    k: usize,
    loose_drop: usize,
    normalizer: &TextNormalizer,
) -> Result<CategoryModel> {
    if answers.is_empty() {
        return Err(Error::invalid("no answers to categorize"));
    }
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let mut texts: Vec<String> = Vec::new();
    let mut weight: HashMap<String, usize> = HashMap::new();
    for a in answers {
        let t = a.text.trim().to_string();
        let w = weight.entry(t.clone()).or_insert(0);
        if *w == 0 {
            texts.push(t);
        }
        *w += 1;
    }
    let vectors: Vec<SparseVector> = texts
        .iter()
        .map(|t| count_vector(t, normalizer).0)
        .collect();
    let k = k.min(texts.len());
    let dendrogram = hierarchical(&vectors, k, Linkage::Complete)?;
    let clusters = dendrogram.clusters;

    let drop = loose_drop.min(clusters.len() - 1);
    let mut order: Vec<(f64, usize)> = clusters
        .iter()
        .enumerate()
        .map(|(i, c)| {
            (
                looseness(&c.iter().map(|&j| &vectors[j]).collect::<Vec<_>>()),
                i,
            )
        })
        .collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let dropped: BTreeSet<usize> = order.iter().take(drop).map(|&(_, i)| i).collect();

    let mut categories = HashMap::new();
    let mut members: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut next = 0;
    for (i, c) in clusters.iter().enumerate() {
        if dropped.contains(&i) {
            continue;
        }
        for &j in c {
            categories.insert(texts[j].clone(), next);
            members.entry(next).or_default().push(texts[j].clone());
        }
        next += 1;
    }
    let mut singles: Vec<usize> = dropped
        .iter()
        .flat_map(|&i| clusters[i].iter().copied())
        .collect();
    singles.sort_unstable();
    let dropped_count = singles.len();
    for j in singles {
        categories.insert(texts[j].clone(), next);
        members.insert(next, vec![texts[j].clone()]);
        next += 1;
    }

    let total = answers.len() as f64;
    let p = members
        .iter()
        .map(|(&c, ts)| {
            (
                c,
                ts.iter().map(|t| weight[t]).sum::<usize>() as f64 / total,
            )
        })
        .collect();
    Ok(CategoryModel {
        categories,
        p,
        members,
        dropped: dropped_count,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DtScores {
    pub participant: String,
    pub fluency: u32,
    pub flexibility: u32,
    pub originality: f64,
    pub elaboration: u32,
    pub total: f64,
}

/// Scores one participant's answers against a category model.
pub fn score_participant(
    participant: &str,
    answers: &[&Answer],
    model: &CategoryModel,
    prepositions: &BTreeSet<String>,
) -> Result<DtScores> {
    let fluency = answers.len() as u32;
    let mut cats = BTreeSet::new();
    let mut rarity = 0u32;
    let mut elaboration = 0u32;
    for a in answers {
        let c = model.category(&a.text).ok_or_else(|| {
            Error::invalid(format!("answer {:?} is not in the category model", a.text))
        })?;
        cats.insert(c);
        let p = model.p[&c];
        if p < 0.01 {
            rarity += 1;
        }
        if p < 0.05 {
            rarity += 1;
        }
        elaboration += a
            .pnp
            .unwrap_or_else(|| count_pnp_heuristic(&a.text, prepositions))
            .min(2);
    }
    let originality = if fluency == 0 {
        0.0
    } else {
        rarity as f64 / fluency as f64
    };
    let flexibility = cats.len() as u32;
    Ok(DtScores {
        participant: participant.to_string(),
        fluency,
        flexibility,
        originality,
        elaboration,
        total: originality + fluency as f64 + flexibility as f64 + elaboration as f64,
    })
}

/// Scores every participant, in order of first appearance.
pub fn score_all(
    answers: &[Answer],
    model: &CategoryModel,
    prepositions: &BTreeSet<String>,
) -> Result<Vec<DtScores>> {
    let mut order: Vec<&str> = Vec::new();
    let mut by: HashMap<&str, Vec<&Answer>> = HashMap::new();
    for a in answers {
        let list = by.entry(a.participant.as_str()).or_default();
        if list.is_empty() {
            order.push(&a.participant);
        }
        list.push(a);
    }
    order
        .into_iter()
        .map(|p| score_participant(p, &by[p], model, prepositions))
        .collect()
}

/// Creative when the total exceeds mean + 0.95 population standard deviations.
pub fn flag_creative(scores: &[DtScores]) -> Result<Vec<(String, bool)>> {
    if scores.len() < 2 {
        return Err(Error::invalid("need at least two participants"));
    }
    let totals: Vec<f64> = scores.iter().map(|s| s.total).collect();
    let n = totals.len() as f64;
    let mean = totals.iter().sum::<f64>() / n;
    let sd = (totals.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / n).sqrt();
    let cut = mean + CREATIVE_SIGMA * sd;
    Ok(scores
        .iter()
        .map(|s| (s.participant.clone(), s.total > cut))
        .collect())
}
