use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::lexicon::{Lexicon, LexiconEntry};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vecspace::{cosine_similarity, SparseVector};

pub const SYNONYM: &str = "is-same-as";
pub const ANTONYM: &str = "is-opposite-of";

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Derivation {
    Distributional { similarity: f64 },
    Synonym { round: usize },
    Antonym { round: usize },
}

/// Where an added entry came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub word: String,
    pub anchor: String,
    #[serde(flatten)]
    pub derivation: Derivation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Expansion {
    pub lexicon: Lexicon,
    pub added: Vec<Provenance>,
}

/// Adjective → (noun → number of times the adjective precedes it).
pub type Cooccurrence = BTreeMap<String, BTreeMap<String, f64>>;

fn require_seeds(lexicon: &Lexicon) -> Result<()> {
    if lexicon.is_empty() {
        Err(Error::invalid("seed lexicon is empty"))
    } else {
        Ok(())
    }
}

/// Nearest-neighbor expansion in adjective space.
///
/// Each adjective is a vector over the `top_nouns` most frequent nouns. For
/// every seed the `k` most similar unknown adjectives (similarity > 0) are
/// candidates; a candidate copies the scores of the seed it is most similar to.
pub fn expand_distributional(
    lexicon: &Lexicon,
    cooc: &Cooccurrence,
    top_nouns: usize,
    k: usize,
) -> Result<Expansion> {
    require_seeds(lexicon)?;
    let mut noun_freq: BTreeMap<&str, f64> = BTreeMap::new();
    for nouns in cooc.values() {
        for (n, c) in nouns {
            *noun_freq.entry(n).or_default() += c;
        }
    }
    let mut ranked: Vec<(&str, f64)> = noun_freq.into_iter().collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let keep: BTreeSet<&str> = ranked.into_iter().take(top_nouns).map(|(n, _)| n).collect();

    let vectors: BTreeMap<String, SparseVector> = cooc
        .iter()
        .map(|(adj, nouns)| {
            let v = nouns
                .iter()
                .filter(|(n, _)| keep.contains(n.as_str()))
                .map(|(n, c)| (n.as_str(), *c))
                .collect();
            (adj.to_lowercase(), v)
        })
        .collect();
    let (seeds, candidates): (Vec<_>, Vec<_>) =
        vectors.iter().partition(|(w, _)| lexicon.contains(w));

    // candidate -> (similarity, seed)
    let mut best: BTreeMap<&str, (f64, &str)> = BTreeMap::new();
    for (seed, sv) in &seeds {
        let mut near: Vec<(f64, &str)> = candidates
            .iter()
            .map(|(c, cv)| (cosine_similarity(sv, cv), c.as_str()))
            .filter(|(s, _)| *s > 0.0)
            .collect();
        near.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
        for (sim, cand) in near.into_iter().take(k) {
            let slot = best.entry(cand).or_insert((sim, seed.as_str()));
            if sim > slot.0 {
                *slot = (sim, seed.as_str());
            }
        }
    }

    let mut out = lexicon.clone();
    let mut added = Vec::new();
    for (cand, (sim, seed)) in best {
        let anchor = lexicon.get(seed).expect("seed in lexicon");
        let entry = LexiconEntry {
            word: cand.to_string(),
            ..anchor.clone()
        };
        if out.insert_new(entry)? {
            added.push(Provenance {
                word: cand.to_string(),
                anchor: seed.to_string(),
                derivation: Derivation::Distributional { similarity: sim },
            });
        }
    }
    Ok(Expansion {
        lexicon: out,
        added,
    })
}

/// Breadth-first spread over synonym and antonym edges for `iterations`
/// rounds. Synonyms copy the scores, antonyms copy them with negated
/// polarity. Words already in the lexicon are never touched; the first
/// assignment of a new word wins.
pub fn expand_spreading(
    lexicon: &Lexicon,
    relations: &Graph,
    iterations: usize,
) -> Result<Expansion> {
    require_seeds(lexicon)?;
    let mut out = lexicon.clone();
    let mut added = Vec::new();
    let mut frontier: Vec<String> = lexicon.iter().map(|e| e.word.clone()).collect();
    for round in 1..=iterations {
        let mut next = Vec::new();
        for word in &frontier {
            let Some(node) = relations.node(word) else {
                continue;
            };
            let mut edges: Vec<_> = node
                .edges()
                .filter(|e| e.relation == SYNONYM || e.relation == ANTONYM)
                .collect();
            edges.sort_by(|a, b| {
                a.other(word)
                    .cmp(&b.other(word))
                    .then_with(|| a.relation.cmp(&b.relation))
            });
            for e in edges {
                let Some(other) = e.other(word) else { continue };
                let other = other.to_lowercase();
                if out.contains(&other) {
                    continue;
                }
                let from = out.get(word).expect("frontier word has an entry").clone();
                let antonym = e.relation == ANTONYM;
                let entry = LexiconEntry {
                    word: other.clone(),
                    polarity: if antonym {
                        -from.polarity
                    } else {
                        from.polarity
                    },
                    ..from
                };
                out.insert_new(entry)?;
                added.push(Provenance {
                    word: other.clone(),
                    anchor: word.clone(),
                    derivation: if antonym {
                        Derivation::Antonym { round }
                    } else {
                        Derivation::Synonym { round }
                    },
                });
                next.push(other);
            }
        }
        next.sort();
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(Expansion {
        lexicon: out,
        added,
    })
}
