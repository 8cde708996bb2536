use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::BufRead;

use crate::error::{Error, Result};

const DEFAULT_STOPWORDS: &str = include_str!("../../data/stopwords_en.txt");
const DEFAULT_LEMMAS: &str = include_str!("../../data/lemmas_en.tsv");

/// Splits on every non-alphabetic character.
pub fn tokenize(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| !c.is_alphabetic())
        .filter(|t| !t.is_empty())
}

/// Lowercasing, lemma mapping and stopword removal.
///
/// Lemma chains (`a → b → c`) are resolved when the normalizer is built, so
/// every lemma maps to itself and normalizing twice changes nothing.
#[derive(Debug, Clone, Default)]
pub struct TextNormalizer {
    lowercase: bool,
    stopwords: HashSet<String>,
    lemmas: HashMap<String, String>,
}

impl TextNormalizer {
    pub fn new<S, L>(lowercase: bool, stopwords: S, lemmas: L) -> Result<Self>
    where
        S: IntoIterator<Item = String>,
        L: IntoIterator<Item = (String, String)>,
    {
        let fold = |s: String| if lowercase { s.to_lowercase() } else { s };
        let mut stop = HashSet::new();
        for w in stopwords {
            check_word(&w)?;
            stop.insert(fold(w));
        }
        let mut raw = BTreeMap::new();
        for (w, l) in lemmas {
            check_word(&w)?;
            check_word(&l)?;
            let (w, l) = (fold(w), fold(l));
            if w != l {
                raw.insert(w, l);
            }
        }
        Ok(Self {
            lowercase,
            stopwords: stop,
            lemmas: resolve_chains(&raw),
        })
    }

    /// No stopwords and no lemmas; tokens are only lowercased.
    pub fn plain() -> Self {
        Self {
            lowercase: true,
            ..Self::default()
        }
    }

    /// The bundled English stopword list and lemma table.
    pub fn english() -> Self {
        let stop = parse_stopwords(DEFAULT_STOPWORDS.as_bytes()).expect("bundled stopwords");
        let lemmas = parse_lemmas(DEFAULT_LEMMAS.as_bytes()).expect("bundled lemmas");
        Self::new(true, stop, lemmas).expect("bundled data is valid")
    }

    pub fn lowercase(&self) -> bool {
        self.lowercase
    }

    pub fn is_stopword(&self, w: &str) -> bool {
        self.stopwords.contains(w)
    }

    pub fn lemma<'a>(&'a self, w: &'a str) -> &'a str {
        self.lemmas.get(w).map_or(w, String::as_str)
    }

    pub fn normalize(&self, text: &str) -> Vec<String> {
        tokenize(text)
            .filter_map(|tok| {
                let surface = if self.lowercase {
                    tok.to_lowercase()
                } else {
                    tok.to_string()
                };
                if self.stopwords.contains(&surface) {
                    return None;
                }
                let lemma = self.lemma(&surface);
                if self.stopwords.contains(lemma) {
                    return None;
                }
                Some(lemma.to_string())
            })
            .collect()
    }
}

fn check_word(w: &str) -> Result<()> {
    if w.is_empty() || !w.chars().all(char::is_alphabetic) {
        Err(Error::invalid(format!(
            "{w:?} is not a single alphabetic word"
        )))
    } else {
        Ok(())
    }
}

/// Follows every chain to its end. A cycle collapses onto its smallest word.
fn resolve_chains(raw: &BTreeMap<String, String>) -> HashMap<String, String> {
    let mut out = HashMap::new();
    for start in raw.keys() {
        let mut seen = vec![start.as_str()];
        let mut cur = start.as_str();
        let end = loop {
            match raw.get(cur) {
                None => break cur.to_string(),
                Some(next) => {
                    if let Some(pos) = seen.iter().position(|s| s == next) {
                        break seen[pos..].iter().min().unwrap().to_string();
                    }
                    seen.push(next);
                    cur = next;
                }
            }
        };
        if &end != start {
            out.insert(start.clone(), end);
        }
    }
    out
}

/// One word per line; blank lines and `#` comments are ignored.
pub fn parse_stopwords<R: BufRead>(reader: R) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let w = line.trim();
        if !w.is_empty() && !w.starts_with('#') {
            out.push(w.to_string());
        }
    }
    Ok(out)
}

/// `word<whitespace>lemma` per line.
pub fn parse_lemmas<R: BufRead>(reader: R) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = t.split_whitespace().collect();
        match parts.as_slice() {
            [w, l] => out.push((w.to_string(), l.to_string())),
            _ => return Err(Error::parse(i + 1, "expected `word lemma`")),
        }
    }
    Ok(out)
}
