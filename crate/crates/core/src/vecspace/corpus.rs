use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use serde::Serialize;

use super::text::TextNormalizer;
use super::vector::SparseVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Document {
    pub id: String,
    pub label: Option<String>,
    pub vector: SparseVector,
    pub token_count: usize,
}

impl Document {
    pub fn new(
        id: impl Into<String>,
        label: Option<String>,
        text: &str,
        normalizer: &TextNormalizer,
    ) -> Self {
        let mut doc = vectorize(text, normalizer);
        doc.id = id.into();
        doc.label = label;
        doc
    }
}

/// Raw token counts after normalization.
pub fn count_vector(text: &str, normalizer: &TextNormalizer) -> (SparseVector, usize) {
    let tokens = normalizer.normalize(text);
    let mut counts: BTreeMap<String, f64> = BTreeMap::new();
    for t in &tokens {
        *counts.entry(t.clone()).or_default() += 1.0;
    }
    (counts.into_iter().collect(), tokens.len())
}

/// Relative-frequency bag of words.
pub fn vectorize(text: &str, normalizer: &TextNormalizer) -> Document {
    let (counts, total) = count_vector(text, normalizer);
    let vector = counts.scaled(if total == 0 { 0.0 } else { 1.0 / total as f64 });
    Document {
        id: String::new(),
        label: None,
        vector,
        token_count: total,
    }
}

/// In-place tf-idf: each weight is multiplied by `ln(N / df)`, or left as is
/// when that factor is 0.
pub fn apply_tfidf(vectors: &mut [SparseVector]) {
    let mut df: BTreeMap<String, f64> = BTreeMap::new();
    for v in vectors.iter() {
        for f in v.features() {
            *df.entry(f.to_string()).or_default() += 1.0;
        }
    }
    let n = vectors.len() as f64;
    for v in vectors.iter_mut() {
        v.map_weights(|f, w| {
            let idf = (n / df[f]).ln();
            w * if idf == 0.0 { 1.0 } else { idf }
        });
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Weighting {
    #[default]
    Tf,
    TfIdf,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    documents: Vec<Document>,
    weighting: Weighting,
    df: BTreeMap<String, usize>,
}

impl Corpus {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_documents(docs: impl IntoIterator<Item = Document>) -> Self {
        let mut c = Self::new();
        for d in docs {
            c.append(d);
        }
        c
    }

    /// One document per line: `label<TAB>text`, or bare text for an
    /// unlabeled document. Document ids are 1-based line numbers.
    pub fn parse<R: BufRead>(reader: R, normalizer: &TextNormalizer) -> Result<Self> {
        let mut c = Self::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let (label, text) = match line.split_once('\t') {
                Some((l, t)) => {
                    let l = l.trim();
                    if l.is_empty() {
                        return Err(Error::parse(i + 1, "empty label before tab"));
                    }
                    (Some(l.to_string()), t)
                }
                None => (None, line.as_str()),
            };
            c.append(Document::new((i + 1).to_string(), label, text, normalizer));
        }
        Ok(c)
    }

    pub fn append(&mut self, doc: Document) {
        for f in doc.vector.features() {
            *self.df.entry(f.to_string()).or_default() += 1;
        }
        self.documents.push(doc);
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn weighting(&self) -> Weighting {
        self.weighting
    }

    pub fn df(&self, feature: &str) -> usize {
        self.df.get(feature).copied().unwrap_or(0)
    }

    pub fn features(&self) -> impl Iterator<Item = &str> {
        self.df.keys().map(String::as_str)
    }

    pub fn vectors(&self) -> Vec<SparseVector> {
        self.documents.iter().map(|d| d.vector.clone()).collect()
    }

    /// Reweights the document vectors by tf-idf. Applying it twice is a no-op.
    pub fn apply_tfidf(&mut self) {
        if self.weighting == Weighting::TfIdf {
            return;
        }
        let mut vs = self.vectors();
        apply_tfidf(&mut vs);
        for (d, v) in self.documents.iter_mut().zip(vs) {
            d.vector = v;
        }
        self.weighting = Weighting::TfIdf;
    }

    fn labels(&self) -> Result<Vec<&str>> {
        self.documents
            .iter()
            .map(|d| {
                d.label
                    .as_deref()
                    .ok_or_else(|| Error::invalid(format!("document {} has no label", d.id)))
            })
            .collect()
    }

    pub fn information_gain(&self, feature: &str) -> Result<f64> {
        if self.documents.is_empty() {
            return Err(Error::invalid("information gain of an empty corpus"));
        }
        let labels = self.labels()?;
        let classes: BTreeSet<&str> = labels.iter().copied().collect();
        let classes: Vec<&str> = classes.into_iter().collect();
        let class_of = |l: &str| classes.binary_search(&l).unwrap();

        let mut all = vec![0.0; classes.len()];
        let mut present = vec![0.0; classes.len()];
        let mut absent = vec![0.0; classes.len()];
        for (d, l) in self.documents.iter().zip(&labels) {
            let c = class_of(l);
            all[c] += 1.0;
            if d.vector.contains(feature) {
                present[c] += 1.0;
            } else {
                absent[c] += 1.0;
            }
        }
        let n = self.documents.len() as f64;
        let mut ig = entropy(&all)?;
        for part in [&present, &absent] {
            let size: f64 = part.iter().sum();
            if size > 0.0 {
                ig -= size / n * entropy(part)?;
            }
        }
        // rounding can leave a tiny negative residue
        Ok(ig.max(0.0))
    }

    /// The `top` features by information gain, ties broken alphabetically.
    pub fn select_features(&self, top: usize) -> Result<Vec<String>> {
        let mut scored = self
            .features()
            .map(|f| Ok((f.to_string(), self.information_gain(f)?)))
            .collect::<Result<Vec<_>>>()?;
        scored.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        Ok(scored.into_iter().take(top).map(|(f, _)| f).collect())
    }
}

/// Normalized Shannon entropy with log base `p.len()`; zero terms are skipped.
pub fn entropy(p: &[f64]) -> Result<f64> {
    if p.iter().any(|x| *x < 0.0 || !x.is_finite()) {
        return Err(Error::invalid("entropy needs finite non-negative values"));
    }
    let s: f64 = p.iter().sum();
    if s == 0.0 {
        return Err(Error::invalid("entropy needs at least one positive value"));
    }
    if p.len() < 2 {
        return Ok(0.0);
    }
    let base = (p.len() as f64).ln();
    Ok(-p
        .iter()
        .filter(|&&x| x != 0.0)
        .map(|&x| {
            let q = x / s;
            q * q.ln() / base
        })
        .sum::<f64>())
}
