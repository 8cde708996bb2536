use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::vector::{cosine_similarity, SparseVector};
use crate::error::{Error, Result};

/// Lazy k-nearest-neighbor classifier over labeled vectors.
#[derive(Debug, Clone)]
pub struct KnnClassifier {
    model: Vec<(String, SparseVector)>,
}

impl KnnClassifier {
    pub fn new(training: Vec<(String, SparseVector)>) -> Result<Self> {
        if training.is_empty() {
            return Err(Error::invalid("kNN needs at least one training document"));
        }
        Ok(Self { model: training })
    }

    pub fn training(&self) -> &[(String, SparseVector)] {
        &self.model
    }

    /// Cosine similarity to every training vector, in training order.
    pub fn project(&self, query: &SparseVector) -> Vec<(f64, &str)> {
        self.model
            .iter()
            .map(|(label, v)| (cosine_similarity(query, v), label.as_str()))
            .collect()
    }

    /// Similarity-weighted vote among the `k` nearest training vectors.
    /// `None` when no neighbor has positive similarity.
    pub fn classify(&self, query: &SparseVector, k: usize) -> Result<Option<String>> {
        if k < 1 {
            return Err(Error::invalid("k must be at least 1"));
        }
        let mut scored = self.project(query);
        scored.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(b.1)));
        let mut votes: BTreeMap<&str, f64> = BTreeMap::new();
        for &(sim, label) in scored.iter().rev().take(k) {
            *votes.entry(label).or_default() += sim;
        }
        Ok(votes
            .into_iter()
            .filter(|(_, s)| *s > 0.0)
            .max_by(|a, b| match a.1.total_cmp(&b.1) {
                Ordering::Equal => a.0.cmp(b.0),
                o => o,
            })
            .map(|(l, _)| l.to_string()))
    }
}
