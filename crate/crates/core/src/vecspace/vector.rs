use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Feature → weight map. Zero weights are never stored.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SparseVector(BTreeMap<String, f64>);

impl SparseVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets a weight; a weight of exactly zero removes the feature.
    pub fn set(&mut self, feature: impl Into<String>, weight: f64) {
        let feature = feature.into();
        if weight == 0.0 {
            self.0.remove(&feature);
        } else {
            self.0.insert(feature, weight);
        }
    }

    pub fn get(&self, feature: &str) -> f64 {
        self.0.get(feature).copied().unwrap_or(0.0)
    }

    pub fn contains(&self, feature: &str) -> bool {
        self.0.contains_key(feature)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn features(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn norm(&self) -> f64 {
        self.0.values().map(|w| w * w).sum::<f64>().sqrt()
    }

    pub fn sum(&self) -> f64 {
        self.0.values().sum()
    }

    pub fn dot(&self, other: &SparseVector) -> f64 {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().map(|(f, w)| w * large.get(f)).sum()
    }

    pub fn scaled(&self, factor: f64) -> SparseVector {
        let mut out = SparseVector::new();
        for (f, w) in self.iter() {
            out.set(f, w * factor);
        }
        out
    }

    /// Unit-length copy; the zero vector stays zero.
    pub fn normalized(&self) -> SparseVector {
        let n = self.norm();
        if n == 0.0 {
            self.clone()
        } else {
            self.scaled(1.0 / n)
        }
    }

    pub(crate) fn map_weights(&mut self, mut f: impl FnMut(&str, f64) -> f64) {
        let old = std::mem::take(&mut self.0);
        for (k, v) in old {
            let w = f(&k, v);
            self.set(k, w);
        }
    }
}

impl<S: Into<String>> FromIterator<(S, f64)> for SparseVector {
    fn from_iter<I: IntoIterator<Item = (S, f64)>>(iter: I) -> Self {
        let mut v = SparseVector::new();
        for (f, w) in iter {
            v.set(f, w);
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Cosine,
    Euclidean,
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cosine" | "cosine-similarity" => Ok(Metric::Cosine),
            "euclidean" => Ok(Metric::Euclidean),
            _ => Err(Error::invalid(format!("unknown metric {s:?}"))),
        }
    }
}

/// Dot product over the product of norms; 0 when either vector is zero.
pub fn cosine_similarity(a: &SparseVector, b: &SparseVector) -> f64 {
    let denom = a.norm() * b.norm();
    if denom == 0.0 {
        0.0
    } else {
        a.dot(b) / denom
    }
}

pub fn cosine_distance(a: &SparseVector, b: &SparseVector) -> f64 {
    1.0 - cosine_similarity(a, b)
}

pub fn euclidean(a: &SparseVector, b: &SparseVector) -> f64 {
    let mut sq = 0.0;
    for (f, w) in a.iter() {
        let d = w - b.get(f);
        sq += d * d;
    }
    for (f, w) in b.iter() {
        if !a.contains(f) {
            sq += w * w;
        }
    }
    sq.sqrt()
}

/// Cosine *similarity* or Euclidean *distance*, depending on the metric.
pub fn distance(a: &SparseVector, b: &SparseVector, metric: Metric) -> f64 {
    match metric {
        Metric::Cosine => cosine_similarity(a, b),
        Metric::Euclidean => euclidean(a, b),
    }
}
