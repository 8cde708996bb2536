//! Precision/recall, Fleiss' kappa and moving averages.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub tn: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.tn + self.fp + self.fn_
    }

    /// Tallies (predicted, actual) pairs for a binary task.
    pub fn from_pairs<I: IntoIterator<Item = (bool, bool)>>(pairs: I) -> Self {
        let mut c = Self::default();
        for (predicted, actual) in pairs {
            match (predicted, actual) {
                (true, true) => c.tp += 1,
                (false, false) => c.tn += 1,
                (true, false) => c.fp += 1,
                (false, true) => c.fn_ += 1,
            }
        }
        c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Prf {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

fn ratio(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        0.0
    } else {
        a / b
    }
}

/// Precision, recall and F1; every 0/0 becomes 0.
pub fn prf(c: ConfusionCounts) -> Prf {
    let tp = c.tp as f64;
    let precision = ratio(tp, tp + c.fp as f64);
    let recall = ratio(tp, tp + c.fn_ as f64);
    let f1 = ratio(2.0 * precision * recall, precision + recall);
    Prf {
        precision,
        recall,
        f1,
    }
}

/// Subjects × categories count matrix with a constant number of raters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatingMatrix {
    rows: Vec<Vec<u64>>,
    raters: u64,
}

impl RatingMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::invalid("need at least two subjects"));
        }
        let width = rows[0].len();
        if width == 0 {
            return Err(Error::invalid("need at least one category"));
        }
        let raters: u64 = rows[0].iter().sum();
        if raters < 2 {
            return Err(Error::invalid("need at least two raters per subject"));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(Error::invalid(format!(
                    "subject {i} has {} categories, expected {width}",
                    r.len()
                )));
            }
            let s: u64 = r.iter().sum();
            if s != raters {
                return Err(Error::invalid(format!(
                    "subject {i} has {s} ratings, expected {raters}"
                )));
            }
        }
        Ok(Self { rows, raters })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn raters(&self) -> u64 {
        self.raters
    }
}

pub fn fleiss_kappa(m: &RatingMatrix) -> Result<f64> {
    let n = m.raters as f64;
    let subjects = m.rows.len() as f64;
    let width = m.rows[0].len();
    let mut marginals = vec![0.0; width];
    let mut p_bar = 0.0;
    for row in &m.rows {
        let mut agree = 0.0;
        for (j, &c) in row.iter().enumerate() {
            let c = c as f64;
            marginals[j] += c;
            agree += c * (c - 1.0);
        }
        p_bar += agree / (n * (n - 1.0));
    }
    p_bar /= subjects;
    let pe: f64 = marginals.iter().map(|t| (t / (subjects * n)).powi(2)).sum();
    if pe == 1.0 {
        return if p_bar == 1.0 {
            Ok(1.0)
        } else {
            Err(Error::invalid(
                "expected agreement is 1 but observed agreement is not",
            ))
        };
    }
    Ok((p_bar - pe) / (1.0 - pe))
}

/// Trailing simple moving average: `out[i] = mean(series[i..i + window])`.
pub fn sma(series: &[f64], window: usize) -> Result<Vec<f64>> {
    if window == 0 {
        return Err(Error::invalid("window must be positive"));
    }
    if window > series.len() {
        return Err(Error::invalid(format!(
            "window {window} exceeds series length {}",
            series.len()
        )));
    }
    Ok(series
        .windows(window)
        .map(|w| w.iter().sum::<f64>() / window as f64)
        .collect())
}
