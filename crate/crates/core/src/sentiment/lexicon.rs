use std::collections::BTreeMap;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LexiconEntry {
    pub word: String,
    pub polarity: f64,
    pub subjectivity: f64,
    /// Multiplier applied to the next scored word; 1 means "not an intensifier".
    pub intensity: f64,
    pub language: Option<String>,
}

impl LexiconEntry {
    pub fn new(word: impl Into<String>, polarity: f64, subjectivity: f64, intensity: f64) -> Self {
        Self {
            word: word.into(),
            polarity,
            subjectivity,
            intensity,
            language: None,
        }
    }

    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.word.is_empty() {
            return Err("empty word form".into());
        }
        if !(-1.0..=1.0).contains(&self.polarity) {
            return Err(format!("polarity {} outside [-1, 1]", self.polarity));
        }
        if !(0.0..=1.0).contains(&self.subjectivity) {
            return Err(format!("subjectivity {} outside [0, 1]", self.subjectivity));
        }
        if !(self.intensity.is_finite() && self.intensity > 0.0) {
            return Err(format!("intensity {} must be positive", self.intensity));
        }
        Ok(())
    }
}

/// Word form → entry. Word forms are stored lowercase.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Lexicon {
    entries: BTreeMap<String, LexiconEntry>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a lexicon from word senses; senses sharing a form are averaged.
    /// Errors name the 1-based position of the offending sense.
    pub fn from_senses<I: IntoIterator<Item = LexiconEntry>>(senses: I) -> Result<Self> {
        let mut acc: BTreeMap<String, (LexiconEntry, f64)> = BTreeMap::new();
        for (i, mut sense) in senses.into_iter().enumerate() {
            sense.validate().map_err(|m| Error::parse(i + 1, m))?;
            sense.word = sense.word.to_lowercase();
            match acc.get_mut(&sense.word) {
                Some((sum, n)) => {
                    sum.polarity += sense.polarity;
                    sum.subjectivity += sense.subjectivity;
                    sum.intensity += sense.intensity;
                    if sum.language.is_none() {
                        sum.language = sense.language;
                    }
                    *n += 1.0;
                }
                None => {
                    acc.insert(sense.word.clone(), (sense, 1.0));
                }
            }
        }
        let entries = acc
            .into_iter()
            .map(|(w, (mut e, n))| {
                e.polarity /= n;
                e.subjectivity /= n;
                e.intensity /= n;
                (w, e)
            })
            .collect();
        Ok(Self { entries })
    }

    /// Rows `word,polarity,subjectivity,intensity[,language]`, optional header.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut senses = Vec::new();
        let mut rows = Vec::new();
        for (i, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::parse(i + 1, e.to_string()))?;
            let row = record.position().map_or(i + 1, |p| p.line() as usize);
            if i == 0 && record.get(1).is_some_and(|p| p.parse::<f64>().is_err()) {
                continue;
            }
            if !(4..=5).contains(&record.len()) {
                return Err(Error::parse(
                    row,
                    format!("expected 4 or 5 fields, found {}", record.len()),
                ));
            }
            let num = |j: usize, name: &str| {
                record[j].parse::<f64>().map_err(|_| {
                    Error::parse(row, format!("{name} {:?} is not a number", &record[j]))
                })
            };
            let entry = LexiconEntry {
                word: record[0].to_string(),
                polarity: num(1, "polarity")?,
                subjectivity: num(2, "subjectivity")?,
                intensity: num(3, "intensity")?,
                language: record.get(4).filter(|l| !l.is_empty()).map(String::from),
            };
            entry.validate().map_err(|m| Error::parse(row, m))?;
            senses.push(entry);
            rows.push(row);
        }
        Self::from_senses(senses).map_err(|e| match e {
            Error::Parse { row, message } => Error::parse(rows[row - 1], message),
            other => other,
        })
    }

    pub fn get(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries.get(word)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    /// Adds an entry unless the word form is already present. Returns whether it was added.
    pub fn insert_new(&mut self, mut entry: LexiconEntry) -> Result<bool> {
        entry.validate().map_err(Error::invalid)?;
        entry.word = entry.word.to_lowercase();
        if self.entries.contains_key(&entry.word) {
            return Ok(false);
        }
        self.entries.insert(entry.word.clone(), entry);
        Ok(true)
    }
}
