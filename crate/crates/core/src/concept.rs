//! Commonsense concept network.
//!
//! A concept's *halo* is its neighborhood in the network; the properties
//! found in that halo, ranked by betweenness, are what the concept "looks
//! and feels like". Two concepts are similar when short paths, preferably
//! over `is-property-of` relations, connect their most central properties.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::io::Read;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Contribution of a property pair with no connecting path.
const DISCONNECTED_LENGTH: f64 = 1e10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    IsA,
    IsPartOf,
    IsOppositeOf,
    IsPropertyOf,
    IsRelatedTo,
    IsSameAs,
    IsEffectOf,
}

impl RelationKind {
    pub const ALL: [RelationKind; 7] = [
        RelationKind::IsA,
        RelationKind::IsPartOf,
        RelationKind::IsOppositeOf,
        RelationKind::IsPropertyOf,
        RelationKind::IsRelatedTo,
        RelationKind::IsSameAs,
        RelationKind::IsEffectOf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::IsA => "is-a",
            RelationKind::IsPartOf => "is-part-of",
            RelationKind::IsOppositeOf => "is-opposite-of",
            RelationKind::IsPropertyOf => "is-property-of",
            RelationKind::IsRelatedTo => "is-related-to",
            RelationKind::IsSameAs => "is-same-as",
            RelationKind::IsEffectOf => "is-effect-of",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationKind::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown relation {s:?}")))
    }
}

/// One row of the network file: `concept1,relation,concept2,context,weight`.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkRow {
    pub concept1: String,
    pub relation: RelationKind,
    pub concept2: String,
    pub context: Option<String>,
    pub weight: i64,
}

/// Edge weight for an annotated integer strength: `min(w * 0.1, 1.0)`, never negative.
pub fn edge_weight(weight_int: i64) -> f64 {
    (weight_int as f64 * 0.1).clamp(0.0, 1.0)
}

#[derive(Debug, Default)]
pub struct CommonsenseNetwork {
    graph: Graph,
    properties: BTreeSet<String>,
    cache: RwLock<HashMap<String, Arc<Vec<String>>>>,
    computations: AtomicUsize,
}

impl Clone for CommonsenseNetwork {
    fn clone(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            properties: self.properties.clone(),
            cache: RwLock::default(),
            computations: AtomicUsize::new(0),
        }
    }
}

impl CommonsenseNetwork {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows<I>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = NetworkRow>,
    {
        let mut net = Self::new();
        for (i, row) in rows.into_iter().enumerate() {
            net.add_row(row)
                .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        }
        Ok(net)
    }

    /// Reads comma-separated rows with an optional header line.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut net = Self::new();
        for (i, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::parse(i + 1, e.to_string()))?;
            let row_no = record.position().map_or(i + 1, |p| p.line() as usize);
            if i == 0 && is_header(&record) {
                continue;
            }
            let row = parse_row(&record).map_err(|m| Error::parse(row_no, m))?;
            net.add_row(row)
                .map_err(|e| Error::parse(row_no, e.to_string()))?;
        }
        Ok(net)
    }

    fn add_row(&mut self, row: NetworkRow) -> Result<()> {
        self.add_relation(
            &row.concept1,
            row.relation,
            &row.concept2,
            row.weight,
            row.context,
        )
    }

    /// Adds (or overwrites) `concept1 -relation-> concept2` and invalidates
    /// cached property rankings.
    pub fn add_relation(
        &mut self,
        concept1: &str,
        relation: RelationKind,
        concept2: &str,
        weight_int: i64,
        context: Option<String>,
    ) -> Result<()> {
        let previous = self
            .graph
            .edge(concept1, concept2)
            .map(|e| e.relation.clone());
        self.graph.add_edge_with_context(
            concept1,
            concept2,
            relation.as_str(),
            edge_weight(weight_int),
            context,
        )?;
        if previous.as_deref() == Some(RelationKind::IsPropertyOf.as_str())
            && relation != RelationKind::IsPropertyOf
        {
            self.rebuild_properties();
        } else if relation == RelationKind::IsPropertyOf {
            self.properties.insert(concept1.to_string());
        }
        self.cache
            .get_mut()
            .unwrap_or_else(|p| p.into_inner())
            .clear();
        Ok(())
    }

    fn rebuild_properties(&mut self) {
        self.properties = self
            .graph
            .edges()
            .iter()
            .filter(|e| e.relation == RelationKind::IsPropertyOf.as_str())
            .map(|e| e.source.clone())
            .collect();
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Every node occurring as the source of an `is-property-of` edge.
    pub fn property_index(&self) -> &BTreeSet<String> {
        &self.properties
    }

    pub fn is_property(&self, id: &str) -> bool {
        self.properties.contains(id)
    }

    /// How many property rankings were computed (cache misses).
    pub fn property_computations(&self) -> usize {
        self.computations.load(Ordering::Relaxed)
    }

    fn require(&self, id: &str) -> Result<()> {
        if self.graph.contains(id) {
            Ok(())
        } else {
            Err(Error::not_found(id))
        }
    }

    pub fn halo(&self, concept: &str, depth: usize) -> Result<Vec<String>> {
        self.graph.flatten(concept, depth, None)
    }

    /// The outer rim of the `is-a` taxonomy below `concept`.
    pub fn field(&self, concept: &str, depth: usize, fringe_depth: usize) -> Result<Vec<String>> {
        let descendants =
            |node: &str, e: &Edge| e.target == node && e.relation == RelationKind::IsA.as_str();
        let taxonomy = self.graph.flatten(concept, depth, Some(&descendants))?;
        let sub = self.graph.subgraph(taxonomy.iter().map(String::as_str))?;
        Ok(sub
            .fringe(fringe_depth)
            .into_iter()
            .filter(|id| id != concept)
            .collect())
    }

    /// Properties in the concept's halo, most central first.
    pub fn properties(&self, concept: &str) -> Result<Vec<String>> {
        self.require(concept)?;
        if let Some(hit) = self
            .cache
            .read()
            .unwrap_or_else(|p| p.into_inner())
            .get(concept)
        {
            return Ok(hit.as_ref().clone());
        }
        let halo = self.halo(concept, 2)?;
        let sub = self.graph.subgraph(halo.iter().map(String::as_str))?;
        let centrality = sub.betweenness_centrality();
        let mut ranked: Vec<(&String, f64)> = centrality
            .iter()
            .filter(|(id, _)| self.properties.contains(*id))
            .map(|(id, &c)| (id, c))
            .collect();
        ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        let ranked: Vec<String> = ranked.into_iter().map(|(id, _)| id.clone()).collect();
        self.computations.fetch_add(1, Ordering::Relaxed);
        self.cache
            .write()
            .unwrap_or_else(|p| p.into_inner())
            .insert(concept.to_string(), Arc::new(ranked.clone()));
        Ok(ranked)
    }

    fn property_path(&self, a: &str, b: &str) -> Result<Option<Vec<String>>> {
        let graph = &self.graph;
        let prefer_properties = |x: &str, y: &str| match graph.edge_between(x, y) {
            Some(e) if e.relation == RelationKind::IsPropertyOf.as_str() => 0.0,
            _ => 1.0,
        };
        graph.shortest_path(a, b, Some(&prefer_properties))
    }

    /// Featural similarity between two concepts.
    ///
    /// For each pair of top-`k` properties the contribution is
    /// `1 / nodes-on-shortest-path`. With a `fixation` concept the paths from
    /// both properties to it are appended before counting. The sum is divided
    /// by `k`.
    pub fn similarity(&self, a: &str, b: &str, k: usize, fixation: Option<&str>) -> Result<f64> {
        if k < 1 {
            return Err(Error::invalid("k must be at least 1"));
        }
        self.require(a)?;
        self.require(b)?;
        if let Some(f) = fixation {
            self.require(f)?;
        }
        let pa = self.properties(a)?;
        let pb = self.properties(b)?;
        let mut total = 0.0;
        for p1 in pa.iter().take(k) {
            for p2 in pb.iter().take(k) {
                let mut len = self.property_path(p1, p2)?.map(|p| p.len() as f64);
                if let (Some(fix), Some(l)) = (fixation, len) {
                    let via1 = self.property_path(p1, fix)?;
                    let via2 = self.property_path(p2, fix)?;
                    len = match (via1, via2) {
                        (Some(x), Some(y)) => Some(l + x.len() as f64 + y.len() as f64),
                        _ => None,
                    };
                }
                total += 1.0 / len.unwrap_or(DISCONNECTED_LENGTH);
            }
        }
        Ok(total / k as f64)
    }

    /// Candidates sorted by similarity to `probe`, highest first. Ties keep
    /// input order.
    pub fn nearest_neighbors(
        &self,
        probe: &str,
        candidates: &[String],
        k: usize,
        fixation: Option<&str>,
    ) -> Result<Vec<(String, f64)>> {
        let mut scored = candidates
            .iter()
            .map(|c| Ok((c.clone(), self.similarity(probe, c, k, fixation)?)))
            .collect::<Result<Vec<_>>>()?;
        scored.sort_by(|a, b| b.1.total_cmp(&a.1));
        Ok(scored)
    }
}

fn is_header(record: &csv::StringRecord) -> bool {
    let relation_ok = record
        .get(1)
        .is_some_and(|r| r.parse::<RelationKind>().is_ok());
    let weight_ok = record.get(4).is_some_and(|w| w.parse::<i64>().is_ok());
    !relation_ok && !weight_ok
}

fn parse_row(record: &csv::StringRecord) -> std::result::Result<NetworkRow, String> {
    if record.len() != 5 {
        return Err(format!("expected 5 fields, found {}", record.len()));
    }
    let relation = record[1]
        .parse::<RelationKind>()
        .map_err(|e| e.to_string())?;
    let weight = record[4]
        .parse::<i64>()
        .map_err(|_| format!("weight {:?} is not an integer", &record[4]))?;
    let context = Some(record[3].to_string()).filter(|c| !c.is_empty());
    Ok(NetworkRow {
        concept1: record[0].to_string(),
        relation,
        concept2: record[2].to_string(),
        context,
        weight,
    })
}

/// Sorts ideas by how rarely they are mentioned; the rarest come first.
pub fn novelty_rank(mut ideas: Vec<(String, u64)>) -> Vec<(String, u64)> {
    ideas.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    ideas
}

/// Reads `label,count` rows (optional header).
pub fn parse_novelty_csv<R: Read>(reader: R) -> Result<Vec<(String, u64)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut out = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| Error::parse(i + 1, e.to_string()))?;
        let row_no = record.position().map_or(i + 1, |p| p.line() as usize);
        if record.len() != 2 {
            return Err(Error::parse(
                row_no,
                format!("expected 2 fields, found {}", record.len()),
            ));
        }
        match record[1].parse::<u64>() {
            Ok(count) => out.push((record[0].to_string(), count)),
            Err(_) if i == 0 => continue,
            Err(_) => {
                return Err(Error::parse(
                    row_no,
                    format!("count {:?} is not a non-negative integer", &record[1]),
                ))
            }
        }
    }
    Ok(out)
}
