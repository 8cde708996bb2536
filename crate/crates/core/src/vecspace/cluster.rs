use std::collections::BTreeMap;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use super::vector::{cosine_distance, SparseVector};
use crate::error::{Error, Result};
use crate::rng::{seeded, SimRng};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KMeans {
    /// Vector indices per cluster, each sorted.
    pub clusters: Vec<Vec<usize>>,
    pub centroids: Vec<SparseVector>,
    pub iterations: usize,
    /// Total within-cluster cosine distance after every iteration.
    pub objective: Vec<f64>,
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k < 1 || k > n {
        Err(Error::invalid(format!("k = {k} is outside 1..={n}")))
    } else {
        Ok(())
    }
}

fn dist(a: &SparseVector, b: &SparseVector) -> f64 {
    cosine_distance(a, b).max(0.0)
}

pub fn mean(vectors: &[&SparseVector]) -> SparseVector {
    let mut acc: BTreeMap<&str, f64> = BTreeMap::new();
    for v in vectors {
        for (f, w) in v.iter() {
            *acc.entry(f).or_default() += w;
        }
    }
    let n = vectors.len().max(1) as f64;
    acc.into_iter().map(|(f, w)| (f, w / n)).collect()
}

/// Picks `k` distinct seed indices with probability proportional to the
/// squared distance from the seeds chosen so far.
pub fn kmeans_pp_seeds(vectors: &[SparseVector], k: usize, rng: &mut SimRng) -> Result<Vec<usize>> {
    check_k(k, vectors.len())?;
    let n = vectors.len();
    let mut seeds = vec![rng.random_range(0..n)];
    let mut nearest: Vec<f64> = vectors
        .iter()
        .map(|v| dist(v, &vectors[seeds[0]]))
        .collect();
    while seeds.len() < k {
        let weights: Vec<f64> = nearest.iter().map(|d| d * d).collect();
        let total: f64 = weights.iter().sum();
        let pick = if total > 0.0 {
            let x = rng.random::<f64>() * total;
            let mut acc = 0.0;
            let mut chosen = None;
            for (i, w) in weights.iter().enumerate() {
                acc += w;
                if *w > 0.0 && x < acc {
                    chosen = Some(i);
                    break;
                }
            }
            chosen.unwrap_or_else(|| weights.iter().rposition(|w| *w > 0.0).unwrap())
        } else {
            let free: Vec<usize> = (0..n).filter(|i| !seeds.contains(i)).collect();
            free[rng.random_range(0..free.len())]
        };
        seeds.push(pick);
        for (i, v) in vectors.iter().enumerate() {
            nearest[i] = nearest[i].min(dist(v, &vectors[pick]));
        }
    }
    Ok(seeds)
}

fn nearest_centroid(v: &SparseVector, centroids: &[SparseVector]) -> usize {
    let mut best = (f64::INFINITY, 0);
    for (j, c) in centroids.iter().enumerate() {
        let d = dist(v, c);
        if d < best.0 {
            best = (d, j);
        }
    }
    best.1
}

fn recompute(vectors: &[SparseVector], assign: &[usize], k: usize) -> Vec<SparseVector> {
    (0..k)
        .map(|j| {
            let members: Vec<&SparseVector> = assign
                .iter()
                .zip(vectors)
                .filter(|(a, _)| **a == j)
                .map(|(_, v)| v)
                .collect();
            mean(&members)
        })
        .collect()
}

/// Moves the vector farthest from its centroid into each empty cluster.
fn refill_empty(
    vectors: &[SparseVector],
    assign: &mut [usize],
    centroids: &mut Vec<SparseVector>,
    k: usize,
) {
    loop {
        let mut sizes = vec![0usize; k];
        for &a in assign.iter() {
            sizes[a] += 1;
        }
        let Some(empty) = sizes.iter().position(|&s| s == 0) else {
            return;
        };
        let mut far = (-1.0, usize::MAX);
        for (i, v) in vectors.iter().enumerate() {
            if sizes[assign[i]] < 2 {
                continue;
            }
            let d = dist(v, &centroids[assign[i]]);
            if d > far.0 {
                far = (d, i);
            }
        }
        assign[far.1] = empty;
        *centroids = recompute(vectors, assign, k);
    }
}

fn objective(vectors: &[SparseVector], assign: &[usize], centroids: &[SparseVector]) -> f64 {
    vectors
        .iter()
        .zip(assign)
        .map(|(v, &a)| dist(v, &centroids[a]))
        .sum()
}

/// k-means++ seeding followed by Lloyd iterations under cosine distance.
pub fn kmeans(
    vectors: &[SparseVector],
    k: usize,
    max_iterations: usize,
    seed: u64,
) -> Result<KMeans> {
    let mut rng = seeded(seed);
    kmeans_with_rng(vectors, k, max_iterations, &mut rng)
}

pub fn kmeans_with_rng(
    vectors: &[SparseVector],
    k: usize,
    max_iterations: usize,
    rng: &mut SimRng,
) -> Result<KMeans> {
    let seeds = kmeans_pp_seeds(vectors, k, rng)?;
    let mut centroids: Vec<SparseVector> = seeds.iter().map(|&i| vectors[i].clone()).collect();
    let mut assign: Vec<usize> = Vec::new();
    let mut history = Vec::new();
    let mut iterations = 0;
    while iterations < max_iterations {
        let next: Vec<usize> = vectors
            .iter()
            .map(|v| nearest_centroid(v, &centroids))
            .collect();
        if next == assign {
            break;
        }
        iterations += 1;
        assign = next;
        centroids = recompute(vectors, &assign, k);
        refill_empty(vectors, &mut assign, &mut centroids, k);
        history.push(objective(vectors, &assign, &centroids));
    }
    if assign.is_empty() {
        // max_iterations == 0: report the seeding assignment
        assign = vectors
            .iter()
            .map(|v| nearest_centroid(v, &centroids))
            .collect();
    }
    let mut clusters = vec![Vec::new(); k];
    for (i, &a) in assign.iter().enumerate() {
        clusters[a].push(i);
    }
    Ok(KMeans {
        clusters,
        centroids,
        iterations,
        objective: history,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Linkage {
    Single,
    Complete,
}

impl FromStr for Linkage {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(Linkage::Single),
            "complete" => Ok(Linkage::Complete),
            _ => Err(Error::invalid(format!("unknown linkage {s:?}"))),
        }
    }
}

/// One agglomeration step. Clusters are named by their smallest member.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Merge {
    pub into: usize,
    pub from: usize,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dendrogram {
    pub merges: Vec<Merge>,
    /// Sorted members per cluster, clusters ordered by smallest member.
    pub clusters: Vec<Vec<usize>>,
}

pub fn cosine_distance_matrix(vectors: &[SparseVector]) -> Vec<Vec<f64>> {
    let n = vectors.len();
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = dist(&vectors[i], &vectors[j]);
            d[i][j] = x;
            d[j][i] = x;
        }
    }
    d
}

pub fn hierarchical(vectors: &[SparseVector], k: usize, linkage: Linkage) -> Result<Dendrogram> {
    check_k(k, vectors.len())?;
    agglomerate(cosine_distance_matrix(vectors), k, linkage)
}

/// Agglomerative clustering over a precomputed symmetric distance matrix.
/// Ties go to the pair with the smallest (first, second) cluster names.
pub fn agglomerate(mut d: Vec<Vec<f64>>, k: usize, linkage: Linkage) -> Result<Dendrogram> {
    let n = d.len();
    check_k(k, n)?;
    let mut active = vec![true; n];
    let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let nearest_of = |d: &Vec<Vec<f64>>, active: &[bool], i: usize| -> Option<usize> {
        let mut best: Option<usize> = None;
        for j in 0..n {
            if j != i && active[j] && best.is_none_or(|b| d[i][j] < d[i][b]) {
                best = Some(j);
            }
        }
        best
    };
    let mut nn: Vec<Option<usize>> = (0..n).map(|i| nearest_of(&d, &active, i)).collect();
    let mut merges = Vec::with_capacity(n - k);
    for _ in 0..n - k {
        let mut best: Option<(f64, usize, usize)> = None;
        for i in (0..n).filter(|&i| active[i]) {
            let Some(j) = nn[i] else { continue };
            let cand = (d[i][j], i.min(j), i.max(j));
            let better = match best {
                None => true,
                Some(b) => cand.0 < b.0 || (cand.0 == b.0 && (cand.1, cand.2) < (b.1, b.2)),
            };
            if better {
                best = Some(cand);
            }
        }
        let (distance, a, b) = best.expect("at least two active clusters");
        merges.push(Merge {
            into: a,
            from: b,
            distance,
        });
        active[b] = false;
        let moved = std::mem::take(&mut members[b]);
        members[a].extend(moved);
        for i in 0..n {
            if active[i] && i != a {
                let x = match linkage {
                    Linkage::Single => d[a][i].min(d[b][i]),
                    Linkage::Complete => d[a][i].max(d[b][i]),
                };
                d[a][i] = x;
                d[i][a] = x;
            }
        }
        for i in 0..n {
            if !active[i] {
                nn[i] = None;
                continue;
            }
            let stale = i == a || matches!(nn[i], Some(j) if j == a || j == b);
            if stale {
                nn[i] = nearest_of(&d, &active, i);
            } else if let Some(j) = nn[i] {
                if d[i][a] < d[i][j] || (d[i][a] == d[i][j] && a < j) {
                    nn[i] = Some(a);
                }
            }
        }
    }
    let clusters = (0..n)
        .filter(|&i| active[i])
        .map(|i| {
            let mut m = members[i].clone();
            m.sort_unstable();
            m
        })
        .collect();
    Ok(Dendrogram { merges, clusters })
}
