//! Brute-force oracles and fixture helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use divergent::graph::Graph;
use divergent::rng::{seeded, SimRng};
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Random undirected simple graph on `n` nodes named `n0`, `n1`, ... with
/// edge weights in multiples of 0.25 so that path costs tie exactly.
pub fn random_graph(rng: &mut SimRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_node(&format!("n{i}")).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random::<f64>() < p {
                let w = rng.random_range(0..4) as f64 * 0.25;
                let (s, t) = if rng.random::<bool>() { (i, j) } else { (j, i) };
                g.add_edge(&format!("n{s}"), &format!("n{t}"), "is-related-to", w)
                    .unwrap();
            }
        }
    }
    g
}

pub fn random_graphs(count: usize, max_nodes: usize, seed: u64) -> Vec<Graph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_nodes);
            let p = rng.random_range(0.15..0.6);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

pub fn adjacency(g: &Graph) -> BTreeMap<String, BTreeSet<String>> {
    let mut adj: BTreeMap<String, BTreeSet<String>> = g
        .ids()
        .map(|id| (id.to_string(), BTreeSet::new()))
        .collect();
    for e in g.edges() {
        if e.source != e.target {
            adj.get_mut(&e.source).unwrap().insert(e.target.clone());
            adj.get_mut(&e.target).unwrap().insert(e.source.clone());
        }
    }
    adj
}

/// Every simple path from `a` to `b`.
pub fn all_simple_paths(
    adj: &BTreeMap<String, BTreeSet<String>>,
    a: &str,
    b: &str,
) -> Vec<Vec<String>> {
    bounded_paths(adj, a, b, &|_, _| 0.0)
}

/// Simple paths from `a` to `b` whose cost is not above the cheapest one
/// seen so far; the cheapest paths are therefore all present. Hop costs must
/// be non-negative.
pub fn bounded_paths(
    adj: &BTreeMap<String, BTreeSet<String>>,
    a: &str,
    b: &str,
    cost: &dyn Fn(&str, &str) -> f64,
) -> Vec<Vec<String>> {
    struct Walk<'a> {
        adj: &'a BTreeMap<String, BTreeSet<String>>,
        cost: &'a dyn Fn(&str, &str) -> f64,
        b: &'a str,
        bound: f64,
        out: Vec<(f64, Vec<String>)>,
    }
    fn walk(w: &mut Walk<'_>, path: &mut Vec<String>, c: f64) {
        if c > w.bound {
            return;
        }
        let last = path.last().unwrap().clone();
        if last == w.b {
            w.bound = w.bound.min(c);
            w.out.push((c, path.clone()));
            return;
        }
        for next in &w.adj[&last] {
            if !path.contains(next) {
                let step = (w.cost)(&last, next);
                path.push(next.clone());
                walk(w, path, c + step);
                path.pop();
            }
        }
    }
    let mut w = Walk {
        adj,
        cost,
        b,
        bound: f64::INFINITY,
        out: Vec::new(),
    };
    walk(&mut w, &mut vec![a.to_string()], 0.0);
    let bound = w.bound;
    w.out
        .into_iter()
        .filter(|(c, _)| *c <= bound)
        .map(|(_, p)| p)
        .collect()
}

/// Betweenness from an explicit enumeration of all shortest paths, each
/// unordered pair counted once, normalized by `(n-1)(n-2)/2`.
pub fn brute_betweenness(g: &Graph) -> BTreeMap<String, f64> {
    let adj = adjacency(g);
    let ids: Vec<String> = adj.keys().cloned().collect();
    let n = ids.len();
    let mut score: BTreeMap<String, f64> = ids.iter().map(|id| (id.clone(), 0.0)).collect();
    if n < 3 {
        return score;
    }
    for (i, s) in ids.iter().enumerate() {
        for t in &ids[i + 1..] {
            let shortest = bounded_paths(&adj, s, t, &|_, _| 1.0);
            if shortest.is_empty() {
                continue;
            }
            for v in &ids {
                if v == s || v == t {
                    continue;
                }
                let through = shortest.iter().filter(|p| p.contains(v)).count();
                *score.get_mut(v).unwrap() += through as f64 / shortest.len() as f64;
            }
        }
    }
    let scale = ((n - 1) * (n - 2)) as f64 / 2.0;
    score.values_mut().for_each(|x| *x /= scale);
    score
}

/// Cheapest path under `cost(from, to)` per hop; ties to the smallest id sequence.
pub fn brute_shortest_path(
    g: &Graph,
    a: &str,
    b: &str,
    cost: &dyn Fn(&str, &str) -> f64,
) -> Option<Vec<String>> {
    cheapest(&bounded_paths(&adjacency(g), a, b, cost), cost)
}

pub fn cheapest(paths: &[Vec<String>], cost: &dyn Fn(&str, &str) -> f64) -> Option<Vec<String>> {
    let mut best: Option<(f64, &Vec<String>)> = None;
    for p in paths {
        let c: f64 = p.windows(2).map(|w| cost(&w[0], &w[1])).sum();
        let better = match best {
            None => true,
            Some((bc, bp)) => c < bc || (c == bc && p < bp),
        };
        if better {
            best = Some((c, p));
        }
    }
    best.map(|(_, p)| p.clone())
}

/// Entropy with log base `len(p)` straight from the definition.
pub fn entropy_oracle(counts: &[f64]) -> f64 {
    let s: f64 = counts.iter().sum();
    let base = counts.len() as f64;
    if counts.len() < 2 {
        return 0.0;
    }
    -counts
        .iter()
        .filter(|&&c| c != 0.0)
        .map(|&c| (c / s) * (c / s).ln() / base.ln())
        .sum::<f64>()
}

/// Information gain of splitting `labels` on feature presence; entropy base
/// is the number of distinct labels.
pub fn information_gain_oracle(labels: &[String], has: &[bool]) -> f64 {
    let classes: Vec<&String> = labels.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let base = classes.len();
    let h = |idx: &[usize]| -> f64 {
        if base < 2 || idx.is_empty() {
            return 0.0;
        }
        let n = idx.len() as f64;
        let mut total = 0.0;
        for c in &classes {
            let k = idx.iter().filter(|&&i| &labels[i] == *c).count() as f64;
            if k > 0.0 {
                total -= (k / n) * (k / n).log(base as f64);
            }
        }
        total
    };
    let all: Vec<usize> = (0..labels.len()).collect();
    let with: Vec<usize> = all.iter().copied().filter(|&i| has[i]).collect();
    let without: Vec<usize> = all.iter().copied().filter(|&i| !has[i]).collect();
    let n = labels.len() as f64;
    h(&all) - with.len() as f64 / n * h(&with) - without.len() as f64 / n * h(&without)
}

/// Naive agglomerative clustering: each step rescans all cluster pairs and
/// recomputes linkage from the member distances.
pub fn naive_agglomerative(d: &[Vec<f64>], k: usize, complete: bool) -> Vec<(usize, usize, f64)> {
    let mut clusters: Vec<Vec<usize>> = (0..d.len()).map(|i| vec![i]).collect();
    let mut merges = Vec::new();
    while clusters.len() > k {
        let mut best: Option<(f64, usize, usize, usize, usize)> = None;
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let pairs = clusters[i]
                    .iter()
                    .flat_map(|&a| clusters[j].iter().map(move |&b| d[a][b]));
                let link = if complete {
                    pairs.fold(f64::NEG_INFINITY, f64::max)
                } else {
                    pairs.fold(f64::INFINITY, f64::min)
                };
                let ri = clusters[i][0];
                let rj = clusters[j][0];
                let key = (link, ri.min(rj), ri.max(rj));
                if best.is_none_or(|b| key.0 < b.0 || (key.0 == b.0 && (key.1, key.2) < (b.1, b.2)))
                {
                    best = Some((key.0, key.1, key.2, i, j));
                }
            }
        }
        let (dist, lo, hi, i, j) = best.unwrap();
        let (keep, gone) = if clusters[i][0] == lo { (i, j) } else { (j, i) };
        let moved = clusters[gone].clone();
        clusters[keep].extend(moved);
        clusters[keep].sort_unstable();
        clusters.remove(gone);
        merges.push((lo, hi, dist));
    }
    merges
}

/// Fleiss' kappa from the textbook definitions.
pub fn fleiss_oracle(rows: &[Vec<u64>]) -> f64 {
    let n_sub = rows.len() as f64;
    let raters = rows[0].iter().sum::<u64>() as f64;
    let cats = rows[0].len();
    let p_j: Vec<f64> = (0..cats)
        .map(|j| rows.iter().map(|r| r[j] as f64).sum::<f64>() / (n_sub * raters))
        .collect();
    let p_i: Vec<f64> = rows
        .iter()
        .map(|r| {
            (r.iter().map(|&x| (x * x) as f64).sum::<f64>() - raters) / (raters * (raters - 1.0))
        })
        .collect();
    let p_bar = p_i.iter().sum::<f64>() / n_sub;
    let p_e: f64 = p_j.iter().map(|p| p * p).sum();
    (p_bar - p_e) / (1.0 - p_e)
}

/// The textbook example: 10 subjects, 14 raters, 5 categories.
pub fn fleiss_textbook() -> Vec<Vec<u64>> {
    vec![
        vec![0, 0, 0, 0, 14],
        vec![0, 2, 6, 4, 2],
        vec![0, 0, 3, 5, 6],
        vec![0, 3, 9, 2, 0],
        vec![2, 2, 8, 1, 1],
        vec![7, 7, 0, 0, 0],
        vec![3, 2, 6, 3, 0],
        vec![2, 5, 3, 2, 2],
        vec![6, 5, 2, 1, 0],
        vec![0, 2, 2, 3, 7],
    ]
}

/// Total variation distance from the definition.
pub fn tvd_oracle(a: &BTreeMap<String, f64>, b: &BTreeMap<String, f64>) -> f64 {
    a.keys().map(|k| (a[k] - b[k]).abs()).sum::<f64>() / 2.0
}

// ---- worked examples and synthetic fixtures ----

use divergent::sentiment::Review;
use divergent::vecspace::SparseVector;

pub fn sparse(pairs: &[(&str, f64)]) -> SparseVector {
    pairs.iter().map(|&(f, w)| (f, w)).collect()
}

/// BEAR, RAGDOLL and SCISSORS as printed in the feature table.
pub fn table_vectors() -> [SparseVector; 3] {
    [
        sparse(&[
            ("bear", 0.28),
            ("child", 0.14),
            ("entertain", 0.14),
            ("stuffed", 0.14),
            ("teddy", 0.14),
            ("toy", 0.14),
        ]),
        sparse(&[
            ("child", 0.17),
            ("cloth", 0.17),
            ("doll", 0.17),
            ("rag", 0.17),
            ("stuffed", 0.17),
            ("toy", 0.17),
        ]),
        sparse(&[
            ("blade", 0.14),
            ("cloth", 0.14),
            ("cut", 0.14),
            ("paper", 0.14),
            ("scissors", 0.14),
            ("sharp", 0.14),
            ("steel", 0.14),
        ]),
    ]
}

/// Two tight groups on disjoint features; returns vectors and the planted partition.
pub fn planted_blobs(rng: &mut SimRng, per_blob: usize) -> (Vec<SparseVector>, Vec<Vec<usize>>) {
    let mut vs = Vec::new();
    for (f1, f2) in [("a", "b"), ("x", "y")] {
        for _ in 0..per_blob {
            vs.push(sparse(&[
                (f1, rng.random_range(0.8..1.0)),
                (f2, rng.random_range(0.0..0.3)),
            ]));
        }
    }
    (
        vs,
        vec![(0..per_blob).collect(), (per_blob..2 * per_blob).collect()],
    )
}

/// Eight vectors with distinct pairwise cosine distances.
pub fn eight_vectors() -> Vec<SparseVector> {
    vec![
        sparse(&[("a", 1.0), ("b", 0.1)]),
        sparse(&[("a", 0.9), ("b", 0.35)]),
        sparse(&[("a", 0.5), ("b", 0.6), ("c", 0.05)]),
        sparse(&[("b", 1.0), ("c", 0.2)]),
        sparse(&[("c", 1.0), ("d", 0.15)]),
        sparse(&[("c", 0.7), ("d", 0.8)]),
        sparse(&[("d", 1.0), ("a", 0.02)]),
        sparse(&[("a", 0.3), ("d", 0.9), ("b", 0.4)]),
    ]
}

/// 200 reviews: 100 with 4-5 stars, 100 with 1-2 stars. Planted exceptions:
/// three positive reviews contain no lexicon word (missed), two negative
/// reviews say "niet slecht" (negated into positive).
/// Returns the reviews and the expected (tp, fp, tn, fn).
pub fn review_corpus() -> (Vec<Review>, (u64, u64, u64, u64)) {
    let pos = [
        "Een goed boek.",
        "Prachtig geschreven!",
        "Heel boeiend verhaal.",
        "Echt goed en boeiend.",
        "Goed.",
    ];
    let neg = [
        "Een slecht boek.",
        "Saai verhaal.",
        "Echt saai.",
        "Niet goed geschreven.",
        "Slecht en saai.",
    ];
    let mut out = Vec::new();
    for i in 0..100 {
        let text = if i < 3 {
            "Ik las het in een weekend.".to_string()
        } else {
            pos[i % pos.len()].to_string()
        };
        out.push(Review {
            stars: 4 + (i % 2) as u8,
            text,
        });
    }
    for i in 0..100 {
        let text = if i < 2 {
            "Niet slecht voor een debuut.".to_string()
        } else {
            neg[i % neg.len()].to_string()
        };
        out.push(Review {
            stars: 1 + (i % 2) as u8,
            text,
        });
    }
    (out, (97, 2, 98, 3))
}

/// Hand-computed scores for `dt_answers.tsv` with k = 9 and no dropped
/// clusters: (participant, fluency, flexibility, rarity points, elaboration).
/// Originality is rarity points / fluency.
pub fn dt_expected() -> Vec<(String, u32, u32, u32, u32)> {
    let mut rows = vec![
        ("P01".to_string(), 5, 5, 5, 5),
        ("P02".to_string(), 4, 4, 3, 1),
        ("P03".to_string(), 5, 4, 1, 2),
        ("P04".to_string(), 5, 5, 2, 2),
    ];
    for i in 5..=12 {
        rows.push((format!("P{i:02}"), 5, 4, 0, 0));
    }
    for i in 13..=18 {
        rows.push((format!("P{i:02}"), 6, 3, 0, 1));
    }
    for i in 19..=20 {
        rows.push((format!("P{i:02}"), 5, 4, 0, 1));
    }
    rows
}

/// Participants above mean + 0.95 sd in the fixture (totals 16 and 12.4).
pub const DT_CREATIVE: [&str; 2] = ["P01", "P04"];
