//! Directed, typed, weighted graph.
//!
//! Edges are stored with their direction and relation label, but every
//! traversal (flatten, fringe, shortest paths, centrality) follows them in
//! both directions: a node's links are all nodes it shares an edge with.
//!
//! Node iteration order is insertion order. Operations whose output is a set
//! return it in a documented deterministic order.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub relation: String,
    pub weight: f64,
    /// Free-form metadata carried along with the edge (e.g. a context tag).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
}

impl Edge {
    /// The endpoint opposite to `id`, or `None` if `id` is not an endpoint.
    pub fn other(&self, id: &str) -> Option<&str> {
        if self.source == id {
            Some(&self.target)
        } else if self.target == id {
            Some(&self.source)
        } else {
            None
        }
    }
}

/// Predicate deciding whether an edge may be crossed when expanding the
/// frontier node given as the first argument.
pub type Traversable<'a> = &'a dyn Fn(&str, &Edge) -> bool;

/// Extra cost charged for a hop from the first to the second node id.
pub type Heuristic<'a> = &'a dyn Fn(&str, &str) -> f64;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Graph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<(usize, usize), usize>,
    ends: Vec<(usize, usize)>,
    // Edge indices incident to each node, in insertion order. A self-loop
    // appears once.
    incident: Vec<Vec<usize>>,
}

/// Borrowed view of a node.
#[derive(Debug, Clone, Copy)]
pub struct Node<'g> {
    graph: &'g Graph,
    idx: usize,
}

impl<'g> Node<'g> {
    pub fn id(&self) -> &'g str {
        &self.graph.ids[self.idx]
    }

    /// Directly related nodes through outgoing and incoming edges, sorted by id.
    pub fn links(&self) -> Vec<&'g str> {
        let mut out: Vec<&str> = self.graph.incident[self.idx]
            .iter()
            .map(|&e| {
                let edge = &self.graph.edges[e];
                edge.other(self.id()).unwrap_or(self.id())
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self) -> usize {
        self.graph.incident[self.idx].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &'g Edge> + 'g {
        let graph = self.graph;
        graph.incident[self.idx]
            .iter()
            .map(move |&e| &graph.edges[e])
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn node(&self, id: &str) -> Option<Node<'_>> {
        self.index.get(id).map(|&idx| Node { graph: self, idx })
    }

    /// Node ids in insertion order.
    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.ids.iter().map(String::as_str)
    }

    pub fn sorted_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.ids().collect();
        ids.sort_unstable();
        ids
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The edge stored for the ordered pair `(source, target)`.
    pub fn edge(&self, source: &str, target: &str) -> Option<&Edge> {
        let s = *self.index.get(source)?;
        let t = *self.index.get(target)?;
        self.edge_index.get(&(s, t)).map(|&e| &self.edges[e])
    }

    /// The edge joining `a` and `b` in either direction, preferring `a -> b`.
    pub fn edge_between(&self, a: &str, b: &str) -> Option<&Edge> {
        self.edge(a, b).or_else(|| self.edge(b, a))
    }

    pub fn add_node(&mut self, id: &str) -> Result<()> {
        self.ensure_node(id).map(|_| ())
    }

    fn ensure_node(&mut self, id: &str) -> Result<usize> {
        if id.is_empty() {
            return Err(Error::invalid("node id must be non-empty"));
        }
        if let Some(&idx) = self.index.get(id) {
            return Ok(idx);
        }
        let idx = self.ids.len();
        self.ids.push(id.to_string());
        self.index.insert(id.to_string(), idx);
        self.incident.push(Vec::new());
        Ok(idx)
    }

    /// Adds (or overwrites) the edge `source -> target`, creating missing
    /// endpoints.
    pub fn add_edge(
        &mut self,
        source: &str,
        target: &str,
        relation: &str,
        weight: f64,
    ) -> Result<()> {
        self.add_edge_with_context(source, target, relation, weight, None)
    }

    pub fn add_edge_with_context(
        &mut self,
        source: &str,
        target: &str,
        relation: &str,
        weight: f64,
        context: Option<String>,
    ) -> Result<()> {
        if source.is_empty() || target.is_empty() {
            return Err(Error::invalid("edge endpoints must be non-empty"));
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::invalid(format!(
                "edge weight {weight} outside [0, 1]"
            )));
        }
        let s = self.ensure_node(source)?;
        let t = self.ensure_node(target)?;
        let edge = Edge {
            source: source.to_string(),
            target: target.to_string(),
            relation: relation.to_string(),
            weight,
            context,
        };
        match self.edge_index.get(&(s, t)) {
            Some(&e) => self.edges[e] = edge,
            None => {
                let e = self.edges.len();
                self.edges.push(edge);
                self.ends.push((s, t));
                self.edge_index.insert((s, t), e);
                self.incident[s].push(e);
                if s != t {
                    self.incident[t].push(e);
                }
            }
        }
        Ok(())
    }

    fn idx(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::not_found(id))
    }

    fn other_endpoint(&self, edge: usize, node: usize) -> usize {
        let (s, t) = self.ends[edge];
        if s == node {
            t
        } else {
            s
        }
    }

    /// Distinct neighbors of every node, excluding the node itself, sorted by index.
    fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        (0..self.ids.len())
            .map(|u| {
                let mut ns: Vec<usize> = self.incident[u]
                    .iter()
                    .map(|&e| self.other_endpoint(e, u))
                    .filter(|&v| v != u)
                    .collect();
                ns.sort_unstable();
                ns.dedup();
                ns
            })
            .collect()
    }

    /// Breadth-first expansion from `start`.
    ///
    /// The result starts with `start` and lists each breadth layer sorted by
    /// id. Without a predicate every edge is crossed in both directions.
    pub fn flatten(
        &self,
        start: &str,
        depth: usize,
        traversable: Option<Traversable<'_>>,
    ) -> Result<Vec<String>> {
        let start = self.idx(start)?;
        let mut visited = vec![false; self.ids.len()];
        visited[start] = true;
        let mut order = vec![start];
        let mut frontier = vec![start];
        for _ in 0..depth {
            let mut next = Vec::new();
            for &u in &frontier {
                for &e in &self.incident[u] {
                    if let Some(pred) = traversable {
                        if !pred(&self.ids[u], &self.edges[e]) {
                            continue;
                        }
                    }
                    let v = self.other_endpoint(e, u);
                    if !visited[v] {
                        visited[v] = true;
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_by(|&a, &b| self.ids[a].cmp(&self.ids[b]));
            order.extend_from_slice(&next);
            frontier = next;
        }
        Ok(order.into_iter().map(|i| self.ids[i].clone()).collect())
    }

    /// Nodes with exactly one incident edge, plus every node within `depth`
    /// undirected hops of them. Sorted by id.
    pub fn fringe(&self, depth: usize) -> Vec<String> {
        let neighbors = self.neighbor_lists();
        let mut dist: Vec<Option<usize>> = vec![None; self.ids.len()];
        let mut queue = VecDeque::new();
        for (u, inc) in self.incident.iter().enumerate() {
            if inc.len() == 1 {
                dist[u] = Some(0);
                queue.push_back(u);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            if d == depth {
                continue;
            }
            for &v in &neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        let mut out: Vec<String> = (0..self.ids.len())
            .filter(|&u| dist[u].is_some())
            .map(|u| self.ids[u].clone())
            .collect();
        out.sort_unstable();
        out
    }

    /// Copy restricted to `ids` and the edges between them.
    pub fn subgraph<'a, I>(&self, ids: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut keep = vec![false; self.ids.len()];
        for id in ids {
            keep[self.idx(id)?] = true;
        }
        let mut g = Graph::new();
        for (i, id) in self.ids.iter().enumerate() {
            if keep[i] {
                g.ensure_node(id)?;
            }
        }
        for (e, &(s, t)) in self.edges.iter().zip(&self.ends) {
            if keep[s] && keep[t] {
                g.add_edge_with_context(
                    &e.source,
                    &e.target,
                    &e.relation,
                    e.weight,
                    e.context.clone(),
                )?;
            }
        }
        Ok(g)
    }

    /// Minimum-cost node sequence from `a` to `b`, both inclusive.
    ///
    /// Each hop costs `1 + heuristic(from, to)` (heuristic defaults to 0).
    /// Among equal-cost paths the lexicographically smallest id sequence wins.
    pub fn shortest_path(
        &self,
        a: &str,
        b: &str,
        heuristic: Option<Heuristic<'_>>,
    ) -> Result<Option<Vec<String>>> {
        let src = self.idx(a)?;
        let dst = self.idx(b)?;
        let n = self.ids.len();

        // Rank of each node in id order: comparing rank sequences compares id
        // sequences lexicographically.
        let mut by_rank: Vec<usize> = (0..n).collect();
        by_rank.sort_by(|&x, &y| self.ids[x].cmp(&self.ids[y]));
        let mut rank = vec![0u32; n];
        for (r, &i) in by_rank.iter().enumerate() {
            rank[i] = r as u32;
        }

        #[derive(PartialEq)]
        struct Label {
            cost: f64,
            path: Vec<u32>,
        }
        impl Eq for Label {}
        impl Ord for Label {
            fn cmp(&self, other: &Self) -> Ordering {
                self.cost
                    .total_cmp(&other.cost)
                    .then_with(|| self.path.cmp(&other.path))
            }
        }
        impl PartialOrd for Label {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        let neighbors = self.neighbor_lists();
        let mut best: Vec<Option<Label>> = (0..n).map(|_| None).collect();
        let mut settled = vec![false; n];
        let mut heap = BinaryHeap::new();
        best[src] = Some(Label {
            cost: 0.0,
            path: vec![rank[src]],
        });
        heap.push(Reverse(Label {
            cost: 0.0,
            path: vec![rank[src]],
        }));

        while let Some(Reverse(label)) = heap.pop() {
            let u = by_rank[*label.path.last().expect("non-empty path") as usize];
            if settled[u] || best[u].as_ref() != Some(&label) {
                continue;
            }
            settled[u] = true;
            if u == dst {
                let path = label
                    .path
                    .iter()
                    .map(|&r| self.ids[by_rank[r as usize]].clone())
                    .collect();
                return Ok(Some(path));
            }
            for &v in &neighbors[u] {
                if settled[v] {
                    continue;
                }
                let extra = heuristic.map_or(0.0, |h| h(&self.ids[u], &self.ids[v]));
                if !extra.is_finite() || extra < 0.0 {
                    return Err(Error::invalid(format!(
                        "heuristic returned {extra} for {} -> {}",
                        self.ids[u], self.ids[v]
                    )));
                }
                let mut path = label.path.clone();
                path.push(rank[v]);
                let cand = Label {
                    cost: label.cost + 1.0 + extra,
                    path,
                };
                if best[v].as_ref().is_none_or(|cur| cand < *cur) {
                    heap.push(Reverse(Label {
                        cost: cand.cost,
                        path: cand.path.clone(),
                    }));
                    best[v] = Some(cand);
                }
            }
        }
        Ok(None)
    }

    /// Brandes betweenness over unweighted undirected shortest paths,
    /// normalized by the number of unordered pairs excluding the node,
    /// `(n-1)(n-2)/2`. Graphs with fewer than three nodes score all zero.
    pub fn betweenness_centrality(&self) -> BTreeMap<String, f64> {
        let n = self.ids.len();
        let mut scores = vec![0.0f64; n];
        if n >= 3 {
            let neighbors = self.neighbor_lists();
            for s in 0..n {
                let mut stack = Vec::with_capacity(n);
                let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
                let mut sigma = vec![0.0f64; n];
                let mut dist = vec![usize::MAX; n];
                sigma[s] = 1.0;
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(v) = queue.pop_front() {
                    stack.push(v);
                    for &w in &neighbors[v] {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                        if dist[w] == dist[v] + 1 {
                            sigma[w] += sigma[v];
                            preds[w].push(v);
                        }
                    }
                }
                let mut delta = vec![0.0f64; n];
                while let Some(w) = stack.pop() {
                    for &v in &preds[w] {
                        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                    }
                    if w != s {
                        scores[w] += delta[w];
                    }
                }
            }
            // Each unordered pair was visited from both ends.
            let scale = ((n - 1) * (n - 2)) as f64;
            for x in &mut scores {
                *x /= scale;
            }
        }
        self.ids.iter().cloned().zip(scores).collect()
    }

    /// Power iteration on the symmetric weighted adjacency matrix.
    ///
    /// The iteration multiplies by `A + I` (same dominant eigenvector as `A`,
    /// but it does not oscillate on bipartite graphs) and L2-normalizes each
    /// step. Nodes without weighted links score 0; a graph with no links at
    /// all gets the uniform unit vector.
    pub fn eigenvector_centrality(
        &self,
        iterations: usize,
        tolerance: f64,
    ) -> BTreeMap<String, f64> {
        let n = self.ids.len();
        let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        for (e, &(s, t)) in self.edges.iter().zip(&self.ends) {
            if s != t && e.weight > 0.0 {
                adj[s].push((t, e.weight));
                adj[t].push((s, e.weight));
            }
        }
        let linked: Vec<bool> = adj.iter().map(|a| !a.is_empty()).collect();
        let m = linked.iter().filter(|&&l| l).count();
        let x: Vec<f64> = if m == 0 {
            vec![1.0 / (n as f64).sqrt(); n]
        } else {
            let mut x: Vec<f64> = linked
                .iter()
                .map(|&l| if l { 1.0 / (m as f64).sqrt() } else { 0.0 })
                .collect();
            for _ in 0..iterations {
                let mut next = x.clone();
                for (u, row) in adj.iter().enumerate() {
                    for &(v, w) in row {
                        next[u] += w * x[v];
                    }
                }
                let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm > 0.0 {
                    next.iter_mut().for_each(|v| *v /= norm);
                }
                let diff = next
                    .iter()
                    .zip(&x)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                x = next;
                if diff < tolerance {
                    break;
                }
            }
            x
        };
        self.ids.iter().cloned().zip(x).collect()
    }

    /// Graphviz DOT text. Nodes sorted by id, edges by (source, target).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph g {\n");
        for id in self.sorted_ids() {
            let _ = writeln!(out, "  \"{}\";", escape_dot(id));
        }
        let mut edges: Vec<&Edge> = self.edges.iter().collect();
        edges.sort_by(|a, b| (&a.source, &a.target).cmp(&(&b.source, &b.target)));
        for e in edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{} ({})\", relation=\"{}\", weight={}];",
                escape_dot(&e.source),
                escape_dot(&e.target),
                escape_dot(&e.relation),
                e.weight,
                escape_dot(&e.relation),
                e.weight
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out
}
