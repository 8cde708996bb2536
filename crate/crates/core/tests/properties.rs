mod common;

use std::collections::{BTreeMap, BTreeSet};

use divergent::graph::Graph;
use divergent::rng::seeded;
use proptest::prelude::*;

fn graph_from(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_node(&format!("n{i}")).unwrap();
    }
    for &(a, b) in edges {
        let (a, b) = (a % n, b % n);
        if a != b {
            g.add_edge(&format!("n{a}"), &format!("n{b}"), "is-related-to", 1.0)
                .unwrap();
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (
        1usize..10,
        prop::collection::vec((0usize..10, 0usize..10), 0..25),
    )
        .prop_map(|(n, e)| graph_from(n, &e))
}

fn multiset<T: Ord + Clone>(xs: &[T]) -> BTreeMap<T, usize> {
    let mut m = BTreeMap::new();
    for x in xs {
        *m.entry(x.clone()).or_insert(0) += 1;
    }
    m
}

mod graph {
    use super::*;

    proptest! {
        #[test]
        fn flatten_grows_with_depth(g in arb_graph(), start in 0usize..10, d in 0usize..5) {
            let x = format!("n{}", start % g.node_count());
            let small: BTreeSet<String> = g.flatten(&x, d, None).unwrap().into_iter().collect();
            let big: BTreeSet<String> = g.flatten(&x, d + 1, None).unwrap().into_iter().collect();
            prop_assert!(small.is_subset(&big));
        }

        #[test]
        fn extra_edge_never_lengthens_paths(g in arb_graph(), a in 0usize..10, b in 0usize..10, e in (0usize..10, 0usize..10)) {
            let n = g.node_count();
            let (a, b) = (format!("n{}", a % n), format!("n{}", b % n));
            let before = g.shortest_path(&a, &b, None).unwrap().map(|p| p.len());
            let mut h = g.clone();
            let (s, t) = (e.0 % n, e.1 % n);
            if s != t {
                h.add_edge(&format!("n{s}"), &format!("n{t}"), "is-related-to", 1.0).unwrap();
            }
            let after = h.shortest_path(&a, &b, None).unwrap().map(|p| p.len());
            match (before, after) {
                (Some(x), Some(y)) => prop_assert!(y <= x),
                (Some(_), None) => prop_assert!(false, "path disappeared"),
                _ => {}
            }
        }

        #[test]
        fn leaves_have_zero_betweenness(g in arb_graph()) {
            let bc = g.betweenness_centrality();
            for id in g.sorted_ids() {
                if g.node(id).unwrap().links().len() <= 1 {
                    prop_assert_eq!(bc[id], 0.0);
                }
            }
        }

        #[test]
        fn halo_subgraph_is_connected(g in arb_graph(), start in 0usize..10, d in 0usize..4) {
            let x = format!("n{}", start % g.node_count());
            let halo = g.flatten(&x, d, None).unwrap();
            let sub = g.subgraph(halo.iter().map(String::as_str)).unwrap();
            prop_assert!(sub.contains(&x));
            let reach: BTreeSet<String> = sub.flatten(&x, sub.node_count(), None).unwrap().into_iter().collect();
            prop_assert_eq!(reach.len(), sub.node_count());
        }

        #[test]
        fn centrality_is_deterministic(g in arb_graph()) {
            let copy = g.clone();
            prop_assert_eq!(g.betweenness_centrality(), copy.betweenness_centrality());
            prop_assert_eq!(g.eigenvector_centrality(100, 1e-9), copy.eigenvector_centrality(100, 1e-9));
        }
    }
}

mod concept {
    use super::*;
    use divergent::concept::{CommonsenseNetwork, RelationKind};

    /// Concepts c0..c5 linked by is-related-to, properties p0..p3 attached
    /// with is-property-of and sometimes also related to other concepts.
    fn arb_network() -> impl Strategy<Value = CommonsenseNetwork> {
        (
            prop::collection::vec((0usize..6, 0usize..6), 1..10),
            prop::collection::vec((0usize..4, 0usize..6), 0..6),
            prop::collection::vec((0usize..4, 0usize..6), 1..10),
        )
            .prop_map(|(links, loose, props)| {
                let mut net = CommonsenseNetwork::new();
                for (a, b) in links {
                    if a != b {
                        net.add_relation(
                            &format!("c{a}"),
                            RelationKind::IsRelatedTo,
                            &format!("c{b}"),
                            5,
                            None,
                        )
                        .unwrap();
                    }
                }
                for (p, c) in loose {
                    net.add_relation(
                        &format!("p{p}"),
                        RelationKind::IsRelatedTo,
                        &format!("c{c}"),
                        5,
                        None,
                    )
                    .unwrap();
                }
                for (p, c) in props {
                    net.add_relation(
                        &format!("p{p}"),
                        RelationKind::IsPropertyOf,
                        &format!("c{c}"),
                        5,
                        None,
                    )
                    .unwrap();
                }
                net
            })
    }

    fn ids(net: &CommonsenseNetwork) -> Vec<String> {
        net.graph()
            .sorted_ids()
            .into_iter()
            .map(String::from)
            .collect()
    }

    proptest! {
        #[test]
        fn similarity_bounded(net in arb_network(), k in 1usize..4) {
            let ids = ids(&net);
            for a in &ids {
                for b in &ids {
                    let s = net.similarity(a, b, k, None).unwrap();
                    prop_assert!(s >= 0.0 && s <= k as f64, "{} {} {}", a, b, s);
                }
            }
        }

        #[test]
        fn properties_lie_in_halo(net in arb_network()) {
            for c in ids(&net) {
                let halo: BTreeSet<String> = net.halo(&c, 2).unwrap().into_iter().collect();
                for p in net.properties(&c).unwrap() {
                    prop_assert!(halo.contains(&p));
                    prop_assert!(net.is_property(&p));
                }
            }
        }

        #[test]
        fn neighbors_permute_candidates(net in arb_network(), probe in 0usize..6) {
            let ids = ids(&net);
            let probe = &ids[probe % ids.len()];
            let got = net.nearest_neighbors(probe, &ids, 2, None).unwrap();
            let names: Vec<String> = got.into_iter().map(|(c, _)| c).collect();
            prop_assert_eq!(multiset(&names), multiset(&ids));
        }

        /// Turning a related-to edge on the chosen top-1 property path into an
        /// is-property-of edge, when its source already is a property, keeps
        /// the property lists and cannot lower similarity.
        #[test]
        fn property_edge_on_path_never_lowers_similarity(net in arb_network(), a in 0usize..6, b in 0usize..6) {
            let ids = ids(&net);
            let (a, b) = (&ids[a % ids.len()], &ids[b % ids.len()]);
            let before = net.similarity(a, b, 1, None).unwrap();
            let (Some(p1), Some(p2)) = (net.properties(a).unwrap().first().cloned(), net.properties(b).unwrap().first().cloned()) else {
                return Ok(());
            };
            let g = net.graph();
            let prefer = |x: &str, y: &str| match g.edge_between(x, y) {
                Some(e) if e.relation == "is-property-of" => 0.0,
                _ => 1.0,
            };
            let Some(path) = g.shortest_path(&p1, &p2, Some(&prefer)).unwrap() else { return Ok(()) };
            let target = path.windows(2).find_map(|w| {
                let e = g.edge_between(&w[0], &w[1])?;
                (e.relation != "is-property-of" && net.is_property(&e.source))
                    .then(|| (e.source.clone(), e.target.clone()))
            });
            let Some((s, t)) = target else { return Ok(()) };
            let mut changed = net.clone();
            changed.add_relation(&s, RelationKind::IsPropertyOf, &t, 5, None).unwrap();
            let after = changed.similarity(a, b, 1, None).unwrap();
            prop_assert!(after >= before, "{} -> {}", before, after);
        }
    }

    #[test]
    fn fixture_similarity_is_symmetric() {
        let net = CommonsenseNetwork::from_csv(common::read_fixture("perception.csv").as_bytes())
            .unwrap();
        let ids = ids(&net);
        for a in &ids {
            for b in &ids {
                let (pa, pb) = (
                    net.properties(a).unwrap().len(),
                    net.properties(b).unwrap().len(),
                );
                for k in 1..=3 {
                    if pa.min(k) == pb.min(k) {
                        let ab = net.similarity(a, b, k, None).unwrap();
                        let ba = net.similarity(b, a, k, None).unwrap();
                        assert!((ab - ba).abs() < 1e-12, "{a} {b} {k}: {ab} vs {ba}");
                    }
                }
            }
        }
    }
}

mod vecspace {
    use super::*;
    use divergent::vecspace::*;

    const FEATURES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

    fn arb_vector() -> impl Strategy<Value = SparseVector> {
        prop::collection::vec(0.0f64..5.0, 6).prop_map(|ws| {
            FEATURES
                .iter()
                .zip(ws)
                .filter(|(_, w)| *w > 0.5)
                .map(|(f, w)| (*f, w))
                .collect()
        })
    }

    fn arb_nonzero() -> impl Strategy<Value = SparseVector> {
        arb_vector().prop_filter("non-zero", |v| !v.is_empty())
    }

    proptest! {
        #[test]
        fn cosine_range(a in arb_vector(), b in arb_vector()) {
            let c = cosine_similarity(&a, &b);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        }

        #[test]
        fn self_cosine_is_one(v in arb_nonzero()) {
            prop_assert!((cosine_similarity(&v, &v) - 1.0).abs() < 1e-12);
        }

        #[test]
        fn tfidf_keeps_support(vs in prop::collection::vec(arb_vector(), 1..8)) {
            let mut w = vs.clone();
            apply_tfidf(&mut w);
            for (a, b) in vs.iter().zip(&w) {
                prop_assert_eq!(a.features().collect::<Vec<_>>(), b.features().collect::<Vec<_>>());
                prop_assert!(b.iter().all(|(_, x)| x != 0.0));
            }
        }

        #[test]
        fn kmeans_objective_non_increasing(vs in prop::collection::vec(arb_nonzero(), 2..16), k in 1usize..4, seed in 0u64..1000) {
            let vs: Vec<SparseVector> = vs.iter().map(SparseVector::normalized).collect();
            let k = k.min(vs.len());
            let km = kmeans(&vs, k, 50, seed).unwrap();
            for w in km.objective.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-12, "{:?}", km.objective);
            }
        }

        #[test]
        fn hierarchical_partitions(vs in prop::collection::vec(arb_vector(), 1..12), k in 1usize..6, complete in any::<bool>()) {
            let linkage = if complete { Linkage::Complete } else { Linkage::Single };
            let n = vs.len();
            let one = hierarchical(&vs, 1, linkage).unwrap();
            prop_assert_eq!(one.clusters, vec![(0..n).collect::<Vec<_>>()]);
            let k = k.min(n);
            let d = hierarchical(&vs, k, linkage).unwrap();
            prop_assert_eq!(d.clusters.len(), k);
            let mut all: Vec<usize> = d.clusters.concat();
            all.sort_unstable();
            prop_assert_eq!(all, (0..n).collect::<Vec<_>>());
        }

        #[test]
        fn information_gain_in_unit_range(docs in prop::collection::vec((0usize..3, prop::collection::vec(0usize..6, 0..5)), 1..12)) {
            let norm = TextNormalizer::plain();
            let corpus = Corpus::from_documents(docs.iter().enumerate().map(|(i, (l, ws))| {
                let text: Vec<&str> = ws.iter().map(|&w| FEATURES[w]).collect();
                Document::new(i.to_string(), Some(format!("L{l}")), &text.join(" "), &norm)
            }));
            for f in FEATURES {
                let ig = corpus.information_gain(f).unwrap();
                prop_assert!((0.0..=1.0 + 1e-12).contains(&ig), "{}", ig);
            }
        }

        #[test]
        fn knn_is_scale_free(train in prop::collection::vec((any::<bool>(), arb_nonzero()), 1..8), q in arb_nonzero(), c in 0.01f64..100.0, k in 1usize..5) {
            let model = KnnClassifier::new(train.into_iter().map(|(l, v)| (if l { "X" } else { "Y" }.to_string(), v)).collect()).unwrap();
            prop_assert_eq!(model.classify(&q, k).unwrap(), model.classify(&q.scaled(c), k).unwrap());
        }
    }
}

mod metrics {
    use super::*;
    use divergent::metrics::*;

    proptest! {
        #[test]
        fn f1_between_precision_and_recall(tp in 1u64..100, fp in 0u64..100, fn_ in 0u64..100, tn in 0u64..100) {
            let p = prf(ConfusionCounts { tp, tn, fp, fn_ });
            let lo = p.precision.min(p.recall);
            let hi = p.precision.max(p.recall);
            prop_assert!(p.f1 >= lo - 1e-12 && p.f1 <= hi + 1e-12);
        }

        #[test]
        fn kappa_ignores_category_order(rows in prop::collection::vec(prop::collection::vec(0u64..5, 3), 2..8), perm in Just(vec![2usize, 0, 1])) {
            // pad every row to the same rater count
            let raters = rows.iter().map(|r| r.iter().sum::<u64>()).max().unwrap().max(2);
            let rows: Vec<Vec<u64>> = rows.into_iter().map(|mut r| { let s: u64 = r.iter().sum(); r[0] += raters - s; r }).collect();
            let permuted: Vec<Vec<u64>> = rows.iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
            let a = fleiss_kappa(&RatingMatrix::new(rows).unwrap());
            let b = fleiss_kappa(&RatingMatrix::new(permuted).unwrap());
            match (a, b) {
                (Ok(x), Ok(y)) => prop_assert!((x - y).abs() < 1e-12),
                (Err(_), Err(_)) => {}
                other => prop_assert!(false, "{:?}", other),
            }
        }

        #[test]
        fn sma_of_constant(c in -10.0f64..10.0, n in 1usize..30, w in 1usize..10) {
            let s = sma(&vec![c; n], w.min(n)).unwrap();
            prop_assert!(s.iter().all(|x| (x - c).abs() < 1e-12));
        }
    }
}

mod sentiment {
    use super::*;
    use divergent::graph::Graph;
    use divergent::sentiment::expand::SYNONYM;
    use divergent::sentiment::*;

    const WORDS: [&str; 8] = [
        "goed", "slecht", "echt", "heel", "niet", "boek", "film", "mooi",
    ];

    fn lexicon(pol: &[f64], intensities: bool) -> Lexicon {
        let mut entries = vec![
            LexiconEntry::new("goed", pol[0], 0.8, 1.0),
            LexiconEntry::new("slecht", pol[1], 0.8, 1.0),
            LexiconEntry::new("mooi", pol[2], 0.8, 1.0),
        ];
        if intensities {
            entries.push(LexiconEntry::new("echt", 0.0, 0.2, 3.0));
            entries.push(LexiconEntry::new("heel", 0.0, 0.2, 2.5));
        }
        Lexicon::from_senses(entries).unwrap()
    }

    fn arb_text() -> impl Strategy<Value = String> {
        prop::collection::vec(prop::collection::vec(0usize..WORDS.len(), 1..8), 1..5).prop_map(
            |ss| {
                ss.iter()
                    .map(|s| s.iter().map(|&w| WORDS[w]).collect::<Vec<_>>().join(" ") + ".")
                    .collect::<Vec<_>>()
                    .join(" ")
            },
        )
    }

    fn dist(ws: &[f64]) -> BTreeMap<String, f64> {
        let s: f64 = ws.iter().sum();
        ws.iter()
            .enumerate()
            .map(|(i, w)| (format!("k{i}"), w / s))
            .collect()
    }

    proptest! {
        #[test]
        fn polarity_clamped(text in arb_text(), pol in prop::collection::vec(-1.0f64..=1.0, 3)) {
            let s = score_text(&text, &lexicon(&pol, true), &ScoreOptions::default());
            prop_assert!((-1.0..=1.0).contains(&s.polarity));
            for m in &s.matches {
                prop_assert!((-1.0..=1.0).contains(&m.value));
            }
        }

        #[test]
        fn scaling_keeps_confident_labels(text in arb_text(), pol in prop::collection::vec(-0.5f64..=0.5, 3), c in 1.0f64..=2.0) {
            let opts = ScoreOptions::default();
            let p = score_text(&text, &lexicon(&pol, false), &opts).polarity;
            let scaled: Vec<f64> = pol.iter().map(|x| x * c).collect();
            let q = score_text(&text, &lexicon(&scaled, false), &opts).polarity;
            if p.abs() >= DEFAULT_THRESHOLD {
                prop_assert_eq!(classify_polarity(p, DEFAULT_THRESHOLD), classify_polarity(q, DEFAULT_THRESHOLD));
            }
        }

        #[test]
        fn entity_windows_nest(sentences in prop::collection::vec((any::<bool>(), prop::collection::vec(0usize..WORDS.len(), 1..6)), 1..8)) {
            let text = sentences
                .iter()
                .map(|(e, ws)| {
                    let mut s: Vec<&str> = ws.iter().map(|&w| WORDS[w]).collect();
                    if *e { s.insert(0, "Jansen"); }
                    s.join(" ") + "."
                })
                .collect::<Vec<_>>()
                .join(" ");
            let lex = lexicon(&[0.6, -0.7, 0.3], true);
            let at = |w: usize| {
                let opts = EntityOptions { window: w, ..EntityOptions::default() };
                let mut v = entity_sentiment(&text, "Jansen", &lex, &opts).unwrap();
                v.sort_by(f64::total_cmp);
                v.into_iter().map(f64::to_bits).collect::<Vec<_>>()
            };
            let (w0, w1, w2) = (multiset(&at(0)), multiset(&at(1)), multiset(&at(2)));
            for (small, big) in [(&w0, &w1), (&w1, &w2)] {
                for (v, n) in small {
                    prop_assert!(big.get(v).copied().unwrap_or(0) >= *n);
                }
            }
        }

        #[test]
        fn coverage_bias_is_a_metric(a in prop::collection::vec(0.01f64..1.0, 4), b in prop::collection::vec(0.01f64..1.0, 4), c in prop::collection::vec(0.01f64..1.0, 4)) {
            let (a, b, c) = (dist(&a), dist(&b), dist(&c));
            let ab = coverage_bias(&a, &b).unwrap();
            prop_assert!((ab - coverage_bias(&b, &a).unwrap()).abs() < 1e-15);
            prop_assert!(ab <= coverage_bias(&a, &c).unwrap() + coverage_bias(&c, &b).unwrap() + 1e-12);
        }

        #[test]
        fn expansion_keeps_seeds(pol in prop::collection::vec(-1.0f64..=1.0, 3), edges in prop::collection::vec((0usize..6, 0usize..6, any::<bool>()), 0..12)) {
            let seeds = lexicon(&pol, false);
            let names = ["goed", "slecht", "mooi", "fijn", "lelijk", "prima"];
            let mut g = Graph::new();
            for (a, b, syn) in edges {
                if a != b {
                    g.add_edge(names[a], names[b], if syn { SYNONYM } else { divergent::sentiment::expand::ANTONYM }, 1.0).unwrap();
                }
            }
            let x = expand_spreading(&seeds, &g, 3).unwrap();
            for e in seeds.iter() {
                prop_assert_eq!(x.lexicon.get(&e.word), Some(e));
            }
        }
    }
}

mod evolve {
    use super::*;
    use divergent::evolve::*;
    use divergent::rng::SimRng;

    /// Numbers that are their own fitness, with identity crossover.
    struct Frozen;

    impl GaHooks for Frozen {
        type Genome = u32;
        fn fitness(&self, g: &u32) -> f64 {
            *g as f64 / 100.0
        }
        fn crossover(&self, a: &u32, _: &u32, _: f64, _: &mut SimRng) -> u32 {
            *a
        }
        fn mutate(&self, g: &u32, _: &mut SimRng) -> u32 {
            g + 1
        }
        fn fresh(&self, _: &mut SimRng) -> u32 {
            0
        }
    }

    fn arb_config() -> impl Strategy<Value = GaConfig> {
        (0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0, 0.0f64..=1.0).prop_map(
            |(crossover, mutation, elitism, injection)| GaConfig {
                crossover,
                mutation,
                elitism,
                injection,
            },
        )
    }

    proptest! {
        #[test]
        fn size_and_generation_are_tracked(cfg in arb_config(), size in 1usize..30, gens in 0usize..6, seed in any::<u64>()) {
            let (mut pop, mut rng) = onemax_population(size, 12, seed).unwrap();
            let hooks = OneMax { length: 12 };
            for _ in 0..gens {
                pop.evolve(&cfg, &hooks, &mut rng).unwrap();
                prop_assert_eq!(pop.len(), size);
            }
            prop_assert_eq!(pop.generation, gens as u64);
        }

        #[test]
        fn full_elitism_preserves_genomes(genomes in prop::collection::vec(0u32..=99, 1..30), seed in any::<u64>()) {
            let cfg = GaConfig { crossover: 0.5, mutation: 0.0, elitism: 1.0, injection: 0.0 };
            let mut pop = Population::new(genomes.clone()).unwrap();
            let mut rng = seeded(seed);
            for _ in 0..3 {
                pop.evolve(&cfg, &Frozen, &mut rng).unwrap();
            }
            prop_assert_eq!(multiset(&pop.candidates), multiset(&genomes));
        }
    }
}

mod antsim {
    use super::*;
    use divergent::antsim::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn food_is_conserved(seed in any::<u64>(), colonies in 1usize..4) {
            let mut w = World::antagonism(seed, colonies, 10, 4);
            let total = w.total_food();
            for _ in 0..300 {
                w.step().unwrap();
                prop_assert_eq!(w.total_food(), total);
                for c in &w.colonies {
                    for a in &c.ants {
                        prop_assert!(a.v.iter().all(|v| v.abs() <= w.speed), "{:?}", a.v);
                    }
                }
            }
        }

        #[test]
        fn runs_repeat(seed in any::<u64>()) {
            let mk = || {
                let mut w = World::single(seed, 8, 3);
                let mut out = Vec::new();
                run(&mut w, 100, &mut out, TraceOptions { positions: true }).unwrap();
                out
            };
            prop_assert_eq!(mk(), mk());
        }

        #[test]
        fn trails_fade_without_deposits(strengths in prop::collection::vec(0.0001f64..=1.0, 1..20)) {
            // one pheromone per ant, so each can be followed until it disappears
            let ants = strengths
                .iter()
                .map(|&s| Ant { trail: vec![Pheromone { x: 0.0, y: 0.0, strength: s }], ..Ant::new(0.0, 0.0, 0.0) })
                .collect();
            let mut c = Colony { x: 0.0, y: 0.0, radius: 10.0, ants, sources: vec![], hoard: 0 };
            let mut prev = strengths.clone();
            for _ in 0..1000 {
                c.evaporate_trails();
                for (a, p) in c.ants.iter().zip(&mut prev) {
                    let now = a.trail.first().map_or(0.0, |x| x.strength);
                    prop_assert!(now < *p || *p == 0.0);
                    *p = now;
                }
            }
            prop_assert_eq!(c.pheromone_count(), 0);
        }
    }
}

mod dtscore {
    use super::*;
    use divergent::dtscore::*;
    use divergent::vecspace::TextNormalizer;

    const WORDS: [&str; 7] = ["door", "lock", "window", "kick", "call", "with", "brick"];

    fn arb_answers() -> impl Strategy<Value = Vec<Answer>> {
        prop::collection::vec(
            (0usize..6, prop::collection::vec(0usize..WORDS.len(), 1..4)),
            2..40,
        )
        .prop_map(|rows| {
            rows.into_iter()
                .map(|(p, ws)| Answer {
                    participant: format!("p{p}"),
                    text: ws.iter().map(|&w| WORDS[w]).collect::<Vec<_>>().join(" "),
                    pnp: None,
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn score_bounds(answers in arb_answers(), k in 1usize..8, drop in 0usize..3) {
            let model = categorize(&answers, k, drop, &TextNormalizer::english()).unwrap();
            let sum: f64 = model.p.values().sum();
            prop_assert!((sum - 1.0).abs() < 1e-9);
            for s in score_all(&answers, &model, &default_prepositions()).unwrap() {
                prop_assert!(s.flexibility <= s.fluency);
                prop_assert!((0.0..=2.0).contains(&s.originality));
            }
        }

        #[test]
        fn flags_ignore_offsets(totals in prop::collection::vec(0u32..50, 2..20), c in 0u32..100) {
            let mk = |off: u32| -> Vec<DtScores> {
                totals.iter().enumerate().map(|(i, &t)| DtScores {
                    participant: i.to_string(),
                    fluency: 0,
                    flexibility: 0,
                    originality: 0.0,
                    elaboration: 0,
                    total: (t + off) as f64,
                }).collect()
            };
            prop_assert_eq!(flag_creative(&mk(0)).unwrap(), flag_creative(&mk(c)).unwrap());
        }
    }
}
