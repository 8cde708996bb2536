mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use divergent::antsim::{self, TraceOptions, World};
use divergent::concept::{novelty_rank, parse_novelty_csv, CommonsenseNetwork};
use divergent::dtscore;
use divergent::evolve::{self, GaConfig, OneMax};
use divergent::graph::Graph;
use divergent::sentiment::{self as senti, Cooccurrence, EntityOptions, Lexicon, ScoreOptions};
use divergent::vecspace::{self as vs, Corpus, KnnClassifier, Linkage, TextNormalizer};

use table::{Format, Table};

#[derive(Parser)]
#[command(
    name = "divergent",
    version,
    about = "Computational creativity toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Query a commonsense network.
    Concept(ConceptArgs),
    /// Label documents with k-nearest-neighbor voting.
    Classify(ClassifyArgs),
    /// Partition documents with k-means or hierarchical clustering.
    Cluster(ClusterArgs),
    /// Lexicon-based sentiment scoring and evaluation.
    Sentiment(SentimentArgs),
    /// Coverage, statement bias and sentiment timelines for news sources.
    Bias(BiasArgs),
    /// OneMax genetic algorithm demo.
    Ga(GaArgs),
    /// Ant colony foraging simulation.
    Antsim(AntsimArgs),
    /// Score a divergent-thinking answer file.
    Dtscore(DtscoreArgs),
}

/// A problem with the invocation rather than with the data.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    let f = cli.format;
    match cli.command {
        Command::Concept(a) => concept(a, f, out),
        Command::Classify(a) => classify(a, f, out),
        Command::Cluster(a) => cluster(a, f, out),
        Command::Sentiment(a) => sentiment(a, f, out),
        Command::Bias(a) => bias(a, f, out),
        Command::Ga(a) => ga(a, f, out),
        Command::Antsim(a) => ants(a, f, out),
        Command::Dtscore(a) => dt(a, f, out),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(f))
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for line in open(path)?.lines() {
        let line = line.with_context(|| format!("reading {}", path.display()))?;
        let line = line.trim();
        if !line.is_empty() && !line.starts_with('#') {
            out.push(line.to_string());
        }
    }
    Ok(out)
}

fn normalizer(plain: bool) -> TextNormalizer {
    if plain {
        TextNormalizer::plain()
    } else {
        TextNormalizer::english()
    }
}

fn list(column: &'static str, items: impl IntoIterator<Item = String>) -> Table {
    let mut t = Table::new(&[column]);
    for i in items {
        t.push(vec![json!(i)]);
    }
    t
}

// concept

#[derive(Args)]
#[command(group = clap::ArgGroup::new("query").required(true).args(["neighbors", "halo", "field", "properties", "novelty"]))]
struct ConceptArgs {
    /// Network CSV: concept1,relation,concept2[,context,weight].
    #[arg(long, required_unless_present = "novelty")]
    network: Option<PathBuf>,
    /// Rank the candidates by similarity to this concept.
    #[arg(long, value_name = "PROBE", requires = "candidates")]
    neighbors: Option<String>,
    /// One candidate concept per line.
    #[arg(long, value_name = "FILE")]
    candidates: Option<PathBuf>,
    /// Bias the similarity search through this concept.
    #[arg(long, value_name = "ID")]
    fixation: Option<String>,
    /// Properties compared per concept.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Nodes within `--halo-depth` hops of a concept.
    #[arg(long, value_name = "ID")]
    halo: Option<String>,
    #[arg(long, default_value_t = 2)]
    halo_depth: usize,
    /// The fringe of a concept's is-a taxonomy.
    #[arg(long, value_name = "ID")]
    field: Option<String>,
    #[arg(long, default_value_t = 3)]
    field_depth: usize,
    #[arg(long, default_value_t = 2)]
    fringe_depth: usize,
    /// Properties of a concept, most central first.
    #[arg(long, value_name = "ID")]
    properties: Option<String>,
    /// idea,count CSV; rarest ideas first.
    #[arg(long, value_name = "FILE")]
    novelty: Option<PathBuf>,
}

fn concept(a: ConceptArgs, f: Format, out: &mut impl Write) -> Result<()> {
    if let Some(path) = &a.novelty {
        let ideas = parse_novelty_csv(open(path)?)?;
        let mut t = Table::new(&["idea", "count"]);
        for (idea, n) in novelty_rank(ideas) {
            t.push(vec![json!(idea), json!(n)]);
        }
        return Ok(t.write(f, out)?);
    }
    let path = a.network.as_deref().expect("required by clap");
    let net = CommonsenseNetwork::from_csv(open(path)?)
        .with_context(|| format!("loading {}", path.display()))?;
    let table = if let Some(probe) = &a.neighbors {
        let candidates = read_lines(a.candidates.as_deref().expect("required by clap"))?;
        let mut t = Table::new(&["candidate", "similarity"]);
        for (c, s) in net.nearest_neighbors(probe, &candidates, a.k, a.fixation.as_deref())? {
            t.push(vec![json!(c), json!(s)]);
        }
        t
    } else if let Some(c) = &a.halo {
        list("node", net.halo(c, a.halo_depth)?)
    } else if let Some(c) = &a.field {
        list("node", net.field(c, a.field_depth, a.fringe_depth)?)
    } else if let Some(c) = &a.properties {
        list("property", net.properties(c)?)
    } else {
        unreachable!("clap requires one query")
    };
    Ok(table.write(f, out)?)
}

// classify and cluster

#[derive(Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["test", "query"]))]
struct ClassifyArgs {
    /// Labeled training corpus: label<TAB>text per line.
    #[arg(long)]
    train: PathBuf,
    /// Documents to label, one per line; an optional label column is
    /// reported alongside the prediction.
    #[arg(long)]
    test: Option<PathBuf>,
    /// A single document given inline.
    #[arg(long)]
    query: Option<String>,
    /// Neighbors that vote.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Lowercase only; no stopwords or lemmas.
    #[arg(long)]
    plain: bool,
}

fn classify(a: ClassifyArgs, f: Format, out: &mut impl Write) -> Result<()> {
    let norm = normalizer(a.plain);
    let train = Corpus::parse(open(&a.train)?, &norm)
        .with_context(|| format!("loading {}", a.train.display()))?;
    let mut training = Vec::with_capacity(train.len());
    for d in train.documents() {
        let label = d
            .label
            .clone()
            .with_context(|| format!("training document {} has no label", d.id))?;
        training.push((label, d.vector.clone()));
    }
    let knn = KnnClassifier::new(training)?;
    let queries = match (&a.test, &a.query) {
        (Some(path), _) => Corpus::parse(open(path)?, &norm)
            .with_context(|| format!("loading {}", path.display()))?,
        (None, Some(text)) => Corpus::from_documents([vs::Document::new("1", None, text, &norm)]),
        (None, None) => unreachable!("clap requires an input"),
    };
    let mut t = Table::new(&["document", "expected", "predicted"]);
    for d in queries.documents() {
        let label = knn.classify(&d.vector, a.k)?;
        t.push(vec![json!(d.id), json!(d.label), json!(label)]);
    }
    Ok(t.write(f, out)?)
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Kmeans,
    Hier,
}

#[derive(Clone, Copy, ValueEnum)]
enum LinkageArg {
    Single,
    Complete,
}

#[derive(Args)]
struct ClusterArgs {
    /// Corpus: [label<TAB>]text per line.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Number of clusters.
    #[arg(long)]
    k: usize,
    /// Required for k-means.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 100)]
    max_iterations: usize,
    #[arg(long, value_enum, default_value_t = LinkageArg::Complete)]
    linkage: LinkageArg,
    /// Reweight features by tf×idf before clustering.
    #[arg(long)]
    tfidf: bool,
    #[arg(long)]
    plain: bool,
}

fn cluster(a: ClusterArgs, f: Format, out: &mut impl Write) -> Result<()> {
    let mut corpus = Corpus::parse(open(&a.input)?, &normalizer(a.plain))
        .with_context(|| format!("loading {}", a.input.display()))?;
    if a.tfidf {
        corpus.apply_tfidf();
    }
    let vectors = corpus.vectors();
    let clusters = match a.algo {
        Algo::Kmeans => {
            let Some(seed) = a.seed else {
                return usage("k-means needs --seed");
            };
            vs::kmeans(&vectors, a.k, a.max_iterations, seed)?.clusters
        }
        Algo::Hier => {
            let linkage = match a.linkage {
                LinkageArg::Single => Linkage::Single,
                LinkageArg::Complete => Linkage::Complete,
            };
            vs::hierarchical(&vectors, a.k, linkage)?.clusters
        }
    };
    let docs = corpus.documents();
    let mut t = Table::new(&["document", "label", "cluster"]);
    for (c, members) in clusters.iter().enumerate() {
        for &i in members {
            t.push(vec![json!(docs[i].id), json!(docs[i].label), json!(c)]);
        }
    }
    Ok(t.write(f, out)?)
}

// sentiment and bias

#[derive(Clone, Copy, ValueEnum)]
enum Expand {
    Distributional,
    Spreading,
}

#[derive(Args)]
struct ScoreFlags {
    /// Tokens before a word in which a negator flips it.
    #[arg(long, default_value_t = 2)]
    negation_window: usize,
    /// Multiplier for sentences ending in `!`.
    #[arg(long)]
    exclamation_boost: Option<f64>,
    /// Score every word on its own polarity.
    #[arg(long)]
    no_intensity: bool,
}

impl ScoreFlags {
    fn options(&self) -> ScoreOptions {
        ScoreOptions {
            negation_window: self.negation_window,
            exclamation_boost: self.exclamation_boost,
            use_intensity: !self.no_intensity,
            ..ScoreOptions::default()
        }
    }
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("input").args(["text", "reviews", "articles"]))]
struct SentimentArgs {
    /// Lexicon CSV: word,polarity,subjectivity,intensity[,language].
    #[arg(long)]
    lexicon: PathBuf,
    /// Score a single text.
    #[arg(long)]
    text: Option<String>,
    /// stars<TAB>text per line; reports precision and recall.
    #[arg(long)]
    reviews: Option<PathBuf>,
    /// News articles as JSON lines; one polarity per article.
    #[arg(long)]
    articles: Option<PathBuf>,
    /// With --articles: windowed sentiment around this entity.
    #[arg(long, requires = "articles")]
    entity: Option<String>,
    /// Sentence window around entity mentions.
    #[arg(long, default_value_t = 2)]
    window: usize,
    /// Drop entity values smaller than this in magnitude.
    #[arg(long, default_value_t = 0.1)]
    noise_floor: f64,
    /// Positive at or above this polarity.
    #[arg(long, default_value_t = senti::DEFAULT_THRESHOLD, allow_negative_numbers = true)]
    threshold: f64,
    #[command(flatten)]
    score: ScoreFlags,
    /// Grow the lexicon before scoring. Without an input, lists the new words.
    #[arg(long, value_enum)]
    expand: Option<Expand>,
    /// adjective<TAB>noun<TAB>count per line.
    #[arg(long)]
    cooccurrence: Option<PathBuf>,
    #[arg(long, default_value_t = 100)]
    top_nouns: usize,
    /// Nearest unknown adjectives per seed.
    #[arg(long, default_value_t = 20)]
    expand_k: usize,
    /// word,relation,word CSV with is-same-as / is-opposite-of relations.
    #[arg(long)]
    relations: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    iterations: usize,
}

fn load_lexicon(path: &Path) -> Result<Lexicon> {
    Lexicon::from_csv(open(path)?).with_context(|| format!("loading {}", path.display()))
}

fn load_articles(path: &Path) -> Result<Vec<senti::ArticleRecord>> {
    senti::parse_articles(open(path)?).with_context(|| format!("loading {}", path.display()))
}

fn parse_cooccurrence(path: &Path) -> Result<Cooccurrence> {
    let mut cooc = Cooccurrence::new();
    for (i, line) in read_lines(path)?.iter().enumerate() {
        let f: Vec<&str> = line.split('\t').collect();
        let [adj, noun, n] = f[..] else {
            anyhow::bail!(
                "{}: row {}: expected 3 tab-separated fields",
                path.display(),
                i + 1
            );
        };
        let n: f64 = n
            .trim()
            .parse()
            .with_context(|| format!("{}: row {}: bad count {n:?}", path.display(), i + 1))?;
        *cooc
            .entry(adj.trim().to_string())
            .or_default()
            .entry(noun.trim().to_string())
            .or_default() += n;
    }
    Ok(cooc)
}

fn parse_relations(path: &Path) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, line) in read_lines(path)?.iter().enumerate() {
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        let [a, rel, b] = f[..] else {
            anyhow::bail!(
                "{}: row {}: expected word,relation,word",
                path.display(),
                i + 1
            );
        };
        g.add_edge(a, b, rel, 1.0)
            .with_context(|| format!("{}: row {}", path.display(), i + 1))?;
    }
    Ok(g)
}

fn sentiment(a: SentimentArgs, f: Format, out: &mut impl Write) -> Result<()> {
    let mut lexicon = load_lexicon(&a.lexicon)?;
    let opts = a.score.options();
    if let Some(mode) = a.expand {
        let expansion = match mode {
            Expand::Distributional => {
                let Some(path) = &a.cooccurrence else {
                    return usage("--expand distributional needs --cooccurrence");
                };
                senti::expand_distributional(
                    &lexicon,
                    &parse_cooccurrence(path)?,
                    a.top_nouns,
                    a.expand_k,
                )?
            }
            Expand::Spreading => {
                let Some(path) = &a.relations else {
                    return usage("--expand spreading needs --relations");
                };
                senti::expand_spreading(&lexicon, &parse_relations(path)?, a.iterations)?
            }
        };
        if a.text.is_none() && a.reviews.is_none() && a.articles.is_none() {
            let mut t = Table::new(&["word", "anchor", "derivation", "polarity", "subjectivity"]);
            for p in &expansion.added {
                let e = expansion
                    .lexicon
                    .get(&p.word)
                    .expect("added words are in the lexicon");
                let d = serde_json::to_value(&p.derivation)?;
                t.push(vec![
                    json!(p.word),
                    json!(p.anchor),
                    d["method"].clone(),
                    json!(e.polarity),
                    json!(e.subjectivity),
                ]);
            }
            return Ok(t.write(f, out)?);
        }
        lexicon = expansion.lexicon;
    }
    let label = |p: f64| match senti::classify_polarity(p, a.threshold) {
        senti::Polarity::Positive => "positive",
        senti::Polarity::Negative => "negative",
    };
    let table = if let Some(text) = &a.text {
        let s = senti::score_text(text, &lexicon, &opts);
        let mut t = Table::new(&["polarity", "subjectivity", "matches", "label"]);
        t.push(vec![
            json!(s.polarity),
            json!(s.subjectivity),
            json!(s.matches.len()),
            json!(label(s.polarity)),
        ]);
        t
    } else if let Some(path) = &a.reviews {
        let reviews = senti::parse_reviews(open(path)?)
            .with_context(|| format!("loading {}", path.display()))?;
        let e = senti::evaluate_reviews(&reviews, &lexicon, &opts, a.threshold)?;
        let mut t = Table::new(&["tp", "fp", "tn", "fn", "precision", "recall", "f1"]);
        t.push(vec![
            json!(e.counts.tp),
            json!(e.counts.fp),
            json!(e.counts.tn),
            json!(e.counts.fn_),
            json!(e.scores.precision),
            json!(e.scores.recall),
            json!(e.scores.f1),
        ]);
        t
    } else if let Some(path) = &a.articles {
        let articles = load_articles(path)?;
        match &a.entity {
            Some(entity) => {
                let eopts = EntityOptions {
                    window: a.window,
                    noise_floor: a.noise_floor,
                    score: opts,
                };
                let mut t = Table::new(&["article", "source", "date", "value"]);
                for (i, art) in articles.iter().enumerate() {
                    for v in senti::entity_sentiment(&art.text, entity, &lexicon, &eopts)? {
                        t.push(vec![
                            json!(i + 1),
                            json!(art.source),
                            json!(art.date.to_string()),
                            json!(v),
                        ]);
                    }
                }
                t
            }
            None => {
                let mut t = Table::new(&["article", "source", "date", "polarity", "label"]);
                for (i, art) in articles.iter().enumerate() {
                    let p = senti::score_text(&art.text, &lexicon, &opts).polarity;
                    t.push(vec![
                        json!(i + 1),
                        json!(art.source),
                        json!(art.date.to_string()),
                        json!(p),
                        json!(label(p)),
                    ]);
                }
                t
            }
        }
    } else {
        return usage("give one of --text, --reviews, --articles or --expand");
    };
    Ok(table.write(f, out)?)
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Coverage,
    Statement,
    Timeline,
}

#[derive(Args)]
struct BiasArgs {
    /// News articles as JSON lines.
    #[arg(long)]
    articles: PathBuf,
    #[arg(long, value_enum)]
    report: Report,
    /// Fair coverage as entity,share lines (coverage report).
    #[arg(long)]
    fair: Option<PathBuf>,
    /// Entities to assess (statement report).
    #[arg(long, value_delimiter = ',')]
    entities: Vec<String>,
    /// Entity to follow over time (timeline report).
    #[arg(long)]
    entity: Option<String>,
    /// Needed by the statement and timeline reports.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    window: usize,
    #[arg(long, default_value_t = 0.1)]
    noise_floor: f64,
    /// Moving-average window in weeks.
    #[arg(long, default_value_t = 4)]
    smoothing: usize,
    #[command(flatten)]
    score: ScoreFlags,
}

fn parse_fair(path: &Path) -> Result<BTreeMap<String, f64>> {
    let mut fair = BTreeMap::new();
    for (i, line) in read_lines(path)?.iter().enumerate() {
        let Some((e, share)) = line.split_once(',') else {
            anyhow::bail!("{}: row {}: expected entity,share", path.display(), i + 1);
        };
        match share.trim().parse::<f64>() {
            Ok(s) => {
                fair.insert(e.trim().to_string(), s);
            }
            // header row
            Err(_) if i == 0 => {}
            Err(_) => anyhow::bail!("{}: row {}: bad share {share:?}", path.display(), i + 1),
        }
    }
    Ok(fair)
}

fn bias(a: BiasArgs, f: Format, out: &mut impl Write) -> Result<()> {
    let articles = load_articles(&a.articles)?;
    let lexicon = || match &a.lexicon {
        Some(p) => load_lexicon(p),
        None => usage("this report needs --lexicon"),
    };
    let eopts = EntityOptions {
        window: a.window,
        noise_floor: a.noise_floor,
        score: a.score.options(),
    };
    let table = match a.report {
        Report::Coverage => {
            let Some(path) = &a.fair else {
                return usage("the coverage report needs --fair");
            };
            let mut t = Table::new(&["source", "bias"]);
            for (src, b) in senti::coverage_report(&articles, &parse_fair(path)?)? {
                t.push(vec![json!(src), json!(b)]);
            }
            t
        }
        Report::Statement => {
            if a.entities.is_empty() {
                return usage("the statement report needs --entities");
            }
            let lex = lexicon()?;
            let mut t = Table::new(&["entity", "positive", "negative", "assessments"]);
            for (e, s) in senti::statement_bias(&articles, &a.entities, &lex, &eopts)? {
                t.push(vec![
                    json!(e),
                    json!(s.positive_share),
                    json!(s.negative_share),
                    json!(s.assessments),
                ]);
            }
            t
        }
        Report::Timeline => {
            let Some(entity) = &a.entity else {
                return usage("the timeline report needs --entity");
            };
            let lex = lexicon()?;
            let tl = senti::sentiment_timeline(&articles, entity, &lex, &eopts, a.smoothing)?;
            let mut t = Table::new(&["week", "mean", "smoothed"]);
            for i in 0..tl.weeks.len() {
                t.push(vec![
                    json!(tl.weeks[i].to_string()),
                    json!(tl.means[i]),
                    json!(tl.smoothed[i]),
                ]);
            }
            t
        }
    };
    Ok(table.write(f, out)?)
}

// ga, antsim, dtscore

#[derive(Args)]
struct GaArgs {
    #[arg(long, default_value_t = 50)]
    size: usize,
    /// Bits per genome.
    #[arg(long, default_value_t = 32)]
    length: usize,
    #[arg(long, default_value_t = 30)]
    generations: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = GaConfig::default().crossover)]
    crossover: f64,
    #[arg(long, default_value_t = GaConfig::default().mutation)]
    mutation: f64,
    #[arg(long, default_value_t = GaConfig::default().elitism)]
    elitism: f64,
    /// Chance that an offspring is replaced by a fresh genome.
    #[arg(long, default_value_t = GaConfig::default().injection)]
    injection: f64,
}

fn ga(a: GaArgs, f: Format, out: &mut impl Write) -> Result<()> {
    let cfg = GaConfig {
        crossover: a.crossover,
        mutation: a.mutation,
        elitism: a.elitism,
        injection: a.injection,
    };
    if let Err(e) = cfg.validate() {
        return usage(e.to_string());
    }
    let (mut pop, mut rng) = evolve::onemax_population(a.size, a.length, a.seed)?;
    let hooks = OneMax { length: a.length };
    let stats = evolve::run(&mut pop, &cfg, &hooks, a.generations, &mut rng)?;
    let mut t = Table::new(&["generation", "average", "max"]);
    for s in stats {
        t.push(vec![json!(s.generation), json!(s.average), json!(s.max)]);
    }
    Ok(t.write(f, out)?)
}

#[derive(Args)]
struct AntsimArgs {
    /// One colony in a 400×400 world, or rivals on a circle in 600×600.
    #[arg(long, default_value_t = 1)]
    colonies: usize,
    /// Ants per colony.
    #[arg(long, default_value_t = 30)]
    ants: usize,
    /// Food sources per colony.
    #[arg(long, default_value_t = 10)]
    sources: usize,
    #[arg(long, default_value_t = 1000)]
    steps: u64,
    /// Required unless --steps is 0.
    #[arg(long)]
    seed: Option<u64>,
    /// NDJSON trace destination; stdout when absent.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Include ant positions in every trace record.
    #[arg(long)]
    positions: bool,
    /// Write a final SVG snapshot.
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn ants(a: AntsimArgs, f: Format, out: &mut impl Write) -> Result<()> {
    if a.colonies == 0 {
        return usage("--colonies must be at least 1");
    }
    let seed = match (a.seed, a.steps) {
        (Some(s), _) => s,
        (None, 0) => 0,
        (None, _) => return usage("antsim needs --seed when --steps is positive"),
    };
    let mut world = if a.colonies == 1 {
        World::single(seed, a.ants, a.sources)
    } else {
        World::antagonism(seed, a.colonies, a.ants, a.sources)
    };
    let opts = TraceOptions {
        positions: a.positions,
    };
    match &a.trace {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            antsim::run(&mut world, a.steps, &mut BufWriter::new(file), opts)?;
        }
        None => antsim::run(&mut world, a.steps, out, opts)?,
    }
    if let Some(path) = &a.svg {
        fs::write(path, antsim::render_svg(&world))
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    if a.trace.is_some() {
        let mut t = Table::new(&["colony", "hoard", "carrying", "pheromones", "sources"]);
        for (i, c) in world.colonies.iter().enumerate() {
            t.push(vec![
                json!(i),
                json!(c.hoard),
                json!(c.carrying()),
                json!(c.pheromone_count()),
                json!(c.source_units()),
            ]);
        }
        t.write(f, out)?;
    }
    Ok(())
}

#[derive(Args)]
struct DtscoreArgs {
    /// participant<TAB>answer[<TAB>pnp] per line.
    #[arg(long)]
    answers: PathBuf,
    /// Clusters before the loose ones are split up.
    #[arg(long, default_value_t = dtscore::DEFAULT_K)]
    k: usize,
    /// Loosest clusters turned into single-answer categories.
    #[arg(long, default_value_t = dtscore::DEFAULT_LOOSE_DROP)]
    loose_drop: usize,
    /// One preposition per line; replaces the built-in English list.
    #[arg(long)]
    prepositions: Option<PathBuf>,
    #[arg(long)]
    plain: bool,
}

fn dt(a: DtscoreArgs, f: Format, out: &mut impl Write) -> Result<()> {
    let answers = dtscore::parse_answers(open(&a.answers)?)
        .with_context(|| format!("loading {}", a.answers.display()))?;
    let preps = match &a.prepositions {
        Some(p) => read_lines(p)?
            .into_iter()
            .map(|w| w.to_lowercase())
            .collect(),
        None => dtscore::default_prepositions(),
    };
    let model = dtscore::categorize(&answers, a.k, a.loose_drop, &normalizer(a.plain))?;
    let scores = dtscore::score_all(&answers, &model, &preps)?;
    let flags: Vec<Value> = if scores.len() >= 2 {
        dtscore::flag_creative(&scores)?
            .into_iter()
            .map(|(_, c)| json!(c))
            .collect()
    } else {
        vec![Value::Null; scores.len()]
    };
    let mut t = Table::new(&[
        "participant",
        "fluency",
        "flexibility",
        "originality",
        "elaboration",
        "total",
        "creative",
    ]);
    for (s, c) in scores.iter().zip(flags) {
        t.push(vec![
            json!(s.participant),
            json!(s.fluency),
            json!(s.flexibility),
            json!(s.originality),
            json!(s.elaboration),
            json!(s.total),
            c,
        ]);
    }
    Ok(t.write(f, out)?)
}
