//! Computational-creativity toolkit.
//!
//! The crate bundles the machinery needed to search a commonsense semantic
//! network for analogies, mine text with a sparse vector-space model, score
//! opinions with a subjectivity lexicon, evolve candidates with a genetic
//! algorithm, simulate foraging ant colonies and score divergent-thinking
//! tests automatically.
//!
//! | module | contents |
//! |---|---|
//! | [`graph`] | typed weighted graph, traversal, shortest paths, centrality |
//! | [`concept`] | commonsense network: halo, field, properties, similarity |
//! | [`vecspace`] | bag-of-words vectors, tf-idf, information gain, kNN, clustering |
//! | [`metrics`] | precision/recall/F, Fleiss' kappa, moving averages |
//! | [`sentiment`] | lexicon scoring, entity windows, bias, lexicon expansion |
//! | [`evolve`] | genetic algorithm with roulette selection and elitism |
//! | [`antsim`] | multi-colony ant foraging simulation |
//! | [`dtscore`] | divergent-thinking answer scoring |

pub mod antsim;
pub mod concept;
pub mod dtscore;
pub mod error;
pub mod evolve;
pub mod graph;
pub mod metrics;
pub mod rng;
pub mod sentiment;
pub mod vecspace;

pub use error::{Error, Result};
