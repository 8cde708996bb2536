//! Sparse vector-space model: bag-of-words documents, tf-idf, cosine
//! similarity, information gain, kNN and clustering.

pub mod cluster;
pub mod corpus;
pub mod knn;
pub mod text;
pub mod vector;

pub use cluster::{hierarchical, kmeans, Dendrogram, KMeans, Linkage, Merge};
pub use corpus::{apply_tfidf, count_vector, entropy, vectorize, Corpus, Document, Weighting};
pub use knn::KnnClassifier;
pub use text::{tokenize, TextNormalizer};
pub use vector::{cosine_distance, cosine_similarity, distance, euclidean, Metric, SparseVector};
