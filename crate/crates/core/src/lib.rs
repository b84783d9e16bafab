//! # hyperlap
//!
//! Hypergraph learning with weighted hyperedges.
//!
//! The pipeline is:
//!
//! ```text
//! samples --knn--> hyperedges --weights--> weighted hypergraph
//!         --laplacian--> L (zhou | clique | star)
//!         --learn--> clusters (spectral + k-means) or class scores
//! ```
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`hypergraph`] | Data model, incidence matrix, degrees, text serialization |
//! | [`knn`] | Hyperedge generation by k-nearest-neighbor search |
//! | [`weights`] | Raw dissimilarities for eight weighting schemes and the exponential weight map |
//! | [`laplacian`] | Clique expansion, star expansion and Zhou's normalized Laplacian |
//! | [`linalg`] | Dense eigen, least squares, log-determinant and SPD solves |
//! | [`learn`] | Spectral embedding, k-means, transductive classification, AC / NMI |
//!
//! Per-seed neighbor searches, per-hyperedge weights and k-means restarts are
//! data-parallel. With the `parallel` feature (default) they run on rayon;
//! [`Execution::Sequential`] forces the single-threaded path and gives
//! identical results.
//!
//! ```rust
//! use hyperlap::{knn, weights, laplacian, learn, SampleMatrix};
//!
//! let x = SampleMatrix::from_rows(&[
//!     vec![0.0, 0.0], vec![0.1, 0.0], vec![0.0, 0.1],
//!     vec![9.0, 9.0], vec![9.1, 9.0], vec![9.0, 9.1],
//! ]).unwrap();
//! let g = knn::knn_hyperedges(&x, 2).unwrap();
//! let cfg = weights::WeightSchemeConfig::new(weights::Scheme::Trace, 1.0);
//! let g = weights::apply_scheme(&x, &g, &cfg).unwrap();
//! let l = laplacian::build(&g, laplacian::Framework::Zhou);
//! let labels = learn::cluster(&l, 2, &learn::KMeansOptions::default()).unwrap();
//! assert_eq!(labels, vec![0, 0, 0, 1, 1, 1]);
//! ```

pub mod error;
pub mod exec;
pub mod hypergraph;
pub mod knn;
pub mod laplacian;
pub mod learn;
pub mod linalg;
pub mod samples;
pub mod weights;

pub use error::{Error, ErrorKind, Result};
pub use exec::Execution;
pub use hypergraph::{Hyperedge, Hypergraph};
pub use laplacian::{Framework, LaplacianMatrix};
pub use samples::SampleMatrix;
