//! Hyperedge generation by k-nearest-neighbor search.
//!
//! Each sample seeds one hyperedge made of itself and its k nearest
//! neighbors under squared Euclidean distance. Search is brute force;
//! distance ties go to the smaller vertex index and a seed is never its own
//! neighbor.

use std::collections::HashSet;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::samples::SampleMatrix;

/// Neighbor counts used for multi-k hyperedge generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodSpec {
    k_list: Vec<usize>,
}

impl NeighborhoodSpec {
    /// Non-empty, strictly increasing, all positive.
    pub fn new(k_list: Vec<usize>) -> Result<Self> {
        if k_list.is_empty() {
            return Err(Error::InvalidParameter("k list is empty".into()));
        }
        if k_list.contains(&0) {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        if k_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "k list {k_list:?} must be strictly increasing"
            )));
        }
        Ok(Self { k_list })
    }

    pub fn single(k: usize) -> Result<Self> {
        Self::new(vec![k])
    }

    pub fn k_list(&self) -> &[usize] {
        &self.k_list
    }

    pub fn check_against(&self, n: usize) -> Result<()> {
        match self.k_list.iter().find(|&&k| k >= n) {
            Some(k) => Err(Error::InvalidParameter(format!(
                "k = {k} must be smaller than the number of samples ({n})"
            ))),
            None => Ok(()),
        }
    }
}

/// Indices of the `k` nearest neighbors of `seed`, closest first.
pub fn nearest_neighbors(x: &SampleMatrix, seed: usize, k: usize) -> Vec<usize> {
    let mut cand: Vec<(f64, usize)> = (0..x.nrows())
        .filter(|&j| j != seed)
        .map(|j| (x.sq_dist(seed, j), j))
        .collect();
    let by_dist = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if k < cand.len() {
        cand.select_nth_unstable_by(k, by_dist);
        cand.truncate(k);
    }
    cand.sort_unstable_by(by_dist);
    cand.into_iter().map(|(_, j)| j).collect()
}

pub fn knn_hyperedges(x: &SampleMatrix, k: usize) -> Result<Hypergraph> {
    knn_hyperedges_with(x, k, Execution::default())
}

/// One hyperedge per sample: the sample (as seed) plus its `k` nearest neighbors.
/// Unit weights.
pub fn knn_hyperedges_with(x: &SampleMatrix, k: usize, exec: Execution) -> Result<Hypergraph> {
    let n = x.nrows();
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "k = {k} must satisfy 0 < k < n = {n}"
        )));
    }
    let edges = exec.map(n, |i| {
        let mut verts = nearest_neighbors(x, i, k);
        verts.push(i);
        Hyperedge::with_seed(verts, i)
    });
    Hypergraph::unweighted(n, edges)
}

pub fn multi_k_hyperedges(x: &SampleMatrix, spec: &NeighborhoodSpec) -> Result<Hypergraph> {
    multi_k_hyperedges_with(x, spec, Execution::default())
}

/// Union of [`knn_hyperedges`] over every k in `spec`, in k order, dropping
/// hyperedges whose vertex set already appeared (the first occurrence and its
/// seed are kept).
pub fn multi_k_hyperedges_with(
    x: &SampleMatrix,
    spec: &NeighborhoodSpec,
    exec: Execution,
) -> Result<Hypergraph> {
    let n = x.nrows();
    spec.check_against(n)?;
    let kmax = *spec.k_list.last().expect("non-empty");
    // one ranking per seed serves every k
    let ranked = exec.map(n, |i| nearest_neighbors(x, i, kmax));

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut edges = Vec::new();
    for &k in &spec.k_list {
        for (i, nbrs) in ranked.iter().enumerate() {
            let mut verts = nbrs[..k].to_vec();
            verts.push(i);
            verts.sort_unstable();
            if seen.insert(verts.clone()) {
                edges.push(Hyperedge::with_seed(verts, i));
            }
        }
    }
    Hypergraph::unweighted(n, edges)
}

/// (i, j) = ‖x_i − x_j‖² over the vertices of `e`, in the given order.
pub fn pairwise_sq_distances(x: &SampleMatrix, e: &[usize]) -> DMatrix<f64> {
    let m = e.len();
    let mut d2 = DMatrix::zeros(m, m);
    for a in 0..m {
        for b in (a + 1)..m {
            let v = x.sq_dist(e[a], e[b]);
            d2[(a, b)] = v;
            d2[(b, a)] = v;
        }
    }
    d2
}
