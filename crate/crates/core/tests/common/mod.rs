#![allow(dead_code)]

use hyperlap::{Hyperedge, Hypergraph, SampleMatrix};
use nalgebra::DMatrix;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform_points(rng: &mut ChaCha8Rng, n: usize, d: usize) -> SampleMatrix {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..d).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    SampleMatrix::from_rows(&rows).unwrap()
}

/// Random weighted hypergraph on `n` vertices; a chain of 2-edges keeps it connected.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize) -> Hypergraph {
    let mut edges: Vec<Hyperedge> = (1..n).map(|v| Hyperedge::new(vec![v - 1, v])).collect();
    let extra = rng.random_range(1..=n);
    for _ in 0..extra {
        let size = rng.random_range(2..=n.min(6));
        let verts = sample(rng, n, size).into_vec();
        edges.push(Hyperedge::new(verts));
    }
    let weights = (0..edges.len()).map(|_| rng.random_range(0.05..3.0)).collect();
    Hypergraph::new(n, edges, weights).unwrap()
}

/// Random simple graph with a spanning path, as a 2-uniform hypergraph with unit weights.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> (Hypergraph, DMatrix<f64>) {
    let mut adj = DMatrix::zeros(n, n);
    let perm = sample(rng, n, n).into_vec();
    for w in perm.windows(2) {
        adj[(w[0], w[1])] = 1.0;
        adj[(w[1], w[0])] = 1.0;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(0.2) {
                adj[(i, j)] = 1.0;
                adj[(j, i)] = 1.0;
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if adj[(i, j)] > 0.0 {
                edges.push(Hyperedge::new(vec![i, j]));
            }
        }
    }
    (Hypergraph::unweighted(n, edges).unwrap(), adj)
}

/// `per_blob` points around each center with isotropic Gaussian noise.
pub fn gaussian_blobs(seed: u64, centers: &[Vec<f64>], per_blob: usize, sigma: f64) -> (SampleMatrix, Vec<usize>) {
    let mut rng = rng(seed);
    let noise = Normal::new(0.0, sigma).unwrap();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (c, center) in centers.iter().enumerate() {
        for _ in 0..per_blob {
            rows.push(center.iter().map(|m| m + noise.sample(&mut rng)).collect());
            labels.push(c);
        }
    }
    (SampleMatrix::from_rows(&rows).unwrap(), labels)
}

pub fn three_blobs(seed: u64) -> (SampleMatrix, Vec<usize>) {
    let centers = vec![vec![0.0, 0.0, 0.0], vec![10.0, 0.0, 0.0], vec![0.0, 10.0, 0.0]];
    gaussian_blobs(seed, &centers, 20, 0.1)
}

/// Determinant by cofactor expansion; only for tiny matrices.
pub fn cofactor_det(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    if n == 1 {
        return m[(0, 0)];
    }
    (0..n)
        .map(|j| {
            let minor = m.clone().remove_row(0).remove_column(j);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[(0, j)] * cofactor_det(&minor)
        })
        .sum()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}
