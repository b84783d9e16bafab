//! Learning on top of a hypergraph Laplacian: spectral embedding and k-means
//! clustering, transductive classification, and the AC / NMI metrics.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::laplacian::LaplacianMatrix;
use crate::linalg::{solve_spd, symmetric_eigen, zero_eigen_threshold};

/// Rows are vertices; column j is the eigenvector of the j-th selected eigenvalue.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub coordinates: DMatrix<f64>,
    pub eigenvalues: Vec<f64>,
}

/// Eigenvectors of the `m` smallest eigenvalues strictly above the zero
/// threshold, i.e. the relaxed normalized-cut solution with every null
/// direction (one per connected component) excluded.
pub fn spectral_embed(l: &LaplacianMatrix, m: usize) -> Result<Embedding> {
    let n = l.dim();
    if m == 0 || m >= n {
        return Err(Error::InvalidParameter(format!("embedding dimension {m} must be in 1..{n}")));
    }
    let eig = symmetric_eigen(&l.matrix, n)?;
    let thresh = zero_eigen_threshold(eig.values[n - 1]);
    let null_dim = eig.values.iter().take_while(|&&v| v <= thresh).count();
    let available = n - null_dim;
    if available < m {
        return Err(Error::Rank {
            requested: m,
            available,
            null_dim,
        });
    }
    Ok(Embedding {
        coordinates: eig.vectors.columns(null_dim, m).into_owned(),
        eigenvalues: eig.values[null_dim..null_dim + m].to_vec(),
    })
}

/// Eigenvectors of the `m` algebraically smallest eigenvalues, null
/// directions included.
pub fn smallest_eigenvectors(l: &LaplacianMatrix, m: usize) -> Result<Embedding> {
    let eig = symmetric_eigen(&l.matrix, m)?;
    Ok(Embedding {
        coordinates: eig.vectors,
        eigenvalues: eig.values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KMeansOptions {
    pub seed: u64,
    pub restarts: usize,
    pub max_iter: usize,
    /// Stop when the relative inertia decrease falls below this.
    pub tol: f64,
    pub exec: Execution,
}

impl Default for KMeansOptions {
    fn default() -> Self {
        Self {
            seed: 42,
            restarts: 10,
            max_iter: 300,
            tol: 1e-6,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansResult {
    /// Cluster ids numbered by first appearance (vertex 0 is in cluster 0).
    pub labels: Vec<usize>,
    pub inertia: f64,
    pub restart: usize,
}

fn sq_dist_row(points: &DMatrix<f64>, i: usize, center: &[f64]) -> f64 {
    center
        .iter()
        .enumerate()
        .map(|(c, &v)| {
            let d = points[(i, c)] - v;
            d * d
        })
        .sum()
}

fn kmeans_plus_plus(points: &DMatrix<f64>, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = points.nrows();
    let row = |i: usize| -> Vec<f64> { points.row(i).iter().copied().collect() };
    let mut chosen = vec![rng.random_range(0..n)];
    let mut d2: Vec<f64> = (0..n).map(|i| sq_dist_row(points, i, &row(chosen[0]))).collect();
    while chosen.len() < k {
        let total: f64 = d2.iter().sum();
        let next = if total > 0.0 {
            let target = rng.random::<f64>() * total;
            let mut acc = 0.0;
            let mut pick = None;
            for (i, &w) in d2.iter().enumerate() {
                acc += w;
                if w > 0.0 && acc >= target {
                    pick = Some(i);
                    break;
                }
            }
            // rounding can leave target just above the final sum
            pick.unwrap_or_else(|| d2.iter().rposition(|&w| w > 0.0).expect("total > 0"))
        } else {
            (0..n).find(|i| !chosen.contains(i)).expect("k <= n")
        };
        chosen.push(next);
        let c = row(next);
        for (i, d) in d2.iter_mut().enumerate() {
            *d = d.min(sq_dist_row(points, i, &c));
        }
    }
    chosen.into_iter().map(row).collect()
}

fn lloyd(points: &DMatrix<f64>, mut centers: Vec<Vec<f64>>, opts: &KMeansOptions) -> (Vec<usize>, f64) {
    let (n, m) = points.shape();
    let k = centers.len();
    let mut labels = vec![usize::MAX; n];
    let mut prev_inertia = f64::INFINITY;
    let mut inertia = f64::INFINITY;
    for _ in 0..opts.max_iter.max(1) {
        let mut changed = false;
        let mut dist = vec![0.0; n];
        for i in 0..n {
            let (best, bd) = (0..k)
                .map(|c| (c, sq_dist_row(points, i, &centers[c])))
                .fold((0, f64::INFINITY), |acc, cur| if cur.1 < acc.1 { cur } else { acc });
            if labels[i] != best {
                labels[i] = best;
                changed = true;
            }
            dist[i] = bd;
        }
        // refill empty clusters with the point farthest from its center
        let mut counts = vec![0usize; k];
        labels.iter().for_each(|&c| counts[c] += 1);
        for c in 0..k {
            if counts[c] == 0 {
                let far = (0..n)
                    .filter(|&i| counts[labels[i]] > 1)
                    .fold(None, |acc: Option<usize>, i| match acc {
                        Some(j) if dist[j] >= dist[i] => Some(j),
                        _ => Some(i),
                    });
                if let Some(i) = far {
                    counts[labels[i]] -= 1;
                    labels[i] = c;
                    counts[c] = 1;
                    dist[i] = 0.0;
                    changed = true;
                }
            }
        }
        let mut sums = vec![vec![0.0; m]; k];
        for i in 0..n {
            for j in 0..m {
                sums[labels[i]][j] += points[(i, j)];
            }
        }
        for c in 0..k {
            if counts[c] > 0 {
                centers[c] = sums[c].iter().map(|s| s / counts[c] as f64).collect();
            }
        }
        inertia = (0..n).map(|i| sq_dist_row(points, i, &centers[labels[i]])).sum();
        let converged = !changed || (prev_inertia - inertia) <= opts.tol * prev_inertia.max(f64::MIN_POSITIVE);
        prev_inertia = inertia;
        if converged {
            break;
        }
    }
    (labels, inertia)
}

/// Renumbers cluster ids by first appearance.
pub fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// k-means++ seeded Lloyd iterations, best of `opts.restarts` runs by
/// inertia (ties to the lowest restart). Deterministic for a given seed.
pub fn kmeans(points: &DMatrix<f64>, k: usize, opts: &KMeansOptions) -> Result<KMeansResult> {
    let n = points.nrows();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("cluster count {k} must be in 1..={n}")));
    }
    if opts.restarts == 0 {
        return Err(Error::InvalidParameter("k-means needs at least one restart".into()));
    }
    let runs = opts.exec.map(opts.restarts, |r| {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(r as u64);
        let centers = kmeans_plus_plus(points, k, &mut rng);
        lloyd(points, centers, opts)
    });
    let (restart, (labels, inertia)) = runs
        .into_iter()
        .enumerate()
        .fold(None, |best: Option<(usize, (Vec<usize>, f64))>, cur| match best {
            Some(b) if b.1 .1 <= cur.1 .1 => Some(b),
            _ => Some(cur),
        })
        .expect("at least one restart");
    Ok(KMeansResult {
        labels: canonical_labels(&labels),
        inertia,
        restart,
    })
}

/// Spectral clustering into `num_classes` groups.
///
/// Embeds the vertices with the eigenvectors of the `num_classes` smallest
/// eigenvalues, scales each row to unit length and runs k-means on the rows.
/// Null-space eigenvectors are kept: when the hypergraph has as many
/// connected components as classes they are exactly what separates them.
pub fn cluster(l: &LaplacianMatrix, num_classes: usize, opts: &KMeansOptions) -> Result<Vec<usize>> {
    let n = l.dim();
    if num_classes == 0 || num_classes > n {
        return Err(Error::InvalidParameter(format!(
            "number of classes {num_classes} must be in 1..={n}"
        )));
    }
    let mut emb = smallest_eigenvectors(l, num_classes)?.coordinates;
    for mut row in emb.row_iter_mut() {
        let norm = row.norm();
        if norm > 0.0 {
            row /= norm;
        }
    }
    Ok(kmeans(&emb, num_classes, opts)?.labels)
}

/// |V|×c seed-label matrix: +1 in the vertex's class column, −1 elsewhere,
/// all zeros for unlabeled vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelMatrix {
    pub entries: DMatrix<f64>,
}

impl LabelMatrix {
    pub fn num_classes(&self) -> usize {
        self.entries.ncols()
    }
}

pub fn build_label_matrix(labels: &[Option<usize>], num_classes: usize) -> Result<LabelMatrix> {
    if num_classes == 0 {
        return Err(Error::InvalidParameter("need at least one class".into()));
    }
    let mut y = DMatrix::zeros(labels.len(), num_classes);
    for (v, l) in labels.iter().enumerate() {
        if let Some(c) = *l {
            if c >= num_classes {
                return Err(Error::InvalidData(format!(
                    "vertex {v} has class {c}, but there are only {num_classes} classes"
                )));
            }
            y.row_mut(v).fill(-1.0);
            y[(v, c)] = 1.0;
        }
    }
    Ok(LabelMatrix { entries: y })
}

#[derive(Debug, Clone)]
pub struct Classification {
    /// F = (L + λI)⁻¹ Y
    pub scores: DMatrix<f64>,
    pub predictions: Vec<usize>,
}

/// Row-wise argmax, ties to the smallest column.
pub fn argmax_rows(f: &DMatrix<f64>) -> Vec<usize> {
    f.row_iter()
        .map(|r| {
            let mut best = 0;
            for j in 1..r.len() {
                if r[j] > r[best] {
                    best = j;
                }
            }
            best
        })
        .collect()
}

/// Closed-form transductive scores F = (1/(1+λ))·((L+λI)/(1+λ))⁻¹·Y.
///
/// The prefactors cancel, leaving (L+λI)⁻¹·Y, which is evaluated as one SPD
/// solve. The exact minimizer of Σ_i f_iᵀ L f_i + λ‖f_i − y_i‖² is λ times
/// this; row-wise argmax is the same for both.
pub fn classification_scores(l: &LaplacianMatrix, y: &LabelMatrix, lambda: f64) -> Result<DMatrix<f64>> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
    }
    let n = l.dim();
    if y.entries.nrows() != n {
        return Err(Error::LengthMismatch {
            left: y.entries.nrows(),
            right: n,
        });
    }
    let a = &l.matrix + DMatrix::identity(n, n) * lambda;
    solve_spd(&a, &y.entries)
}

/// Transductive classification; every class needs at least one labeled vertex.
pub fn classify(l: &LaplacianMatrix, y: &LabelMatrix, lambda: f64) -> Result<Classification> {
    for c in 0..y.num_classes() {
        if !y.entries.column(c).iter().any(|&v| v > 0.0) {
            return Err(Error::MissingClassSeed { class: c });
        }
    }
    let scores = classification_scores(l, y, lambda)?;
    let predictions = argmax_rows(&scores);
    Ok(Classification { scores, predictions })
}

fn check_lengths(pred: &[usize], truth: &[usize]) -> Result<()> {
    if pred.len() != truth.len() {
        return Err(Error::LengthMismatch {
            left: pred.len(),
            right: truth.len(),
        });
    }
    Ok(())
}

/// Contingency table between two labelings with ids compacted to 0..r, 0..s.
fn contingency(pred: &[usize], truth: &[usize]) -> Vec<Vec<f64>> {
    let p = canonical_labels(pred);
    let t = canonical_labels(truth);
    let rows = p.iter().max().map_or(0, |m| m + 1);
    let cols = t.iter().max().map_or(0, |m| m + 1);
    let mut table = vec![vec![0.0; cols]; rows];
    for (a, b) in p.iter().zip(&t) {
        table[*a][*b] += 1.0;
    }
    table
}

/// Maximum-weight perfect matching on a square matrix (Hungarian algorithm).
/// Returns `assignment[row] = column`.
pub fn hungarian_max(weights: &[Vec<f64>]) -> Vec<usize> {
    let n = weights.len();
    if n == 0 {
        return Vec::new();
    }
    let big = weights.iter().flatten().copied().fold(f64::NEG_INFINITY, f64::max);
    let cost = |i: usize, j: usize| big - weights[i][j];
    // potentials and matching, 1-based with a virtual column 0
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        if p[j] > 0 {
            assignment[p[j] - 1] = j - 1;
        }
    }
    assignment
}

/// Clustering accuracy: the largest fraction of agreements over all one-to-one
/// maps between predicted ids and true ids.
pub fn accuracy(pred: &[usize], truth: &[usize]) -> Result<f64> {
    check_lengths(pred, truth)?;
    if pred.is_empty() {
        return Ok(1.0);
    }
    let table = contingency(pred, truth);
    let size = table.len().max(table[0].len());
    let square: Vec<Vec<f64>> = (0..size)
        .map(|i| (0..size).map(|j| table.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0.0)).collect())
        .collect();
    let assignment = hungarian_max(&square);
    let hits: f64 = assignment.iter().enumerate().map(|(i, &j)| square[i][j]).sum();
    Ok(hits / pred.len() as f64)
}

/// Normalized mutual information I(P; T) / sqrt(H(P)·H(T)).
///
/// Two single-cluster labelings give 1; if exactly one side has zero entropy
/// the result is 0.
pub fn nmi(pred: &[usize], truth: &[usize]) -> Result<f64> {
    check_lengths(pred, truth)?;
    if pred.is_empty() {
        return Err(Error::InvalidData("nmi of empty labelings".into()));
    }
    let n = pred.len() as f64;
    let table = contingency(pred, truth);
    let row: Vec<f64> = table.iter().map(|r| r.iter().sum()).collect();
    let col: Vec<f64> = (0..table[0].len()).map(|j| table.iter().map(|r| r[j]).sum()).collect();
    let entropy = |counts: &[f64]| -> f64 {
        counts
            .iter()
            .filter(|&&c| c > 0.0)
            .map(|&c| {
                let p = c / n;
                -p * p.ln()
            })
            .sum()
    };
    let (hp, ht) = (entropy(&row), entropy(&col));
    if hp == 0.0 && ht == 0.0 {
        return Ok(1.0);
    }
    if hp == 0.0 || ht == 0.0 {
        return Ok(0.0);
    }
    let mut mi = 0.0;
    for (i, r) in table.iter().enumerate() {
        for (j, &c) in r.iter().enumerate() {
            if c > 0.0 {
                mi += c / n * (c * n / (row[i] * col[j])).ln();
            }
        }
    }
    Ok((mi / (hp * ht).sqrt()).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{Hyperedge, Hypergraph};
    use crate::laplacian::{self, Framework};
    use approx::assert_relative_eq;

    fn lap(m: DMatrix<f64>) -> LaplacianMatrix {
        LaplacianMatrix {
            matrix: m,
            framework: Framework::Zhou,
        }
    }

    #[test]
    fn embed_triangle() {
        let l = lap(DMatrix::identity(3, 3) - DMatrix::from_element(3, 3, 1.0 / 3.0));
        let e = spectral_embed(&l, 2).unwrap();
        assert_relative_eq!(e.eigenvalues[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-12);
        for c in e.coordinates.column_iter() {
            assert!(c.sum().abs() < 1e-12);
            assert_relative_eq!(c.norm(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn embed_skips_every_null_direction() {
        let g = Hypergraph::unweighted(6, vec![Hyperedge::new(vec![0, 1, 2]), Hyperedge::new(vec![3, 4, 5])]).unwrap();
        let l = laplacian::zhou_laplacian(&g);
        let e = spectral_embed(&l, 1).unwrap();
        assert_relative_eq!(e.eigenvalues[0], 1.0, epsilon = 1e-10);
        // orthogonal to both component indicators
        let c = e.coordinates.column(0);
        assert!((c[0] + c[1] + c[2]).abs() < 1e-10);
        assert!((c[3] + c[4] + c[5]).abs() < 1e-10);
        match spectral_embed(&l, 5) {
            Err(Error::Rank { available: 4, null_dim: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn kmeans_separated_pairs() {
        let pts = DMatrix::from_column_slice(4, 1, &[0.0, 0.1, 10.0, 10.1]);
        let r = kmeans(&pts, 2, &KMeansOptions::default()).unwrap();
        assert_eq!(r.labels, vec![0, 0, 1, 1]);
    }

    #[test]
    fn kmeans_k_equals_n() {
        let pts = DMatrix::from_row_slice(3, 2, &[0.0, 0.0, 1.0, 5.0, -2.0, 0.3]);
        let r = kmeans(&pts, 3, &KMeansOptions::default()).unwrap();
        assert_eq!(r.labels, vec![0, 1, 2]);
        assert_eq!(r.inertia, 0.0);
        assert!(kmeans(&pts, 4, &KMeansOptions::default()).is_err());
    }

    #[test]
    fn kmeans_is_deterministic() {
        let pts = DMatrix::from_fn(40, 2, |i, j| ((i * 7 + j * 13) % 11) as f64 * 0.37);
        let opts = KMeansOptions {
            seed: 9,
            ..Default::default()
        };
        let a = kmeans(&pts, 4, &opts).unwrap();
        let b = kmeans(&pts, 4, &opts).unwrap();
        assert_eq!(a, b);
        let seq = kmeans(&pts, 4, &KMeansOptions { exec: Execution::Sequential, ..opts }).unwrap();
        assert_eq!(a, seq);
    }

    #[test]
    fn cluster_disjoint_cliques() {
        let g = Hypergraph::unweighted(6, vec![Hyperedge::new(vec![3, 4, 5]), Hyperedge::new(vec![0, 1, 2])]).unwrap();
        for fw in Framework::ALL {
            let labels = cluster(&laplacian::build(&g, fw), 2, &KMeansOptions::default()).unwrap();
            assert_eq!(labels, vec![0, 0, 0, 1, 1, 1], "{fw}");
        }
    }

    #[test]
    fn cluster_single_clique() {
        let g = Hypergraph::unweighted(4, vec![Hyperedge::new(vec![0, 1, 2, 3])]).unwrap();
        let labels = cluster(&laplacian::zhou_laplacian(&g), 1, &KMeansOptions::default()).unwrap();
        assert_eq!(labels, vec![0; 4]);
    }

    #[test]
    fn label_matrix_examples() {
        let y = build_label_matrix(&[Some(0), None], 2).unwrap();
        assert_eq!(y.entries, DMatrix::from_row_slice(2, 2, &[1.0, -1.0, 0.0, 0.0]));
        let y = build_label_matrix(&[Some(1), Some(0), Some(2)], 3).unwrap();
        assert!(y.entries.row_iter().all(|r| r.iter().any(|&v| v != 0.0)));
        let y = build_label_matrix(&[Some(0), None, Some(0)], 1).unwrap();
        assert_eq!(y.entries, DMatrix::from_column_slice(3, 1, &[1.0, 0.0, 1.0]));
        assert!(build_label_matrix(&[Some(2)], 2).is_err());
    }

    #[test]
    fn classify_two_vertices() {
        let l = lap(DMatrix::from_row_slice(2, 2, &[0.5, -0.5, -0.5, 0.5]));
        let y = build_label_matrix(&[Some(0), None], 2).unwrap();
        // (L + I)^{-1} = [[0.75, 0.25], [0.25, 0.75]]
        let f = classification_scores(&l, &y, 1.0).unwrap();
        assert_relative_eq!(f[(0, 0)], 0.75, epsilon = 1e-14);
        assert_relative_eq!(f[(1, 0)], 0.25, epsilon = 1e-14);
        assert_relative_eq!(f[(0, 1)], -0.75, epsilon = 1e-14);
        assert_relative_eq!(f[(1, 1)], -0.25, epsilon = 1e-14);
        assert_eq!(argmax_rows(&f), vec![0, 0]);
        // class B has no positive seed
        assert!(matches!(classify(&l, &y, 1.0), Err(Error::MissingClassSeed { class: 1 })));
    }

    #[test]
    fn classify_isolated_labeled_vertex() {
        // vertex 2 has a zero Laplacian block
        let mut m = DMatrix::zeros(3, 3);
        m.view_mut((0, 0), (2, 2)).copy_from(&DMatrix::from_row_slice(2, 2, &[0.5, -0.5, -0.5, 0.5]));
        let y = build_label_matrix(&[Some(0), None, Some(1)], 2).unwrap();
        let c = classify(&lap(m), &y, 1.0).unwrap();
        assert_eq!(c.predictions[2], 1);
    }

    #[test]
    fn classify_needs_every_class() {
        let l = lap(DMatrix::identity(2, 2));
        let y2 = LabelMatrix {
            entries: DMatrix::from_row_slice(2, 3, &[1.0, -1.0, -1.0, 0.0, 0.0, 0.0]),
        };
        assert!(matches!(classify(&l, &y2, 1.0), Err(Error::MissingClassSeed { class: 1 })));
        let y = build_label_matrix(&[Some(0), Some(1)], 2).unwrap();
        assert!(classify(&l, &y, 0.0).is_err());
    }

    #[test]
    fn argmax_ties_and_scaling() {
        let f = DMatrix::from_row_slice(2, 3, &[0.2, 0.2, 0.1, -1.0, 3.0, 3.0]);
        assert_eq!(argmax_rows(&f), vec![0, 1]);
        assert_eq!(argmax_rows(&(f * 17.5)), vec![0, 1]);
    }

    #[test]
    fn accuracy_examples() {
        assert_eq!(accuracy(&[0, 0, 1, 1], &[1, 1, 0, 0]).unwrap(), 1.0);
        assert_eq!(accuracy(&[0, 1, 0, 1], &[0, 0, 1, 1]).unwrap(), 0.5);
        assert_eq!(accuracy(&[2, 0, 1, 1], &[2, 0, 1, 1]).unwrap(), 1.0);
        assert!(accuracy(&[0], &[0, 1]).is_err());
    }

    #[test]
    fn accuracy_rectangular() {
        // three predicted clusters against two classes
        assert_eq!(accuracy(&[0, 0, 1, 2], &[0, 0, 1, 1]).unwrap(), 0.75);
        assert_eq!(accuracy(&[0, 0, 0, 0], &[0, 1, 2, 2]).unwrap(), 0.5);
    }

    #[test]
    fn nmi_examples() {
        assert_eq!(nmi(&[0, 0, 1, 1], &[0, 0, 1, 1]).unwrap(), 1.0);
        assert_relative_eq!(nmi(&[1, 1, 0, 2], &[0, 0, 2, 1]).unwrap(), 1.0, epsilon = 1e-15);
        assert_eq!(nmi(&[0, 1, 0, 1], &[0, 0, 1, 1]).unwrap(), 0.0);
        assert_eq!(nmi(&[0, 0, 0], &[1, 1, 1]).unwrap(), 1.0);
        assert_eq!(nmi(&[0, 0, 0, 0], &[0, 0, 1, 1]).unwrap(), 0.0);
        assert!(nmi(&[], &[]).is_err());
    }

    #[test]
    fn nmi_hand_contingency() {
        // H(T) = ln 2, H(P) = 1.5 ln 2, and P determines T so I = ln 2
        let expect = 1.0 / 1.5f64.sqrt();
        assert_relative_eq!(nmi(&[0, 0, 1, 2], &[0, 0, 1, 1]).unwrap(), expect, epsilon = 1e-14);
        assert_relative_eq!(nmi(&[0, 0, 1, 1], &[0, 0, 1, 2]).unwrap(), expect, epsilon = 1e-14);
    }
}
