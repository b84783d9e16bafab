//! Hyperedge weighting schemes.
//!
//! Every scheme except `binary` first computes a raw, non-negative
//! dissimilarity per hyperedge:
//!
//! | Scheme | Raw dissimilarity |
//! |--------|-------------------|
//! | `sum` | Σ_{u<v} ‖x_u − x_v‖² (or its mean over the C(|e|,2) pairs) |
//! | `centroid` | Σ_{j≠c} ‖x_c − x_j‖² around the seed `c` |
//! | `volume-gram` | simplex volume from vertex coordinates (Gram determinant) |
//! | `volume-cm` | simplex volume from squared edge lengths (Cayley-Menger) |
//! | `volume-face` | simplex volume from its hyperface equations |
//! | `trace` | trace of the scatter matrix, Σ_i ‖x_i − x̄‖² |
//! | `llre` | leave-one-out linear reconstruction error |
//!
//! and then maps it to a weight with [`finalize_weights`]:
//! `w = exp(−(raw / mean(raw)) / μ)`.
//!
//! Volumes are computed from log-magnitude determinants, so large simplex
//! degrees do not overflow. A simplex with more vertices than the feature
//! dimension allows (k > d) has no volume; it gets raw value 0 and a warning.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector, SVD};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::knn::pairwise_sq_distances;
use crate::linalg::{log_abs_det, min_norm_least_squares};
use crate::samples::SampleMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Binary,
    Sum,
    Centroid,
    VolumeGram,
    VolumeCayleyMenger,
    VolumeHyperface,
    Trace,
    Llre,
}

impl Scheme {
    pub const ALL: [Scheme; 8] = [
        Scheme::Binary,
        Scheme::Sum,
        Scheme::Centroid,
        Scheme::VolumeGram,
        Scheme::VolumeCayleyMenger,
        Scheme::VolumeHyperface,
        Scheme::Trace,
        Scheme::Llre,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Binary => "binary",
            Scheme::Sum => "sum",
            Scheme::Centroid => "centroid",
            Scheme::VolumeGram => "volume-gram",
            Scheme::VolumeCayleyMenger => "volume-cm",
            Scheme::VolumeHyperface => "volume-face",
            Scheme::Trace => "trace",
            Scheme::Llre => "llre",
        }
    }

    pub fn needs_seed(self, cfg: &WeightSchemeConfig) -> bool {
        match self {
            Scheme::Centroid => true,
            Scheme::Llre => cfg.llre_aggregator == LlreAggregator::Seed,
            _ => false,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Scheme::ALL.iter().map(|s| s.name()).collect();
                Error::InvalidParameter(format!("unknown scheme {s:?} (expected one of {})", names.join(", ")))
            })
    }
}

/// Which vertices' reconstruction errors make up the LLRE dissimilarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LlreAggregator {
    /// Only the seed vertex.
    #[default]
    Seed,
    Mean,
    Min,
    Max,
}

impl FromStr for LlreAggregator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seed" => Ok(Self::Seed),
            "mean" => Ok(Self::Mean),
            "min" => Ok(Self::Min),
            "max" => Ok(Self::Max),
            _ => Err(Error::InvalidParameter(format!(
                "unknown llre aggregator {s:?} (expected seed, mean, min or max)"
            ))),
        }
    }
}

impl fmt::Display for LlreAggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Seed => "seed",
            Self::Mean => "mean",
            Self::Min => "min",
            Self::Max => "max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SumAggregator {
    #[default]
    Sum,
    /// Divide by the number of vertex pairs.
    Mean,
}

impl FromStr for SumAggregator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(Self::Sum),
            "mean" => Ok(Self::Mean),
            _ => Err(Error::InvalidParameter(format!(
                "unknown sum aggregator {s:?} (expected sum or mean)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightSchemeConfig {
    pub scheme: Scheme,
    pub mu: f64,
    pub llre_aggregator: LlreAggregator,
    pub sum_aggregator: SumAggregator,
}

impl WeightSchemeConfig {
    pub fn new(scheme: Scheme, mu: f64) -> Self {
        Self {
            scheme,
            mu,
            llre_aggregator: LlreAggregator::default(),
            sum_aggregator: SumAggregator::default(),
        }
    }
}

/// Per-hyperedge raw dissimilarities, all finite and ≥ 0.
#[derive(Debug, Clone, PartialEq)]
pub struct RawDissimilarity {
    pub values: Vec<f64>,
    /// Number of hyperedges whose simplex was degenerate (k > d) and got 0.
    pub degenerate: usize,
}

fn check_edge(e: &[usize]) -> Result<()> {
    if e.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "hyperedge needs at least 2 vertices, got {}",
            e.len()
        )));
    }
    Ok(())
}

/// Sum (or mean) of pairwise squared distances over all vertex pairs of `e`.
pub fn raw_sum(x: &SampleMatrix, e: &[usize], agg: SumAggregator) -> Result<f64> {
    check_edge(e)?;
    let mut total = 0.0;
    for a in 0..e.len() {
        for b in (a + 1)..e.len() {
            total += x.sq_dist(e[a], e[b]);
        }
    }
    Ok(match agg {
        SumAggregator::Sum => total,
        SumAggregator::Mean => {
            let pairs = e.len() * (e.len() - 1) / 2;
            total / pairs as f64
        }
    })
}

/// Σ_{j ≠ seed} ‖x_seed − x_j‖².
pub fn raw_centroid(x: &SampleMatrix, e: &Hyperedge) -> Result<f64> {
    let seed = e.seed().ok_or(Error::MissingSeed { edge: 0 })?;
    Ok(e
        .vertices()
        .iter()
        .filter(|&&j| j != seed)
        .map(|&j| x.sq_dist(seed, j))
        .sum())
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

/// Volume of the simplex spanned by the samples in `e`:
/// sqrt(|det(GᵀG)|) / k!, with columns g_i = x_0 − x_i.
///
/// Returns [`Error::DegenerateVolume`] when k = |e| − 1 exceeds the feature
/// dimension.
pub fn raw_volume_gram(x: &SampleMatrix, e: &[usize]) -> Result<f64> {
    check_edge(e)?;
    let k = e.len() - 1;
    let d = x.ncols();
    if k > d {
        return Err(Error::DegenerateVolume { k, d });
    }
    let x0 = x.row(e[0]);
    let g = DMatrix::from_fn(d, k, |r, c| x0[r] - x.row(e[c + 1])[r]);
    let gram = g.transpose() * &g;
    let det = log_abs_det(&gram)?;
    if det.is_singular() {
        return Ok(0.0);
    }
    Ok((0.5 * det.log_abs - ln_factorial(k)).exp())
}

/// Simplex volume from the (k+1)×(k+1) matrix of squared pairwise distances,
/// via the bordered Cayley-Menger determinant:
/// sqrt(|det P|) / (2^{k/2} · k!).
pub fn raw_volume_cayley_menger(d2: &DMatrix<f64>) -> Result<f64> {
    if !d2.is_square() || d2.nrows() < 2 {
        return Err(Error::InvalidData(format!(
            "squared-distance matrix must be square with at least 2 rows, got {}x{}",
            d2.nrows(),
            d2.ncols()
        )));
    }
    let m = d2.nrows();
    let k = m - 1;
    let scale = d2.amax();
    for i in 0..m {
        if d2[(i, i)] != 0.0 {
            return Err(Error::InvalidData(format!("nonzero diagonal entry at {i}")));
        }
        for j in 0..m {
            let v = d2[(i, j)];
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidData(format!("invalid squared distance {v} at ({i}, {j})")));
            }
            if (v - d2[(j, i)]).abs() > 1e-12 * scale.max(1.0) {
                return Err(Error::NotSymmetric((v - d2[(j, i)]).abs()));
            }
        }
    }
    if scale == 0.0 {
        return Ok(0.0);
    }
    // det P is homogeneous of degree k in the squared distances; normalize
    // them so the singularity test does not depend on the units
    let mut p = DMatrix::zeros(m + 1, m + 1);
    for i in 0..m {
        p[(0, i + 1)] = 1.0;
        p[(i + 1, 0)] = 1.0;
        for j in 0..m {
            p[(i + 1, j + 1)] = d2[(i, j)] / scale;
        }
    }
    let det = log_abs_det(&p)?;
    if det.is_singular() {
        return Ok(0.0);
    }
    let log_det = det.log_abs + k as f64 * scale.ln();
    let log_vol = 0.5 * log_det - 0.5 * k as f64 * std::f64::consts::LN_2 - ln_factorial(k);
    Ok(log_vol.exp())
}

/// Simplex volume from its k+1 hyperfaces. Row i of `a` holds the
/// coefficients (a_i0, a_i1, …, a_ik) of the face equation
/// a_i0 + a_i1·v_1 + … + a_ik·v_k = 0.
///
/// Vol = |det A|^k / (k! · Π_i |C_i0|), C_i0 the cofactor of a_i0.
/// Rows may be scaled freely.
pub fn raw_volume_hyperface(a: &DMatrix<f64>) -> Result<f64> {
    if !a.is_square() || a.nrows() < 2 {
        return Err(Error::InvalidData(format!(
            "hyperface matrix must be square with at least 2 rows, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    let m = a.nrows();
    let k = m - 1;
    // normalize rows: the formula is invariant to row scaling and this keeps
    // the singularity tests relative
    let mut a = a.clone();
    for mut row in a.row_iter_mut() {
        let norm = row.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::InvalidData("hyperface row is zero or non-finite".into()));
        }
        row /= norm;
    }
    let mut log_cofactors = 0.0;
    for i in 0..m {
        let minor = a.clone().remove_row(i).remove_column(0);
        let det = log_abs_det(&minor)?;
        if det.is_singular() {
            return Err(Error::ParallelFace { face: i });
        }
        log_cofactors += det.log_abs;
    }
    let det = log_abs_det(&a)?;
    if det.is_singular() {
        return Ok(0.0);
    }
    Ok((k as f64 * det.log_abs - ln_factorial(k) - log_cofactors).exp())
}

/// Fits the k+1 hyperface equations of the simplex spanned by `e`, expressed
/// in an orthonormal coordinate system of the simplex's affine hull.
///
/// Returns `None` when the simplex is degenerate or k > d.
pub fn fit_hyperfaces(x: &SampleMatrix, e: &[usize]) -> Option<DMatrix<f64>> {
    let k = e.len().checked_sub(1)?;
    let d = x.ncols();
    if k == 0 || k > d {
        return None;
    }
    let x0 = x.row(e[0]);
    let g = DMatrix::from_fn(d, k, |r, c| x.row(e[c + 1])[r] - x0[r]);
    let svd = SVD::new(g.clone(), true, false);
    let s = &svd.singular_values;
    if s.min() <= s.max() * 1e-10 {
        return None;
    }
    let basis = svd.u.expect("u requested");
    // local coordinates: vertex 0 at the origin, vertex c+1 at basis^T g_c
    let local: Vec<DVector<f64>> = std::iter::once(DVector::zeros(k))
        .chain((0..k).map(|c| basis.transpose() * g.column(c)))
        .collect();

    let mut faces = DMatrix::zeros(k + 1, k + 1);
    for i in 0..=k {
        // face i passes through every vertex except i: [1, y_j] · a = 0 for j ≠ i
        let mut b = DMatrix::zeros(k + 1, k + 1);
        for (r, y) in local.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, y)| y).enumerate() {
            b[(r, 0)] = 1.0;
            for c in 0..k {
                b[(r, c + 1)] = y[c];
            }
        }
        let svd = SVD::new(b, false, true);
        let v_t = svd.v_t.expect("v_t requested");
        let smallest = svd.singular_values.imin();
        faces.set_row(i, &v_t.row(smallest));
    }
    Some(faces)
}

/// Simplex volume of `e` computed through its fitted hyperfaces.
pub fn raw_volume_face(x: &SampleMatrix, e: &[usize]) -> Result<f64> {
    check_edge(e)?;
    let k = e.len() - 1;
    if k > x.ncols() {
        return Err(Error::DegenerateVolume { k, d: x.ncols() });
    }
    match fit_hyperfaces(x, e) {
        Some(a) => match raw_volume_hyperface(&a) {
            Err(Error::ParallelFace { .. }) => Ok(0.0),
            r => r,
        },
        None => Ok(0.0),
    }
}

/// Trace of the scatter matrix Σ_i (x_i − x̄)(x_i − x̄)ᵀ, computed as
/// Σ_i ‖x_i − x̄‖² without forming the d×d matrix.
pub fn raw_trace(x: &SampleMatrix, e: &[usize]) -> Result<f64> {
    check_edge(e)?;
    let d = x.ncols();
    let mut mean = vec![0.0; d];
    for &v in e {
        for (m, xv) in mean.iter_mut().zip(x.row(v)) {
            *m += xv;
        }
    }
    let inv = 1.0 / e.len() as f64;
    mean.iter_mut().for_each(|m| *m *= inv);
    Ok(e.iter().map(|&v| crate::samples::sq_dist(x.row(v), &mean)).sum())
}

/// Materialized scatter matrix (d×d); only sensible for small d.
pub fn scatter_matrix(x: &SampleMatrix, e: &[usize]) -> DMatrix<f64> {
    let cols = x.columns_of(e);
    let mean = cols.column_mean();
    let mut centered = cols;
    for mut c in centered.column_iter_mut() {
        c -= &mean;
    }
    &centered * centered.transpose()
}

/// Relative reconstruction error of sample `i` from the other members of `e`:
/// ‖x_i − X c‖² / ‖x_i‖² with c the minimum-norm least-squares coefficients.
pub fn reconstruction_error(x: &SampleMatrix, e: &[usize], i: usize) -> Result<f64> {
    let target = x.row_vector(i);
    let norm2 = target.norm_squared();
    if norm2 == 0.0 {
        return Err(Error::ZeroNormSample { vertex: i });
    }
    let others: Vec<usize> = e.iter().copied().filter(|&t| t != i).collect();
    let basis = x.columns_of(&others);
    let coeffs = min_norm_least_squares(&basis, &target)?;
    let residual = target - basis * coeffs;
    Ok(residual.norm_squared() / norm2)
}

/// Local linear reconstruction error of a hyperedge, aggregated per `agg`.
pub fn raw_llre(x: &SampleMatrix, e: &Hyperedge, agg: LlreAggregator) -> Result<f64> {
    let verts = e.vertices();
    check_edge(verts)?;
    if agg == LlreAggregator::Seed {
        let seed = e.seed().ok_or(Error::MissingSeed { edge: 0 })?;
        return reconstruction_error(x, verts, seed);
    }
    let errs = verts
        .iter()
        .map(|&i| reconstruction_error(x, verts, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(match agg {
        LlreAggregator::Mean => errs.iter().sum::<f64>() / errs.len() as f64,
        LlreAggregator::Min => errs.iter().copied().fold(f64::INFINITY, f64::min),
        LlreAggregator::Max => errs.iter().copied().fold(0.0, f64::max),
        LlreAggregator::Seed => unreachable!(),
    })
}

/// w_i = exp(−(raw_i / mean(raw)) / μ). All-zero input maps to all ones.
///
/// Weights are clamped below at the smallest positive normal `f64`, so they
/// stay strictly positive even when the exponential underflows.
pub fn finalize_weights(raw: &[f64], mu: f64) -> Result<Vec<f64>> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::InvalidParameter(format!("mu must be positive and finite, got {mu}")));
    }
    if let Some(v) = raw.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
        return Err(Error::InvalidData(format!("raw dissimilarity {v} is not a finite non-negative number")));
    }
    if raw.is_empty() {
        return Ok(Vec::new());
    }
    let mean = raw.iter().sum::<f64>() / raw.len() as f64;
    if mean == 0.0 {
        return Ok(vec![1.0; raw.len()]);
    }
    Ok(raw
        .iter()
        .map(|&r| (-(r / mean) / mu).exp().max(f64::MIN_POSITIVE))
        .collect())
}

pub fn binary_weights(g: &Hypergraph) -> Vec<f64> {
    vec![1.0; g.num_edges()]
}

/// Raw value of one hyperedge. `Ok(None)` marks a degenerate volume.
fn raw_for_edge(x: &SampleMatrix, e: &Hyperedge, cfg: &WeightSchemeConfig) -> Result<Option<f64>> {
    let verts = e.vertices();
    let volume = |r: Result<f64>| match r {
        Err(Error::DegenerateVolume { .. }) => Ok(None),
        r => r.map(Some),
    };
    match cfg.scheme {
        Scheme::Binary => Ok(Some(0.0)),
        Scheme::Sum => raw_sum(x, verts, cfg.sum_aggregator).map(Some),
        Scheme::Centroid => raw_centroid(x, e).map(Some),
        Scheme::VolumeGram => volume(raw_volume_gram(x, verts)),
        Scheme::VolumeCayleyMenger => {
            let k = verts.len() - 1;
            if k > x.ncols() {
                return Ok(None);
            }
            volume(raw_volume_cayley_menger(&pairwise_sq_distances(x, verts)))
        }
        Scheme::VolumeHyperface => volume(raw_volume_face(x, verts)),
        Scheme::Trace => raw_trace(x, verts).map(Some),
        Scheme::Llre => raw_llre(x, e, cfg.llre_aggregator).map(Some),
    }
}

pub fn raw_dissimilarities(x: &SampleMatrix, g: &Hypergraph, cfg: &WeightSchemeConfig) -> Result<RawDissimilarity> {
    raw_dissimilarities_with(x, g, cfg, Execution::default())
}

/// Raw dissimilarity of every hyperedge under `cfg.scheme`, one independent
/// job per hyperedge.
pub fn raw_dissimilarities_with(
    x: &SampleMatrix,
    g: &Hypergraph,
    cfg: &WeightSchemeConfig,
    exec: Execution,
) -> Result<RawDissimilarity> {
    if x.nrows() != g.num_vertices() {
        return Err(Error::LengthMismatch {
            left: x.nrows(),
            right: g.num_vertices(),
        });
    }
    if cfg.scheme.needs_seed(cfg) {
        if let Some(edge) = g.edges().iter().position(|e| e.seed().is_none()) {
            return Err(Error::MissingSeed { edge });
        }
    }
    let raw = exec.try_map(g.num_edges(), |i| {
        raw_for_edge(x, &g.edges()[i], cfg).map_err(|err| match err {
            Error::MissingSeed { .. } => Error::MissingSeed { edge: i },
            other => other,
        })
    })?;
    let degenerate = raw.iter().filter(|r| r.is_none()).count();
    if degenerate > 0 {
        log::warn!(
            "{degenerate} of {} hyperedges have more vertices than the feature dimension allows ({}); their volume is set to 0",
            g.num_edges(),
            x.ncols()
        );
    }
    Ok(RawDissimilarity {
        values: raw.into_iter().map(|r| r.unwrap_or(0.0)).collect(),
        degenerate,
    })
}

pub fn scheme_weights(x: &SampleMatrix, g: &Hypergraph, cfg: &WeightSchemeConfig) -> Result<Vec<f64>> {
    scheme_weights_with(x, g, cfg, Execution::default())
}

/// Final weights under `cfg`: all ones for `binary`, otherwise the
/// mean-normalized exponential of the raw dissimilarities.
pub fn scheme_weights_with(
    x: &SampleMatrix,
    g: &Hypergraph,
    cfg: &WeightSchemeConfig,
    exec: Execution,
) -> Result<Vec<f64>> {
    if cfg.scheme == Scheme::Binary {
        finalize_weights(&[], cfg.mu)?;
        return Ok(binary_weights(g));
    }
    let raw = raw_dissimilarities_with(x, g, cfg, exec)?;
    finalize_weights(&raw.values, cfg.mu)
}

/// Returns `g` reweighted under `cfg`.
pub fn apply_scheme(x: &SampleMatrix, g: &Hypergraph, cfg: &WeightSchemeConfig) -> Result<Hypergraph> {
    apply_scheme_with(x, g, cfg, Execution::default())
}

pub fn apply_scheme_with(
    x: &SampleMatrix,
    g: &Hypergraph,
    cfg: &WeightSchemeConfig,
    exec: Execution,
) -> Result<Hypergraph> {
    g.with_weights(scheme_weights_with(x, g, cfg, exec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pts(rows: &[&[f64]]) -> SampleMatrix {
        SampleMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn all(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn scheme_names_round_trip() {
        for s in Scheme::ALL {
            assert_eq!(s.name().parse::<Scheme>().unwrap(), s);
        }
        assert!("volume".parse::<Scheme>().is_err());
    }

    #[test]
    fn sum_examples() {
        let x = pts(&[&[0.0, 0.0], &[3.0, 4.0]]);
        assert_eq!(raw_sum(&x, &[0, 1], SumAggregator::Sum).unwrap(), 25.0);
        let h = 3f64.sqrt() / 2.0;
        let tri = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, h]]);
        assert_relative_eq!(raw_sum(&tri, &all(3), SumAggregator::Sum).unwrap(), 3.0, epsilon = 1e-15);
        assert_relative_eq!(raw_sum(&tri, &all(3), SumAggregator::Mean).unwrap(), 1.0, epsilon = 1e-15);
        let same = pts(&[&[2.0, 1.0][..]; 4]);
        assert_eq!(raw_sum(&same, &all(4), SumAggregator::Sum).unwrap(), 0.0);
    }

    #[test]
    fn centroid_examples() {
        let x = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]);
        assert_eq!(raw_centroid(&x, &Hyperedge::with_seed(all(3), 0)).unwrap(), 2.0);
        let x = pts(&[&[0.0, 0.0], &[3.0, 4.0], &[6.0, 8.0]]);
        assert_eq!(raw_centroid(&x, &Hyperedge::with_seed(all(3), 0)).unwrap(), 125.0);
        let same = pts(&[&[1.0, 1.0][..]; 3]);
        assert_eq!(raw_centroid(&same, &Hyperedge::with_seed(all(3), 1)).unwrap(), 0.0);
        assert!(matches!(raw_centroid(&x, &Hyperedge::new(all(3))), Err(Error::MissingSeed { .. })));
    }

    #[test]
    fn gram_examples() {
        let tri = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]);
        assert_relative_eq!(raw_volume_gram(&tri, &all(3)).unwrap(), 0.5, epsilon = 1e-12);
        let line = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        assert!(raw_volume_gram(&line, &all(3)).unwrap() < 1e-10);
        assert!(matches!(
            raw_volume_gram(&tri, &[0, 1, 2, 0]),
            Err(Error::DegenerateVolume { k: 3, d: 2 })
        ));
    }

    #[test]
    fn cayley_menger_examples() {
        let eq = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0]);
        assert_relative_eq!(raw_volume_cayley_menger(&eq).unwrap(), 3f64.sqrt() / 4.0, epsilon = 1e-12);
        // collinear 0, 1, 2
        let flat = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 4.0, 1.0, 0.0, 1.0, 4.0, 1.0, 0.0]);
        assert!(raw_volume_cayley_menger(&flat).unwrap() < 1e-10);
        let asym = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 2.0, 0.0]);
        assert!(raw_volume_cayley_menger(&asym).is_err());
        let neg = DMatrix::from_row_slice(2, 2, &[0.0, -1.0, -1.0, 0.0]);
        assert!(matches!(raw_volume_cayley_menger(&neg), Err(Error::InvalidData(_))));
    }

    #[test]
    fn cayley_menger_segment_length() {
        let d2 = DMatrix::from_row_slice(2, 2, &[0.0, 9.0, 9.0, 0.0]);
        assert_relative_eq!(raw_volume_cayley_menger(&d2).unwrap(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn hyperface_triangle() {
        // x = 0, y = 0, x + y = 1
        let a = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, 0.0, 0.0, 1.0, -1.0, 1.0, 1.0]);
        assert_relative_eq!(raw_volume_hyperface(&a).unwrap(), 0.5, epsilon = 1e-12);
        let gram = raw_volume_gram(&pts(&[&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]), &all(3)).unwrap();
        assert_relative_eq!(raw_volume_hyperface(&a).unwrap(), gram, epsilon = 1e-12);
        assert_relative_eq!(raw_volume_hyperface(&(a * 2.0)).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn hyperface_parallel_faces() {
        // x = 0, x = 1, y = 0: two parallel lines
        let a = DMatrix::from_row_slice(3, 3, &[0.0, 1.0, 0.0, -1.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(matches!(raw_volume_hyperface(&a), Err(Error::ParallelFace { face: 2 })));
    }

    #[test]
    fn fitted_faces_match_gram_in_3d() {
        let x = pts(&[&[0.1, 0.2, -0.3], &[1.0, 0.1, 0.0], &[0.3, 1.2, 0.4], &[-0.2, 0.5, 1.1]]);
        let a = fit_hyperfaces(&x, &all(4)).unwrap();
        let face = raw_volume_hyperface(&a).unwrap();
        let gram = raw_volume_gram(&x, &all(4)).unwrap();
        assert_relative_eq!(face, gram, max_relative = 1e-10);
    }

    #[test]
    fn face_volume_of_embedded_triangle() {
        // right triangle lifted into 3-D: the affine-hull coordinates carry the area
        let x = pts(&[&[0.0, 0.0, 5.0], &[1.0, 0.0, 5.0], &[0.0, 1.0, 5.0]]);
        assert_relative_eq!(raw_volume_face(&x, &all(3)).unwrap(), 0.5, epsilon = 1e-12);
        let line = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        assert_eq!(raw_volume_face(&line, &all(3)).unwrap(), 0.0);
    }

    #[test]
    fn trace_examples() {
        let x = pts(&[&[0.0, 0.0], &[2.0, 0.0]]);
        assert_eq!(raw_trace(&x, &[0, 1]).unwrap(), 2.0);
        assert_eq!(raw_trace(&pts(&[&[3.0, 3.0][..]; 3]), &all(3)).unwrap(), 0.0);
        let sq = pts(&[&[0.0, 0.0], &[1.0, 0.0], &[1.0, 1.0], &[0.0, 1.0]]);
        assert_relative_eq!(raw_trace(&sq, &all(4)).unwrap(), 2.0, epsilon = 1e-15);
        assert_relative_eq!(scatter_matrix(&sq, &all(4)).trace(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn llre_examples() {
        let x = pts(&[&[1.0, 1.0], &[2.0, 2.0]]);
        assert_relative_eq!(reconstruction_error(&x, &[0, 1], 0).unwrap(), 0.0, epsilon = 1e-15);
        let x = pts(&[&[1.0, 0.0], &[0.0, 1.0]]);
        assert_relative_eq!(reconstruction_error(&x, &[0, 1], 0).unwrap(), 1.0, epsilon = 1e-15);

        let x = pts(&[&[1.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        assert_relative_eq!(reconstruction_error(&x, &[0, 1, 2], 0).unwrap(), 0.0, epsilon = 1e-14);
        // projection of (1,1,0) onto span{e1, e3} leaves (0,1,0): 1 / 2
        assert_relative_eq!(reconstruction_error(&x, &[0, 1, 3], 0).unwrap(), 0.5, epsilon = 1e-14);
    }

    #[test]
    fn llre_aggregators() {
        let x = pts(&[&[1.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]);
        let e = Hyperedge::with_seed(all(3), 0);
        let per: Vec<f64> = (0..3).map(|i| reconstruction_error(&x, &[0, 1, 2], i).unwrap()).collect();
        assert_relative_eq!(raw_llre(&x, &e, LlreAggregator::Seed).unwrap(), per[0]);
        assert_relative_eq!(raw_llre(&x, &e, LlreAggregator::Mean).unwrap(), per.iter().sum::<f64>() / 3.0);
        assert_relative_eq!(raw_llre(&x, &e, LlreAggregator::Min).unwrap(), per.iter().copied().fold(9.0, f64::min));
        assert_relative_eq!(raw_llre(&x, &e, LlreAggregator::Max).unwrap(), per.iter().copied().fold(0.0, f64::max));
        assert!(raw_llre(&x, &Hyperedge::new(all(3)), LlreAggregator::Seed).is_err());
    }

    #[test]
    fn llre_zero_norm_names_vertex() {
        let x = pts(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let e = Hyperedge::with_seed(vec![0, 1], 1);
        assert!(matches!(raw_llre(&x, &e, LlreAggregator::Seed), Err(Error::ZeroNormSample { vertex: 1 })));
    }

    #[test]
    fn finalize_examples() {
        let w = finalize_weights(&[2.0, 2.0], 1.0).unwrap();
        assert_relative_eq!(w[0], (-1f64).exp());
        assert_relative_eq!(w[1], 0.367879441171442, epsilon = 1e-12);
        assert_eq!(finalize_weights(&[0.0, 0.0, 0.0], 1.0).unwrap(), vec![1.0; 3]);
        let w = finalize_weights(&[1.0, 3.0], 2.0).unwrap();
        assert_relative_eq!(w[0], (-0.25f64).exp(), epsilon = 1e-15);
        assert_relative_eq!(w[1], (-0.75f64).exp(), epsilon = 1e-15);
        assert!(finalize_weights(&[1.0], 0.0).is_err());
        assert!(finalize_weights(&[1.0], -1.0).is_err());
        assert!(finalize_weights(&[], 1.0).unwrap().is_empty());
    }

    #[test]
    fn binary_examples() {
        let x = pts(&[&[0.0], &[1.0], &[5.0], &[6.0]]);
        let g = crate::knn::knn_hyperedges(&x, 1).unwrap();
        assert_eq!(binary_weights(&g), vec![1.0; 4]);
        let empty = Hypergraph::unweighted(3, vec![]).unwrap();
        assert!(binary_weights(&empty).is_empty());
        let cfg = WeightSchemeConfig::new(Scheme::Trace, 1.0);
        let traced = apply_scheme(&x, &g, &cfg).unwrap();
        assert!(traced.weights().iter().any(|&w| w < 1.0));
        let back = apply_scheme(&x, &traced, &WeightSchemeConfig::new(Scheme::Binary, 1.0)).unwrap();
        assert_eq!(back.weights(), &[1.0; 4]);
    }

    #[test]
    fn degenerate_volumes_become_zero_raw() {
        // 1-D data with 3-vertex hyperedges: k = 2 > d = 1
        let x = pts(&[&[0.0], &[1.0], &[2.5], &[4.0]]);
        let g = crate::knn::knn_hyperedges(&x, 2).unwrap();
        for scheme in [Scheme::VolumeGram, Scheme::VolumeCayleyMenger, Scheme::VolumeHyperface] {
            let raw = raw_dissimilarities(&x, &g, &WeightSchemeConfig::new(scheme, 1.0)).unwrap();
            assert_eq!(raw.values, vec![0.0; 4]);
            assert_eq!(raw.degenerate, 4);
        }
    }

    #[test]
    fn seed_requirement_checked_up_front() {
        let x = pts(&[&[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]]);
        let g = Hypergraph::unweighted(3, vec![Hyperedge::with_seed(vec![0, 1], 0), Hyperedge::new(vec![1, 2])]).unwrap();
        let err = scheme_weights(&x, &g, &WeightSchemeConfig::new(Scheme::Centroid, 1.0)).unwrap_err();
        assert!(matches!(err, Error::MissingSeed { edge: 1 }));
        let mut cfg = WeightSchemeConfig::new(Scheme::Llre, 1.0);
        cfg.llre_aggregator = LlreAggregator::Mean;
        assert!(scheme_weights(&x, &g, &cfg).is_ok());
    }
}
