//! The three hypergraph Laplacians, all normalized and dense:
//!
//! ```text
//! clique:  A(u,v) = Σ_{e ∋ u,v} w(e)             L_c = I − D^{-1/2} A D^{-1/2}
//! star:    M(u,e) = w(e)/δ(e)                    L_* = I − D_*v^{-1/2} M D_*e^{-1} Mᵀ D_*v^{-1/2}
//! zhou:                                          L_z = I − D_v^{-1/2} H W D_e^{-1} Hᵀ D_v^{-1/2}
//! ```
//!
//! Zero degrees use a diagonal pseudo-inverse (1/0 := 0), so an isolated
//! vertex gets an identity row.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Framework {
    Zhou,
    Clique,
    Star,
}

impl Framework {
    pub const ALL: [Framework; 3] = [Framework::Zhou, Framework::Clique, Framework::Star];

    pub fn name(self) -> &'static str {
        match self {
            Framework::Zhou => "zhou",
            Framework::Clique => "clique",
            Framework::Star => "star",
        }
    }

    /// Upper bound on the spectrum of this framework's Laplacian.
    pub fn spectral_bound(self) -> f64 {
        match self {
            Framework::Clique => 2.0,
            Framework::Zhou | Framework::Star => 1.0,
        }
    }
}

impl fmt::Display for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Framework {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Framework::ALL
            .into_iter()
            .find(|fw| fw.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown framework {s:?} (expected zhou, clique or star)")))
    }
}

/// Symmetric |V|×|V| Laplacian tagged with the framework that built it.
#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix {
    pub matrix: DMatrix<f64>,
    pub framework: Framework,
}

impl LaplacianMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Weighted pairwise graph obtained from a hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpandedGraph {
    /// Symmetric, non-negative, zero diagonal.
    pub adjacency: DMatrix<f64>,
}

pub fn build(g: &Hypergraph, framework: Framework) -> LaplacianMatrix {
    match framework {
        Framework::Zhou => zhou_laplacian(g),
        Framework::Clique => clique_expansion(g),
        Framework::Star => star_expansion(g),
    }
}

fn inv_sqrt(d: f64) -> f64 {
    if d > 0.0 {
        1.0 / d.sqrt()
    } else {
        0.0
    }
}

/// I − diag(s)·K·diag(s) with s_u = d_u^{-1/2}, symmetrized.
fn normalized(kernel: &DMatrix<f64>, degrees: &[f64]) -> DMatrix<f64> {
    let n = kernel.nrows();
    let s = DVector::from_iterator(n, degrees.iter().map(|&d| inv_sqrt(d)));
    let mut l = DMatrix::identity(n, n);
    for j in 0..n {
        for i in 0..n {
            l[(i, j)] -= s[i] * kernel[(i, j)] * s[j];
        }
    }
    // the kernel is built symmetric but float accumulation order may differ per triangle
    (&l + l.transpose()) * 0.5
}

/// Clique expansion adjacency: w_c(u, v) = Σ_{e ∋ u, v} w(e).
pub fn clique_graph(g: &Hypergraph) -> ExpandedGraph {
    let n = g.num_vertices();
    let mut a = DMatrix::zeros(n, n);
    for (e, &w) in g.edges().iter().zip(g.weights()) {
        let v = e.vertices();
        for x in 0..v.len() {
            for y in (x + 1)..v.len() {
                a[(v[x], v[y])] += w;
                a[(v[y], v[x])] += w;
            }
        }
    }
    ExpandedGraph { adjacency: a }
}

/// Normalized graph Laplacian I − D^{-1/2} A D^{-1/2} of a weighted adjacency.
pub fn normalized_graph_laplacian(adjacency: &DMatrix<f64>) -> DMatrix<f64> {
    let degrees: Vec<f64> = adjacency.row_iter().map(|r| r.sum()).collect();
    normalized(adjacency, &degrees)
}

pub fn clique_expansion(g: &Hypergraph) -> LaplacianMatrix {
    LaplacianMatrix {
        matrix: normalized_graph_laplacian(&clique_graph(g).adjacency),
        framework: Framework::Clique,
    }
}

/// Star expansion weights M(u, e) = w(e)/δ(e), |V|×|E|.
pub fn star_weights(g: &Hypergraph) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(g.num_vertices(), g.num_edges());
    for (j, (e, &w)) in g.edges().iter().zip(g.weights()).enumerate() {
        let share = w / e.degree() as f64;
        for &v in e.vertices() {
            m[(v, j)] = share;
        }
    }
    m
}

pub fn star_expansion(g: &Hypergraph) -> LaplacianMatrix {
    let n = g.num_vertices();
    let m = star_weights(g);
    let dv: Vec<f64> = m.row_iter().map(|r| r.sum()).collect();
    let de: Vec<f64> = m.column_iter().map(|c| c.sum()).collect();
    let mut kernel = DMatrix::zeros(n, n);
    for (j, e) in g.edges().iter().enumerate() {
        if de[j] <= 0.0 {
            continue;
        }
        let verts = e.vertices();
        for &u in verts {
            for &v in verts {
                kernel[(u, v)] += m[(u, j)] * m[(v, j)] / de[j];
            }
        }
    }
    LaplacianMatrix {
        matrix: normalized(&kernel, &dv),
        framework: Framework::Star,
    }
}

/// H W D_e^{-1} Hᵀ, accumulated hyperedge by hyperedge.
pub fn zhou_kernel(g: &Hypergraph) -> DMatrix<f64> {
    let n = g.num_vertices();
    let mut kernel = DMatrix::zeros(n, n);
    for (e, &w) in g.edges().iter().zip(g.weights()) {
        let share = w / e.degree() as f64;
        for &u in e.vertices() {
            for &v in e.vertices() {
                kernel[(u, v)] += share;
            }
        }
    }
    kernel
}

pub fn zhou_laplacian(g: &Hypergraph) -> LaplacianMatrix {
    let degrees = g.degrees().vertex;
    LaplacianMatrix {
        matrix: normalized(&zhou_kernel(g), &degrees),
        framework: Framework::Zhou,
    }
}
