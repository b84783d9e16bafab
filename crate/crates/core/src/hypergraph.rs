//! Hypergraph data model: vertices `0..n`, hyperedges as vertex sets with an
//! optional seed vertex, and one positive weight per hyperedge.

use std::fmt;
use std::io::{BufRead, Write};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A hyperedge: a set of vertex indices plus an optional seed (query) vertex.
///
/// Vertices are kept in the order given until the hyperedge is placed in a
/// validated [`Hypergraph`], which stores them sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    vertices: Vec<usize>,
    seed: Option<usize>,
}

impl Hyperedge {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices, seed: None }
    }

    pub fn with_seed(vertices: Vec<usize>, seed: usize) -> Self {
        Self {
            vertices,
            seed: Some(seed),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn seed(&self) -> Option<usize> {
        self.seed
    }

    /// Hyperedge degree δ(e) = |e|.
    pub fn degree(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// One structural problem found by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    DuplicateVertex { vertex: usize },
    TooFewVertices { len: usize },
    NonPositiveWeight { weight: f64 },
    SeedNotMember { seed: usize },
    MissingWeight,
    /// More weights than hyperedges; the index is the weight's position.
    ExtraWeight,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange {
                vertex,
                num_vertices,
            } => write!(f, "vertex {vertex} out of range (num_vertices = {num_vertices})"),
            Violation::DuplicateVertex { vertex } => write!(f, "duplicate vertex {vertex}"),
            Violation::TooFewVertices { len } => {
                write!(f, "hyperedge has {len} distinct vertices, need at least 2")
            }
            Violation::NonPositiveWeight { weight } => write!(f, "non-positive weight {weight}"),
            Violation::SeedNotMember { seed } => write!(f, "seed {seed} is not a member"),
            Violation::MissingWeight => write!(f, "no weight given"),
            Violation::ExtraWeight => write!(f, "weight without a hyperedge"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    /// `(hyperedge index, violation)` pairs in hyperedge order.
    pub violations: Vec<(usize, Violation)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, (edge, v)) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "hyperedge {edge}: {v}")?;
        }
        Ok(())
    }
}

/// Checks every hypergraph invariant and reports all violations. Never fails.
pub fn validate(num_vertices: usize, edges: &[Hyperedge], weights: &[f64]) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        let mut seen = e.vertices.clone();
        seen.sort_unstable();
        for &v in &e.vertices {
            if v >= num_vertices {
                violations.push((
                    i,
                    Violation::VertexOutOfRange {
                        vertex: v,
                        num_vertices,
                    },
                ));
            }
        }
        for w in seen.windows(2) {
            if w[0] == w[1] {
                violations.push((i, Violation::DuplicateVertex { vertex: w[0] }));
            }
        }
        seen.dedup();
        if seen.len() < 2 {
            violations.push((i, Violation::TooFewVertices { len: seen.len() }));
        }
        if let Some(s) = e.seed {
            if !e.vertices.contains(&s) {
                violations.push((i, Violation::SeedNotMember { seed: s }));
            }
        }
        match weights.get(i) {
            // NaN fails `> 0` as well
            Some(&w) if !(w > 0.0 && w.is_finite()) => {
                violations.push((i, Violation::NonPositiveWeight { weight: w }))
            }
            None => violations.push((i, Violation::MissingWeight)),
            _ => {}
        }
    }
    if weights.len() > edges.len() {
        for i in edges.len()..weights.len() {
            violations.push((i, Violation::ExtraWeight));
        }
    }
    ValidationReport { violations }
}

/// A validated, immutable weighted hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Hyperedge>,
    weights: Vec<f64>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. The first violation is returned as
    /// an error naming the offending hyperedge; use [`validate`] for the full list.
    pub fn new(num_vertices: usize, edges: Vec<Hyperedge>, weights: Vec<f64>) -> Result<Self> {
        let report = validate(num_vertices, &edges, &weights);
        if let Some((edge, violation)) = report.violations.into_iter().next() {
            return Err(Error::InvalidHypergraph { edge, violation });
        }
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.vertices.sort_unstable();
                e
            })
            .collect();
        Ok(Self {
            num_vertices,
            edges,
            weights,
        })
    }

    /// All hyperedges with weight 1.
    pub fn unweighted(num_vertices: usize, edges: Vec<Hyperedge>) -> Result<Self> {
        let weights = vec![1.0; edges.len()];
        Self::new(num_vertices, edges, weights)
    }

    /// Same structure, new weights.
    pub fn with_weights(&self, weights: Vec<f64>) -> Result<Self> {
        Self::new(self.num_vertices, self.edges.clone(), weights)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn incidence(&self) -> IncidenceMatrix {
        build_incidence(self)
    }

    pub fn degrees(&self) -> DegreeVectors {
        compute_degrees(self)
    }
}

/// Sparse binary |V|×|E| incidence matrix stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    num_vertices: usize,
    columns: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    pub fn nrows(&self) -> usize {
        self.num_vertices
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// h(v, e)
    pub fn get(&self, v: usize, e: usize) -> u8 {
        u8::from(self.columns[e].binary_search(&v).is_ok())
    }

    pub fn column(&self, e: usize) -> &[usize] {
        &self.columns[e]
    }

    pub fn column_sums(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.num_vertices];
        for col in &self.columns {
            for &v in col {
                sums[v] += 1;
            }
        }
        sums
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut h = DMatrix::zeros(self.num_vertices, self.columns.len());
        for (e, col) in self.columns.iter().enumerate() {
            for &v in col {
                h[(v, e)] = 1.0;
            }
        }
        h
    }
}

pub fn build_incidence(g: &Hypergraph) -> IncidenceMatrix {
    IncidenceMatrix {
        num_vertices: g.num_vertices,
        columns: g.edges.iter().map(|e| e.vertices.clone()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeVectors {
    /// d(v) = Σ_{e ∋ v} w(e)
    pub vertex: Vec<f64>,
    /// δ(e) = |e|
    pub edge: Vec<usize>,
}

pub fn compute_degrees(g: &Hypergraph) -> DegreeVectors {
    let mut vertex = vec![0.0; g.num_vertices];
    for (e, &w) in g.edges.iter().zip(&g.weights) {
        for &v in &e.vertices {
            vertex[v] += w;
        }
    }
    DegreeVectors {
        vertex,
        edge: g.edges.iter().map(Hyperedge::degree).collect(),
    }
}

/// Writes the line format:
///
/// ```text
/// #vertices=<n>
/// <weight>\t<seed or -1>\t<v1>,<v2>,...
/// ```
pub fn write_text<W: Write>(g: &Hypergraph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "#vertices={}", g.num_vertices)?;
    for (e, w) in g.edges.iter().zip(&g.weights) {
        let seed = e.seed.map_or(-1, |s| s as i64);
        let verts: Vec<String> = e.vertices.iter().map(usize::to_string).collect();
        writeln!(out, "{w}\t{seed}\t{}", verts.join(","))?;
    }
    Ok(())
}

pub fn to_text(g: &Hypergraph) -> String {
    let mut buf = Vec::new();
    write_text(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii output")
}

/// Parses the format written by [`write_text`]. Blank lines are skipped.
pub fn read_text<R: BufRead>(input: R) -> Result<Hypergraph> {
    let mut num_vertices = None;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let perr = |message: String| Error::Parse {
            line: lineno,
            message,
        };
        if num_vertices.is_none() {
            let n = line
                .strip_prefix("#vertices=")
                .ok_or_else(|| perr("expected header `#vertices=<n>`".into()))?;
            num_vertices = Some(
                n.trim()
                    .parse::<usize>()
                    .map_err(|e| perr(format!("bad vertex count {n:?}: {e}")))?,
            );
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(perr(format!("expected 3 tab-separated fields, got {}", fields.len())));
        }
        let w: f64 = fields[0]
            .parse()
            .map_err(|e| perr(format!("bad weight {:?}: {e}", fields[0])))?;
        let seed: i64 = fields[1]
            .parse()
            .map_err(|e| perr(format!("bad seed {:?}: {e}", fields[1])))?;
        let vertices = fields[2]
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| perr(format!("bad vertex {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let edge = match seed {
            -1 => Hyperedge::new(vertices),
            s if s >= 0 => Hyperedge::with_seed(vertices, s as usize),
            s => return Err(perr(format!("bad seed {s}"))),
        };
        edges.push(edge);
        weights.push(w);
    }
    let n = num_vertices.ok_or(Error::Parse {
        line: 1,
        message: "missing `#vertices=<n>` header".into(),
    })?;
    Hypergraph::new(n, edges, weights)
}
