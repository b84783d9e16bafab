use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// `n` samples × `d` features, row-major; row index = vertex id.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleMatrix {
    data: Vec<f64>,
    n: usize,
    d: usize,
}

impl SampleMatrix {
    /// Requires n ≥ 2, d ≥ 1 and finite entries.
    pub fn new(n: usize, d: usize, data: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidData(format!("need at least 2 samples, got {n}")));
        }
        if d < 1 {
            return Err(Error::InvalidData("samples need at least one feature".into()));
        }
        if data.len() != n * d {
            return Err(Error::LengthMismatch {
                left: data.len(),
                right: n * d,
            });
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidData(format!(
                "non-finite feature at sample {}, column {}",
                pos / d,
                pos % d
            )));
        }
        Ok(Self { data, n, d })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let d = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != d) {
            return Err(Error::InvalidData(format!(
                "sample {i} has {} features, expected {d}",
                rows[i].len()
            )));
        }
        Self::new(rows.len(), d, rows.concat())
    }

    pub fn nrows(&self) -> usize {
        self.n
    }

    pub fn ncols(&self) -> usize {
        self.d
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.d..(i + 1) * self.d]
    }

    pub fn row_vector(&self, i: usize) -> DVector<f64> {
        DVector::from_column_slice(self.row(i))
    }

    /// d × |idx| matrix whose columns are the selected samples.
    pub fn columns_of(&self, idx: &[usize]) -> DMatrix<f64> {
        DMatrix::from_fn(self.d, idx.len(), |r, c| self.row(idx[c])[r])
    }

    pub fn sq_dist(&self, i: usize, j: usize) -> f64 {
        sq_dist(self.row(i), self.row(j))
    }

    /// Applies `f` to every row, e.g. for translating or rotating a data set.
    pub fn map_rows(&self, mut f: impl FnMut(&[f64]) -> Vec<f64>) -> Result<Self> {
        let rows: Vec<Vec<f64>> = (0..self.n).map(|i| f(self.row(i))).collect();
        Self::from_rows(&rows)
    }
}

pub(crate) fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(SampleMatrix::new(1, 2, vec![0.0, 0.0]).is_err());
        assert!(SampleMatrix::new(2, 0, vec![]).is_err());
        assert!(SampleMatrix::new(2, 1, vec![0.0, f64::NAN]).is_err());
        assert!(SampleMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0]]).is_err());
    }

    #[test]
    fn columns_of_selects_samples() {
        let x = SampleMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]]).unwrap();
        let m = x.columns_of(&[2, 0]);
        assert_eq!(m, DMatrix::from_row_slice(2, 2, &[5.0, 1.0, 6.0, 2.0]));
        assert_eq!(x.sq_dist(0, 1), 8.0);
    }
}
