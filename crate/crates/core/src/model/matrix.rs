use num_complex::Complex64;

use super::index::BasisIndex;
use crate::error::{Error, Result};

/// Dense complex matrix over explicit, strictly increasing row and column
/// index lists. Data is row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMatrix {
    rows: Vec<BasisIndex>,
    cols: Vec<BasisIndex>,
    data: Vec<Complex64>,
}

fn strictly_increasing(v: &[BasisIndex]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl FiniteMatrix {
    pub fn new(rows: Vec<BasisIndex>, cols: Vec<BasisIndex>, data: Vec<Complex64>) -> Result<Self> {
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::Precondition(
                "matrix index lists must be strictly increasing".into(),
            ));
        }
        if data.len() != rows.len() * cols.len() {
            return Err(Error::Precondition(format!(
                "data length {} does not match shape {}x{}",
                data.len(),
                rows.len(),
                cols.len()
            )));
        }
        Ok(FiniteMatrix { rows, cols, data })
    }

    pub fn zeros(rows: Vec<BasisIndex>, cols: Vec<BasisIndex>) -> Result<Self> {
        let n = rows.len() * cols.len();
        Self::new(rows, cols, vec![Complex64::new(0.0, 0.0); n])
    }

    /// Fills entry `(r, c)` from `f(rows[r], cols[c])`.
    pub fn from_fn<F>(rows: Vec<BasisIndex>, cols: Vec<BasisIndex>, mut f: F) -> Result<Self>
    where
        F: FnMut(BasisIndex, BasisIndex) -> Complex64,
    {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in &rows {
            for &c in &cols {
                data.push(f(r, c));
            }
        }
        Self::new(rows, cols, data)
    }

    /// Matrix over the given index lists with sparse entries; entries whose
    /// row or column is not in the index lists are dropped.
    pub fn from_sparse(
        rows: Vec<BasisIndex>,
        cols: Vec<BasisIndex>,
        entries: impl IntoIterator<Item = (BasisIndex, BasisIndex, Complex64)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(rows, cols)?;
        for (r, c, v) in entries {
            if let (Ok(i), Ok(j)) = (m.rows.binary_search(&r), m.cols.binary_search(&c)) {
                let n = m.cols.len();
                m.data[i * n + j] += v;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> &[BasisIndex] {
        &self.rows
    }

    pub fn cols(&self) -> &[BasisIndex] {
        &self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty() || self.cols.is_empty()
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Entry by position (not by basis index).
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols.len() + j]
    }

    /// Entry by basis index; zero when the index is not in the lists.
    pub fn at(&self, row: BasisIndex, col: BasisIndex) -> Complex64 {
        match (self.rows.binary_search(&row), self.cols.binary_search(&col)) {
            (Ok(i), Ok(j)) => self.get(i, j),
            _ => Complex64::new(0.0, 0.0),
        }
    }

    /// Nonzero entries keyed by basis index, in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (BasisIndex, BasisIndex, Complex64)> + '_ {
        let n = self.cols.len();
        self.data.iter().enumerate().filter_map(move |(k, v)| {
            (*v != Complex64::new(0.0, 0.0)).then(|| (self.rows[k / n], self.cols[k % n], *v))
        })
    }

    pub fn adjoint(&self) -> Self {
        let (m, n) = self.shape();
        let mut data = Vec::with_capacity(m * n);
        for j in 0..n {
            for i in 0..m {
                data.push(self.get(i, j).conj());
            }
        }
        FiniteMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            data,
        }
    }

    /// Drops all-zero rows and columns. The operator norm is unchanged.
    pub fn compact(&self) -> Self {
        let (m, n) = self.shape();
        let zero = Complex64::new(0.0, 0.0);
        let keep_r: Vec<usize> = (0..m)
            .filter(|&i| (0..n).any(|j| self.get(i, j) != zero))
            .collect();
        let keep_c: Vec<usize> = (0..n)
            .filter(|&j| keep_r.iter().any(|&i| self.get(i, j) != zero))
            .collect();
        let mut data = Vec::with_capacity(keep_r.len() * keep_c.len());
        for &i in &keep_r {
            for &j in &keep_c {
                data.push(self.get(i, j));
            }
        }
        FiniteMatrix {
            rows: keep_r.iter().map(|&i| self.rows[i]).collect(),
            cols: keep_c.iter().map(|&j| self.cols[j]).collect(),
            data,
        }
    }

    pub(crate) fn to_dmatrix(&self) -> nalgebra::DMatrix<Complex64> {
        let (m, n) = self.shape();
        nalgebra::DMatrix::from_row_slice(m, n, &self.data)
    }
}
