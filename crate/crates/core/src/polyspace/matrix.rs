use std::fmt;
use std::ops::{Add, Mul, Sub};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix of [`Scalar`]s.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

// Below this many rows the rayon split costs more than it saves.
const PAR_ROWS: usize = 24;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_exact(&self) -> bool {
        self.data.iter().all(Scalar::is_exact)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Widest float precision among the entries.
    pub fn precision(&self) -> Option<u32> {
        self.data.iter().filter_map(Scalar::precision).max()
    }

    pub fn to_float(&self, digits: u32) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(|x| x.to_float(digits)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar + Sync + Send) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.map(|x| if x.is_zero() { x.clone() } else { x * c })
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(
        &self,
        rhs: &Matrix,
        f: impl Fn(&Scalar, &Scalar) -> Scalar + Sync + Send,
    ) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .par_iter()
                .zip(rhs.data.par_iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Matrix product. Zero entries of the left factor are skipped, so the
    /// sparse operator matrices multiply cheaply. Each output entry is
    /// accumulated in a fixed order, so results do not depend on threading.
    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = rhs.cols;
        let row_product = |r: usize, out: &mut [Scalar]| {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for (j, o) in out.iter_mut().enumerate() {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        *o = &*o + &(a * b);
                    }
                }
            }
        };
        let mut data = vec![Scalar::zero(); self.rows * n];
        if self.rows >= PAR_ROWS && n > 0 {
            data.par_chunks_mut(n)
                .enumerate()
                .for_each(|(r, out)| row_product(r, out));
        } else if n > 0 {
            for (r, out) in data.chunks_mut(n).enumerate() {
                row_product(r, out);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: n,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = &self.data[r * self.cols + c];
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Copy of the block `rows × cols`.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows.start + r, cols.start + c).clone()
        })
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> Scalar {
        self.data
            .iter()
            .map(Scalar::abs)
            .fold(Scalar::zero(), |m, c| if c > m { c } else { m })
    }

    /// Maximum absolute column sum, as an f64 estimate.
    pub fn norm1_f64(&self) -> f64 {
        (0..self.cols)
            .map(|c| {
                (0..self.rows)
                    .map(|r| self.get(r, c).to_f64().abs())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    /// `max|self − reference| / max|reference|`; the absolute difference
    /// when the reference is zero.
    pub fn relative_max_diff(&self, reference: &Matrix) -> Result<Scalar> {
        let diff = self.try_sub(reference)?.max_abs();
        let scale = reference.max_abs();
        Ok(if scale.is_zero() {
            diff
        } else {
            &diff / &scale
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix dimension mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix dimension mismatch")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
