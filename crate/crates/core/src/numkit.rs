//! Minimal dense numeric kernel: vectors, matrices, softmax, seeded RNG,
//! and a finite-difference gradient checker used by tests.
//!
//! Everything is `f64` and row-major. The sizes this engine works at make
//! memory layout tricks pointless; determinism and portability of serialized
//! values are what matter.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vector of 64-bit floats. Non-empty, all entries finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Vec64 {
    data: Vec<f64>,
}

impl Vec64 {
    pub fn new(data: Vec<f64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::Shape("Vec64 must be non-empty".into()));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("Vec64 entries must be finite".into()));
        }
        Ok(Self { data })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![0.0; len])
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn dot(&self, other: &Vec64) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!(
                "dot: length mismatch {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a * b)
            .sum())
    }

    /// self += c * other
    pub fn add_scaled(&mut self, c: f64, other: &Vec64) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!(
                "add_scaled: length mismatch {} vs {}",
                self.len(),
                other.len()
            )));
        }
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += c * b;
        }
        Ok(())
    }

    pub fn scale(&mut self, c: f64) {
        for v in &mut self.data {
            *v *= c;
        }
    }
}

impl std::ops::Index<usize> for Vec64 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.data[i]
    }
}

impl std::ops::IndexMut<usize> for Vec64 {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.data[i]
    }
}

/// Dense row-major matrix of 64-bit floats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mat64 {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat64 {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("Mat64 dimensions must be positive".into()));
        }
        if rows * cols != data.len() {
            return Err(Error::Shape(format!(
                "Mat64 {}x{} needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("Mat64 entries must be finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// self += c * other
    pub fn add_scaled(&mut self, c: f64, other: &Mat64) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "add_scaled: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += c * b;
        }
        Ok(())
    }

    pub fn scale(&mut self, c: f64) {
        for v in &mut self.data {
            *v *= c;
        }
    }

    /// y = M x
    pub fn matvec(&self, x: &Vec64) -> Result<Vec64> {
        if self.cols != x.len() {
            return Err(Error::Shape(format!(
                "matvec: {}x{} with vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = vec![0.0; self.rows];
        for r in 0..self.rows {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            out[r] = row.iter().zip(x.as_slice()).map(|(a, b)| a * b).sum();
        }
        Vec64::new(out)
    }
}

/// Standard matrix product.
pub fn matmul(a: &Mat64, b: &Mat64) -> Result<Mat64> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "matmul: {}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = vec![0.0; a.rows * b.cols];
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.data[i * a.cols + k];
            if aik == 0.0 {
                continue;
            }
            let brow = &b.data[k * b.cols..(k + 1) * b.cols];
            let orow = &mut out[i * b.cols..(i + 1) * b.cols];
            for (o, &bv) in orow.iter_mut().zip(brow) {
                *o += aik * bv;
            }
        }
    }
    Mat64::new(a.rows, b.cols, out)
}

/// Numerically stable softmax (max-subtraction before exponentiation).
pub fn softmax(logits: &Vec64) -> Result<Vec64> {
    let xs = logits.as_slice();
    let max = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = xs.iter().map(|&x| (x - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    if !sum.is_finite() || sum <= 0.0 {
        return Err(Error::Numeric("softmax normalization failed".into()));
    }
    Vec64::new(exps.into_iter().map(|e| e / sum).collect())
}

/// Central-difference gradient: (f(x + h e_i) - f(x - h e_i)) / 2h per coordinate.
pub fn finite_diff_grad<F>(f: F, x: &Vec64, h: f64) -> Result<Vec64>
where
    F: Fn(&Vec64) -> f64,
{
    if h <= 0.0 {
        return Err(Error::Validation("finite_diff_grad: h must be > 0".into()));
    }
    let mut grad = vec![0.0; x.len()];
    let mut probe = x.clone();
    for i in 0..x.len() {
        let orig = probe[i];
        probe[i] = orig + h;
        let fp = f(&probe);
        probe[i] = orig - h;
        let fm = f(&probe);
        probe[i] = orig;
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::Numeric(format!(
                "finite_diff_grad: non-finite evaluation at coordinate {i}"
            )));
        }
        grad[i] = (fp - fm) / (2.0 * h);
    }
    Vec64::new(grad)
}

/// Deterministic random stream.
///
/// Pinned to ChaCha8 (a counter-based, publicly specified generator) so that
/// identical seeds replay bit-identical sequences across platforms and
/// process restarts. Never swap this for the platform default.
pub type Rng64 = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive an independent stream from a base seed and a stream index.
/// SplitMix64 finalizer keeps nearby (seed, index) pairs uncorrelated.
pub fn derived_rng(seed: u64, stream: u64) -> Rng64 {
    let mut z = seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^= z >> 31;
    seeded_rng(z)
}

/// Fill a vector with uniform draws in [lo, hi).
pub fn uniform_vec(rng: &mut Rng64, len: usize, lo: f64, hi: f64) -> Result<Vec64> {
    Vec64::new((0..len).map(|_| rng.gen_range(lo..hi)).collect())
}

/// Fill a matrix with uniform draws in [lo, hi).
pub fn uniform_mat(rng: &mut Rng64, rows: usize, cols: usize, lo: f64, hi: f64) -> Result<Mat64> {
    Mat64::new(
        rows,
        cols,
        (0..rows * cols).map(|_| rng.gen_range(lo..hi)).collect(),
    )
}
