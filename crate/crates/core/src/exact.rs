//! Scalars and dense linear algebra.
//!
//! Everything downstream is generic over [`Scalar`]. With `BigRational`
//! every predicate is decided exactly; with `f32`/`f64` the same code runs
//! but zero tests become approximate and codegeneracy is not decidable.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// An ordered field the kernels can compute over.
pub trait Scalar:
    Clone + fmt::Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `num / den` built from machine integers.
    fn from_ratio(num: i64, den: i64) -> Self {
        let n = Self::from_i64(num).expect("scalar can represent i64");
        let d = Self::from_i64(den).expect("scalar can represent i64");
        n / d
    }

    /// Whether comparisons against zero are decided without rounding.
    fn is_exact() -> bool;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_exact() -> bool {
        true
    }

    fn to_f64_lossy(&self) -> f64 {
        // Converting numerator and denominator separately overflows for
        // huge fractions; `Ratio::to_f64` handles that.
        self.to_f64().unwrap_or_else(|| {
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
}

impl Scalar for f64 {
    fn is_exact() -> bool {
        false
    }
}

impl Scalar for f32 {
    fn is_exact() -> bool {
        false
    }
}

/// Three-way sign of a scalar.
pub fn sign<T: Scalar>(x: &T) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Ragged);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Ragged);
        }
        let data = rows.into_iter().flatten().collect();
        Ok(Self { rows: nrows, cols: ncols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Entrywise sum; shapes must agree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Pivot is the first nonzero entry at or below the diagonal. Every
    /// division in the inner loop is exact over an integral domain, so for
    /// rational input the entries stay minors of the original matrix.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                let lead = a[(i, k)].clone();
                for j in k + 1..n {
                    let v = (a[(i, j)].clone() * pivot.clone() - lead.clone() * a[(k, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
                a[(i, k)] = T::zero();
            }
            prev = pivot;
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    /// Solves `self · x = rhs` by Gaussian elimination.
    pub fn solve(&self, rhs: &[T]) -> Result<Vec<T>> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if rhs.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: rhs.len() });
        }
        let w = n + 1;
        let mut aug: Vec<T> = Vec::with_capacity(n * w);
        for i in 0..n {
            aug.extend_from_slice(self.row(i));
            aug.push(rhs[i].clone());
        }
        for k in 0..n {
            let p = (k..n).find(|&r| !aug[r * w + k].is_zero()).ok_or(Error::SingularMatrix)?;
            if p != k {
                for j in 0..w {
                    aug.swap(p * w + j, k * w + j);
                }
            }
            let pivot = aug[k * w + k].clone();
            for i in k + 1..n {
                let f = aug[i * w + k].clone();
                if f.is_zero() {
                    continue;
                }
                let f = f / pivot.clone();
                for j in k..w {
                    let v = aug[i * w + j].clone() - f.clone() * aug[k * w + j].clone();
                    aug[i * w + j] = v;
                }
            }
        }
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut acc = aug[i * w + n].clone();
            for j in i + 1..n {
                acc = acc - aug[i * w + j].clone() * x[j].clone();
            }
            x[i] = acc / aug[i * w + i].clone();
        }
        Ok(x)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[(r, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let pivot = a[(rank, c)].clone();
            for i in rank + 1..self.rows {
                let f = a[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                let f = f / pivot.clone();
                for j in c..self.cols {
                    let v = a[(i, j)].clone() - f.clone() * a[(rank, j)].clone();
                    a[(i, j)] = v;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Inverse via one solve per unit vector.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for j in 0..n {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            let col = self.solve(&e)?;
            for (i, v) in col.into_iter().enumerate() {
                inv[(i, j)] = v;
            }
        }
        Ok(inv)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

pub fn det<T: Scalar>(m: &Matrix<T>) -> Result<T> {
    m.det()
}

pub fn solve_linear<T: Scalar>(m: &Matrix<T>, rhs: &[T]) -> Result<Vec<T>> {
    m.solve(rhs)
}

/// Default denominator of sampled rationals.
pub const DEFAULT_DENOMINATOR: u64 = 1 << 31;

/// Seeded deterministic random source.
///
/// `split(i)` derives an independent child from the seed alone, so work
/// fanned out by index reproduces regardless of scheduling.
#[derive(Clone, Debug)]
pub struct SampleSource {
    seed: u64,
    denominator: u64,
    rng: ChaCha8Rng,
}

impl SampleSource {
    pub fn new(seed: u64) -> Self {
        Self::with_denominator(seed, DEFAULT_DENOMINATOR)
    }

    pub fn with_denominator(seed: u64, denominator: u64) -> Self {
        assert!(denominator >= 2, "denominator must be at least 2");
        Self { seed, denominator, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn split(&self, index: u64) -> Self {
        Self::with_denominator(mix(self.seed ^ mix(index.wrapping_add(0x5851_f42d_4c95_7f2d))), self.denominator)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

fn mix(mut z: u64) -> u64 {
    // splitmix64 finalizer
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Rational `lo + (hi - lo)·k/D` with `k` uniform in `1..D`, `D` the source's
/// denominator. Strictly inside `(lo, hi)`.
pub fn sample_rational<T: Scalar>(lo: &T, hi: &T, source: &mut SampleSource) -> Result<T> {
    if !(lo < hi) {
        return Err(Error::EmptyRange);
    }
    let den = source.denominator;
    let k = source.rng.gen_range(1..den);
    let frac = T::from_u64(k).expect("scalar can represent u64") / T::from_u64(den).expect("scalar can represent u64");
    Ok(lo.clone() + (hi.clone() - lo.clone()) * frac)
}
