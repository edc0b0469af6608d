//! Points, hyperplanes and oriented simplices with their exact predicates.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{sign, Matrix, Scalar};

/// A point (or vector) in ℝ^d.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point<T> {
    pub coords: Vec<T>,
}

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn origin(dim: usize) -> Self {
        Self { coords: vec![T::zero(); dim] }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Self { coords: xs.iter().map(|&x| T::from_ratio(x, 1)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> T {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self { coords: self.coords.iter().map(|a| a.clone() * k.clone()).collect() }
    }

    /// Lexicographic comparison; incomparable coordinates count as equal.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.coords.iter().zip(&other.coords) {
            match a.partial_cmp(b) {
                Some(Ordering::Equal) | None => continue,
                Some(o) => return o,
            }
        }
        self.coords.len().cmp(&other.coords.len())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64_lossy).collect()
    }
}

/// Barycenter of a non-empty point list.
pub fn centroid<T: Scalar>(points: &[Point<T>]) -> Point<T> {
    let d = points[0].dim();
    let sum = points.iter().fold(Point::origin(d), |acc, p| acc.add(p));
    sum.scale(&(T::one() / T::from_usize(points.len()).expect("usize fits scalar")))
}

/// The locus `⟨normal, x⟩ = offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hyperplane<T> {
    pub normal: Point<T>,
    pub offset: T,
}

impl<T: Scalar> Hyperplane<T> {
    pub fn new(normal: Point<T>, offset: T) -> Result<Self> {
        if normal.is_origin() {
            return Err(Error::DegenerateConfiguration);
        }
        Ok(Self { normal, offset })
    }

    /// `H_v = { w : ⟨w, v⟩ = 1 }`.
    pub fn polar_of(v: &Point<T>) -> Result<Self> {
        Self::new(v.clone(), T::one())
    }

    /// Hyperplane through `d` affinely independent points in ℝ^d.
    ///
    /// The normal is the generalized cross product of `p_i - p_0`, so
    /// `⟨normal, x - p_0⟩ = det(p_1 - p_0, …, p_{d-1} - p_0, x - p_0)`.
    pub fn through(points: &[Point<T>]) -> Option<Self> {
        let d = points.first()?.dim();
        if points.len() != d {
            return None;
        }
        let rows: Vec<Point<T>> = points[1..].iter().map(|p| p.sub(&points[0])).collect();
        let mut normal = Vec::with_capacity(d);
        for k in 0..d {
            let minor: Vec<Vec<T>> = rows
                .iter()
                .map(|r| r.coords.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, x)| x.clone()).collect())
                .collect();
            let m = if minor.is_empty() { Matrix::zeros(0, 0) } else { Matrix::from_rows(minor).ok()? };
            let c = m.det().ok()?;
            normal.push(if (d - 1 + k) % 2 == 0 { c } else { -c });
        }
        let normal = Point::new(normal);
        if normal.is_origin() {
            return None;
        }
        let offset = normal.dot(&points[0]);
        Some(Self { normal, offset })
    }

    /// Sign of `⟨normal, p⟩ - offset`.
    pub fn side(&self, p: &Point<T>) -> i32 {
        sign(&(self.normal.dot(p) - self.offset.clone()))
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.side(p) == 0
    }

    pub fn flipped(&self) -> Self {
        Self { normal: self.normal.scale(&-T::one()), offset: -self.offset.clone() }
    }
}

/// Containment of a point in a closed simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// An ordered list of `d + 1` points in ℝ^d.
///
/// The word `v_0 … v_d` carries the sign of `det(v_1 - v_0, …, v_d - v_0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedSimplex<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Scalar> OrientedSimplex<T> {
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self> {
        let d = vertices.first().map_or(0, Point::dim);
        if d == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if vertices.len() != d + 1 {
            return Err(Error::DimensionMismatch { expected: d + 1, found: vertices.len() });
        }
        if let Some(p) = vertices.iter().find(|p| p.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
        }
        Ok(Self { vertices })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point<T>> {
        self.vertices
    }

    /// `det(v_1 - v_0, …, v_d - v_0)`.
    pub fn signed_det(&self) -> T {
        let v0 = &self.vertices[0];
        let rows = self.vertices[1..].iter().map(|v| v.sub(v0).coords).collect();
        Matrix::from_rows(rows).and_then(|m| m.det()).expect("square by construction")
    }

    pub fn orientation(&self) -> i32 {
        sign(&self.signed_det())
    }

    pub fn is_degenerate(&self) -> bool {
        self.orientation() == 0
    }

    pub fn volume(&self) -> T {
        self.signed_det().abs() / factorial::<T>(self.dim())
    }

    fn affine_matrix(&self) -> Matrix<T> {
        let d = self.dim();
        let mut m = Matrix::zeros(d + 1, d + 1);
        for (j, v) in self.vertices.iter().enumerate() {
            for r in 0..d {
                m[(r, j)] = v.coords[r].clone();
            }
            m[(d, j)] = T::one();
        }
        m
    }

    /// The unique `λ` with `Σ λ_i = 1` and `Σ λ_i v_i = p`.
    pub fn barycentric(&self, p: &Point<T>) -> Result<Vec<T>> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: p.dim() });
        }
        let mut rhs = p.coords.clone();
        rhs.push(T::one());
        self.affine_matrix().solve(&rhs).map_err(|e| match e {
            Error::SingularMatrix => Error::DegenerateSimplex,
            other => other,
        })
    }

    pub fn contains(&self, p: &Point<T>) -> Result<Containment> {
        Ok(classify(&self.barycentric(p)?))
    }

    /// Barycentric coordinates of the origin.
    pub fn origin_barycentric(&self) -> Result<Vec<T>> {
        self.barycentric(&Point::origin(self.dim()))
    }

    /// Some facet hyperplane passes through the origin.
    pub fn is_codegenerate(&self) -> Result<bool> {
        Ok(self.origin_barycentric()?.iter().any(Zero::is_zero))
    }

    /// Volume, first moment `∫ x dx` and second moment `∫ x xᵀ dx`.
    pub fn moments(&self) -> (T, Vec<T>, Matrix<T>) {
        let d = self.dim();
        let vol = self.volume();
        let sum = self.vertices.iter().fold(Point::origin(d), |acc, v| acc.add(v));
        let n = T::from_usize(d + 1).expect("usize fits scalar");
        let first = sum.coords.iter().map(|s| vol.clone() * s.clone() / n.clone()).collect();
        let mut second = Matrix::zeros(d, d);
        for a in 0..d {
            for b in 0..d {
                let outer = self
                    .vertices
                    .iter()
                    .fold(T::zero(), |acc, v| acc + v.coords[a].clone() * v.coords[b].clone());
                second[(a, b)] = outer + sum.coords[a].clone() * sum.coords[b].clone();
            }
        }
        let k = vol.clone() / T::from_usize((d + 1) * (d + 2)).expect("usize fits scalar");
        (vol, first, second.scale(&k))
    }

    pub fn translate(&self, by: &Point<T>) -> Self {
        Self { vertices: self.vertices.iter().map(|v| v.add(by)).collect() }
    }

    /// The same vertex set written as a positively oriented word
    /// (lexicographically sorted, first two swapped if needed).
    pub(crate) fn canonical(&self) -> (Self, i32) {
        let mut vs = self.vertices.clone();
        vs.sort_by(|a, b| a.lex_cmp(b));
        let mut s = Self { vertices: vs };
        let o = s.orientation();
        if o < 0 {
            s.vertices.swap(0, 1);
        }
        (s, self.orientation())
    }

    pub fn bounding_box(&self) -> (Point<T>, Point<T>) {
        bounding_box(&self.vertices)
    }
}

pub(crate) fn classify<T: Scalar>(lambda: &[T]) -> Containment {
    let mut on_boundary = false;
    for l in lambda {
        match sign(l) {
            -1 => return Containment::Outside,
            0 => on_boundary = true,
            _ => {}
        }
    }
    if on_boundary {
        Containment::Boundary
    } else {
        Containment::Inside
    }
}

pub fn bounding_box<T: Scalar>(points: &[Point<T>]) -> (Point<T>, Point<T>) {
    let mut lo = points[0].clone();
    let mut hi = points[0].clone();
    for p in &points[1..] {
        for (k, x) in p.coords.iter().enumerate() {
            if *x < lo.coords[k] {
                lo.coords[k] = x.clone();
            }
            if *x > hi.coords[k] {
                hi.coords[k] = x.clone();
            }
        }
    }
    (lo, hi)
}

pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * T::from_usize(k).expect("usize fits scalar"))
}

/// A simplex with its affine inverse cached for repeated point location.
#[derive(Clone, Debug)]
pub struct SimplexFrame<T> {
    inverse: Matrix<T>,
    lo: Point<T>,
    hi: Point<T>,
}

impl<T: Scalar> SimplexFrame<T> {
    pub fn new(s: &OrientedSimplex<T>) -> Result<Self> {
        let inverse = s.affine_matrix().inverse().map_err(|_| Error::DegenerateSimplex)?;
        let (lo, hi) = s.bounding_box();
        Ok(Self { inverse, lo, hi })
    }

    pub fn contains(&self, p: &Point<T>) -> Containment {
        let outside_box = p
            .coords
            .iter()
            .enumerate()
            .any(|(k, x)| *x < self.lo.coords[k] || *x > self.hi.coords[k]);
        if outside_box {
            return Containment::Outside;
        }
        let mut v = p.coords.clone();
        v.push(T::one());
        let lambda = self.inverse.mul_vec(&v).expect("dimension checked by caller");
        classify(&lambda)
    }
}
