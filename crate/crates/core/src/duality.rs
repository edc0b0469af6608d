//! Polar simplices and the sign-twisted polarity map on chains.
//!
//! For a simplex `Δ` not touching the origin with any facet hyperplane,
//! `Δ°` is cut out by the hyperplanes `⟨w, v_i⟩ = 1` and `σ(Δ)` counts the
//! facets of `Δ` separating it from the origin. [`phi`] sends
//! `[Δ] ↦ (-1)^σ(Δ) [Δ°]` term by term; on canonical chains this is exactly
//! an involution.

use rayon::prelude::*;

use crate::chains::SimplexChain;
use crate::convex::{triangulate_non_codegenerate, ConvexPolytope};
use crate::error::{Error, Result};
use crate::exact::{sign, Matrix, SampleSource, Scalar};
use crate::geometry::{OrientedSimplex, Point};

/// Number of facet hyperplanes separating a simplex from the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignCount(pub usize);

impl SignCount {
    pub fn parity(self) -> i64 {
        if self.0 % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Count of negative barycentric coordinates of the origin.
pub fn sigma<T: Scalar>(s: &OrientedSimplex<T>) -> Result<SignCount> {
    let lambda = s.origin_barycentric()?;
    let mut negatives = 0;
    for l in &lambda {
        match sign(l) {
            0 => return Err(Error::CodegenerateSimplex { term: None }),
            -1 => negatives += 1,
            _ => {}
        }
    }
    Ok(SignCount(negatives))
}

/// Vertices `w_0 … w_d` with `⟨w_i, v_j⟩ = 1` for all `j ≠ i`, in the same
/// order as the input word.
pub fn polar_simplex<T: Scalar>(s: &OrientedSimplex<T>) -> Result<OrientedSimplex<T>> {
    if s.is_degenerate() {
        return Err(Error::DegenerateSimplex);
    }
    let d = s.dim();
    let ones = vec![T::one(); d];
    let vs = s.vertices();
    let mut ws = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let rows = vs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.coords.clone())
            .collect();
        let m = Matrix::from_rows(rows)?;
        let w = m.solve(&ones).map_err(|e| match e {
            Error::SingularMatrix => Error::CodegenerateSimplex { term: None },
            other => other,
        })?;
        ws.push(Point::new(w));
    }
    OrientedSimplex::new(ws)
}

/// `coeff·[Δ] ↦ coeff·(-1)^σ(Δ)·[Δ°]` on every term.
pub fn phi<T: Scalar>(c: &SimplexChain<T>) -> Result<SimplexChain<T>> {
    let mapped = c
        .terms()
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let tag = |e: Error| match e {
                Error::CodegenerateSimplex { .. } => Error::CodegenerateSimplex { term: Some(i) },
                other => other,
            };
            let sc = sigma(&t.simplex).map_err(tag)?;
            let polar = polar_simplex(&t.simplex).map_err(tag)?;
            Ok((t.coeff * sc.parity(), polar))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplexChain::from_measures(c.dim(), mapped))
}

/// Histogram of `σ` over the terms of a chain; index `k` counts terms with
/// `σ = k`.
pub fn sigma_histogram<T: Scalar>(c: &SimplexChain<T>) -> Result<Vec<usize>> {
    let mut hist = vec![0; c.dim() + 2];
    for (i, t) in c.terms().iter().enumerate() {
        let sc = sigma(&t.simplex).map_err(|e| match e {
            Error::CodegenerateSimplex { .. } => Error::CodegenerateSimplex { term: Some(i) },
            other => other,
        })?;
        hist[sc.0] += 1;
    }
    Ok(hist)
}

/// The map applied to a non-codegenerate triangulation of `p`. When the
/// origin is interior to `p` the result is measure-equal to `[p°]`.
pub fn phi_polytope<T: Scalar>(p: &ConvexPolytope<T>, source: &mut SampleSource) -> Result<SimplexChain<T>> {
    let tri = triangulate_non_codegenerate(p, source).map_err(|e| match e {
        Error::CodegeneratePolytope => Error::NoNonCodegenerateTriangulation,
        other => other,
    })?;
    phi(&tri.chain)
}
