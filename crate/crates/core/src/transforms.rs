//! Volume and Fourier transforms of polytopal measures.

use num_complex::Complex64;

use serde::{Deserialize, Serialize};

use crate::chains::SimplexChain;
use crate::convex::{fan_triangulation, polar_body, triangulate_non_codegenerate, ConvexPolytope};
use crate::duality::phi;
use crate::error::{Error, Result};
use crate::exact::{sample_rational, Matrix, SampleSource, Scalar};
use crate::geometry::{factorial, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VolumeMethod {
    Direct,
    Filliman,
    Lawrence,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeReport<T> {
    pub value: T,
    pub method: VolumeMethod,
    /// Cells, dual terms or vertices summed, depending on the method.
    pub term_count: usize,
}

/// Σ coeff_i · vol(Δ_i).
pub fn direct_volume<T: Scalar>(c: &SimplexChain<T>) -> T {
    c.total_measure()
}

/// Volume of a vertex-fan triangulation.
pub fn direct_polytope_volume<T: Scalar>(p: &ConvexPolytope<T>) -> VolumeReport<T> {
    let t = fan_triangulation(p, &p.vertices()[0]).expect("a vertex is a valid apex");
    VolumeReport { value: direct_volume(&t.chain), method: VolumeMethod::Direct, term_count: t.cells.len() }
}

/// Triangulates `p°` without codegenerate cells, maps it back through the
/// duality and sums signed volumes: `Σ (-1)^σ(Δ) vol(Δ°)`.
pub fn filliman_volume<T: Scalar>(p: &ConvexPolytope<T>, source: &mut SampleSource) -> Result<VolumeReport<T>> {
    let polar = polar_body(p)?;
    let tri = triangulate_non_codegenerate(&polar, source)?;
    let dual = phi(&tri.chain)?;
    Ok(VolumeReport { value: direct_volume(&dual), method: VolumeMethod::Filliman, term_count: dual.len() })
}

/// For each vertex of a simple polytope, the `d` edge vectors leaving it.
pub fn vertex_edges<T: Scalar>(p: &ConvexPolytope<T>) -> Result<Vec<Vec<Point<T>>>> {
    if !p.is_simple() {
        return Err(Error::NotSimplePolytope);
    }
    let facets = p.facets();
    (0..p.vertices().len())
        .map(|v| {
            let incident = p.vertex_facets(v);
            incident
                .iter()
                .map(|&dropped| {
                    let rest: Vec<usize> = incident.iter().copied().filter(|&f| f != dropped).collect();
                    let u = (0..p.vertices().len())
                        .find(|&u| u != v && rest.iter().all(|&f| facets[f].vertices.contains(&u)))
                        .ok_or(Error::NotSimplePolytope)?;
                    Ok(p.vertices()[u].sub(&p.vertices()[v]))
                })
                .collect()
        })
        .collect()
}

/// Vertex formula
/// `vol = (-1)^d / d! · Σ_v ⟨c,v⟩^d · |det U_v| / Π_j ⟨c, u_{v,j}⟩`
/// over the edge vectors `u_{v,j}` at each vertex.
pub fn lawrence_volume<T: Scalar>(p: &ConvexPolytope<T>, c: &Point<T>) -> Result<VolumeReport<T>> {
    let d = p.dim();
    if c.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: c.dim() });
    }
    let edges = vertex_edges(p)?;
    let mut sum = T::zero();
    for (v, us) in p.vertices().iter().zip(&edges) {
        let mut denom = T::one();
        for u in us {
            let cu = c.dot(u);
            if cu.is_zero() {
                return Err(Error::NonGenericFunctional);
            }
            denom = denom * cu;
        }
        let det = Matrix::from_rows(us.iter().map(|u| u.coords.clone()).collect())?.det()?.abs();
        let height = num_traits::pow(c.dot(v), d);
        sum = sum + height * det / denom;
    }
    let signed = if d % 2 == 0 { sum } else { -sum };
    Ok(VolumeReport { value: signed / factorial::<T>(d), method: VolumeMethod::Lawrence, term_count: p.vertices().len() })
}

/// A random functional non-orthogonal to every edge of a simple polytope.
pub fn generic_functional<T: Scalar>(p: &ConvexPolytope<T>, source: &mut SampleSource) -> Result<Point<T>> {
    let edges: Vec<Point<T>> = vertex_edges(p)?.into_iter().flatten().collect();
    let lo = T::from_ratio(-1, 1);
    let hi = T::one();
    for _ in 0..64 {
        let c = Point::new((0..p.dim()).map(|_| sample_rational(&lo, &hi, source)).collect::<Result<_>>()?);
        if edges.iter().all(|u| !c.dot(u).is_zero()) {
            return Ok(c);
        }
    }
    Err(Error::ExhaustedSampling { attempts: 64 })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourierValue<T> {
    pub frequency: Point<T>,
    pub value: Complex64,
}

/// `∫ e^{-i⟨ξ,x⟩} dμ(x)` for the chain's measure.
///
/// Per simplex, with `a_j = ⟨ξ, v_j⟩` pairwise distinct,
/// `∫_Δ e^{-i⟨ξ,x⟩} dx = d!·vol(Δ)·Σ_j e^{-i a_j} / Π_{k≠j} i(a_k - a_j)`.
/// The differences `a_k - a_j` are formed exactly before rounding.
pub fn fourier<T: Scalar>(ch: &SimplexChain<T>, xi: &Point<T>) -> Result<FourierValue<T>> {
    let d = ch.dim();
    if xi.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: xi.dim() });
    }
    if xi.is_origin() {
        let total = ch.total_measure().to_f64_lossy();
        return Ok(FourierValue { frequency: xi.clone(), value: Complex64::new(total, 0.0) });
    }
    // (-i)^d = 1 / i^d
    let rot = Complex64::new(0.0, -1.0).powi(d as i32);
    let mut acc = Complex64::new(0.0, 0.0);
    for (idx, t) in ch.terms().iter().enumerate() {
        let a: Vec<T> = t.simplex.vertices().iter().map(|v| xi.dot(v)).collect();
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..=d {
            let mut prod = T::one();
            for k in 0..=d {
                if k != j {
                    let diff = a[k].clone() - a[j].clone();
                    if diff.is_zero() {
                        return Err(Error::NonGenericFrequency { term: Some(idx) });
                    }
                    prod = prod * diff;
                }
            }
            let phase = a[j].to_f64_lossy();
            sum += Complex64::new(phase.cos(), -phase.sin()) / prod.to_f64_lossy();
        }
        let scale = t.simplex.signed_det().abs().to_f64_lossy() * t.coeff as f64;
        acc += sum * rot * scale;
    }
    Ok(FourierValue { frequency: xi.clone(), value: acc })
}
