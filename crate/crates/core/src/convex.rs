//! Convex polytopes from vertex data.
//!
//! The hull is built by beneath-beyond insertion over lexicographically
//! sorted points. The algorithm maintains a simplicial boundary complex, so
//! the same pass yields the placing triangulation of every facet; fans over
//! that complex triangulate the polytope.

use std::collections::HashMap;



use crate::chains::SimplexChain;
use crate::error::{Error, Result};
use crate::exact::{sample_rational, sign, Matrix, SampleSource, Scalar};
use crate::geometry::{centroid, Hyperplane, OrientedSimplex, Point};

const BASEPOINT_ATTEMPTS: usize = 64;

/// A facet `⟨normal, x⟩ = offset` with the polytope on the `≤` side.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet<T> {
    pub hyperplane: Hyperplane<T>,
    /// Indices into [`ConvexPolytope::vertices`].
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolytope<T> {
    dim: usize,
    vertices: Vec<Point<T>>,
    facets: Vec<Facet<T>>,
    boundary: Vec<Vec<usize>>,
}

/// A triangulation with all coefficients `+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangulation<T> {
    pub chain: SimplexChain<T>,
    pub cells: Vec<OrientedSimplex<T>>,
}

/// A boundary `(d-1)`-simplex of the partial hull.
struct Cell<T> {
    verts: Vec<usize>,
    plane: Hyperplane<T>,
}

fn outward<T: Scalar>(points: &[Point<T>], verts: &[usize], interior: &Point<T>) -> Hyperplane<T> {
    let pts: Vec<Point<T>> = verts.iter().map(|&i| points[i].clone()).collect();
    let h = Hyperplane::through(&pts).expect("boundary cell spans a hyperplane");
    if h.side(interior) > 0 {
        h.flipped()
    } else {
        h
    }
}

fn affine_rank<T: Scalar>(points: &[&Point<T>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let rows = points[1..].iter().map(|p| p.sub(points[0]).coords).collect();
    Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
}

/// Beneath-beyond over `points` (distinct, already ordered). Returns the
/// simplicial boundary complex as sorted index lists.
fn beneath_beyond<T: Scalar>(points: &[Point<T>]) -> Result<Vec<Cell<T>>> {
    let d = points[0].dim();
    let mut basis: Vec<usize> = vec![0];
    for i in 1..points.len() {
        if basis.len() == d + 1 {
            break;
        }
        let mut trial: Vec<&Point<T>> = basis.iter().map(|&j| &points[j]).collect();
        trial.push(&points[i]);
        if affine_rank(&trial) == basis.len() {
            basis.push(i);
        }
    }
    if basis.len() < d + 1 {
        return Err(Error::NotFullDimensional);
    }
    let interior = centroid(&basis.iter().map(|&i| points[i].clone()).collect::<Vec<_>>());
    let mut cells: Vec<Cell<T>> = (0..=d)
        .map(|skip| {
            let verts: Vec<usize> = basis.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
            let plane = outward(points, &verts, &interior);
            Cell { verts, plane }
        })
        .collect();
    for (i, p) in points.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let visible: Vec<bool> = cells.iter().map(|c| c.plane.side(p) > 0).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for (c, _) in cells.iter().zip(&visible).filter(|(_, &v)| v) {
            for skip in 0..c.verts.len() {
                let ridge: Vec<usize> = c.verts.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
                *ridges.entry(ridge).or_default() += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges.into_iter().filter(|(_, n)| *n == 1).map(|(r, _)| r).collect();
        horizon.sort();
        let mut keep = visible.iter();
        cells.retain(|_| !*keep.next().unwrap());
        for mut verts in horizon {
            verts.push(i);
            verts.sort_unstable();
            let plane = outward(points, &verts, &interior);
            cells.push(Cell { verts, plane });
        }
    }
    Ok(cells)
}

/// Scales a hyperplane so the first nonzero normal entry is ±1.
fn normalized<T: Scalar>(h: &Hyperplane<T>) -> Hyperplane<T> {
    let lead = h.normal.coords.iter().find(|x| !x.is_zero()).expect("nonzero normal").abs();
    Hyperplane { normal: h.normal.scale(&(T::one() / lead.clone())), offset: h.offset.clone() / lead }
}

fn sorted_distinct<T: Scalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup_by(|a, b| a == b);
    pts
}

impl<T: Scalar> ConvexPolytope<T> {
    /// Exact convex hull of a full-dimensional point set.
    pub fn hull(points: &[Point<T>]) -> Result<Self> {
        let d = points.first().ok_or(Error::NotFullDimensional)?.dim();
        if d == 0 {
            return Err(Error::NotFullDimensional);
        }
        if let Some(p) = points.iter().find(|p| p.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
        }
        let pts = sorted_distinct(points);
        if pts.len() < d + 1 {
            return Err(Error::NotFullDimensional);
        }
        let cells = beneath_beyond(&pts)?;

        // Distinct facet hyperplanes.
        let mut planes: Vec<Hyperplane<T>> = Vec::new();
        for c in &cells {
            let h = normalized(&c.plane);
            if !planes.contains(&h) {
                planes.push(h);
            }
        }
        // Extreme points: boundary points where incident facet normals span ℝ^d.
        let mut used: Vec<usize> = cells.iter().flat_map(|c| c.verts.iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let extreme: Vec<Point<T>> = used
            .into_iter()
            .filter(|&i| {
                let normals: Vec<Vec<T>> =
                    planes.iter().filter(|h| h.contains(&pts[i])).map(|h| h.normal.coords.clone()).collect();
                normals.len() >= d && Matrix::from_rows(normals).map(|m| m.rank()).unwrap_or(0) == d
            })
            .map(|i| pts[i].clone())
            .collect();

        let boundary_cells = if extreme.len() == pts.len() { cells } else { beneath_beyond(&extreme)? };
        let boundary = boundary_cells.into_iter().map(|c| c.verts).collect();
        let facets = planes
            .into_iter()
            .map(|h| {
                let vertices = extreme.iter().enumerate().filter(|(_, v)| h.contains(v)).map(|(i, _)| i).collect();
                Facet { hyperplane: h, vertices }
            })
            .collect();
        Ok(Self { dim: d, vertices: extreme, facets, boundary })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet<T>] {
        &self.facets
    }

    /// Simplicial boundary complex, as index lists into the vertices.
    pub fn boundary_cells(&self) -> &[Vec<usize>] {
        &self.boundary
    }

    /// Largest facet side value: negative inside, zero on the boundary.
    pub fn locate(&self, p: &Point<T>) -> i32 {
        self.facets.iter().map(|f| f.hyperplane.side(p)).max().unwrap_or(1)
    }

    pub fn contains_strictly(&self, p: &Point<T>) -> bool {
        self.locate(p) < 0
    }

    pub fn origin_interior(&self) -> bool {
        self.facets.iter().all(|f| f.hyperplane.offset.is_positive())
    }

    /// Some facet hyperplane passes through the origin.
    pub fn is_codegenerate(&self) -> bool {
        self.facets.iter().any(|f| f.hyperplane.offset.is_zero())
    }

    /// Facets incident to the vertex with index `v`.
    pub fn vertex_facets(&self, v: usize) -> Vec<usize> {
        self.facets.iter().enumerate().filter(|(_, f)| f.vertices.contains(&v)).map(|(i, _)| i).collect()
    }

    /// Every vertex lies on exactly `d` facets.
    pub fn is_simple(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.vertex_facets(v).len() == self.dim)
    }

    pub fn volume(&self) -> T {
        fan_triangulation(self, &self.vertices[0])
            .map(|t| t.chain.total_measure())
            .expect("a vertex is a valid apex")
    }

    pub fn translate(&self, by: &Point<T>) -> Result<Self> {
        let pts: Vec<Point<T>> = self.vertices.iter().map(|v| v.add(by)).collect();
        Self::hull(&pts)
    }
}

pub fn convex_hull<T: Scalar>(points: &[Point<T>]) -> Result<ConvexPolytope<T>> {
    ConvexPolytope::hull(points)
}

/// `{w : ⟨w, v⟩ ≤ 1 for all v ∈ p}`; its vertices are the facet normals of
/// `p` scaled to offset one.
pub fn polar_body<T: Scalar>(p: &ConvexPolytope<T>) -> Result<ConvexPolytope<T>> {
    if !p.origin_interior() {
        return Err(Error::OriginNotInterior);
    }
    let pts: Vec<Point<T>> = p
        .facets
        .iter()
        .map(|f| f.hyperplane.normal.scale(&(T::one() / f.hyperplane.offset.clone())))
        .collect();
    ConvexPolytope::hull(&pts)
}

/// Cones from `apex` over the boundary cells not containing it.
pub fn fan_triangulation<T: Scalar>(p: &ConvexPolytope<T>, apex: &Point<T>) -> Result<Triangulation<T>> {
    if apex.dim() != p.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: apex.dim() });
    }
    if p.locate(apex) > 0 {
        return Err(Error::ApexOutside);
    }
    let apex_index = p.vertices.iter().position(|v| v == apex);
    let mut cells = Vec::new();
    for cell in &p.boundary {
        if apex_index.is_some_and(|a| cell.contains(&a)) {
            continue;
        }
        let mut word = vec![apex.clone()];
        word.extend(cell.iter().map(|&i| p.vertices[i].clone()));
        let s = OrientedSimplex::new(word)?;
        if s.is_degenerate() {
            continue;
        }
        cells.push(s);
    }
    let chain = SimplexChain::from_measures(p.dim, cells.iter().map(|s| (1, s.clone())));
    Ok(Triangulation { chain, cells })
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Hyperplanes a generic basepoint must avoid: those spanned by `d`
/// vertices, and those through the origin and `d - 1` vertices.
fn special_hyperplanes<T: Scalar>(p: &ConvexPolytope<T>) -> Vec<Hyperplane<T>> {
    let d = p.dim;
    let origin = Point::origin(d);
    let mut out = Vec::new();
    for idx in subsets(p.vertices.len(), d) {
        let pts: Vec<Point<T>> = idx.iter().map(|&i| p.vertices[i].clone()).collect();
        if let Some(h) = Hyperplane::through(&pts) {
            out.push(h);
        }
    }
    for idx in subsets(p.vertices.len(), d - 1) {
        let mut pts = vec![origin.clone()];
        pts.extend(idx.iter().map(|&i| p.vertices[i].clone()));
        if let Some(h) = Hyperplane::through(&pts) {
            out.push(h);
        }
    }
    out
}

/// A strictly interior random point off every special hyperplane.
pub fn generic_basepoint<T: Scalar>(p: &ConvexPolytope<T>, source: &mut SampleSource) -> Result<Point<T>> {
    let special = special_hyperplanes(p);
    let zero = T::zero();
    let one = T::one();
    for _ in 0..BASEPOINT_ATTEMPTS {
        let weights = p.vertices.iter().map(|_| sample_rational(&zero, &one, source)).collect::<Result<Vec<T>>>()?;
        let total = weights.iter().fold(T::zero(), |a, w| a + w.clone());
        let b = p
            .vertices
            .iter()
            .zip(&weights)
            .fold(Point::origin(p.dim), |acc, (v, w)| acc.add(&v.scale(w)))
            .scale(&(T::one() / total));
        if p.contains_strictly(&b) && special.iter().all(|h| !h.contains(&b)) {
            return Ok(b);
        }
    }
    Err(Error::ExhaustedSampling { attempts: BASEPOINT_ATTEMPTS })
}

fn all_non_codegenerate<T: Scalar>(t: &Triangulation<T>) -> bool {
    t.cells.iter().all(|s| s.is_codegenerate().map(|c| !c).unwrap_or(false))
}

/// A triangulation with no codegenerate cell. Vertex fans are tried first
/// (fewest cells), then fans from generic interior basepoints.
pub fn triangulate_non_codegenerate<T: Scalar>(
    p: &ConvexPolytope<T>,
    source: &mut SampleSource,
) -> Result<Triangulation<T>> {
    if p.is_codegenerate() {
        return Err(Error::CodegeneratePolytope);
    }
    for v in &p.vertices {
        let t = fan_triangulation(p, v)?;
        if all_non_codegenerate(&t) {
            return Ok(t);
        }
    }
    generic_fan(p, source)
}

/// Fan from a generic interior basepoint with every cell non-codegenerate.
pub fn generic_fan<T: Scalar>(p: &ConvexPolytope<T>, source: &mut SampleSource) -> Result<Triangulation<T>> {
    if p.is_codegenerate() {
        return Err(Error::CodegeneratePolytope);
    }
    for _ in 0..BASEPOINT_ATTEMPTS {
        let b = generic_basepoint(p, source)?;
        let t = fan_triangulation(p, &b)?;
        if all_non_codegenerate(&t) {
            return Ok(t);
        }
    }
    Err(Error::ExhaustedSampling { attempts: BASEPOINT_ATTEMPTS })
}

/// Twice the signed area of a polygon given in cyclic order.
pub fn shoelace<T: Scalar>(cycle: &[Point<T>]) -> T {
    let n = cycle.len();
    (0..n).fold(T::zero(), |acc, i| {
        let a = &cycle[i].coords;
        let b = &cycle[(i + 1) % n].coords;
        acc + a[0].clone() * b[1].clone() - b[0].clone() * a[1].clone()
    })
}

/// Vertices of a polygon in counter-clockwise order.
pub fn polygon_cycle<T: Scalar>(p: &ConvexPolytope<T>) -> Vec<Point<T>> {
    assert_eq!(p.dim, 2, "polygon_cycle needs a planar polytope");
    let mut next: HashMap<usize, usize> = HashMap::new();
    for f in &p.facets {
        let (a, b) = (f.vertices[0], f.vertices[f.vertices.len() - 1]);
        // counter-clockwise: the interior is to the left of a -> b
        let dir = p.vertices[b].sub(&p.vertices[a]);
        let left = Point::new(vec![-dir.coords[1].clone(), dir.coords[0].clone()]);
        if sign(&left.dot(&f.hyperplane.normal)) < 0 {
            next.insert(a, b);
        } else {
            next.insert(b, a);
        }
    }
    let mut out = vec![p.vertices[0].clone()];
    let mut cur = next[&0];
    while cur != 0 {
        out.push(p.vertices[cur].clone());
        cur = next[&cur];
    }
    out
}
