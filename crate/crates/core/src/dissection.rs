//! Elementary dissections: splitting a simplex along an interior edge point.

use crate::chains::SimplexChain;
use crate::error::{Error, Result};
use crate::exact::{sample_rational, Matrix, SampleSource, Scalar};
use crate::geometry::{OrientedSimplex, Point};

const REDRAW_LIMIT: usize = 64;

/// Replaces `v_j` (resp. `v_i`) by `cut`, a point strictly inside the edge
/// `v_i v_j`. The two words keep the orientation of `s` and their measures
/// sum to `[s]`.
pub fn elementary_split<T: Scalar>(
    s: &OrientedSimplex<T>,
    i: usize,
    j: usize,
    cut: &Point<T>,
) -> Result<(OrientedSimplex<T>, OrientedSimplex<T>)> {
    let vs = s.vertices();
    if i >= vs.len() || j >= vs.len() || i == j {
        return Err(Error::IndexOutOfRange);
    }
    if cut.dim() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), found: cut.dim() });
    }
    let edge = vs[j].sub(&vs[i]);
    let offset = cut.sub(&vs[i]);
    let k = edge.coords.iter().position(|x| !x.is_zero()).ok_or(Error::CutNotOnOpenEdge)?;
    let t = offset.coords[k].clone() / edge.coords[k].clone();
    if !(t > T::zero() && t < T::one()) || edge.scale(&t) != offset {
        return Err(Error::CutNotOnOpenEdge);
    }
    let mut a = vs.to_vec();
    a[j] = cut.clone();
    let mut b = vs.to_vec();
    b[i] = cut.clone();
    Ok((OrientedSimplex::new(a)?, OrientedSimplex::new(b)?))
}

/// `d - 1` base points and three collinear points `x_1, x_2, x_3`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitRelator<T> {
    base: Vec<Point<T>>,
    collinear: [Point<T>; 3],
}

impl<T: Scalar> SplitRelator<T> {
    /// Requires distinct collinear `x`'s and three non-degenerate cells
    /// `base ∪ {x_a, x_b}`. The order of the `x`'s along the line is free.
    pub fn new(base: Vec<Point<T>>, collinear: [Point<T>; 3]) -> Result<Self> {
        let d = collinear[0].dim();
        if base.len() + 1 != d {
            return Err(Error::DimensionMismatch { expected: d - 1, found: base.len() });
        }
        if base.iter().chain(&collinear).any(|p| p.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: 0 });
        }
        let [x1, x2, x3] = &collinear;
        let dirs = Matrix::from_rows(vec![x2.sub(x1).coords, x3.sub(x1).coords])?;
        if x1 == x2 || x2 == x3 || x1 == x3 || dirs.rank() != 1 {
            return Err(Error::DegenerateConfiguration);
        }
        let r = Self { base, collinear };
        if r.words().iter().any(OrientedSimplex::is_degenerate) {
            return Err(Error::DegenerateConfiguration);
        }
        Ok(r)
    }

    pub fn base(&self) -> &[Point<T>] {
        &self.base
    }

    pub fn collinear(&self) -> &[Point<T>; 3] {
        &self.collinear
    }

    /// `x_2` lies strictly between `x_1` and `x_3`.
    pub fn is_dissection(&self) -> bool {
        let [x1, x2, x3] = &self.collinear;
        x2.sub(x1).dot(&x3.sub(x2)) > T::zero()
    }

    /// The words `v…x_1x_2`, `v…x_2x_3`, `v…x_3x_1`.
    pub fn words(&self) -> [OrientedSimplex<T>; 3] {
        let [x1, x2, x3] = &self.collinear;
        let word = |a: &Point<T>, b: &Point<T>| {
            let mut w = self.base.clone();
            w.push(a.clone());
            w.push(b.clone());
            OrientedSimplex::new(w).expect("dimensions checked")
        };
        [word(x1, x2), word(x2, x3), word(x3, x1)]
    }
}

/// Cyclic three-term relator; measure-equal to zero.
pub fn relator_chain<T: Scalar>(r: &SplitRelator<T>) -> Result<SimplexChain<T>> {
    let d = r.collinear[0].dim();
    let words = r.words();
    if words.iter().any(OrientedSimplex::is_degenerate) {
        return Err(Error::DegenerateConfiguration);
    }
    SimplexChain::from_words(d, words.into_iter().map(|w| (1, w)))
}

/// Applies `steps` random elementary splits. With `avoid_codegenerate`,
/// any split producing a codegenerate cell is redrawn.
pub fn random_refine<T: Scalar>(
    c: &SimplexChain<T>,
    steps: usize,
    source: &mut SampleSource,
    avoid_codegenerate: bool,
) -> Result<SimplexChain<T>> {
    if steps == 0 || c.is_empty() {
        return Ok(c.clone());
    }
    let mut cells: Vec<(i64, OrientedSimplex<T>)> =
        c.terms().iter().map(|t| (t.coeff, t.simplex.clone())).collect();
    let d = c.dim();
    let zero = T::zero();
    let one = T::one();
    for _ in 0..steps {
        let mut done = false;
        for _ in 0..REDRAW_LIMIT {
            let idx = source.index(cells.len());
            let i = source.index(d + 1);
            let mut j = source.index(d);
            if j >= i {
                j += 1;
            }
            let s = &cells[idx].1;
            let t = sample_rational(&zero, &one, source)?;
            let vs = s.vertices();
            let cut = vs[i].add(&vs[j].sub(&vs[i]).scale(&t));
            let (a, b) = elementary_split(s, i, j, &cut)?;
            if avoid_codegenerate && (a.is_codegenerate()? || b.is_codegenerate()?) {
                continue;
            }
            let coeff = cells[idx].0;
            cells[idx] = (coeff, a);
            cells.push((coeff, b));
            done = true;
            break;
        }
        if !done {
            return Err(Error::ExhaustedSampling { attempts: REDRAW_LIMIT });
        }
    }
    SimplexChain::from_words(d, cells)
}
