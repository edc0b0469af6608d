//! Seeded generators for property tests and demos.
//!
//! Coordinates are drawn with the source's denominator, so a source built
//! with a small denominator gives small exact coordinates.

use crate::chains::SimplexChain;
use crate::convex::ConvexPolytope;
use crate::dissection::SplitRelator;
use crate::error::{Error, Result};
use crate::exact::{sample_rational, SampleSource, Scalar};
use crate::geometry::{OrientedSimplex, Point};

const ATTEMPTS: usize = 1000;

pub fn random_point<T: Scalar>(dim: usize, radius: i64, source: &mut SampleSource) -> Result<Point<T>> {
    let lo = T::from_ratio(-radius, 1);
    let hi = T::from_ratio(radius, 1);
    Ok(Point::new((0..dim).map(|_| sample_rational(&lo, &hi, source)).collect::<Result<_>>()?))
}

/// A simplex that is neither degenerate nor codegenerate.
pub fn random_simplex<T: Scalar>(dim: usize, radius: i64, source: &mut SampleSource) -> Result<OrientedSimplex<T>> {
    for _ in 0..ATTEMPTS {
        let vs = (0..=dim).map(|_| random_point(dim, radius, source)).collect::<Result<Vec<_>>>()?;
        let s = OrientedSimplex::new(vs)?;
        if !s.is_degenerate() && !s.is_codegenerate()? {
            return Ok(s);
        }
    }
    Err(Error::ExhaustedSampling { attempts: ATTEMPTS })
}

/// Up to `max_terms` non-codegenerate terms with coefficients in
/// `[-max_coeff, max_coeff] \ {0}`, entered as random words.
pub fn random_chain<T: Scalar>(
    dim: usize,
    max_terms: usize,
    max_coeff: i64,
    radius: i64,
    source: &mut SampleSource,
) -> Result<SimplexChain<T>> {
    let n = 1 + source.index(max_terms);
    let mut words = Vec::with_capacity(n);
    for _ in 0..n {
        let mut coeff = 0;
        while coeff == 0 {
            coeff = source.int_in(-max_coeff, max_coeff);
        }
        words.push((coeff, random_simplex(dim, radius, source)?));
    }
    SimplexChain::from_words(dim, words)
}

/// Hull of `points` random points with the origin strictly inside.
pub fn random_polytope_with_origin<T: Scalar>(
    dim: usize,
    points: usize,
    radius: i64,
    source: &mut SampleSource,
) -> Result<ConvexPolytope<T>> {
    for _ in 0..ATTEMPTS {
        let pts = (0..points).map(|_| random_point(dim, radius, source)).collect::<Result<Vec<_>>>()?;
        match ConvexPolytope::hull(&pts) {
            Ok(p) if p.origin_interior() => return Ok(p),
            Ok(_) | Err(Error::NotFullDimensional) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ExhaustedSampling { attempts: ATTEMPTS })
}

/// A relator whose three cells are non-codegenerate, with `x_2` strictly
/// between `x_1` and `x_3`.
pub fn random_relator<T: Scalar>(dim: usize, radius: i64, source: &mut SampleSource) -> Result<SplitRelator<T>> {
    let zero = T::zero();
    let one = T::one();
    for _ in 0..ATTEMPTS {
        let base = (0..dim - 1).map(|_| random_point(dim, radius, source)).collect::<Result<Vec<_>>>()?;
        let x1: Point<T> = random_point(dim, radius, source)?;
        let x3 = random_point(dim, radius, source)?;
        let t = sample_rational(&zero, &one, source)?;
        let x2 = x1.add(&x3.sub(&x1).scale(&t));
        let Ok(r) = SplitRelator::new(base, [x1, x2, x3]) else {
            continue;
        };
        let ok = r.words().iter().all(|w| w.is_codegenerate().map(|c| !c).unwrap_or(false));
        if ok {
            return Ok(r);
        }
    }
    Err(Error::ExhaustedSampling { attempts: ATTEMPTS })
}
