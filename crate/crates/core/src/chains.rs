//! Integer combinations of oriented simplices and their measure semantics.
//!
//! A [`SimplexChain`] is kept canonical: every stored word is positively
//! oriented, terms with the same vertex set are merged, and zero or
//! zero-volume terms are dropped. Two chains with equal canonical terms are
//! equal as formal sums; [`measure_equal`] tests the weaker equality of the
//! signed measures they define.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{sample_rational, Matrix, SampleSource, Scalar};
use crate::geometry::{bounding_box, Containment, OrientedSimplex, Point, SimplexFrame};

/// Resampling budget per sample index when a draw is not generic.
const RESAMPLE_LIMIT: usize = 128;

#[derive(Clone, Debug, PartialEq)]
pub struct Term<T> {
    pub coeff: i64,
    pub simplex: OrientedSimplex<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimplexChain<T> {
    dim: usize,
    terms: Vec<Term<T>>,
}

fn word_cmp<T: Scalar>(a: &OrientedSimplex<T>, b: &OrientedSimplex<T>) -> Ordering {
    for (x, y) in a.vertices().iter().zip(b.vertices()) {
        match x.lex_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl<T: Scalar> SimplexChain<T> {
    pub fn empty(dim: usize) -> Self {
        Self { dim, terms: Vec::new() }
    }

    /// Builds a chain from oriented words. A negatively oriented word
    /// contributes `-coeff` to its vertex set.
    pub fn from_words<I>(dim: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, OrientedSimplex<T>)>,
    {
        let mut raw = Vec::new();
        for (coeff, word) in words {
            if word.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: word.dim() });
            }
            let (canon, o) = word.canonical();
            if o == 0 || coeff == 0 {
                continue;
            }
            raw.push(Term { coeff: coeff * i64::from(o), simplex: canon });
        }
        Ok(Self::normalize(dim, raw))
    }

    /// `+[s]` as a measure, whatever the orientation of the word.
    pub fn from_simplex(s: &OrientedSimplex<T>) -> Self {
        let (canon, o) = s.canonical();
        let terms = if o == 0 { Vec::new() } else { vec![Term { coeff: 1, simplex: canon }] };
        Self { dim: s.dim(), terms }
    }

    /// Adds canonical terms, merging equal vertex sets.
    fn normalize(dim: usize, mut raw: Vec<Term<T>>) -> Self {
        raw.sort_by(|a, b| word_cmp(&a.simplex, &b.simplex));
        let mut terms: Vec<Term<T>> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if word_cmp(&last.simplex, &t.simplex) == Ordering::Equal => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| t.coeff != 0);
        Self { dim, terms }
    }

    /// Adds `coeff · [s]` where `[s]` is the unsigned measure of the simplex.
    pub(crate) fn from_measures<I>(dim: usize, items: I) -> Self
    where
        I: IntoIterator<Item = (i64, OrientedSimplex<T>)>,
    {
        let raw = items
            .into_iter()
            .filter(|(c, _)| *c != 0)
            .filter_map(|(coeff, s)| {
                let (canon, o) = s.canonical();
                (o != 0).then_some(Term { coeff, simplex: canon })
            })
            .collect();
        Self::normalize(dim, raw)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let raw = self.terms.iter().chain(&other.terms).cloned().collect();
        Ok(Self::normalize(self.dim, raw))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::empty(self.dim);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff * k, simplex: t.simplex.clone() })
            .collect();
        Self { dim: self.dim, terms }
    }

    pub fn translate(&self, by: &Point<T>) -> Self {
        Self::from_measures(self.dim, self.terms.iter().map(|t| (t.coeff, t.simplex.translate(by))))
    }

    /// Σ coeff_i · vol(Δ_i).
    pub fn total_measure(&self) -> T {
        self.terms.iter().fold(T::zero(), |acc, t| {
            acc + T::from_i64(t.coeff).expect("i64 fits scalar") * t.simplex.volume()
        })
    }

    /// Density of the measure at `p`. Fails when `p` touches the boundary of
    /// any term.
    pub fn multiplicity(&self, p: &Point<T>) -> Result<i64> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        let mut total = 0;
        for t in &self.terms {
            match t.simplex.contains(p)? {
                Containment::Inside => total += t.coeff,
                Containment::Boundary => return Err(Error::NonGenericPoint),
                Containment::Outside => {}
            }
        }
        Ok(total)
    }

    pub fn moment_signature(&self) -> MomentSignature<T> {
        let mut sig = MomentSignature::zero(self.dim);
        for t in &self.terms {
            let (vol, first, second) = t.simplex.moments();
            sig = sig.add_weighted(&MomentSignature { total: vol, first, second }, t.coeff);
        }
        sig
    }

    /// Joint bounding box of all terms, `None` for the empty chain.
    pub fn bounding_box(&self) -> Option<(Point<T>, Point<T>)> {
        let pts: Vec<Point<T>> = self.terms.iter().flat_map(|t| t.simplex.vertices().iter().cloned()).collect();
        (!pts.is_empty()).then(|| bounding_box(&pts))
    }

    pub fn prepare(&self) -> Result<PreparedChain<T>> {
        let cells = self
            .terms
            .iter()
            .map(|t| Ok((t.coeff, SimplexFrame::new(&t.simplex)?)))
            .collect::<Result<_>>()?;
        Ok(PreparedChain { dim: self.dim, cells })
    }
}

/// A chain with per-term inverses cached, for many point evaluations.
#[derive(Clone, Debug)]
pub struct PreparedChain<T> {
    dim: usize,
    cells: Vec<(i64, SimplexFrame<T>)>,
}

impl<T: Scalar> PreparedChain<T> {
    pub fn multiplicity(&self, p: &Point<T>) -> Result<i64> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        let mut total = 0;
        for (coeff, frame) in &self.cells {
            match frame.contains(p) {
                Containment::Inside => total += coeff,
                Containment::Boundary => return Err(Error::NonGenericPoint),
                Containment::Outside => {}
            }
        }
        Ok(total)
    }
}

/// Exact integrals `∫dμ`, `∫x dμ`, `∫x xᵀ dμ`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSignature<T> {
    pub total: T,
    pub first: Vec<T>,
    pub second: Matrix<T>,
}

impl<T: Scalar> MomentSignature<T> {
    pub fn zero(dim: usize) -> Self {
        Self { total: T::zero(), first: vec![T::zero(); dim], second: Matrix::zeros(dim, dim) }
    }

    pub fn add_weighted(&self, other: &Self, weight: i64) -> Self {
        let w = T::from_i64(weight).expect("i64 fits scalar");
        Self {
            total: self.total.clone() + other.total.clone() * w.clone(),
            first: self.first.iter().zip(&other.first).map(|(a, b)| a.clone() + b.clone() * w.clone()).collect(),
            second: self.second.add(&other.second.scale(&w)).expect("same dimension"),
        }
    }
}

/// Outcome of a measure-equality test.
#[derive(Clone, Debug, PartialEq)]
pub enum MeasureVerdict<T> {
    /// No difference found; `samples` generic points were evaluated.
    Equal { samples: usize },
    /// `witness` is a point where the densities differ, if one was sampled.
    /// Moment mismatches are reported without a witness.
    Unequal { witness: Option<Point<T>> },
}

impl<T> MeasureVerdict<T> {
    pub fn is_equal(&self) -> bool {
        matches!(self, MeasureVerdict::Equal { .. })
    }
}

/// Draws one point uniformly-ish from the box `[lo, hi]`.
pub fn sample_in_box<T: Scalar>(lo: &Point<T>, hi: &Point<T>, source: &mut SampleSource) -> Result<Point<T>> {
    let coords = lo
        .coords
        .iter()
        .zip(&hi.coords)
        .map(|(a, b)| if a < b { sample_rational(a, b, source) } else { Ok(a.clone()) })
        .collect::<Result<_>>()?;
    Ok(Point::new(coords))
}

/// Draws a point in the box that is generic for `chain`, returning it with
/// its multiplicity.
pub fn generic_sample<T: Scalar>(
    chain: &PreparedChain<T>,
    lo: &Point<T>,
    hi: &Point<T>,
    source: &mut SampleSource,
) -> Result<(Point<T>, i64)> {
    for _ in 0..RESAMPLE_LIMIT {
        let p = sample_in_box(lo, hi, source)?;
        match chain.multiplicity(&p) {
            Ok(m) => return Ok((p, m)),
            Err(Error::NonGenericPoint) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ExhaustedSampling { attempts: RESAMPLE_LIMIT })
}

/// Looks for a point in `[lo, hi]` where `chain` has nonzero density.
/// Sample `i` uses `source.split(i)`; the lowest-index witness wins.
pub fn find_witness<T: Scalar>(
    chain: &SimplexChain<T>,
    lo: &Point<T>,
    hi: &Point<T>,
    samples: usize,
    source: &SampleSource,
) -> Result<Option<Point<T>>> {
    if chain.is_empty() {
        return Ok(None);
    }
    let prepared = chain.prepare()?;
    let found = (0..samples).into_par_iter().find_map_first(|i| {
        let mut src = source.split(i as u64);
        match generic_sample(&prepared, lo, hi, &mut src) {
            Ok((p, m)) if m != 0 => Some(Ok(p)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    found.transpose()
}

/// Tests `π(a) = π(b)`: exact moments up to degree two, then `samples`
/// generic point evaluations of `a - b` over the joint bounding box.
/// `Equal` is one-sided evidence; `Unequal` is certain.
pub fn measure_equal<T: Scalar>(
    a: &SimplexChain<T>,
    b: &SimplexChain<T>,
    samples: usize,
    source: &SampleSource,
) -> Result<MeasureVerdict<T>> {
    a.check_dim(b)?;
    if a.moment_signature() != b.moment_signature() {
        return Ok(MeasureVerdict::Unequal { witness: None });
    }
    let diff = a.sub(b)?;
    if diff.is_empty() {
        return Ok(MeasureVerdict::Equal { samples: 0 });
    }
    let pts: Vec<Point<T>> = a
        .terms()
        .iter()
        .chain(b.terms())
        .flat_map(|t| t.simplex.vertices().iter().cloned())
        .collect();
    let (lo, hi) = bounding_box(&pts);
    match find_witness(&diff, &lo, &hi, samples, source)? {
        Some(w) => Ok(MeasureVerdict::Unequal { witness: Some(w) }),
        None => Ok(MeasureVerdict::Equal { samples }),
    }
}
