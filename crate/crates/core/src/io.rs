//! JSON file formats. Rationals are written as `"p/q"`, or `"p"` when the
//! denominator is one.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chains::SimplexChain;
use crate::convex::ConvexPolytope;
use crate::error::{Error, Result};
use crate::geometry::{OrientedSimplex, Point};
use crate::{ExactChain, ExactPoint, ExactPolytope, ExactScalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: i64,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub dim: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolytopeRecord {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

/// Either kind of input file.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Chain(ExactChain),
    Polytope(ExactPolytope),
}

pub fn parse_rational(s: &str) -> Result<ExactScalar> {
    let s = s.trim();
    let r = ExactScalar::from_str(s).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
    if r.denom().sign() == num_bigint::Sign::NoSign {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(r)
}

pub fn format_rational(x: &ExactScalar) -> String {
    x.to_string()
}

pub fn parse_point(coords: &[String], dim: usize) -> Result<ExactPoint> {
    if coords.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: coords.len() });
    }
    Ok(Point::new(coords.iter().map(|c| parse_rational(c)).collect::<Result<_>>()?))
}

pub fn format_point(p: &ExactPoint) -> Vec<String> {
    p.coords.iter().map(format_rational).collect()
}

impl ChainRecord {
    pub fn from_chain(c: &ExactChain) -> Self {
        let terms = c
            .terms()
            .iter()
            .map(|t| TermRecord { coeff: t.coeff, vertices: t.simplex.vertices().iter().map(format_point).collect() })
            .collect();
        Self { dim: c.dim(), terms }
    }

    /// Words are folded through their orientation on the way in.
    pub fn to_chain(&self) -> Result<ExactChain> {
        let words = self
            .terms
            .iter()
            .map(|t| {
                let vs = t.vertices.iter().map(|v| parse_point(v, self.dim)).collect::<Result<Vec<_>>>()?;
                Ok((t.coeff, OrientedSimplex::new(vs)?))
            })
            .collect::<Result<Vec<_>>>()?;
        SimplexChain::from_words(self.dim, words)
    }
}

impl PolytopeRecord {
    pub fn from_polytope(p: &ExactPolytope) -> Self {
        Self { dim: p.dim(), vertices: p.vertices().iter().map(format_point).collect() }
    }

    pub fn from_points(dim: usize, pts: &[ExactPoint]) -> Self {
        Self { dim, vertices: pts.iter().map(format_point).collect() }
    }

    /// Facets are always recomputed from the vertices.
    pub fn to_polytope(&self) -> Result<ExactPolytope> {
        let pts = self.vertices.iter().map(|v| parse_point(v, self.dim)).collect::<Result<Vec<_>>>()?;
        ConvexPolytope::hull(&pts)
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn chain_to_json(c: &ExactChain) -> String {
    serde_json::to_string_pretty(&ChainRecord::from_chain(c)).expect("serializable")
}

pub fn chain_from_json(s: &str) -> Result<ExactChain> {
    serde_json::from_str::<ChainRecord>(s).map_err(json_err)?.to_chain()
}

pub fn polytope_to_json(p: &ExactPolytope) -> String {
    serde_json::to_string_pretty(&PolytopeRecord::from_polytope(p)).expect("serializable")
}

pub fn polytope_from_json(s: &str) -> Result<ExactPolytope> {
    serde_json::from_str::<PolytopeRecord>(s).map_err(json_err)?.to_polytope()
}

/// Dispatches on the presence of a `terms` or `vertices` key.
pub fn input_from_json(s: &str) -> Result<Input> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(json_err)?;
    if v.get("terms").is_some() {
        let rec: ChainRecord = serde_json::from_value(v).map_err(json_err)?;
        Ok(Input::Chain(rec.to_chain()?))
    } else if v.get("vertices").is_some() {
        let rec: PolytopeRecord = serde_json::from_value(v).map_err(json_err)?;
        Ok(Input::Polytope(rec.to_polytope()?))
    } else {
        Err(Error::Parse("expected a chain (terms) or polytope (vertices) document".into()))
    }
}
