use thiserror::Error;

/// Errors raised by the geometric kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix rows have inconsistent lengths")]
    Ragged,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty sampling range")]
    EmptyRange,
    #[error("degenerate simplex (zero volume)")]
    DegenerateSimplex,
    #[error("point lies on the boundary of a term")]
    NonGenericPoint,
    #[error("codegenerate simplex{}", term_suffix(*.term))]
    CodegenerateSimplex { term: Option<usize> },
    #[error("point set does not span the ambient space")]
    NotFullDimensional,
    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("fan apex lies outside the polytope")]
    ApexOutside,
    #[error("sampling gave up after {attempts} attempts")]
    ExhaustedSampling { attempts: usize },
    #[error("codegenerate polytope: a facet hyperplane passes through the origin")]
    CodegeneratePolytope,
    #[error("no non-codegenerate triangulation exists")]
    NoNonCodegenerateTriangulation,
    #[error("cut point is not in the open edge")]
    CutNotOnOpenEdge,
    #[error("degenerate split configuration")]
    DegenerateConfiguration,
    #[error("polytope is not simple")]
    NotSimplePolytope,
    #[error("linear functional is orthogonal to an edge direction")]
    NonGenericFunctional,
    #[error("frequency is orthogonal to a vertex difference{}", term_suffix(*.term))]
    NonGenericFrequency { term: Option<usize> },
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("parse error: {0}")]
    Parse(String),
}

fn term_suffix(term: Option<usize>) -> String {
    match term {
        Some(i) => format!(" (term {i})"),
        None => String::new(),
    }
}

impl Error {
    /// Stable machine-readable tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "non_square",
            Error::Ragged => "ragged",
            Error::SingularMatrix => "singular_matrix",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::EmptyRange => "empty_range",
            Error::DegenerateSimplex => "degenerate_simplex",
            Error::NonGenericPoint => "non_generic_point",
            Error::CodegenerateSimplex { .. } => "codegenerate",
            Error::NotFullDimensional => "not_full_dimensional",
            Error::OriginNotInterior => "origin_not_interior",
            Error::ApexOutside => "apex_outside",
            Error::ExhaustedSampling { .. } => "exhausted_sampling",
            Error::CodegeneratePolytope => "codegenerate",
            Error::NoNonCodegenerateTriangulation => "codegenerate",
            Error::CutNotOnOpenEdge => "cut_not_on_open_edge",
            Error::DegenerateConfiguration => "degenerate_configuration",
            Error::NotSimplePolytope => "not_simple_polytope",
            Error::NonGenericFunctional => "non_generic_functional",
            Error::NonGenericFrequency { .. } => "non_generic_frequency",
            Error::IndexOutOfRange => "index_out_of_range",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
