//! Exact signed simplicial chains in ℝ^d and the polarity involution on
//! their measures.
//!
//! The kernels are generic over [`Scalar`]; the `Exact*` aliases fix the
//! scalar to arbitrary-precision rationals, which is what every exact
//! predicate (orientation, codegeneracy, σ) needs.

pub mod chains;
pub mod convex;
pub mod dissection;
pub mod duality;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod io;
pub mod random;
pub mod transforms;

pub use chains::{measure_equal, MeasureVerdict, MomentSignature, SimplexChain, Term};
pub use convex::{
    convex_hull, fan_triangulation, generic_basepoint, polar_body, triangulate_non_codegenerate, ConvexPolytope,
    Triangulation,
};
pub use dissection::{elementary_split, random_refine, relator_chain, SplitRelator};
pub use duality::{phi, phi_polytope, polar_simplex, sigma, SignCount};
pub use error::{Error, Result};
pub use exact::{det, sample_rational, solve_linear, Matrix, SampleSource, Scalar};
pub use geometry::{Containment, Hyperplane, OrientedSimplex, Point};
pub use transforms::{
    direct_volume, filliman_volume, fourier, lawrence_volume, FourierValue, VolumeMethod, VolumeReport,
};

/// Arbitrary-precision rational.
pub type ExactScalar = num_rational::BigRational;
pub type ExactPoint = Point<ExactScalar>;
pub type ExactMatrix = Matrix<ExactScalar>;
pub type ExactSimplex = OrientedSimplex<ExactScalar>;
pub type ExactChain = SimplexChain<ExactScalar>;
pub type ExactPolytope = ConvexPolytope<ExactScalar>;

pub type FloatPoint = Point<f64>;
pub type FloatSimplex = OrientedSimplex<f64>;
