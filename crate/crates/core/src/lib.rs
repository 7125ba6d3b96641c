//! Exact lower bounds for the face numbers of triangulated compact Lie
//! groups and other closed manifolds.
//!
//! The pipeline is: a graded presentation of the cohomology algebra
//! ([`algebra`]) gives a covering-type bound for the vertex count
//! ([`covering`]) and the Betti numbers; both feed the generalized Lower
//! Bound Theorem ([`faces`]). [`catalog`] pins the presentations of the
//! classical and exceptional groups. All arithmetic is exact ([`exact`]).

pub mod algebra;
pub mod catalog;
pub mod covering;
pub mod error;
pub mod exact;
pub mod faces;

pub use algebra::{
    betti_vector, formal_dimension, poincare_polynomial, validate_presentation, BettiVector,
    FieldLabel, Generator, GradedPresentation, PoincarePolynomial,
};
pub use covering::{
    classical_ct_bound, kahler_ct_bound, rank_dim_bound, rational_type_bound,
    weighted_length_bound, ClassicalFamily, CtBound, CtSource, RationalType,
};
pub use error::{Error, Result};
pub use exact::{binomial, poly_eval, poly_mul, BinomialTable, IntPoly};
pub use faces::{
    classical_facet_bound, face_bound, face_bound_vector, kahler_facet_bound, total_bound,
    FaceBoundVector, FacetComparison, FacetFamily,
};
pub use num_bigint::BigInt;
