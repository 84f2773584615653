//! Exact degenerate Stirling, Whitney, Bell and Dowling families, a boson
//! normal-ordering engine, and mechanical verification of Spivey-type
//! recurrences as polynomial identities in λ and x.
//!
//! The arithmetic is generic over a [`Ring`]; the concrete tower the library
//! works in is
//!
//! * ℚ as [`Rational`], arbitrary precision,
//! * ℚ\[λ\] as [`LambdaPoly`],
//! * ℚ\[λ\]\[x\] as [`XPoly`].

pub mod diffrep;
pub mod falling;
pub mod format;
pub mod parser;
pub mod poly;
pub mod scalar;
pub mod special;
pub mod spivey;
pub mod triangles;
pub mod weyl;

pub use falling::{
    binomial, ff_classical, ff_degenerate, from_falling_basis, gff_scalar, lambda,
    to_falling_basis, FallingBasis, SubstLambda,
};
pub use poly::Poly;
pub use scalar::{int, parse_rational, rat, Ring};

/// Arbitrary-precision exact fraction, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Polynomial in the degeneracy parameter λ over ℚ.
pub type LambdaPoly = Poly<Rational>;

/// Polynomial in x with coefficients in ℚ[λ].
pub type XPoly = Poly<LambdaPoly>;

/// Normal-ordered Weyl-algebra element with ℚ[λ] coefficients.
pub type NormalForm = weyl::NormalForm<LambdaPoly>;

/// Truncated series in x with ℚ[λ] coefficients.
pub type TruncatedSeries = diffrep::TruncatedSeries<LambdaPoly>;
