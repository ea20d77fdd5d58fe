//! Exact Hilbert and Ehrhart quasipolynomials.
//!
//! The library expands Hilbert series, counts lattice points in dilates of
//! rational polytopes, fits the resulting quasipolynomials exactly, and
//! checks two bounds on their *grade* (the index above which every
//! coefficient function is constant):
//!
//! * for a shifted free module `M` over a weighted polynomial ring,
//!   `grade Q < dim M/IM`, where `I` is generated by the homogeneous
//!   elements whose degree is coprime to the period;
//! * for a rational polytope whose `δ`-faces all have lattice points in
//!   their affine spans, `grade E_P < δ`.
//!
//! The algebra is generic over the scalar ([`exactmath::Field`],
//! [`exactmath::IntegerRing`]); the aliases below pin the exact types used
//! throughout.

pub mod exactmath;
pub mod faces;
pub mod hilbert;
pub mod polytope;
pub mod quasipoly;

pub use num_bigint::BigInt;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Reduced fraction of arbitrary-precision integers, positive denominator.
pub type Rational = num_rational::BigRational;
pub type IntMatrix = exactmath::Matrix<Integer>;
pub type RatMatrix = exactmath::Matrix<Rational>;
/// Quasipolynomial with exact rational coefficients.
pub type QuasiPolynomial = quasipoly::QuasiPoly<Rational>;

pub use exactmath::{parse_rational, Matrix};
pub use faces::{enumerate_faces, verify_ehrhart_grade_bound, EhrhartReport, Face};
pub use hilbert::{verify_grade_bound_weighted, HilbertSeries, WeightedModulePresentation, WeightedReport};
pub use polytope::RationalPolytope;
pub use quasipoly::QuasiPoly;
