//! Exact-arithmetic engine for Siegel domains of the second kind.
//!
//! Given an open convex cone `Ω ⊂ ℝᵏ` (built from half-lines, orthants and
//! Lorentz cones) and an `Ω`-Hermitian form `H` on `ℂᵐ`, this crate computes
//! the graded Lie algebra
//!
//! ```text
//! g(S(Ω,H)) = g₋₁ ⊕ g₋₁/₂ ⊕ g₀ ⊕ g₁/₂ ⊕ g₁
//! ```
//!
//! of polynomial holomorphic vector fields generating the automorphisms of
//! the domain `S(Ω,H) = {(z,w) : Im z − H(w,w) ∈ Ω}`, certifies affine
//! homogeneity, and evaluates the dimension bounds that drive the
//! classification of homogeneous domains by automorphism group dimension.
//!
//! Everything runs over `ℚ` and `ℚ(i)` with arbitrary-precision integers;
//! there is no floating point anywhere, so every reported dimension, bound
//! and basis is exact and every run is byte-for-byte reproducible.
//!
//! The linear algebra core ([`matrix`]) is generic over the scalar type via
//! `num-traits`; the concrete instantiations used throughout the crate are
//! the [`Rational`] and [`GaussianRational`] aliases below.

pub mod catalog;
pub mod cone;
pub mod docs;
pub mod error;
pub mod graded;
pub mod hermitian;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod system;

/// Exact rational scalar: arbitrary-precision, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Gaussian rational scalar `re + i·im` with exact rational parts.
pub type GaussianRational = num_complex::Complex<Rational>;

/// Dense matrix over `ℚ`.
pub type RationalMatrix = matrix::Matrix<Rational>;

/// Dense matrix over `ℚ(i)`.
pub type GaussianMatrix = matrix::Matrix<GaussianRational>;

pub use catalog::{
    bound_scan, case_analysis, named_domain, product_domain, tube_domain, verify_paper, NamedDomain,
};
pub use cone::{dimension_bound, infinitesimal_transitivity, ConeAlgebraBasis, ConeSpec};
pub use error::Error;
pub use graded::{bound_rhs, report, GradedReport, SiegelDomainSpec};
pub use hermitian::{
    pair_normal_form, positive_combination, skew_space, validate_omega_hermitian, HermitianTuple,
};
pub use poly::{euler_field, lie_bracket, PolyVectorField};
pub use scalar::{gauss, gauss_i, rat, Scalar};
