//! Exact Hilbert–Kunz multiplicities of the quadric hypersurfaces
//! `A_{p,d} = F_p[[x_0, ..., x_d]] / (x_0^2 + ... + x_d^2)`.
//!
//! The Hilbert–Kunz multiplicity of a local ring `(R, m)` of characteristic
//! `p` and dimension `n` is the limit of `length(R / m^{[p^e]}) / p^{e n}`,
//! where `m^{[p^e]}` is the ideal generated by `p^e`-th powers. For the
//! quadrics it is computed here by three independent routes:
//!
//! * the Han–Monsky representation ring ([`rep_ring`]),
//! * `(1,1)` entries of powers of banded matrices ([`matrices`]),
//! * lattice-point counts in dilated Fibonacci polytopes ([`polytope`]),
//!
//! and the three are cross-checked in [`hk`]. For fixed `d` the value is a
//! rational function of `p`, recovered exactly by interpolation.
//!
//! Everything is exact. The numeric kernels are generic over a [`Scalar`]
//! (machine integers, [`Integer`], [`Rational`]); the aliases below fix the
//! arbitrary-precision choices used by the high-level API.

pub mod appendix;
pub mod arith;
pub mod combinatorics;
pub mod error;
pub mod hk;
pub mod matrices;
pub mod polytope;
pub mod report;
pub mod rep_ring;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Reduced fraction of [`Integer`]s with positive denominator.
pub type Rational = num_rational::BigRational;
/// Dense univariate polynomial with rational coefficients.
pub type QPolynomial = arith::Polynomial<Rational>;
/// Representation-ring element with arbitrary-precision coefficients.
pub type Gamma = rep_ring::GammaElement<Integer>;
/// Structured matrix with arbitrary-precision entries.
pub type IntMatrix = matrices::StructuredMatrix<Integer>;
