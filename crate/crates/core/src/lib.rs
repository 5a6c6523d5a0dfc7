//! Numerical construction and verification of transition densities for the
//! system `dX_t = A(X_{t-}) dZ_t`, where `Z` is a cylindrical alpha-stable
//! process (independent symmetric stable components) and `A(x)` is diagonal,
//! elliptic and Hölder continuous.
//!
//! The library builds the density `p^A(t,x,y)` by the Levi freezing method:
//! a frozen-coefficient product kernel plus a correction solving a Volterra
//! equation by Picard iteration. On top of that it provides quantitative
//! checks of the structural estimates satisfied by `p^A` (two-sided
//! comparability with the product of one-dimensional stable densities,
//! Hölder and gradient bounds, the parabolic equation, semigroup identities)
//! and an independent Euler Monte Carlo simulation of the system for
//! cross-validation.
//!
//! Everything numeric is generic over the scalar type through [`scalar::Real`];
//! concrete `f64` aliases live at the crate root. `f64` is what the shipped
//! tolerances assume.

pub mod coeffs;
pub mod error;
pub mod expr;
pub mod kernels;
pub mod parametrix;
pub mod quad;
pub mod scalar;
pub mod simulate;
pub mod special;
pub mod stable1d;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

/// Default scalar for production runs.
pub type F = f64;

pub type ModelParams = coeffs::ModelParams<F>;
pub type CoefficientField = coeffs::CoefficientField<F>;
pub type StableEvaluator = stable1d::StableEvaluator<F>;
pub type KernelProfile = kernels::KernelProfile<F>;
pub type QuadratureScheme = parametrix::QuadratureScheme<F>;
pub type ParametrixTable = parametrix::ParametrixTable<F>;
pub type CheckReport = verify::CheckReport<F>;
pub type PathEnsemble = simulate::PathEnsemble<F>;
