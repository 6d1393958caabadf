//! Rank-one Heisenberg wavelet machinery on the reduced space `L²(Λ×ℝ)`.
//!
//! The crate provides three layers:
//!
//! * exact decision procedures for Heisenberg wavelet sets — finite unions of
//!   rational-endpoint intervals together with the translation and dilation
//!   congruence tests that characterize them ([`interval_set`]);
//! * a discretized model of `L²(Λ×ℝ, |λ|dλ dt)` with closed-form oscillatory
//!   cell integrals, so frame sums carry truncation error only
//!   ([`field_numerics`]);
//! * the operator systems built on top: fiberwise Gabor systems ([`gabor`]),
//!   the translation system on `L²(I×ℝ)` with its counterexample construction
//!   ([`heisenberg_translation`]), dyadic dilation / wavelet systems
//!   ([`wavelet`]), and the Calderón-type admissibility check
//!   ([`admissibility`]).
//!
//! All frame verification is sampled: reports state bounded frame-sum ratios
//! over seeded test banks, never a proof of the frame property.

pub mod accum;
pub mod admissibility;
pub mod error;
pub mod field_numerics;
pub mod gabor;
pub mod heisenberg_group;
pub mod heisenberg_translation;
pub mod interval_set;
pub mod rational;
pub mod report;
pub mod wavelet;

pub use error::Error;
pub use rational::Rational;

/// Convenience alias used throughout the numeric layer.
pub type C64 = num_complex::Complex64;
