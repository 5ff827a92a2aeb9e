//! Executable finite-dimensional categorified linear algebra.
//!
//! The crate models skeletal 2-Hilbert spaces and their block morphisms
//! ([`hstar`]), exact *-functors between them ([`functors`]), concrete
//! symmetric 2-H*-algebras given by representations of finite groups,
//! supergroups and groupoids ([`rep`]), framed tangle evaluation ([`tangle`]),
//! and the Fourier / Gelfand / Tannaka constructions ([`transforms`]).
//! [`suite`] bundles the numerical acceptance checks used by the CLI.

pub mod error;
pub mod functors;
pub mod hstar;
pub mod json;
pub mod linalg;
pub mod rep;
pub mod suite;
pub mod tangle;
pub mod transforms;

pub use error::{Error, Result};
