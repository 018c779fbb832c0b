//! Exact construction of faithful matrix representations of finite-dimensional
//! Lie algebras over Q.
//!
//! The pipeline embeds the algebra into `p ⋉ n` (reductive acting on
//! nilpotent) by repeated elementary expansions, lets `n` act on a truncation
//! of its enveloping algebra, and pulls the resulting representation back.
//! Every stage checks its own postconditions with exact arithmetic.

pub mod catalog;
pub mod decompose;
pub mod echelon;
pub mod envelope;
pub mod error;
pub mod expansion;
pub mod format;
pub mod jordan;
pub mod lie;
pub mod matrix;
pub mod pipeline;
pub mod poly;
pub mod rational;
pub mod subspace;

pub use decompose::{LeviData, ReductiveSplit};
pub use envelope::{PbwMonomial, TruncatedModule};
pub use error::{Error, ErrorClass, Result, Stage};
pub use expansion::{ExpansionResult, Presentation};
pub use format::{AlgebraFile, RepresentationFile};
pub use jordan::JcDecomposition;
pub use lie::LieAlgebra;
pub use matrix::Matrix;
pub use pipeline::{ado_representation, verify, Options, Representation, VerificationReport};
pub use poly::Polynomial;
pub use rational::Rational;
pub use subspace::Subspace;
