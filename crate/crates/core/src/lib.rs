//! Anyonic interferometry on multiplicity-free unitary modular tensor categories.
//!
//! The crate is organised around four layers:
//!
//! - [`model`]: anyon-model data (fusion, F/R-symbols, twists, S/T/monodromy)
//!   with a full axiom checker and the built-in Ising theory.
//! - [`interferometer`]: the untwisted Mach-Zehnder measurement superoperator,
//!   seeded probe streams, binomial outcome statistics and asymptotic fixed states.
//! - [`surgery`]: closed-form omega-loop / tau-loop calculus, modular transforms
//!   and the solid-torus boundary operators that describe twisted interferometry.
//! - [`gates`]: the twisted Ising qubit channel, magic states and the direct
//!   pi/8-phase-gate protocol.
//!
//! [`cli`] wires these into the `anyonsim` binary; every capability also has a
//! runnable program under `examples/`.
//!
//! ```
//! use anyon_interferometry::model::ising;
//! use anyon_interferometry::surgery::twisted_operator;
//!
//! let model = ising();
//! let psi = model.charge("psi").unwrap();
//! let op = twisted_operator(&model, psi, 2);
//! // O_t(psi) = diag(1 - w, 0, 1 + w) with w = exp(i pi / 4)
//! assert!((op.entries()[2].re - (1.0 + std::f64::consts::FRAC_1_SQRT_2)).abs() < 1e-12);
//! ```

pub mod cli;
mod error;
pub mod gates;
pub mod interferometer;
pub mod linalg;
pub mod model;
pub mod rng;
pub mod surgery;

pub use error::{Error, Result};
pub use model::{AnyonModel, Charge};

/// Double-precision complex scalar used throughout.
pub type C64 = num_complex::Complex64;
