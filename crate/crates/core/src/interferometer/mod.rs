//! Untwisted Mach-Zehnder anyonic interferometry.
//!
//! A probe of charge `b` passing the interferometer multiplies each density
//! matrix entry `(a,c;f),(a',c';f)` by `p^s_{aa'e,b} / Pr(s)`, where `e` is the
//! charge line connecting the target `A` with its complement `C`. Only the
//! sector where `e` is fixed by the fusion rules is handled, which covers
//! the Ising qubit (`e = I` on the diagonal, `e = psi` off it).

mod channel;
mod config;
mod density;
mod statistics;
mod stream;

pub use channel::{
    apply_probe, apply_probe_unnormalized, p_factor, probe_probability, superoperator_weights, ProbeChannel,
};
pub use config::{InterferometerConfig, ProbeOutcome, UNITARITY_TOL};
pub use density::{AnyonicDensityMatrix, BasisLabel, STATE_TOL};
pub use statistics::{
    asymptotic_measure, class_weights, equivalence_classes, fixed_state, outcome_distribution, AsymptoticOutcome,
    ChargeClass, EquivalenceClasses, DEGENERACY_TOL,
};
pub use stream::{simulate_batch, simulate_stream, simulate_stream_with, ProbeStep, ProbeTrajectory, StreamOptions};

/// Below this an outcome is treated as impossible and conditioning on it fails.
pub const ZERO_PROBABILITY: f64 = 1e-12;
