use rand::Rng;
use rayon::prelude::*;

use super::{AnyonicDensityMatrix, InterferometerConfig, ProbeChannel, ProbeOutcome};
use crate::model::AnyonModel;
use crate::rng::{mix_seed, stream_rng};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeStep {
    /// Zero-based probe index.
    pub k: usize,
    pub outcome: ProbeOutcome,
    /// Conditional probability of `outcome` given the state before the probe.
    pub probability: f64,
    /// Coherence of the conditioned state after the probe.
    pub coherence: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StreamOptions {
    /// Keep every conditioned state, not only the final one.
    pub retain_states: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeTrajectory {
    pub seed: u64,
    pub steps: Vec<ProbeStep>,
    /// Conditioned states after each probe, when retained.
    pub states: Option<Vec<AnyonicDensityMatrix>>,
    pub final_state: AnyonicDensityMatrix,
    pub n_transmitted: usize,
}

impl ProbeTrajectory {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn outcomes(&self) -> impl Iterator<Item = ProbeOutcome> + '_ {
        self.steps.iter().map(|s| s.outcome)
    }

    /// `n / N`; zero for an empty stream.
    pub fn fraction(&self) -> f64 {
        if self.steps.is_empty() {
            0.0
        } else {
            self.n_transmitted as f64 / self.steps.len() as f64
        }
    }

    /// Joint probability of the recorded outcome sequence.
    pub fn sequence_probability(&self) -> f64 {
        self.steps.iter().map(|s| s.probability).product()
    }
}

pub fn simulate_stream(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    n: usize,
    seed: u64,
) -> Result<ProbeTrajectory> {
    simulate_stream_with(model, rho, config, n, seed, StreamOptions::default())
}

/// Samples `n` probes sequentially from the running conditional distribution.
pub fn simulate_stream_with(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    n: usize,
    seed: u64,
    options: StreamOptions,
) -> Result<ProbeTrajectory> {
    let channel = ProbeChannel::new(model, rho, config)?;
    let mut rng = stream_rng(seed);
    let mut state = rho.clone();
    let mut steps = Vec::with_capacity(n);
    let mut states = options.retain_states.then(|| Vec::with_capacity(n));
    let mut n_transmitted = 0;
    for k in 0..n {
        let p_transmit = channel.probability(&state, ProbeOutcome::Transmitted);
        let outcome = if rng.random::<f64>() < p_transmit {
            n_transmitted += 1;
            ProbeOutcome::Transmitted
        } else {
            ProbeOutcome::Reflected
        };
        let (probability, post) = channel.apply(&state, outcome)?;
        state = post;
        steps.push(ProbeStep {
            k,
            outcome,
            probability,
            coherence: state.coherence(),
        });
        if let Some(states) = states.as_mut() {
            states.push(state.clone());
        }
    }
    Ok(ProbeTrajectory {
        seed,
        steps,
        states,
        final_state: state,
        n_transmitted,
    })
}

/// `trials` independent trajectories; trial `i` runs with seed `mix_seed(seed, i)`.
pub fn simulate_batch(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<ProbeTrajectory>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|i| simulate_stream(model, rho, config, n, mix_seed(seed, i)))
        .collect()
}
