use nalgebra::DMatrix;

use super::{AnyonicDensityMatrix, InterferometerConfig, ProbeOutcome, ZERO_PROBABILITY};
use crate::model::{AnyonModel, Charge};
use crate::{Error, Result, C64};

/// Weights of the four probe-loop configurations for outcome `s`:
/// `[|t1|^2|r2|^2, t1 r1* r2* t2* e^{i delta}, t1* r1 t2 r2 e^{-i delta}, |r1|^2|t2|^2]`
/// for `->`, and `[|t1|^2|t2|^2, -.., -.., |r1|^2|r2|^2]` for `^`.
pub fn superoperator_weights(config: &InterferometerConfig, s: ProbeOutcome) -> [C64; 4] {
    let InterferometerConfig { t1, r1, t2, r2, .. } = *config;
    let phase = C64::from_polar(1.0, config.detuning());
    let cross = t1 * r1.conj() * r2.conj() * t2.conj() * phase;
    let cross_conj = t1.conj() * r1 * t2 * r2 * phase.conj();
    let real = |x: f64| C64::new(x, 0.0);
    match s {
        ProbeOutcome::Transmitted => [
            real(t1.norm_sqr() * r2.norm_sqr()),
            cross,
            cross_conj,
            real(r1.norm_sqr() * t2.norm_sqr()),
        ],
        ProbeOutcome::Reflected => [
            real(t1.norm_sqr() * t2.norm_sqr()),
            -cross,
            -cross_conj,
            real(r1.norm_sqr() * r2.norm_sqr()),
        ],
    }
}

fn p_unchecked(model: &AnyonModel, a: Charge, a_prime: Charge, e: Charge, w: &[C64; 4], b: Charge) -> C64 {
    w[0] * model.monodromy(e, b) + w[1] * model.monodromy(a, b) + w[2] * model.monodromy(a_prime, b).conj() + w[3]
}

/// `p^s_{a a' e, b}` for the configured probe `b`.
pub fn p_factor(
    model: &AnyonModel,
    a: Charge,
    a_prime: Charge,
    e: Charge,
    config: &InterferometerConfig,
    s: ProbeOutcome,
) -> Result<C64> {
    if !model.fuses(a, model.dual(a_prime), e) {
        return Err(Error::ForbiddenConnectingCharge {
            a: model.charge_name(a).to_string(),
            a_prime: model.charge_name(a_prime).to_string(),
            e: model.charge_name(e).to_string(),
        });
    }
    Ok(p_unchecked(
        model,
        a,
        a_prime,
        e,
        &superoperator_weights(config, s),
        config.probe,
    ))
}

/// Entrywise multipliers of the single-probe map for a fixed basis.
///
/// Built once per (state support, config); entries that are zero in the state
/// the channel was built for stay zero under every probe and carry factor 0.
#[derive(Clone, Debug)]
pub struct ProbeChannel {
    transmit: DMatrix<C64>,
    reflect: DMatrix<C64>,
}

impl ProbeChannel {
    pub fn new(model: &AnyonModel, rho: &AnyonicDensityMatrix, config: &InterferometerConfig) -> Result<Self> {
        config.require_untwisted()?;
        let n = rho.dim();
        let weights_t = superoperator_weights(config, ProbeOutcome::Transmitted);
        let weights_r = superoperator_weights(config, ProbeOutcome::Reflected);
        let mut transmit = DMatrix::zeros(n, n);
        let mut reflect = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if rho.entry(i, j) == C64::new(0.0, 0.0) && i != j {
                    continue;
                }
                let es = rho.connecting_charges(model, i, j);
                let e = match es.as_slice() {
                    [e] => *e,
                    _ => {
                        return Err(Error::UnsupportedBasisChange {
                            row: i,
                            col: j,
                            count: es.len(),
                        })
                    }
                };
                let (a, a_prime) = (rho.basis()[i].a, rho.basis()[j].a);
                transmit[(i, j)] = p_unchecked(model, a, a_prime, e, &weights_t, config.probe);
                reflect[(i, j)] = p_unchecked(model, a, a_prime, e, &weights_r, config.probe);
            }
        }
        Ok(ProbeChannel { transmit, reflect })
    }

    pub fn factors(&self, s: ProbeOutcome) -> &DMatrix<C64> {
        match s {
            ProbeOutcome::Transmitted => &self.transmit,
            ProbeOutcome::Reflected => &self.reflect,
        }
    }

    /// `Pr(s) = sum_i rho_ii p^s_{a_i a_i I}`.
    pub fn probability(&self, rho: &AnyonicDensityMatrix, s: ProbeOutcome) -> f64 {
        let p = self.factors(s);
        (0..rho.dim()).map(|i| rho.entry(i, i).re * p[(i, i)].re).sum()
    }

    /// Unnormalized image `rho o p^s` together with its trace `Pr(s)`.
    pub fn apply_unnormalized(&self, rho: &AnyonicDensityMatrix, s: ProbeOutcome) -> (f64, DMatrix<C64>) {
        let image = rho.matrix().component_mul(self.factors(s));
        (self.probability(rho, s), image)
    }

    /// Conditions on `s`; fails when `Pr(s)` is below the zero threshold.
    pub fn apply(&self, rho: &AnyonicDensityMatrix, s: ProbeOutcome) -> Result<(f64, AnyonicDensityMatrix)> {
        let (prob, image) = self.apply_unnormalized(rho, s);
        if prob < ZERO_PROBABILITY {
            return Err(Error::ZeroProbability(prob));
        }
        let post = image / C64::new(prob, 0.0);
        Ok((prob, AnyonicDensityMatrix::from_parts(rho.basis().to_vec(), post)))
    }
}

pub fn probe_probability(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    s: ProbeOutcome,
) -> Result<f64> {
    Ok(ProbeChannel::new(model, rho, config)?.probability(rho, s))
}

/// One probe, unconditioned: returns `(Pr(s), Pr(s) * rho(s))`.
pub fn apply_probe_unnormalized(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    s: ProbeOutcome,
) -> Result<(f64, DMatrix<C64>)> {
    Ok(ProbeChannel::new(model, rho, config)?.apply_unnormalized(rho, s))
}

/// One probe conditioned on outcome `s`: `(Pr(s), rho(s))`.
pub fn apply_probe(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    s: ProbeOutcome,
) -> Result<(f64, AnyonicDensityMatrix)> {
    ProbeChannel::new(model, rho, config)?.apply(rho, s)
}
