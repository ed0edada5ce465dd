use nalgebra::DMatrix;
use statrs::distribution::{Binomial, Discrete};

use super::{p_factor, AnyonicDensityMatrix, InterferometerConfig, ProbeChannel, ProbeOutcome, ZERO_PROBABILITY};
use crate::model::{AnyonModel, Charge};
use crate::{Error, Result, C64};

/// Two monodromies (or transmission probabilities) closer than this are equal.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Charges the probe cannot tell apart, with their common transmission probability.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeClass {
    pub members: Vec<Charge>,
    /// `M_{a,b}` shared by every member.
    pub monodromy: C64,
    /// `p_kappa = p^->_{aaI,b}` for any member `a`.
    pub transmission: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceClasses {
    pub probe: Charge,
    pub classes: Vec<ChargeClass>,
}

impl EquivalenceClasses {
    pub fn class_of(&self, a: Charge) -> usize {
        self.classes
            .iter()
            .position(|k| k.members.contains(&a))
            .expect("classes partition the charges")
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Partitions the charges by `M_{a,b}`, in charge order of first appearance.
pub fn equivalence_classes(model: &AnyonModel, b: Charge, config: &InterferometerConfig) -> EquivalenceClasses {
    let config = config.clone().with_probe(b);
    let mut classes: Vec<ChargeClass> = Vec::new();
    for a in model.charges() {
        let m = model.monodromy(a, b);
        match classes.iter_mut().find(|k| (k.monodromy - m).norm() <= DEGENERACY_TOL) {
            Some(k) => k.members.push(a),
            None => {
                let transmission = p_factor(model, a, a, model.vacuum(), &config, ProbeOutcome::Transmitted)
                    .expect("vacuum always connects a to itself")
                    .re;
                classes.push(ChargeClass {
                    members: vec![a],
                    monodromy: m,
                    transmission,
                });
            }
        }
    }
    EquivalenceClasses { probe: b, classes }
}

/// `Pr_A(kappa)` for every class.
pub fn class_weights(rho: &AnyonicDensityMatrix, classes: &EquivalenceClasses) -> Vec<f64> {
    classes.classes.iter().map(|k| rho.weight_of(&k.members)).collect()
}

/// `Pr_N(n) = sum_kappa Pr_A(kappa) C(N,n) p_kappa^n (1 - p_kappa)^(N-n)`, indexed by `n`.
pub fn outcome_distribution(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
    n: u64,
) -> Result<Vec<f64>> {
    ProbeChannel::new(model, rho, config)?;
    let classes = equivalence_classes(model, config.probe, config);
    let weights = class_weights(rho, &classes);
    let mut dist = vec![0.0; n as usize + 1];
    for (class, weight) in classes.classes.iter().zip(weights) {
        if weight == 0.0 {
            continue;
        }
        let binom = Binomial::new(class.transmission.clamp(0.0, 1.0), n).expect("probability in [0, 1]");
        for (k, slot) in dist.iter_mut().enumerate() {
            *slot += weight * binom.pmf(k as u64);
        }
    }
    Ok(dist)
}

/// Projects onto `a in class`, renormalizes, and removes every entry whose
/// connecting line `e` has `M_{e,b} != 1`.
pub fn fixed_state(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    probe: Charge,
    class: &ChargeClass,
) -> Result<AnyonicDensityMatrix> {
    let weight = rho.weight_of(&class.members);
    if weight < ZERO_PROBABILITY {
        return Err(Error::ZeroProbability(weight));
    }
    let n = rho.dim();
    let basis = rho.basis();
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = rho.entry(i, j);
            if x == C64::new(0.0, 0.0) || !class.members.contains(&basis[i].a) || !class.members.contains(&basis[j].a) {
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
            if (model.monodromy(e, probe) - C64::new(1.0, 0.0)).norm() <= DEGENERACY_TOL {
                out[(i, j)] = x / weight;
            }
        }
    }
    Ok(AnyonicDensityMatrix::from_parts(basis.to_vec(), out))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticOutcome {
    pub class: ChargeClass,
    pub probability: f64,
    pub state: AnyonicDensityMatrix,
}

/// The `N -> infinity` measurement: one entry per class with nonzero weight.
pub fn asymptotic_measure(
    model: &AnyonModel,
    rho: &AnyonicDensityMatrix,
    config: &InterferometerConfig,
) -> Result<Vec<AsymptoticOutcome>> {
    ProbeChannel::new(model, rho, config)?;
    let classes = equivalence_classes(model, config.probe, config);
    let weights = class_weights(rho, &classes);
    let live: Vec<(&ChargeClass, f64)> = classes
        .classes
        .iter()
        .zip(weights)
        .filter(|&(_, w)| w >= ZERO_PROBABILITY)
        .collect();
    for (i, (first, _)) in live.iter().enumerate() {
        for (second, _) in &live[i + 1..] {
            if (first.transmission - second.transmission).abs() <= DEGENERACY_TOL {
                let names = |k: &ChargeClass| k.members.iter().map(|&c| model.charge_name(c).to_string()).collect();
                return Err(Error::DegenerateTuning {
                    first: names(first),
                    second: names(second),
                    p: first.transmission,
                });
            }
        }
    }
    live.into_iter()
        .map(|(class, probability)| {
            Ok(AsymptoticOutcome {
                class: class.clone(),
                probability,
                state: fixed_state(model, rho, config.probe, class)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ising;

    #[test]
    fn ising_classes_for_each_probe() {
        let m = ising();
        let (i, s, p) = (m.vacuum(), m.charge("sigma").unwrap(), m.charge("psi").unwrap());
        let cfg = InterferometerConfig::symmetric(s);
        let by_sigma = equivalence_classes(&m, s, &cfg);
        let members: Vec<_> = by_sigma.classes.iter().map(|k| k.members.clone()).collect();
        assert_eq!(members, vec![vec![i], vec![s], vec![p]]);
        let by_psi = equivalence_classes(&m, p, &cfg);
        let members: Vec<_> = by_psi.classes.iter().map(|k| k.members.clone()).collect();
        assert_eq!(members, vec![vec![i, p], vec![s]]);
        let by_vac = equivalence_classes(&m, i, &cfg);
        assert_eq!(by_vac.len(), 1);
        assert_eq!(by_vac.classes[0].members.len(), 3);
    }

    #[test]
    fn fixed_state_of_empty_class_fails() {
        let m = ising();
        let s = m.charge("sigma").unwrap();
        let rho = AnyonicDensityMatrix::ising_qubit_entries(&m, 1.0, C64::new(0.0, 0.0)).unwrap();
        let classes = equivalence_classes(&m, s, &InterferometerConfig::symmetric(s));
        let psi_class = &classes.classes[2];
        assert!(matches!(
            fixed_state(&m, &rho, s, psi_class),
            Err(Error::ZeroProbability(_))
        ));
    }

    #[test]
    fn fully_transmissive_first_splitter_is_degenerate() {
        let m = ising();
        let s = m.charge("sigma").unwrap();
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let cfg = InterferometerConfig::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0), h, h, 0.0, 0.0, s).unwrap();
        let rho = AnyonicDensityMatrix::ising_qubit_entries(&m, 0.5, C64::new(0.0, 0.0)).unwrap();
        for k in equivalence_classes(&m, s, &cfg).classes {
            assert!((k.transmission - 0.5).abs() < 1e-15);
        }
        assert!(matches!(
            asymptotic_measure(&m, &rho, &cfg),
            Err(Error::DegenerateTuning { .. })
        ));
    }
}
