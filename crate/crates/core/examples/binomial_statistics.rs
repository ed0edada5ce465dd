// Exact outcome distribution of N probes against a seeded Monte Carlo histogram.

use anyon_interferometry::interferometer::{
    outcome_distribution, simulate_batch, AnyonicDensityMatrix, InterferometerConfig,
};
use anyon_interferometry::model::ising;
use anyon_interferometry::{Result, C64};

pub fn run_example() -> Result<()> {
    let model = ising();
    let config = InterferometerConfig::symmetric(model.charge("sigma")?).with_detuning(1.0);
    let rho = AnyonicDensityMatrix::ising_qubit_entries(&model, 0.4, C64::new(0.0, 0.0))?;
    let n = 6;
    let exact = outcome_distribution(&model, &rho, &config, n as u64)?;
    let trials = 4000;
    let batch = simulate_batch(&model, &rho, &config, n, trials, 1)?;
    let mut counts = vec![0usize; n + 1];
    for t in &batch {
        counts[t.n_transmitted] += 1;
    }
    println!(" n  exact     sampled");
    for (k, p) in exact.iter().enumerate() {
        println!("{k:2}  {p:.5}  {:.5}", counts[k] as f64 / trials as f64);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
