// Seeded probe streams with a detuned interferometer: the qubit coherence
// decays probe by probe while the transmitted fraction settles on p_kappa.

use std::f64::consts::FRAC_1_SQRT_2;

use anyon_interferometry::interferometer::{
    simulate_batch, simulate_stream, AnyonicDensityMatrix, InterferometerConfig,
};
use anyon_interferometry::model::ising;
use anyon_interferometry::{Result, C64};

pub fn run_example() -> Result<()> {
    let model = ising();
    let config = InterferometerConfig::symmetric(model.charge("sigma")?).with_detuning(std::f64::consts::FRAC_PI_3);
    let plus = AnyonicDensityMatrix::pure(
        &model,
        AnyonicDensityMatrix::qubit_basis(&model)?,
        &[C64::new(FRAC_1_SQRT_2, 0.0), C64::new(FRAC_1_SQRT_2, 0.0)],
    )?;

    let trajectory = simulate_stream(&model, &plus, &config, 30, 7)?;
    for step in trajectory.steps.iter().step_by(5) {
        println!(
            "k = {:2} {:>2} coherence {:.3e}",
            step.k,
            step.outcome.symbol(),
            step.coherence
        );
    }

    let batch = simulate_batch(&model, &plus, &config, 200, 8, 7)?;
    for t in &batch {
        println!("seed {:20} fraction {:.3}", t.seed, t.fraction());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
