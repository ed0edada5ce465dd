// One sigma probe through a symmetric interferometer around the Ising qubit,
// and the infinite-probe limit.

use anyon_interferometry::interferometer::{
    apply_probe, asymptotic_measure, p_factor, AnyonicDensityMatrix, InterferometerConfig, ProbeOutcome,
};
use anyon_interferometry::model::ising;
use anyon_interferometry::{Result, C64};

pub fn run_example() -> Result<()> {
    let model = ising();
    let sigma = model.charge("sigma")?;
    let config = InterferometerConfig::symmetric(sigma);

    for a in model.charges() {
        let p = p_factor(&model, a, a, model.vacuum(), &config, ProbeOutcome::Transmitted)?;
        println!("p_{} = {:.6}", model.charge_name(a), p.re);
    }

    let rho = AnyonicDensityMatrix::ising_qubit_entries(&model, 0.3, C64::new(0.2, 0.1))?;
    let (prob, post) = apply_probe(&model, &rho, &config, ProbeOutcome::Transmitted)?;
    println!("Pr(->) = {prob:.6}, post =\n{:.4}", post.matrix());

    for outcome in asymptotic_measure(&model, &rho, &config)? {
        let names: Vec<_> = outcome.class.members.iter().map(|&c| model.charge_name(c)).collect();
        println!("class {names:?}: probability {:.6}", outcome.probability);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
