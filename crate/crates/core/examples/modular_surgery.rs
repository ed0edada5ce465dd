// Modular matrices, solid-torus boundary vectors and the omega-loop calculus.

use anyon_interferometry::model::ising;
use anyon_interferometry::surgery::{
    loop_around_line, modular_matrices, slide_omega, solid_torus_operator, LoopLabel, TorusBasis,
};
use anyon_interferometry::{Result, C64};

pub fn run_example() -> Result<()> {
    let model = ising();
    let mm = modular_matrices(&model);
    println!("B = S T^2 S^-1 =\n{:.4}", mm.b);

    let (i, sigma, psi) = (model.vacuum(), model.charge("sigma")?, model.charge("psi")?);
    for (basis, core) in [
        (TorusBasis::Longitudinal, i),
        (TorusBasis::Meridional, i),
        (TorusBasis::Twisted, i),
        (TorusBasis::Twisted, psi),
    ] {
        let (v, op) = solid_torus_operator(&model, basis, core)?;
        println!(
            "{basis:?} core {}: v = {}",
            model.charge_name(core),
            show(&v.coefficients)
        );
        println!("  operator {}", show(op.entries()));
    }

    for c in model.charges() {
        let value = loop_around_line(&model, LoopLabel::Omega(i), c);
        println!("omega_0 around {}: {:.3}", model.charge_name(c), value);
    }
    println!(
        "slide omega_sigma over omega_psi -> {}",
        model.charge_name(slide_omega(&model, sigma, psi)?)
    );
    Ok(())
}

fn show(v: &[C64]) -> String {
    let parts: Vec<String> = v.iter().map(|z| format!("{z:.4}")).collect();
    format!("({})", parts.join(", "))
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
